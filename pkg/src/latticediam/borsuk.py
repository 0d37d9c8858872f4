"""Discrete Borsuk partitions via diameter graphs.

The diameter graph of a finite lattice set joins the pairs realizing the
lattice diameter. Partitioning the set into parts of strictly smaller diameter
is exactly proper coloring of that graph, its max degree is at most 2^d - 1,
so greedy coloring needs at most 2^d parts; the exact minimum is the chromatic
number, found here by a budgeted branch and bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import Point, PointSet
from .errors import BudgetError, ValidationError
from .oracle import DEFAULT_PAIR_BUDGET, brute_force_diameter

__all__ = [
    "BorsukGraph",
    "BorsukPartition",
    "ComponentClass",
    "build_borsuk_graph",
    "greedy_partition",
    "exact_borsuk_number",
    "classify_components",
    "conv_is_cube",
]

DEFAULT_NODE_BUDGET = 1_000_000


@dataclass(frozen=True)
class BorsukGraph:
    """Diameter graph: vertices are the points, edges the diameter pairs."""

    vertices: PointSet
    edges: tuple[tuple[Point, Point], ...]
    diam: int

    def adjacency(self) -> dict[Point, set[Point]]:
        adj: dict[Point, set[Point]] = {p: set() for p in self.vertices}
        for p, q in self.edges:
            adj[p].add(q)
            adj[q].add(p)
        return adj

    def max_degree(self) -> int:
        return max(len(nbrs) for nbrs in self.adjacency().values())


@dataclass(frozen=True)
class BorsukPartition:
    """Parts of strictly smaller lattice diameter, with per-point labels."""

    parts: tuple[PointSet, ...]
    labels: dict[Point, int]


def build_borsuk_graph(
    S: PointSet, max_pairs: int = DEFAULT_PAIR_BUDGET
) -> BorsukGraph:
    """Diameter graph of S (needs >= 2 points; inherits the oracle pair budget)."""
    if len(S) < 2:
        raise ValidationError("a diameter graph needs at least 2 points")
    report = brute_force_diameter(S, max_pairs)
    return BorsukGraph(vertices=S, edges=report.segments, diam=report.ldiam)


def greedy_partition(
    S: PointSet,
    max_pairs: int = DEFAULT_PAIR_BUDGET,
    graph: Optional[BorsukGraph] = None,
) -> BorsukPartition:
    """Greedy proper coloring of the diameter graph in lexicographic point order.

    Always uses at most max_degree + 1 <= 2^d colors. Parts are returned in
    color order; properness (equivalently, every part has strictly smaller
    lattice diameter) is verified before returning.
    """
    g = graph if graph is not None else build_borsuk_graph(S, max_pairs)
    adj = g.adjacency()
    labels: dict[Point, int] = {}
    for p in g.vertices:  # PointSet iterates in lexicographic order
        taken = {labels[nb] for nb in adj[p] if nb in labels}
        color = 0
        while color in taken:
            color += 1
        labels[p] = color
    n_colors = max(labels.values()) + 1
    for p, q in g.edges:
        if labels[p] == labels[q]:  # pragma: no cover - greedy is always proper
            raise ValidationError("greedy coloring produced an improper part")
    if n_colors > 2 ** S.dim:
        raise ValidationError(
            "more parts than the degree bound allows; not a diameter graph?"
        )  # pragma: no cover - contradicts the degree bound
    parts = tuple(
        PointSet([p for p, c in labels.items() if c == color])
        for color in range(n_colors)
    )
    return BorsukPartition(parts=parts, labels=labels)


def _components(adj: dict[Point, set[Point]]) -> list[list[Point]]:
    seen: set[Point] = set()
    comps: list[list[Point]] = []
    for start in adj:
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for nb in adj[v]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        comps.append(sorted(comp))
    return comps


def _greedy_clique(adj: dict[Point, set[Point]], order: list[Point]) -> list[Point]:
    best: list[Point] = []
    for seed in order:
        clique = [seed]
        candidates = set(adj[seed])
        while candidates:
            v = max(candidates, key=lambda x: (len(adj[x] & candidates), x))
            clique.append(v)
            candidates &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _k_colorable(
    order: list[Point],
    adj: dict[Point, set[Point]],
    k: int,
    budget: list[int],
) -> bool:
    """DSATUR-style backtracking with a new-color symmetry break."""
    colors: dict[Point, int] = {}

    def choose() -> Optional[Point]:
        best_v, best_key = None, None
        for v in order:
            if v in colors:
                continue
            sat = len({colors[nb] for nb in adj[v] if nb in colors})
            key = (sat, len(adj[v]))
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def rec(used: int) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetError("exact coloring search exceeded its node budget")
        v = choose()
        if v is None:
            return True
        taken = {colors[nb] for nb in adj[v] if nb in colors}
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colors[v] = c
            if rec(max(used, c + 1)):
                return True
            del colors[v]
        return False

    return rec(0)


def exact_borsuk_number(
    S: PointSet,
    max_pairs: int = DEFAULT_PAIR_BUDGET,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> int:
    """Minimum number of strictly-smaller-diameter parts: the chromatic number
    of the diameter graph, by clique bound plus branch and bound."""
    g = build_borsuk_graph(S, max_pairs)
    adj = g.adjacency()
    budget = [node_budget]
    answer = 1
    for comp in _components(adj):
        if len(comp) == 1:
            continue
        sub = {v: adj[v] & set(comp) for v in comp}
        lower = len(_greedy_clique(sub, comp))
        upper = 0
        local: dict[Point, int] = {}
        for v in comp:
            taken = {local[nb] for nb in sub[v] if nb in local}
            c = 0
            while c in taken:
                c += 1
            local[v] = c
            upper = max(upper, c + 1)
        best = upper
        for k in range(lower, upper):
            if _k_colorable(comp, sub, k, budget):
                best = k
                break
        answer = max(answer, best)
    return answer


@dataclass(frozen=True)
class ComponentClass:
    """Shape summary of one diameter-graph component for the degree bound.

    The greedy bound max_degree + 1 is tight only for complete components and
    odd cycles; everywhere else one fewer color suffices.
    """

    points: tuple[Point, ...]
    max_degree: int
    is_complete: bool
    is_odd_cycle: bool

    @property
    def degree_bound_tight(self) -> bool:
        return self.is_complete or self.is_odd_cycle


def classify_components(graph: BorsukGraph) -> list[ComponentClass]:
    adj = graph.adjacency()
    out = []
    for comp in _components(adj):
        n = len(comp)
        degrees = [len(adj[v] & set(comp)) for v in comp]
        m2 = sum(degrees)
        delta = max(degrees) if degrees else 0
        complete = m2 == n * (n - 1)
        odd_cycle = n >= 3 and n % 2 == 1 and all(d == 2 for d in degrees)
        out.append(
            ComponentClass(
                points=tuple(comp),
                max_degree=delta,
                is_complete=complete,
                is_odd_cycle=odd_cycle and not complete,
            )
        )
    return out


def conv_is_cube(S: PointSet) -> bool:
    """Whether conv(S) is a coordinate box with equal positive sides.

    Boxes are preserved by axis permutations and reflections, so checking the
    bounding box itself covers those symmetries: conv(S) equals the box iff
    every corner of the bounding box belongs to S.
    """
    d = S.dim
    los = [min(p[i] for p in S) for i in range(d)]
    his = [max(p[i] for p in S) for i in range(d)]
    sides = [hi - lo for lo, hi in zip(los, his)]
    if len(set(sides)) != 1 or sides[0] < 1:
        return False
    pts = set(S.points)
    corners = [()]
    for i in range(d):
        corners = [c + (v,) for c in corners for v in (los[i], his[i])]
    return all(c in pts for c in corners)
