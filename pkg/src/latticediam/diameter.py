"""Lattice diameter of a convex lattice polygon, exactly and fast.

The algorithm works per (edge, opposite vertex) pair: inside the triangle they
span, up to three candidate lines through the vertex are located by a greedy
scan of the integer levels of the edge normal, taking at each step the lowest
lattice point not already covered by an earlier candidate line. Candidates are
then ranked by their exact lattice point count in the whole polygon; the best
count determines the diameter, and a per-direction level sweep recovers every
line attaining it (some diameter lines pass through no vertex at all).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional, Sequence

from .core import Direction, Point, Polygon2, as_point
from .errors import ValidationError
from .lines import ClippedSegment, LatticeLine, clip_line, level_anchor, level_interval

__all__ = [
    "OppositePair",
    "DiameterReport",
    "opposite_pairs",
    "local_diameter_lines",
    "compute_diameter",
    "u_diameter_line",
]


@dataclass(frozen=True)
class OppositePair:
    """An edge, its primitive outward normal, and a vertex minimizing it."""

    edge: tuple[Point, Point]
    vertex: Point
    normal: Point


@dataclass(frozen=True)
class DiameterReport:
    """Diameter value with every attaining line, grouped data precomputed.

    lines hold all lattice lines meeting the polygon in ldiam + 1 lattice
    points, sorted by (direction, base); directions are deduplicated and
    sorted; representative_segments hold one exact clip per direction.
    """

    ldiam: int
    lines: tuple[LatticeLine, ...]
    directions: tuple[Direction, ...]
    representative_segments: tuple[ClippedSegment, ...]


def opposite_pairs(P: Polygon2) -> list[OppositePair]:
    """All (edge, opposite vertex) pairs of P, in edge order.

    An edge maximizes its outward normal over P; the opposite vertices are
    those minimizing it: one generically, two when a parallel edge exists.
    """
    pairs: list[OppositePair] = []
    for (a, b) in P.edges():
        nx, ny = b[1] - a[1], a[0] - b[0]  # outward for CCW
        g = gcd(nx, ny)
        nx, ny = nx // g, ny // g
        vals = [(nx * v[0] + ny * v[1], v) for v in P.vertices]
        lo = min(val for val, _ in vals)
        for val, v in vals:
            if val == lo:
                pairs.append(OppositePair(edge=(a, b), vertex=v, normal=(nx, ny)))
    return pairs


def _triangle_halfplanes(
    v: Point, p: Point, q: Point
) -> list[tuple[Point, int]]:
    """Outward halfplanes of the (possibly degenerate) triangle conv{v, p, q}."""
    hps: list[tuple[Point, int]] = []
    corners = (v, p, q)
    for i in range(3):
        a, b, other = corners[i], corners[(i + 1) % 3], corners[(i + 2) % 3]
        n = (b[1] - a[1], a[0] - b[0])
        if n == (0, 0):
            continue
        c = n[0] * a[0] + n[1] * a[1]
        if n[0] * other[0] + n[1] * other[1] > c:
            n = (-n[0], -n[1])
            c = -c
        hps.append((n, c))
    return hps


def _collinear_case(v: Point, p: Point, q: Point) -> list[LatticeLine]:
    # Degenerate triangle: the hull is a segment (or a point). At most one
    # candidate line exists, the affine hull, provided it has a point besides v.
    for w in (p, q):
        if w != v:
            return [LatticeLine(v, Direction((w[0] - v[0], w[1] - v[1])))]
    return []


def local_diameter_lines(
    edge: tuple[Sequence[int], Sequence[int]],
    vertex: Sequence[int],
    normal: Sequence[int],
) -> list[LatticeLine]:
    """Up to three locally maximal lattice lines through `vertex` in conv{edge, vertex}.

    `normal` must be the outward normal of the edge within the triangle, so the
    edge sits on its maximal level and the vertex on its minimal one. Scans
    levels upward from the vertex; each new candidate point is the lowest
    lattice point of the triangle off all previously found lines (ties broken
    toward the lexicographically smallest point). Returns the found lines in
    discovery order; the first one always maximizes the lattice point count
    among lines through the vertex.
    """
    p, q = (as_point(edge[0]), as_point(edge[1]))
    v = as_point(vertex)
    a = as_point(normal)
    if len(v) != 2 or len(p) != 2 or len(q) != 2 or len(a) != 2:
        raise ValidationError("local diameter search is 2-dimensional")
    g = gcd(*a)
    if g == 0:
        raise ValidationError("normal must be nonzero")
    a = (a[0] // g, a[1] // g)
    cross = (p[0] - v[0]) * (q[1] - v[1]) - (p[1] - v[1]) * (q[0] - v[0])
    if cross == 0:
        return _collinear_case(v, p, q)
    level_p = a[0] * p[0] + a[1] * p[1]
    level_q = a[0] * q[0] + a[1] * q[1]
    level_v = a[0] * v[0] + a[1] * v[1]
    if level_p != level_q:
        raise ValidationError("normal is not perpendicular to the edge")
    if level_p <= level_v:
        raise ValidationError("normal must point from the vertex toward the edge")
    halfplanes = _triangle_halfplanes(v, p, q)
    anchor, step = level_anchor(a)
    ux, uy = step.vec
    found: list[Point] = []
    for beta in range(level_v + 1, level_p + 1):
        x0 = (anchor[0] * beta, anchor[1] * beta)
        iv = level_interval(halfplanes, x0, (ux, uy))
        if iv is None:
            continue
        klo, khi = iv
        # Each previous line blocks at most one point of this level, so the
        # first len(found) + 1 parameters always contain an eligible point if
        # one exists at all.
        while len(found) < 3:
            pick: Point | None = None
            for k in range(klo, min(khi, klo + len(found)) + 1):
                w = (x0[0] + k * ux, x0[1] + k * uy)
                if all(
                    (w[0] - v[0]) * (f[1] - v[1]) != (w[1] - v[1]) * (f[0] - v[0])
                    for f in found
                ):
                    pick = w
                    break
            if pick is None:
                break
            found.append(pick)
        if len(found) == 3:
            break
    return [
        LatticeLine(v, Direction((w[0] - v[0], w[1] - v[1]))) for w in found
    ]


def _direction_sweep(
    halfplanes: list[tuple[Point, int]],
    vertices: tuple[Point, ...],
    u: Direction,
) -> Iterator[tuple[int, int, Point]]:
    """(level, lattice count, anchor point) for every lattice line of direction u
    meeting the polygon described by the halfplanes."""
    a = (-u.vec[1], u.vec[0])
    anchor, step = level_anchor(a)
    assert step.vec == u.vec
    levels = [a[0] * v[0] + a[1] * v[1] for v in vertices]
    for beta in range(min(levels), max(levels) + 1):
        x0 = (anchor[0] * beta, anchor[1] * beta)
        iv = level_interval(halfplanes, x0, u.vec)
        if iv is not None:
            yield beta, iv[1] - iv[0] + 1, x0


def compute_diameter(P: Polygon2) -> DiameterReport:
    """Exact lattice diameter of P with all diameter lines and directions."""
    halfplanes = P.halfplanes()
    candidates: set[LatticeLine] = set()
    for pair in opposite_pairs(P):
        candidates.update(
            local_diameter_lines(pair.edge, pair.vertex, pair.normal)
        )
    best = 0
    by_count: list[tuple[int, LatticeLine]] = []
    for line in candidates:
        iv = level_interval(halfplanes, line.base, line.dir.vec)
        if iv is None:
            continue
        count = iv[1] - iv[0] + 1
        by_count.append((count, line))
        if count > best:
            best = count
    directions = sorted({line.dir for count, line in by_count if count == best})
    lines: list[LatticeLine] = []
    for u in directions:
        for _, count, x0 in _direction_sweep(halfplanes, P.vertices, u):
            if count == best:
                lines.append(LatticeLine(x0, u))
    lines.sort(key=lambda L: (L.dir.vec, L.base))
    reps: list[ClippedSegment] = []
    seen: set[Direction] = set()
    for line in lines:
        if line.dir not in seen:
            seen.add(line.dir)
            clip = clip_line(P, line)
            assert clip is not None
            reps.append(clip)
    return DiameterReport(
        ldiam=best - 1,
        lines=tuple(lines),
        directions=tuple(directions),
        representative_segments=tuple(reps),
    )


def u_diameter_line(P: Polygon2, u: Direction | Sequence[int]) -> Optional[LatticeLine]:
    """A lattice line of direction u maximizing |line ∩ P ∩ Z^2|.

    Ties resolve to the smallest level of the perpendicular functional. Returns
    None only when no lattice line in direction u meets P in a lattice point,
    which cannot happen for a valid polygon (its vertices are lattice points).
    """
    d = u if isinstance(u, Direction) else Direction(u)
    if d.dim != 2:
        raise ValidationError("u_diameter_line is 2-dimensional")
    halfplanes = P.halfplanes()
    best: tuple[int, int] | None = None  # (count, -beta) maximized
    best_anchor: Point | None = None
    for beta, count, x0 in _direction_sweep(halfplanes, P.vertices, d):
        key = (count, -beta)
        if best is None or key > best:
            best = key
            best_anchor = x0
    if best is None or best[0] == 0:
        return None
    assert best_anchor is not None
    return LatticeLine(best_anchor, d)
