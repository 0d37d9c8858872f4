"""Shared test geometry: strict convex hulls and seeded random generators."""

from __future__ import annotations

import random

from latticediam import (
    PointSet,
    Polygon2,
    count_lattice_points_polygon,
)

TRIANGLE = Polygon2(((0, 1), (1, 0), (2, 2)))
SQUARE = Polygon2(((0, 0), (2, 0), (2, 2), (0, 2)))
QUAD = Polygon2(((0, 0), (5, 1), (6, 4), (1, 3)))


def convex_hull(points) -> list[tuple[int, int]] | None:
    """Monotone chain; strict turns only, so no collinear hull vertices.

    Returns the CCW vertex list, or None when the hull is degenerate.
    """
    pts = sorted(set(map(tuple, points)))
    if len(pts) < 3:
        return None

    def half(seq):
        out: list[tuple[int, int]] = []
        for p in seq:
            while len(out) >= 2:
                ax, ay = out[-2]
                bx, by = out[-1]
                if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    verts = lower[:-1] + upper[:-1]
    return verts if len(verts) >= 3 else None


def random_polygon(
    rng: random.Random,
    span_lo: int = 3,
    span_hi: int = 12,
    coord: int = 50,
    max_points: int = 500,
) -> Polygon2:
    """A random convex lattice polygon with 3..10 vertices in [-coord, coord].

    The vertex spread is sampled small so the lattice point count stays under
    max_points, which keeps oracle cross-checks inside the pair budget.
    """
    while True:
        span = rng.randint(span_lo, span_hi)
        ox = rng.randint(-coord, coord - span)
        oy = rng.randint(-coord, coord - span)
        pts = [
            (ox + rng.randint(0, span), oy + rng.randint(0, span))
            for _ in range(rng.randint(3, 10))
        ]
        verts = convex_hull(pts)
        if verts is None:
            continue
        P = Polygon2(tuple(verts))
        if count_lattice_points_polygon(P) <= max_points:
            return P


def random_point_set(
    rng: random.Random, d: int, coord: int = 8, n_lo: int = 2, n_hi: int = 20
) -> PointSet:
    pts: set[tuple[int, ...]] = set()
    # The grid only holds (2*coord+1)**d points; don't ask for more.
    target = min(rng.randint(n_lo, n_hi), (2 * coord + 1) ** d)
    while len(pts) < target:
        pts.add(tuple(rng.randint(-coord, coord) for _ in range(d)))
    return PointSet(pts)
