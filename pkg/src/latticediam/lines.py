"""Lattice lines in the plane and exact polygon clipping.

A lattice line is parametrized as base + t * dir with a primitive direction;
its lattice points sit exactly at integer t, which is what makes the floor/ceil
counting formula below exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Optional, Sequence

from .core import Direction, Point, Polygon2, RationalPoint, as_point
from .errors import ValidationError

__all__ = [
    "LatticeLine",
    "ClippedSegment",
    "clip_line",
    "nvol",
    "lattice_count_on_clip",
]


@dataclass(frozen=True, order=True)
class LatticeLine:
    """An affine line spanned by a primitive direction through a lattice point.

    The stored base is canonical: it is reduced modulo the direction so that
    0 <= <dir, base> < <dir, dir>. Two equal lines therefore compare equal as
    dataclasses, whatever base they were built from.
    """

    base: Point
    dir: Direction

    def __init__(self, base: Sequence[int], dir: Direction | Sequence[int]):
        b = as_point(base)
        d = dir if isinstance(dir, Direction) else Direction(dir)
        if len(b) != d.dim:
            raise ValidationError("line base and direction dimensions differ")
        u = d.vec
        uu = sum(c * c for c in u)
        k = (sum(c * x for c, x in zip(u, b))) // uu
        b = tuple(x - k * c for x, c in zip(b, u))
        object.__setattr__(self, "base", b)
        object.__setattr__(self, "dir", d)

    def point_at(self, t: int) -> Point:
        """The lattice point base + t * dir."""
        return tuple(x + t * c for x, c in zip(self.base, self.dir.vec))

    def rational_point_at(self, t: Fraction) -> RationalPoint:
        return tuple(Fraction(x) + t * c for x, c in zip(self.base, self.dir.vec))

    def __contains__(self, p) -> bool:
        """Exact membership for lattice points (collinearity + integrality)."""
        q = tuple(p)
        if len(q) != len(self.base):
            return False
        diff = tuple(a - b for a, b in zip(q, self.base))
        u = self.dir.vec
        # diff must be an integer multiple of the primitive direction
        for i, c in enumerate(u):
            if c != 0:
                t, r = divmod(diff[i], c)
                if r != 0:
                    return False
                return all(x == t * y for x, y in zip(diff, u))
        return False


@dataclass(frozen=True)
class ClippedSegment:
    """The exact intersection of a lattice line with a convex polygon.

    Endpoints a, b are rational; t1 <= t2 are the parameters of a and b
    relative to the line's canonical base.
    """

    a: RationalPoint
    b: RationalPoint
    line: LatticeLine
    t1: Fraction
    t2: Fraction


def clip_line(P: Polygon2, line: LatticeLine) -> Optional[ClippedSegment]:
    """Clip a lattice line against a polygon, exactly; None when they miss.

    Tangency (a single point) yields a degenerate segment with t1 == t2.
    """
    if line.dir.dim != 2:
        raise ValidationError("clipping is 2-dimensional")
    ux, uy = line.dir.vec
    bx, by = line.base
    lo: Fraction | None = None
    hi: Fraction | None = None
    for (nx, ny), c in P.halfplanes():
        s = nx * bx + ny * by
        t = nx * ux + ny * uy
        if t == 0:
            if s > c:
                return None
            continue
        bound = Fraction(c - s, t)
        if t > 0:
            hi = bound if hi is None else min(hi, bound)
        else:
            lo = bound if lo is None else max(lo, bound)
    # A convex polygon bounds every line in both directions.
    assert lo is not None and hi is not None
    if lo > hi:
        return None
    return ClippedSegment(
        a=line.rational_point_at(lo),
        b=line.rational_point_at(hi),
        line=line,
        t1=lo,
        t2=hi,
    )


def nvol(segment: ClippedSegment) -> int | Fraction:
    """Normalized volume of the clip: its length in lattice-direction units."""
    return segment.t2 - segment.t1


def lattice_count_on_clip(segment: ClippedSegment) -> int:
    """|segment ∩ Z^2| = floor(t2) - ceil(t1) + 1, clamped at zero.

    Sandwiched between floor(nvol) and floor(nvol) + 1, with the +1 exactly
    when an endpoint parameter is integral.
    """
    return max(0, floor(segment.t2) - ceil(segment.t1) + 1)


# Integer-only level machinery. A primitive functional a and an integer level
# beta define the lattice line {x : <a, x> = beta}; its lattice points are
# anchor(beta) + k * u with u perpendicular to a. Clipping in the k-parameter
# needs only floor divisions, which keeps the diameter sweeps fast.


def level_anchor(a: Point) -> tuple[Point, Direction]:
    """For primitive a, a particular solution s of <a, s> = 1 and the level direction.

    anchor(beta) = beta * s; the direction is the canonically signed
    perpendicular of a, so increasing k is increasing lexicographic order.
    """
    a1, a2 = a
    if gcd(a1, a2) != 1:
        raise ValidationError("level functional must be primitive")
    # extended euclid: a1*s + a2*t == 1
    old_r, r = a1, a2
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return (old_s, old_t), Direction((-a2, a1))


def level_interval(
    halfplanes: Sequence[tuple[Point, int]], x0: Point, u: Point
) -> Optional[tuple[int, int]]:
    """Integer parameter range of {x0 + k*u : k in Z} inside the halfplanes.

    Pure integer arithmetic: each constraint <n, x0> + k <n, u> <= c becomes a
    floor/ceil division bound on k. Returns (klo, khi) or None when empty.
    """
    klo: int | None = None
    khi: int | None = None
    x, y = x0
    ux, uy = u
    for (nx, ny), c in halfplanes:
        s = c - (nx * x + ny * y)
        t = nx * ux + ny * uy
        if t == 0:
            if s < 0:
                return None
            continue
        if t > 0:
            bound = s // t  # k <= floor(s / t)
            khi = bound if khi is None else min(khi, bound)
        else:
            bound = -(s // -t)  # k >= ceil(s / t), exact for t < 0
            klo = bound if klo is None else max(klo, bound)
    if klo is None or khi is None:
        # the halfplanes do not bound the line on both sides; callers always
        # pass full polygons, so treat as invalid input
        raise ValidationError("halfplanes do not bound the line")
    if klo > khi:
        return None
    return klo, khi
