"""Counting diameter lines of dilates and the quasi-polynomial structure.

LD(P, k) is the number of lattice diameter lines of the dilate kP. For all
large k, LD agrees with a piecewise linear function of k with one linear
piece per residue class mod q, where q is the denominator of the maximal
normalized chord length over the diameter lines of P. The regime usually
starts at k = q but can start later: a chord that is not asymptotically
longest may still tie for small dilates, so the fitter recovers the pieces
from exact samples, verifies them, and reports the first sampled k from
which every later sample matches. The chamber decomposition explains the
counts inside one parallelogram chamber by splitting its parallel lattice
lines into translated blocks of q plus a fixed remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Sequence

from .core import Direction, Point, Polygon2, RationalPoint
from .diameter import compute_diameter
from .errors import FitError, ValidationError
from .lines import clip_line, nvol

__all__ = [
    "QuasiPolynomial",
    "BlockDecomposition",
    "count_diameter_lines",
    "fit_quasipolynomial",
    "chamber_decomposition",
]


@dataclass(frozen=True)
class QuasiPolynomial:
    """A degree <= 1 quasi-polynomial: one (slope, intercept) piece per residue.

    evaluate(k) is slope * k + intercept for the piece at k mod period, exact
    and integral for every k >= valid_from.
    """

    period: int
    pieces: tuple[tuple[Fraction, Fraction], ...]
    valid_from: int

    def evaluate(self, k: int) -> int:
        if k < 1:
            raise ValidationError("dilation factors are positive ints")
        slope, intercept = self.pieces[k % self.period]
        value = slope * k + intercept
        if value.denominator != 1 or value < 0:
            raise FitError(
                f"piece for residue {k % self.period} is not integral at k={k}"
            )
        return int(value)


@dataclass(frozen=True)
class BlockDecomposition:
    """Per-residue block structure of the parallel diameter lines of a chamber.

    For k = i (mod q) the kw + 1 parallel lattice lines meeting the dilated
    chamber split into blocks(k) = floor((kw + 1) / q) translated blocks, each
    holding n_i diameter lines, plus rem_i leftover lines holding r_i of them:
    count(k) = n_i * blocks(k) + r_i. per_residue is indexed by i and stores
    (n_i, r_i, rem_i).
    """

    q: int
    w: int
    per_residue: tuple[tuple[int, int, int], ...]

    def blocks(self, k: int) -> int:
        return (k * self.w + 1) // self.q

    def count(self, k: int) -> int:
        if k < 1:
            raise ValidationError("dilation factors are positive ints")
        n_i, r_i, _ = self.per_residue[k % self.q]
        return n_i * self.blocks(k) + r_i


def count_diameter_lines(P: Polygon2, k: int) -> int:
    """Number of lattice diameter lines of the dilate kP, exactly."""
    return len(compute_diameter(P.dilate(k)).lines)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def fit_quasipolynomial(P: Polygon2, k_max: int | None = None) -> QuasiPolynomial:
    """Fit and verify the diameter line count of dilates of P up to k_max.

    The candidate period q is the denominator of the maximal normalized chord
    length over the diameter lines of P. k_max must cover at least three full
    periods beyond q so that every residue class has fit and verification
    samples. Passing None starts at that minimum and doubles the window while
    the samples have not yet settled into one linear piece per residue; an
    explicit k_max is never extended. The result uses the minimal verified
    period (a divisor of q) and the smallest sampled k from which every later
    sample matches; that start can exceed q when a chord that is not
    asymptotically longest still ties for small dilates.
    """
    report = compute_diameter(P)
    best_nvol = Fraction(0)
    for line in report.lines:
        clip = clip_line(P, line)
        assert clip is not None
        best_nvol = max(best_nvol, Fraction(nvol(clip)))
    q = best_nvol.denominator
    explicit = k_max is not None
    if explicit and k_max < 4 * q:
        raise FitError(
            f"k_max={k_max} is too small: need at least 4q = {4 * q} samples"
        )
    horizon = k_max if explicit else 4 * q
    cap = max(16 * q, 64)
    counts: dict[int, int] = {}
    while True:
        for k in range(1, horizon + 1):
            if k not in counts:
                counts[k] = count_diameter_lines(P, k)
        pieces: list[tuple[Fraction, Fraction]] = []
        for residue in range(q):
            ks = [k for k in range(1, horizon + 1) if k % q == residue]
            k1, k2 = ks[-2], ks[-1]
            slope = Fraction(counts[k2] - counts[k1], k2 - k1)
            intercept = counts[k1] - slope * k1
            pieces.append((slope, intercept))
        valid_from = horizon + 1
        for k in range(horizon, 0, -1):
            slope, intercept = pieces[k % q]
            value = slope * k + intercept
            if value.denominator == 1 and int(value) == counts[k]:
                valid_from = k
            else:
                break
        # the top 2q samples merely restate the fit; demand one more full
        # period of agreement below them before trusting the pieces
        if valid_from <= horizon - 3 * q + 1:
            break
        if explicit or horizon >= cap:
            raise FitError(
                f"samples disagree with the fitted pieces at k={valid_from - 1}"
                f" even with k_max={horizon}"
            )
        horizon = min(2 * horizon, cap)
    # reduce to the minimal period dividing q
    period = q
    for m in _divisors(q):
        if all(pieces[i] == pieces[i % m] for i in range(q)):
            period = m
            break
    return QuasiPolynomial(
        period=period,
        pieces=tuple(pieces[:period]),
        valid_from=valid_from,
    )


def _as_fraction_point(p: Sequence) -> RationalPoint:
    try:
        return tuple(Fraction(c) for c in p)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad rational point {p!r}") from exc


def _chamber_chord_count(
    bottom: tuple[RationalPoint, RationalPoint],
    top: tuple[RationalPoint, RationalPoint],
    k: int,
    height: int,
) -> int:
    """Lattice points on the horizontal lattice line at `height` inside the
    dilate k * conv(bottom, top); the transverse edges are bottom[j] -> top[j]."""
    xs: list[Fraction] = []
    for j in (0, 1):
        (x0, y0), (x1, y1) = bottom[j], top[j]
        x0, y0, x1, y1 = k * x0, k * y0, k * x1, k * y1
        xs.append(x0 + (x1 - x0) * Fraction(height - y0, y1 - y0))
    lo, hi = min(xs), max(xs)
    return max(0, floor(hi) - ceil(lo) + 1)


def chamber_decomposition(
    vertices: Sequence[Sequence], u: Direction | Sequence[int]
) -> BlockDecomposition:
    """Block decomposition of a normalized parallelogram chamber.

    The chamber must be a rational parallelogram with two edges parallel to
    u = (1, 0), each containing an integral vertex. q is the y-part of the
    primitive transverse edge direction, w the integer height. n_i and r_i are
    counted directly on the representative dilate k = q + i, and the block
    structure (all blocks equal) is verified along the way.
    """
    d = u if isinstance(u, Direction) else Direction(u)
    if d.vec != (1, 0):
        raise ValidationError(
            "chamber decomposition expects the normalized direction (1, 0)"
        )
    pts = [_as_fraction_point(p) for p in vertices]
    if len(pts) != 4 or len(set(pts)) != 4:
        raise ValidationError("a chamber needs 4 distinct vertices")
    if any(len(p) != 2 for p in pts):
        raise ValidationError("chamber vertices must be 2-dimensional")
    # order into a parallelogram cycle: opposite pairs sum equally
    cycle = None
    for perm in ((0, 1, 2, 3), (0, 2, 1, 3), (0, 1, 3, 2)):
        a, b, c, e = (pts[i] for i in perm)
        if (a[0] + c[0], a[1] + c[1]) == (b[0] + e[0], b[1] + e[1]):
            cycle = (a, b, c, e)
            break
    if cycle is None:
        raise ValidationError("vertices do not form a parallelogram")
    ys = sorted({p[1] for p in cycle})
    if len(ys) != 2:
        raise ValidationError("chamber edges must be horizontal (direction u)")
    y_bot, y_top = ys
    bottom = sorted(p for p in cycle if p[1] == y_bot)
    top = sorted(p for p in cycle if p[1] == y_top)
    if len(bottom) != 2 or len(top) != 2:
        raise ValidationError("chamber must have two horizontal edges")
    for edge in (bottom, top):
        if not any(p[0].denominator == 1 and p[1].denominator == 1 for p in edge):
            raise ValidationError("each horizontal edge needs an integral vertex")
    if y_bot.denominator != 1 or y_top.denominator != 1:
        raise ValidationError("horizontal edges must sit at integer heights")
    w = int(y_top - y_bot)
    if w < 1:
        raise ValidationError("chamber height must be a positive integer")
    # transverse direction: bottom[j] -> top[j]; primitive integer form
    dx = top[0][0] - bottom[0][0]
    dy = top[0][1] - bottom[0][1]
    if (top[1][0] - bottom[1][0], top[1][1] - bottom[1][1]) != (dx, dy):
        raise ValidationError("transverse edges are not parallel")
    denom = dx.denominator * dy.denominator // gcd(dx.denominator, dy.denominator)
    ix, iy = int(dx * denom), int(dy * denom)
    g = gcd(ix, iy)
    ix, iy = ix // g, iy // g
    if iy < 0:
        ix, iy = -ix, -iy
    q = iy
    if q < 1:
        raise ValidationError("transverse direction must leave the horizontal")
    y0 = int(y_bot)
    per_residue: list[tuple[int, int, int]] = []
    bot_pair = (bottom[0], bottom[1])
    top_pair = (top[0], top[1])
    for i in range(q):
        k = q + i  # representative with at least one full block
        total_lines = k * w + 1
        counts = [
            _chamber_chord_count(bot_pair, top_pair, k, k * y0 + j)
            for j in range(total_lines)
        ]
        peak = max(counts)
        flags = [c == peak for c in counts]
        blocks = total_lines // q
        rem = total_lines - blocks * q
        if rem != (i * w + 1) % q:
            raise ValidationError("remainder bookkeeping failed; bad chamber?")
        n_i = sum(flags[:q])
        for t in range(1, blocks):
            if sum(flags[t * q : (t + 1) * q]) != n_i:
                raise ValidationError(
                    "blocks are not translates; the input is not a chamber"
                )
        r_i = sum(flags[blocks * q :])
        per_residue.append((n_i, r_i, rem))
    return BlockDecomposition(q=q, w=w, per_residue=tuple(per_residue))
