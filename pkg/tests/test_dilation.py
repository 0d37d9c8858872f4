"""Diameter line counts of dilates: exact counting, fitting, chambers."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticediam import (
    BlockDecomposition,
    Direction,
    FitError,
    LatticeLine,
    PointSet,
    Polygon2,
    QuasiPolynomial,
    ValidationError,
    brute_force_diameter,
    chamber_decomposition,
    count_diameter_lines,
    demo_chamber,
    enumerate_lattice_points,
    fit_quasipolynomial,
)

from helpers import QUAD, SQUARE, random_polygon

# conv{(0,0),(2,0),(3,4)}: the count drops from 4 to its eventual constant 2
LATE_START = Polygon2(((0, 0), (2, 0), (3, 4)))
UNIT_TRIANGLE = Polygon2(((0, 0), (1, 0), (0, 1)))


def oracle_line_count(P: Polygon2, k: int) -> int:
    """Count diameter lines of kP from the pairwise oracle alone."""
    S = PointSet(enumerate_lattice_points(P.dilate(k)))
    report = brute_force_diameter(S)
    lines = {
        LatticeLine(a, (b[0] - a[0], b[1] - a[1])) for a, b in report.segments
    }
    return len(lines)


class TestCountDiameterLines:
    def test_quad_small_dilates(self):
        got = [count_diameter_lines(QUAD, k) for k in range(1, 7)]
        assert got == [3, 4, 3, 9, 8, 5]

    def test_square_is_linear(self):
        # [0,2k]^2: 2k+1 horizontals, 2k+1 verticals, both main diagonals
        for k in range(1, 8):
            assert count_diameter_lines(SQUARE, k) == 4 * k + 4

    @given(st.integers(0, 2**32 - 1), st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_matches_pairwise_oracle(self, seed, k):
        P = random_polygon(random.Random(seed), span_lo=3, span_hi=4)
        assert count_diameter_lines(P, k) == oracle_line_count(P, k)


class TestFit:
    def test_quad_pieces(self):
        fit = fit_quasipolynomial(QUAD)
        assert fit.period == 3
        assert fit.valid_from == 1
        assert fit.pieces == (
            (Fraction(2, 3), Fraction(1)),
            (Fraction(2), Fraction(1)),
            (Fraction(4, 3), Fraction(4, 3)),
        )
        assert fit.evaluate(30) == 21

    def test_square_reduces_to_period_one(self):
        fit = fit_quasipolynomial(SQUARE)
        assert fit.period == 1
        assert fit.pieces == ((Fraction(4), Fraction(4)),)
        assert [fit.evaluate(k) for k in (1, 9, 100)] == [8, 40, 404]

    def test_unit_triangle_is_constant(self):
        fit = fit_quasipolynomial(UNIT_TRIANGLE)
        assert fit.period == 1
        assert fit.pieces == ((Fraction(0), Fraction(3)),)
        assert fit.evaluate(77) == 3

    def test_late_start_is_reported(self):
        fit = fit_quasipolynomial(LATE_START)
        assert (fit.period, fit.valid_from) == (1, 2)
        assert fit.pieces == ((Fraction(0), Fraction(2)),)
        assert count_diameter_lines(LATE_START, 1) == 4

    def test_tie_past_q_extends_the_window(self):
        # conv{(-2,1),(-1,0),(0,0),(1,3),(-1,2)}: the longest chords sit on
        # isolated peaks with denominator 2, yet a horizontal chord of length
        # 7/3 still ties at k = 3, so the settled pattern only starts at k = 4
        P = Polygon2(((-2, 1), (-1, 0), (0, 0), (1, 3), (-1, 2)))
        got = [count_diameter_lines(P, k) for k in range(1, 9)]
        assert got == [4, 2, 4, 2, 3, 2, 3, 2]
        fit = fit_quasipolynomial(P)
        assert (fit.period, fit.valid_from) == (2, 4)
        assert fit.pieces == (
            (Fraction(0), Fraction(2)),
            (Fraction(0), Fraction(3)),
        )
        assert [fit.evaluate(k) for k in (4, 5, 100, 101)] == [2, 3, 2, 3]
        # an explicit window is never extended, so the same polygon errors
        # out with the largest disagreeing sample in the message
        with pytest.raises(FitError, match=r"k=3"):
            fit_quasipolynomial(P, k_max=8)
        assert fit_quasipolynomial(P, k_max=16).valid_from == 4

    def test_k_max_below_four_periods_is_rejected(self):
        with pytest.raises(FitError):
            fit_quasipolynomial(QUAD, k_max=11)
        assert fit_quasipolynomial(QUAD, k_max=12).period == 3

    def test_evaluate_guards(self):
        fit = fit_quasipolynomial(SQUARE)
        with pytest.raises(ValidationError):
            fit.evaluate(0)
        fractional = QuasiPolynomial(
            period=1, pieces=((Fraction(1, 2), Fraction(0)),), valid_from=1
        )
        with pytest.raises(FitError):
            fractional.evaluate(3)
        negative = QuasiPolynomial(
            period=1, pieces=((Fraction(-1), Fraction(0)),), valid_from=1
        )
        with pytest.raises(FitError):
            negative.evaluate(2)

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=15, deadline=None)
    def test_fit_agrees_with_direct_counts(self, seed):
        P = random_polygon(random.Random(seed), span_lo=3, span_hi=5)
        fit = fit_quasipolynomial(P)
        for k in range(fit.valid_from, fit.valid_from + 3):
            assert fit.evaluate(k) == count_diameter_lines(P, k)


class TestChamberDecomposition:
    def test_demo_chamber(self):
        verts, u = demo_chamber()
        dec = chamber_decomposition(verts, u)
        assert (dec.q, dec.w) == (3, 2)
        assert dec.per_residue == ((1, 1, 1), (3, 0, 0), (2, 2, 2))

    def test_counts_reproduce_quad_counts(self):
        verts, u = demo_chamber()
        dec = chamber_decomposition(verts, u)
        got = [dec.count(k) for k in range(1, 9)]
        assert got == [3, 4, 3, 9, 8, 5, 15, 12]
        assert got == [count_diameter_lines(QUAD, k) for k in range(1, 9)]

    def test_block_counts(self):
        verts, u = demo_chamber()
        dec = chamber_decomposition(verts, u)
        assert [dec.blocks(k) for k in range(1, 9)] == [1, 1, 2, 3, 3, 4, 5, 5]

    def test_count_rejects_nonpositive_k(self):
        dec = BlockDecomposition(q=3, w=2, per_residue=((1, 1, 1),) * 3)
        with pytest.raises(ValidationError):
            dec.count(0)

    def test_rejects_wrong_direction(self):
        verts, _ = demo_chamber()
        with pytest.raises(ValidationError):
            chamber_decomposition(verts, Direction((0, 1)))

    def test_rejects_non_parallelogram(self):
        with pytest.raises(ValidationError):
            chamber_decomposition(
                ((0, 0), (4, 0), (5, 2), (0, 2)), Direction((1, 0))
            )

    def test_rejects_wrong_vertex_count(self):
        with pytest.raises(ValidationError):
            chamber_decomposition(((0, 0), (4, 0), (4, 2)), Direction((1, 0)))
        with pytest.raises(ValidationError):
            chamber_decomposition(
                ((0, 0), (4, 0), (4, 0), (0, 2)), Direction((1, 0))
            )

    def test_rejects_tilted_edges(self):
        with pytest.raises(ValidationError):
            chamber_decomposition(
                ((0, 0), (1, 1), (3, 4), (2, 3)), Direction((1, 0))
            )

    def test_each_edge_needs_an_integral_vertex(self):
        shifted = (
            (Fraction(1, 3), 0),
            (Fraction(13, 3), 0),
            (Fraction(16, 3), 2),
            (Fraction(4, 3), 2),
        )
        with pytest.raises(ValidationError):
            chamber_decomposition(shifted, Direction((1, 0)))
