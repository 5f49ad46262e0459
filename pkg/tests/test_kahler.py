import random
from fractions import Fraction

import pytest

from cybundle.chow import BundleSpec
from cybundle.invariants import invariants_p1, invariants_p3
from cybundle.kahler import (
    ContractionKind,
    CubicForm,
    Rationality,
    RhoNotTwoError,
    boundary_rays,
    classify_contraction_p1,
    degeneracy_determinant,
    h4_basis_determinant,
    rationality_analysis,
    verify_KY_squared,
    w_cubic,
)

P1_RHO2 = [
    BundleSpec.from_split(1, (0, a1, a2, a3))
    for a1 in range(4)
    for a2 in range(a1, 4)
    for a3 in range(a2, 4)
    if a1 + a2 + a3 <= 3
]


class TestWCubic:
    def test_p1_trivial(self):
        w = w_cubic(invariants_p1(BundleSpec.from_split(1, (0, 0, 0, 0))))
        assert (w.w30, w.w21, w.w12, w.w03) == (2, 12, 0, 0)

    def test_p3_trivial(self):
        inv = invariants_p3(BundleSpec.from_split(3, (0, 0)))
        w = w_cubic(inv)
        assert w.w03 == 2
        assert w.w30 == inv.xi3
        assert w.w21 == 3 * inv.xi2_h

    def test_zero_evaluation(self):
        w = w_cubic(invariants_p1(BundleSpec.from_split(1, (0, 0, 0, 0))))
        assert w.evaluate(0, 0) == 0


class TestRationality:
    def test_p1_shape_double_line(self):
        r = rationality_analysis(CubicForm(Fraction(2), Fraction(12), Fraction(0), Fraction(0)))
        assert r.verdict is Rationality.RATIONAL_DOUBLE_LINE
        assert Fraction(0) in r.double_roots

    def test_constructed_double_line(self):
        # (x - y)^2 (x + y) = x^3 - x^2 y - x y^2 + y^3
        r = rationality_analysis(
            CubicForm(Fraction(1), Fraction(-1), Fraction(-1), Fraction(1))
        )
        assert r.verdict is Rationality.RATIONAL_DOUBLE_LINE
        assert r.double_roots == (Fraction(1),)

    def test_irrational(self):
        r = rationality_analysis(CubicForm(Fraction(1), Fraction(0), Fraction(0), Fraction(-2)))
        assert r.verdict is Rationality.IRRATIONAL_OR_UNRESOLVED

    def test_double_line_at_infinity(self):
        # x y^2: double line y = 0 only visible in the x = 1 chart
        r = rationality_analysis(CubicForm(Fraction(0), Fraction(0), Fraction(1), Fraction(0)))
        assert r.verdict is Rationality.RATIONAL_DOUBLE_LINE
        assert r.chart == "x"

    def test_zero_form_refused(self):
        with pytest.raises(ValueError):
            rationality_analysis(CubicForm(Fraction(0), Fraction(0), Fraction(0), Fraction(0)))

    def test_planted_double_roots(self):
        rng = random.Random(99)
        for _ in range(100):
            a = Fraction(rng.randint(-8, 8), rng.randint(1, 4))
            b = Fraction(rng.randint(-8, 8), rng.randint(1, 4))
            # (x - a y)^2 (x - b y)
            w = CubicForm(
                Fraction(1),
                -(2 * a + b),
                a * a + 2 * a * b,
                -(a * a * b),
            )
            r = rationality_analysis(w)
            assert r.verdict is Rationality.RATIONAL_DOUBLE_LINE
            assert a in r.double_roots

    def test_every_rho2_p1_spec_has_double_line(self):
        for spec in P1_RHO2:
            w = w_cubic(invariants_p1(spec))
            assert w.w12 == 0 and w.w03 == 0
            assert rationality_analysis(w).verdict is Rationality.RATIONAL_DOUBLE_LINE


class TestBoundaryRays:
    def test_p3_example(self):
        r = boundary_rays(BundleSpec.from_split(3, (0, 2)))
        assert r.rays == ((1, 0), (0, 1))
        assert r.c2_values == (84, 44)

    def test_p1_example(self):
        r = boundary_rays(BundleSpec.from_split(1, (0, 0, 1, 1)))
        assert r.c2_values == (56, 24)

    def test_rho1_refused(self):
        with pytest.raises(RhoNotTwoError):
            boundary_rays(BundleSpec.from_split(3, (0, 4)))

    def test_c1_over_3_refused(self):
        with pytest.raises(RhoNotTwoError):
            boundary_rays(BundleSpec.from_split(1, (0, 2, 2, 2)))

    def test_positivity_across_families(self):
        for b in range(4):
            r = boundary_rays(BundleSpec.from_split(3, (0, b)))
            assert all(v > 0 for v in r.c2_values)
        for spec in P1_RHO2:
            r = boundary_rays(spec)
            assert all(v > 0 for v in r.c2_values)


class TestDeterminants:
    @pytest.mark.parametrize(
        "c1,c2,want", [(4, 0, 0), (0, 0, 16), (2, 1, 16)]
    )
    def test_degeneracy_examples(self, c1, c2, want):
        assert degeneracy_determinant(BundleSpec.from_chern(c1, c2)) == want

    def test_degeneracy_identity_sweep(self):
        for c1 in range(-10, 11):
            for c2 in range(-10, 11):
                spec = BundleSpec.from_chern(c1, c2)
                assert degeneracy_determinant(spec) == 16 - spec.gamma()

    def test_h4_unimodular(self):
        for b in range(5):
            assert h4_basis_determinant(BundleSpec.from_split(3, (0, b))) == -1
        for spec in P1_RHO2:
            assert h4_basis_determinant(spec) == -1
        assert h4_basis_determinant(BundleSpec.from_chern(7, 3)) == -1


class TestContractionClassification:
    @pytest.mark.parametrize(
        "degrees,kind,count",
        [
            ((0, 0, 0, 1), ContractionKind.SIXTEEN_CURVES, 16),
            ((0, 0, 1, 1), ContractionKind.RULED_OVER_POINTS, 4),
            ((0, 0, 0, 0), ContractionKind.SIXTY_FOUR_CURVES, 64),
            ((0, 0, 0, 2), ContractionKind.RULED_OVER_QUARTIC, None),
            ((0, 1, 1, 1), ContractionKind.DIVISOR_TO_SURFACE, None),
            ((0, 0, 1, 2), ContractionKind.DIVISOR_TO_SURFACE, None),
            ((0, 0, 0, 3), ContractionKind.EXCLUDED, None),
        ],
    )
    def test_table(self, degrees, kind, count):
        r = classify_contraction_p1(BundleSpec.from_split(1, degrees))
        assert r.kind is kind
        assert r.count == count

    def test_sixteen_case_extras(self):
        r = classify_contraction_p1(BundleSpec.from_split(1, (0, 0, 0, 1)))
        assert r.k_y_squared == -7
        assert "quintic" in r.image

    def test_total_on_rho2(self):
        for spec in P1_RHO2:
            classify_contraction_p1(spec)  # must not raise

    def test_c1_over_3_refused(self):
        with pytest.raises(RhoNotTwoError):
            classify_contraction_p1(BundleSpec.from_split(1, (0, 0, 2, 2)))

    def test_count_64_matches_p3_fiber_count(self):
        # P^1 x P^3 seen from both projections
        from cybundle.invariants import fiber_count

        r = classify_contraction_p1(BundleSpec.from_split(1, (0, 0, 0, 0)))
        assert r.count == fiber_count(BundleSpec.from_split(3, (0, 0)))


class TestKYSquared:
    def test_value(self):
        assert verify_KY_squared(BundleSpec.from_split(1, (0, 0, 0, 1))) == -7

    def test_wrong_spec_refused(self):
        with pytest.raises(ValueError):
            verify_KY_squared(BundleSpec.from_split(1, (0, 0, 1, 1)))

    def test_point_class_subcheck(self):
        from cybundle.chow import integrate, reduce

        spec = BundleSpec.from_split(3, (0, 1))
        assert integrate(reduce(spec, {(1, 3): Fraction(1)})) == 1
