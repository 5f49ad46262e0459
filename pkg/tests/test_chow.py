import random
from fractions import Fraction

import pytest

from cybundle.chow import (
    BundleSpec,
    ChowClass,
    anticanonical_class,
    closed_form_intersections,
    integrate,
    intersection_numbers_by_reduction,
    reduce,
    tangent_total_chern,
)

P3_SPECS = [BundleSpec.from_split(3, (0, b)) for b in range(0, 9)]
P1_SPECS = [
    BundleSpec.from_split(1, (0, a1, a2, a3))
    for a1 in range(4)
    for a2 in range(a1, 4)
    for a3 in range(a2, 4)
]


class TestReduce:
    def test_relation_instance(self):
        spec = BundleSpec.from_split(3, (0, 4))
        got = reduce(spec, {(2, 0): Fraction(1)})
        assert got == ChowClass(spec, {(1, 1): Fraction(4)})

    def test_trivial_p1_bundle(self):
        spec = BundleSpec.from_split(1, (0, 0, 0, 0))
        assert reduce(spec, {(4, 0): Fraction(1)}).is_zero()
        # the top intersection lives in xi^3*H
        assert integrate(reduce(spec, {(3, 1): Fraction(1)})) == 1

    def test_two_step_reduction(self):
        # c1=2, c2=1: xi^3 -> 3*H^2*xi - 2*H^3
        spec = BundleSpec.from_chern(2, 1)
        got = reduce(spec, {(3, 0): Fraction(1)})
        assert got == ChowClass(spec, {(1, 2): Fraction(3), (0, 3): Fraction(-2)})

    def test_h_truncation(self):
        spec = BundleSpec.from_split(3, (0, 2))
        assert reduce(spec, {(0, 4): Fraction(1)}).is_zero()
        spec1 = BundleSpec.from_split(1, (0, 0, 1, 1))
        assert reduce(spec1, {(0, 2): Fraction(1)}).is_zero()

    def test_ring_homomorphism(self):
        rng = random.Random(23)
        for spec in (BundleSpec.from_chern(3, 2), BundleSpec.from_split(1, (0, 1, 2, 3))):
            r, m = spec.rank, spec.base_dim
            for _ in range(20):
                f1 = {(rng.randint(0, r + 2), rng.randint(0, m)): Fraction(rng.randint(-4, 4))
                      for _ in range(4)}
                f2 = {(rng.randint(0, r + 2), rng.randint(0, m)): Fraction(rng.randint(-4, 4))
                      for _ in range(4)}
                prod = {}
                for (i1, j1), c1 in f1.items():
                    for (i2, j2), c2 in f2.items():
                        k = (i1 + i2, j1 + j2)
                        prod[k] = prod.get(k, Fraction(0)) + c1 * c2
                assert reduce(spec, f1) * reduce(spec, f2) == reduce(spec, prod)


class TestIntegrate:
    def test_point_class(self):
        spec = BundleSpec.from_chern(5, 3)
        assert integrate(reduce(spec, {(1, 3): Fraction(1)})) == 1

    def test_h4_vanishes(self):
        spec = BundleSpec.from_chern(5, 3)
        assert integrate(reduce(spec, {(0, 4): Fraction(1)})) == 0

    def test_xi4_closed_form(self):
        spec = BundleSpec.from_split(3, (0, 4))
        assert integrate(reduce(spec, {(4, 0): Fraction(1)})) == 64


class TestClosedForms:
    @pytest.mark.parametrize(
        "c1,c2,expected",
        [(4, 0, (1, 4, 16, 64)), (0, 0, (1, 0, 0, 0)), (2, 1, (1, 2, 3, 4))],
    )
    def test_examples(self, c1, c2, expected):
        spec = BundleSpec.from_chern(c1, c2)
        assert closed_form_intersections(spec).as_tuple() == expected

    @pytest.mark.parametrize("spec", P3_SPECS + P1_SPECS, ids=str)
    def test_matches_reduction(self, spec):
        assert closed_form_intersections(spec) == intersection_numbers_by_reduction(spec)


class TestTangentChern:
    def test_degree_one_is_anticanonical(self):
        cases = [
            (BundleSpec.from_split(3, (0, 4)), {(1, 0): Fraction(2)}),
            (BundleSpec.from_split(1, (0, 0, 0, 0)),
             {(1, 0): Fraction(4), (0, 1): Fraction(2)}),
            (BundleSpec.from_split(3, (0, 0)),
             {(1, 0): Fraction(2), (0, 1): Fraction(4)}),
        ]
        for spec, coeffs in cases:
            ct = tangent_total_chern(spec)
            assert ct[1] == ChowClass(spec, coeffs)
            assert ct[1] == anticanonical_class(spec)

    @pytest.mark.parametrize("spec", P3_SPECS[:5] + P1_SPECS[:8], ids=str)
    def test_general_anticanonical_formula(self, spec):
        # degree-1 part is r*xi + (m+1-c1)*H in both geometries
        ct = tangent_total_chern(spec)
        want = ChowClass(
            spec,
            {(1, 0): Fraction(spec.rank),
             (0, 1): Fraction(spec.base_dim + 1 - spec.c1)},
        )
        assert ct[1] == want

    def test_c0_is_one(self):
        ct = tangent_total_chern(BundleSpec.from_split(3, (0, 2)))
        assert ct[0] == ChowClass.one(BundleSpec.from_split(3, (0, 2)))

    def test_non_split_refused(self):
        with pytest.raises(ValueError):
            tangent_total_chern(BundleSpec.from_chern(2, 1))


class TestBundleSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            BundleSpec(2, 2, 0)
        with pytest.raises(ValueError):
            BundleSpec(3, 2, 5, 0, (0, 4))  # c1 mismatch
        with pytest.raises(ValueError):
            BundleSpec(1, 4, 1, 1)  # c2 on P^1

    def test_normalization(self):
        spec = BundleSpec.from_split(3, (1, 3))
        norm = spec.normalized()
        assert norm.split_degrees == (0, 2)
        assert spec.gamma() == norm.gamma()

    def test_json_terms(self):
        spec = BundleSpec.from_split(3, (0, 2))
        cls = ChowClass(spec, {(1, 1): Fraction(3, 2)})
        assert cls.to_json_terms() == [{"xi_pow": 1, "h_pow": 1, "coeff": "3/2"}]
