"""Numerical invariants of the Calabi-Yau anticanonical hypersurface X in Z.

Every invariant is computed twice: once from the closed forms in terms of
(c1, c2, gamma), and once through the Chow-ring / Chern-class oracle built
from the Euler sequences (adjunction: c(T_X) = c(T_Z)|X / (1 - K_Z|X)).
A disagreement raises OracleMismatchError -- self-validation is the point
of the library, not an afterthought.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from fractions import Fraction
from math import comb
from typing import Optional

from .chow import (
    BundleSpec,
    ChowClass,
    anticanonical_class,
    integrate,
    reduce,
    tangent_total_chern,
)
from .cohomology import SplitBundle, cohomology, end_bundle, sym_power


class OracleMismatchError(ArithmeticError):
    """A closed form disagreed with its independent Chow-ring oracle."""


def gamma(spec: BundleSpec) -> int:
    """c1^2 - 4*c2 for rank-2 bundles over P^3 (twist invariant)."""
    return spec.gamma()


@dataclass
class CyInvariants:
    """The full invariant record of X = {-K_Z section = 0} in Z = P(E).

    Triple products are in the basis (xi|X, pi^*h); mk_* fields refer to
    -K_Z|X.  ``oracle_checked`` records whether the split-bundle Chern
    oracle was run against the closed forms (it is skipped when only
    (c1, c2) are known).
    """

    base_dim: int
    c1: int
    c2: int
    gamma: Optional[int]          # m = 3 only
    c3_X: int
    h_dot_c2: int
    xi_dot_c2: int
    mk_dot_c2: int
    h3: int                       # (pi^*h)^3 on X
    xi_h2: int                    # xi . (pi^*h)^2 on X
    xi2_h: int                    # xi^2 . pi^*h on X
    xi3: int                      # xi^3 on X
    fiber_count: Optional[int]    # m = 3 only
    picard_number: Optional[int]
    picard_hypothesis_note: Optional[str]
    mk_cubed: Optional[int]       # m = 1 only
    mk_sq_h: Optional[int]        # m = 1 only
    oracle_checked: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _as_int(name: str, value: Fraction) -> int:
    if value.denominator != 1:
        raise OracleMismatchError(f"{name} = {value} is not an integer")
    return int(value)


def _oracle_numbers(spec: BundleSpec) -> dict:
    """All oracle integrals on Z needed by the invariant records.

    X in |-K_Z| turns a degree-3 class a on X into the degree-4 integral
    of a.(-K_Z) on Z; c2(X) = c2(Z)|X and c3(X) = (c3(Z) - c2(Z).(-K_Z))|X
    by adjunction with N_{X|Z} = -K_Z|X.
    """
    L = anticanonical_class(spec)
    ct = tangent_total_chern(spec)
    c2Z, c3Z = ct[2], ct[3]
    xi = ChowClass.xi(spec)
    H = ChowClass.hyperplane(spec)
    c3X = c3Z - c2Z * L

    def ival(cls: ChowClass) -> Fraction:
        return integrate(cls)

    return {
        "c3_X": ival(c3X * L),
        "h_dot_c2": ival(H * c2Z * L),
        "xi_dot_c2": ival(xi * c2Z * L),
        "mk_dot_c2": ival(L * c2Z * L),
        "h3": ival(H * H * H * L),
        "xi_h2": ival(xi * H * H * L),
        "xi2_h": ival(xi * xi * H * L),
        "xi3": ival(xi * xi * xi * L),
        "mk_cubed": ival(L * L * L * L),
        "mk_sq_h": ival(L * L * H * L),
    }


def _compare(closed: dict, oracle: dict) -> None:
    for key, want in closed.items():
        got = oracle[key]
        if got != want:
            raise OracleMismatchError(
                f"{key}: closed form {want} != oracle {got}"
            )


def invariants_p3(spec: BundleSpec) -> CyInvariants:
    """Invariant record for rank-2 bundles over P^3."""
    if (spec.base_dim, spec.rank) != (3, 2):
        raise ValueError("invariants_p3 needs a rank-2 bundle over P^3")
    c1, g = spec.c1, spec.gamma()
    closed = {
        "c3_X": Fraction(-8 * g - 168),
        "h_dot_c2": Fraction(44),
        "xi_dot_c2": Fraction(4 * g + 22 * c1 + 24),
        "mk_dot_c2": Fraction(8 * g + 224),
        "h3": Fraction(2),
        "xi_h2": Fraction(c1 + 4),
        "xi2_h": Fraction(g, 2) + Fraction(c1 ** 2, 2) + 4 * c1,
        "xi3": g + Fraction(3 * g * c1, 4) + 3 * c1 ** 2 + Fraction(c1 ** 3, 4),
    }
    checked = False
    if spec.is_split:
        _compare(closed, _oracle_numbers(spec))
        checked = True
    fibers = fiber_count(spec) if spec.gamma() <= 16 else None
    rho, note = (None, None)
    if spec.is_split:
        rho, note = picard_number(spec)
    return CyInvariants(
        base_dim=3,
        c1=c1,
        c2=spec.c2,
        gamma=g,
        c3_X=_as_int("c3_X", closed["c3_X"]),
        h_dot_c2=_as_int("h_dot_c2", closed["h_dot_c2"]),
        xi_dot_c2=_as_int("xi_dot_c2", closed["xi_dot_c2"]),
        mk_dot_c2=_as_int("mk_dot_c2", closed["mk_dot_c2"]),
        h3=_as_int("h3", closed["h3"]),
        xi_h2=_as_int("xi_h2", closed["xi_h2"]),
        xi2_h=_as_int("xi2_h", closed["xi2_h"]),
        xi3=_as_int("xi3", closed["xi3"]),
        fiber_count=fibers,
        picard_number=rho,
        picard_hypothesis_note=note,
        mk_cubed=None,
        mk_sq_h=None,
        oracle_checked=checked,
    )


def invariants_p1(spec: BundleSpec) -> CyInvariants:
    """Invariant record for rank-4 bundles over P^1."""
    if (spec.base_dim, spec.rank) != (1, 4):
        raise ValueError("invariants_p1 needs a rank-4 bundle over P^1")
    c1 = spec.c1
    closed = {
        "c3_X": Fraction(-168),
        "h_dot_c2": Fraction(24),
        "xi_dot_c2": Fraction(6 * c1 + 44),
        "mk_dot_c2": Fraction(224),
        "mk_cubed": Fraction(512),
        "mk_sq_h": Fraction(64),
        "xi3": Fraction(3 * c1 + 2),
        "xi2_h": Fraction(4),
        "xi_h2": Fraction(0),
        "h3": Fraction(0),
    }
    checked = False
    if spec.is_split:
        _compare(closed, _oracle_numbers(spec))
        checked = True
    rho, note = (None, None)
    if spec.is_split:
        rho, note = picard_number(spec)
    return CyInvariants(
        base_dim=1,
        c1=c1,
        c2=0,
        gamma=None,
        c3_X=_as_int("c3_X", closed["c3_X"]),
        h_dot_c2=_as_int("h_dot_c2", closed["h_dot_c2"]),
        xi_dot_c2=_as_int("xi_dot_c2", closed["xi_dot_c2"]),
        mk_dot_c2=_as_int("mk_dot_c2", closed["mk_dot_c2"]),
        h3=0,
        xi_h2=0,
        xi2_h=4,
        xi3=_as_int("xi3", closed["xi3"]),
        fiber_count=None,
        picard_number=rho,
        picard_hypothesis_note=note,
        mk_cubed=512,
        mk_sq_h=64,
        oracle_checked=checked,
    )


def fiber_count(spec: BundleSpec) -> int:
    """Number of full bundle fibers contained in X: 64 - 4*gamma.

    Cross-checked against c3 of the pushforward bundle S^2 E (x) O(r) at
    r = 4 - c1, and (for split E) against the Bezout product of the three
    section degrees.  gamma > 16 admits no smooth X at all.
    """
    if (spec.base_dim, spec.rank) != (3, 2):
        raise ValueError("fiber counting needs a rank-2 bundle over P^3")
    g = spec.gamma()
    if g > 16:
        raise ValueError(f"gamma = {g} > 16: no smooth Calabi-Yau exists")
    count = 64 - 4 * g
    c1, c2 = spec.c1, spec.c2
    r = 4 - c1
    c3_pushforward = (
        4 * c2 * c1 + 2 * r * (c1 ** 2 + 2 * c2) + 3 * r ** 2 * c1 + r ** 3
    )
    if c3_pushforward != count:
        raise OracleMismatchError(
            f"fiber count {count} != c3 of pushforward {c3_pushforward}"
        )
    if spec.is_split:
        a, b = spec.split_degrees
        bezout = (a - b + 4) * 4 * (b - a + 4)
        if bezout != count:
            raise OracleMismatchError(
                f"fiber count {count} != Bezout product {bezout}"
            )
    return count


def euler_characteristic_rank2_p3(spec: BundleSpec) -> Fraction:
    """chi(E) for rank-2 E over P^3 by Riemann-Roch:

    gamma*(c1+4)/8 + c1^3/24 + c1^2/2 + 11*c1/6 + 2.
    """
    if (spec.base_dim, spec.rank) != (3, 2):
        raise ValueError("this Riemann-Roch form is for rank-2 bundles on P^3")
    g, c1 = spec.gamma(), spec.c1
    return (
        Fraction(g * (c1 + 4), 8)
        + Fraction(c1 ** 3, 24)
        + Fraction(c1 ** 2, 2)
        + Fraction(11 * c1, 6)
        + 2
    )


def h0_split(a: int, b: int) -> int:
    """h^0 of O(a) + O(b) on P^3 for a, b >= 0: C(a+3,3) + C(b+3,3)."""
    if a < 0 or b < 0:
        raise ValueError("h0_split expects non-negative degrees")
    return comb(a + 3, 3) + comb(b + 3, 3)


def picard_number(spec: BundleSpec) -> tuple[int, str]:
    """Picard number of X with the relevant hypothesis note.

    m = 3: rho = 2 + h^2(End E) on P^3, which is 2 for every split bundle;
    the formula's stability hypothesis cannot hold for split bundles, so the
    value carries a "hypotheses-not-verified" note.  The one case worked out
    from scratch, E = O + O(4) up to twist, has rho = 1.

    m = 1: rho = 2 + h^1(S^4 E (x) O(2 - c1)) for normalized E; this is 2
    exactly when c1 <= 3.
    """
    if not spec.is_split:
        raise ValueError("picard number needs split degrees")
    norm = spec.normalized()
    if spec.base_dim == 3:
        if norm.split_degrees == (0, 4):
            return 1, "computed directly for O + O(4); -K_Z big and nef"
        h2 = cohomology(end_bundle(SplitBundle(3, norm.split_degrees)), 2)
        return 2 + h2, "hypotheses-not-verified: split bundles are not stable"
    bundle = SplitBundle(1, norm.split_degrees)
    twisted = sym_power(bundle, 4).twist(2 - norm.c1)
    h1 = cohomology(twisted, 1)
    return 2 + h1, "normalized convention"


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    gap: int            # b - a for the splitting type
    gamma: int
    gamma_max: int      # the split maximum (a - b)^2


def admissibility_p3(spec: BundleSpec) -> AdmissibilityReport:
    """Whether a split rank-2 bundle on P^3 can carry a smooth X: b - a <= 4.

    gamma_max reports the extremal value (a - b)^2 attained exactly by the
    split bundle of the same splitting type.
    """
    if (spec.base_dim, spec.rank) != (3, 2) or not spec.is_split:
        raise ValueError("admissibility is for split rank-2 bundles over P^3")
    a, b = spec.split_degrees
    return AdmissibilityReport(
        admissible=(b - a) <= 4,
        gap=b - a,
        gamma=spec.gamma(),
        gamma_max=(a - b) ** 2,
    )
