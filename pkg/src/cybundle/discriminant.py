"""The discriminant octic of the double cover pi: X -> P^3.

A section of -K_Z over a split rank-2 bundle with degrees (a, b) is a
fiberwise quadric  s = s00*x0^2 + s01*x0*x1 + s11*x1^2  with coefficient
polynomials of degrees (a-b+4, 4, b-a+4) on P^3.  The branch locus of the
induced 2:1 cover is the degree-8 surface

    Delta = s01^2 - 4*s00*s11,

and the common zeros of (s00, s01, s11) -- the full fibers contained in
X -- are singular points of Delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .chow import BundleSpec
from .invariants import OracleMismatchError, fiber_count
from .ratpoly import (
    MultiPoly,
    monomials_of_degree,
    multipoly_gradient,
    to_canonical_text,
)


@dataclass(frozen=True)
class QuadraticSection:
    """The fiberwise quadric datum (s00, s01, s11) over a split spec."""

    spec: BundleSpec
    s00: MultiPoly
    s01: MultiPoly
    s11: MultiPoly

    def __post_init__(self):
        if (self.spec.base_dim, self.spec.rank) != (3, 2) or not self.spec.is_split:
            raise ValueError("quadratic sections need a split rank-2 spec on P^3")
        d00, d01, d11 = section_degrees(self.spec)
        if d00 < 0:
            raise ValueError("inadmissible spec: the s00 degree is negative")
        for name, poly, want in (
            ("s00", self.s00, d00),
            ("s01", self.s01, d01),
            ("s11", self.s11, d11),
        ):
            if poly.is_zero():
                continue
            if not poly.is_homogeneous() or poly.total_degree() != want:
                raise ValueError(f"{name} must be homogeneous of degree {want}")

    def scale(self, r) -> "QuadraticSection":
        return QuadraticSection(self.spec, self.s00 * r, self.s01 * r, self.s11 * r)


def section_degrees(spec: BundleSpec) -> Tuple[int, int, int]:
    """(d00, d01, d11) = (a-b+4, 4, b-a+4) for the splitting type (a, b)."""
    a, b = spec.split_degrees
    return (a - b + 4, 4, b - a + 4)


@dataclass(frozen=True)
class Octic:
    """A (possibly zero) octic surface in P^3."""

    poly: MultiPoly

    def __post_init__(self):
        if not self.poly.is_zero():
            if not self.poly.is_homogeneous() or self.poly.total_degree() != 8:
                raise ValueError("the discriminant must be homogeneous of degree 8")

    def to_text(self) -> str:
        return to_canonical_text(self.poly)

    def to_json_coeffs(self) -> dict:
        return {
            ",".join(map(str, e)): f"{c.numerator}/{c.denominator}"
            for e, c in sorted(self.poly.terms.items())
        }


def build_discriminant(q: QuadraticSection) -> Octic:
    """Delta = s01^2 - 4*s00*s11, homogeneous of degree 8."""
    return Octic(q.s01 * q.s01 - 4 * (q.s00 * q.s11))


def scaling_law_check(q: QuadraticSection, r) -> bool:
    """Delta(r*q) == r^2 * Delta(q), exactly."""
    r = Fraction(r)
    lhs = build_discriminant(q.scale(r)).poly
    rhs = build_discriminant(q).poly * (r * r)
    return lhs == rhs


def base_locus_expected(spec: BundleSpec) -> int:
    """Bezout count of common zeros of (s00, s01, s11): d00*d01*d11.

    Equals 4*(16 - (b-a)^2) = 64 - 4*gamma, and is asserted against the
    fiber count.
    """
    d00, d01, d11 = section_degrees(spec)
    if d00 < 0:
        raise ValueError("inadmissible spec: b - a > 4")
    bezout = d00 * d01 * d11
    fibers = fiber_count(spec)
    if bezout != fibers:
        raise OracleMismatchError(f"Bezout {bezout} != fiber count {fibers}")
    return bezout


@dataclass(frozen=True)
class WitnessRecord:
    """Evaluation of the section data and the discriminant at one point."""

    point: Tuple[Fraction, Fraction, Fraction, Fraction]
    s00: Fraction
    s01: Fraction
    s11: Fraction
    delta: Fraction
    gradient: Tuple[Fraction, Fraction, Fraction, Fraction]
    on_base_locus: bool
    singular_point_verified: bool
    note: str


def singularity_witness(q: QuadraticSection, point: Sequence) -> WitnessRecord:
    """Evaluate (s00, s01, s11, Delta, grad Delta) at a point of P^3.

    If all three section components vanish there, the point is a full fiber
    and must be a singular point of the octic: both the value and the
    gradient of Delta are asserted to vanish.
    """
    pt = tuple(Fraction(x) for x in point)
    if all(x == 0 for x in pt):
        raise ValueError("(0,0,0,0) is not a point of P^3")
    delta = build_discriminant(q).poly
    v00, v01, v11 = (p.evaluate(pt) for p in (q.s00, q.s01, q.s11))
    dval = delta.evaluate(pt)
    grad = tuple(g.evaluate(pt) for g in multipoly_gradient(delta))
    on_locus = v00 == v01 == v11 == 0
    if on_locus:
        if dval != 0 or any(g != 0 for g in grad):
            raise OracleMismatchError(
                "a base-locus point failed to be a singular point of the octic"
            )
        note = "full fiber: octic value and gradient vanish"
        verified = True
    elif dval == 0:
        note = "on the octic; smooth-point test not performed"
        verified = False
    else:
        note = "off the octic; no singularity claim"
        verified = False
    return WitnessRecord(
        point=pt,
        s00=v00,
        s01=v01,
        s11=v11,
        delta=dval,
        gradient=grad,
        on_base_locus=on_locus,
        singular_point_verified=verified,
        note=note,
    )


def gradient_identity_holds(q: QuadraticSection) -> bool:
    """grad Delta = 2*s01*grad s01 - 4*s11*grad s00 - 4*s00*grad s11,
    as an identity of polynomials."""
    delta = build_discriminant(q).poly
    g_delta = multipoly_gradient(delta)
    g00 = multipoly_gradient(q.s00)
    g01 = multipoly_gradient(q.s01)
    g11 = multipoly_gradient(q.s11)
    for i in range(4):
        rhs = 2 * (q.s01 * g01[i]) - 4 * (q.s11 * g00[i]) - 4 * (q.s00 * g11[i])
        if g_delta[i] != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# Deterministic sampling
# ---------------------------------------------------------------------------

_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_LCG_MASK = (1 << 64) - 1


class _Lcg:
    """64-bit linear congruential generator; fixed constants, documented in
    the CLI schema so golden files are reproducible across platforms."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _LCG_MASK

    def next_u64(self) -> int:
        self.state = (self.state * _LCG_MULT + _LCG_INC) & _LCG_MASK
        return self.state

    def next_int(self, lo: int, hi: int) -> int:
        # top 32 bits; span is tiny compared to 2^32 so modulo bias is nil
        return lo + (self.next_u64() >> 32) % (hi - lo + 1)


def sample_section(spec: BundleSpec, seed: int, bound: int) -> QuadraticSection:
    """Pseudo-random rational coefficients in [-bound, bound], one per
    monomial of each prescribed degree.  Same seed, same output."""
    d00, d01, d11 = section_degrees(spec)
    if d00 < 0:
        raise ValueError("inadmissible spec: b - a > 4")
    if bound < 0:
        raise ValueError("bound must be >= 0")
    rng = _Lcg(seed)

    def draw(degree: int) -> MultiPoly:
        terms = {}
        for e in monomials_of_degree(degree):
            num = rng.next_int(-bound, bound)
            den = rng.next_int(1, 4)
            terms[e] = Fraction(num, den)
        return MultiPoly(terms)

    return QuadraticSection(spec, draw(d00), draw(d01), draw(d11))


def witness_section(spec: BundleSpec, seed: int, bound: int) -> QuadraticSection:
    """A seeded section whose components all vanish at (1, 0, 0, 0).

    Built by dropping the pure z0 monomial from each component, so the point
    lies in the base locus and is a guaranteed singular point of the octic.
    """
    q = sample_section(spec, seed, max(bound, 1))

    def drop_pure_z0(p: MultiPoly, degree: int) -> MultiPoly:
        terms = dict(p.terms)
        terms.pop((degree, 0, 0, 0), None)
        return MultiPoly(terms)

    d00, d01, d11 = section_degrees(spec)
    return QuadraticSection(
        spec,
        drop_pure_z0(q.s00, d00),
        drop_pure_z0(q.s01, d01),
        drop_pure_z0(q.s11, d11),
    )
