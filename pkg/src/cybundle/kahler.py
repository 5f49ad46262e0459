"""Cubic-form analysis of the Kaehler cone and the second contraction.

N^1(X) is two-dimensional with basis (xi|X, pi^*h).  The cubic hypersurface
{D^3 = 0} is a binary cubic w(x, y); a double line in it forces rational
boundary rays via gcd(w, w').  For normalized split bundles the boundary
rays themselves are known (the cone of X is the restricted cone of Z), so
they are asserted and their c2-values reported rather than rediscovered.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from .chow import BundleSpec, ChowClass, anticanonical_class, integrate, reduce
from .invariants import CyInvariants, invariants_p1, invariants_p3
from .ratpoly import UniPoly, derivative, poly_gcd, rational_roots


class Rationality(str, Enum):
    RATIONAL_DOUBLE_LINE = "RationalDoubleLine"
    RATIONAL_FACTORS = "RationalFactors"
    IRRATIONAL_OR_UNRESOLVED = "IrrationalOrUnresolved"


class ContractionKind(str, Enum):
    DIVISOR_TO_SURFACE = "DivisorToSurface_P1xPk"
    RULED_OVER_POINTS = "RuledOverPoints"
    RULED_OVER_QUARTIC = "RuledOverQuartic"
    SIXTEEN_CURVES = "SixteenCurves_QuinticImage"
    SIXTY_FOUR_CURVES = "SixtyFourCurves"
    EXCLUDED = "ExcludedByTheorem"


@dataclass(frozen=True)
class CubicForm:
    """w(x, y) = sum_{i+j=3} w_ij x^i y^j in the basis (xi|X, pi^*h).

    w_ij = C(3, i) * (L1^i . L2^j) with L1 = xi|X, L2 = pi^*h.
    """

    w30: Fraction
    w21: Fraction
    w12: Fraction
    w03: Fraction

    def is_zero(self) -> bool:
        return self.w30 == self.w21 == self.w12 == self.w03 == 0

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return (
            self.w30 * x ** 3
            + self.w21 * x ** 2 * y
            + self.w12 * x * y ** 2
            + self.w03 * y ** 3
        )

    def chart_poly(self, chart: str) -> UniPoly:
        """Dehomogenize: chart 'y' sets y = 1 (poly in x), chart 'x' sets x = 1."""
        if chart == "y":
            return UniPoly([self.w03, self.w12, self.w21, self.w30])
        if chart == "x":
            return UniPoly([self.w30, self.w21, self.w12, self.w03])
        raise ValueError("chart must be 'x' or 'y'")


def w_cubic(inv: CyInvariants) -> CubicForm:
    """Expand (x*L1 + y*L2)^3 with the triple products from the invariants."""
    return CubicForm(
        w30=Fraction(inv.xi3),
        w21=Fraction(3 * inv.xi2_h),
        w12=Fraction(3 * inv.xi_h2),
        w03=Fraction(inv.h3),
    )


@dataclass(frozen=True)
class RationalityReport:
    verdict: Rationality
    chart: Optional[str]                 # which chart exhibited the gcd factor
    double_roots: Tuple[Fraction, ...]   # roots of gcd(w, Dw) in that chart
    all_roots: Tuple[Fraction, ...]      # rational roots in the y = 1 chart


def rationality_analysis(w: CubicForm) -> RationalityReport:
    """Double-line detection by gcd(w, Dw) on both dehomogenization charts.

    A double line through [1:0] is invisible in the y-chart, so both charts
    are inspected.  If no double line exists, fall back to full rational-root
    factorization of the cubic.
    """
    if w.is_zero():
        raise ValueError("the zero cubic has no rationality analysis")
    for chart in ("y", "x"):
        p = w.chart_poly(chart)
        if p.degree < 1:
            continue
        g = poly_gcd(p, derivative(p))
        if g.degree >= 1:
            roots = tuple(rational_roots(g))
            # the lemma guarantees rationality of the repeated factor; a
            # degree >= 1 gcd without rational roots would contradict it
            if len(roots) == g.degree:
                return RationalityReport(
                    verdict=Rationality.RATIONAL_DOUBLE_LINE,
                    chart=chart,
                    double_roots=roots,
                    all_roots=tuple(rational_roots(w.chart_poly("y")))
                    if w.chart_poly("y").degree >= 1
                    else (),
                )
    p = w.chart_poly("y")
    # degree drop in the y-chart means y divides w; a cubic with a simple
    # y-factor can still split off rational lines
    y_mult = 3 - p.degree
    roots = tuple(rational_roots(p)) if p.degree >= 1 else ()
    if len(roots) + y_mult == 3:
        return RationalityReport(
            verdict=Rationality.RATIONAL_FACTORS,
            chart=None,
            double_roots=(),
            all_roots=roots,
        )
    return RationalityReport(
        verdict=Rationality.IRRATIONAL_OR_UNRESOLVED,
        chart=None,
        double_roots=(),
        all_roots=roots,
    )


@dataclass(frozen=True)
class KahlerReport:
    rays: Tuple[Tuple[int, int], Tuple[int, int]]   # basis (xi|X, pi^*h)
    rationality: Rationality
    c2_values: Tuple[int, int]                      # per ray, same order
    degeneracy_det: Optional[int]                   # m = 3 only
    basis_det: int

    def to_dict(self) -> dict:
        return {
            "rays": [list(r) for r in self.rays],
            "rationality": self.rationality.value,
            "c2_values": list(self.c2_values),
            "degeneracy_det": self.degeneracy_det,
            "basis_det": self.basis_det,
        }


class RhoNotTwoError(ValueError):
    """The spec does not satisfy the rho = 2 criterion required here."""


def _require_rho_two(spec: BundleSpec) -> BundleSpec:
    if not spec.is_split:
        raise RhoNotTwoError("cone analysis needs split, normalized bundles")
    norm = spec.normalized()
    if norm.base_dim == 1:
        if norm.c1 > 3:
            raise RhoNotTwoError(f"c1 = {norm.c1} > 3 forces rho > 2")
    else:
        a, b = norm.split_degrees
        if b - a > 4:
            raise RhoNotTwoError(f"splitting gap {b - a} > 4: no smooth X")
        if (a, b) == (0, 4):
            raise RhoNotTwoError("O + O(4) has rho = 1")
    return norm


def boundary_rays(spec: BundleSpec) -> KahlerReport:
    """Kaehler-cone boundary rays with their c2-values.

    For normalized split bundles the rays are exactly xi|X = (1, 0) and
    pi^*h = (0, 1); both c2-values must be strictly positive.
    """
    norm = _require_rho_two(spec)
    if norm.base_dim == 3:
        inv = invariants_p3(norm)
    else:
        inv = invariants_p1(norm)
    ray_xi, ray_h = (1, 0), (0, 1)
    c2_xi, c2_h = inv.xi_dot_c2, inv.h_dot_c2
    if c2_xi <= 0 or c2_h <= 0:
        raise ArithmeticError("c2-positivity violated on a boundary ray")
    w = w_cubic(inv)
    verdict = rationality_analysis(w).verdict
    return KahlerReport(
        rays=(ray_xi, ray_h),
        rationality=verdict,
        c2_values=(c2_xi, c2_h),
        degeneracy_det=degeneracy_determinant(norm) if norm.base_dim == 3 else None,
        basis_det=h4_basis_determinant(norm),
    )


def degeneracy_determinant(spec: BundleSpec) -> int:
    """det [[c1+4, 2], [c1^2 - 2*c2 + 4*c1, c1+4]] = 16 - gamma.

    Vanishes exactly when gamma = 16, the case where a surface class on Z
    can be contracted by the anticanonical system.
    """
    if (spec.base_dim, spec.rank) != (3, 2):
        raise ValueError("degeneracy determinant is for rank-2 bundles on P^3")
    c1, c2 = spec.c1, spec.c2
    return (c1 + 4) ** 2 - 2 * (c1 ** 2 - 2 * c2 + 4 * c1)


def h4_basis_determinant(spec: BundleSpec) -> int:
    """Determinant of the Gram matrix of the middle-cohomology basis.

    m = 3 basis: ((pi^*h)^2, xi.pi^*h); m = 1 basis: (xi.pi^*h, xi^2).
    The Gram entries are recomputed through reduce/integrate; the result is
    -1 in both geometries, so the basis is unimodular.
    """
    if spec.base_dim == 3:
        v1, v2 = (0, 2), (1, 1)
    else:
        v1, v2 = (1, 1), (2, 0)

    def gram(a, b) -> Fraction:
        return integrate(
            reduce(spec, {(a[0] + b[0], a[1] + b[1]): Fraction(1)})
        )

    det = gram(v1, v1) * gram(v2, v2) - gram(v1, v2) * gram(v2, v1)
    if det.denominator != 1:
        raise ArithmeticError("Gram determinant is not an integer")
    return int(det)


@dataclass(frozen=True)
class ContractionReport:
    c1: int
    rk_trivial: int
    kind: ContractionKind
    count: Optional[int] = None
    k_y_squared: Optional[int] = None
    quartic_degree: Optional[int] = None
    image: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "c1": self.c1,
            "rk_trivial": self.rk_trivial,
            "kind": self.kind.value,
            "count": self.count,
            "k_y_squared": self.k_y_squared,
            "quartic_degree": self.quartic_degree,
            "image": self.image,
        }


def classify_contraction_p1(spec: BundleSpec) -> ContractionReport:
    """Classification of the second contraction for rank-4 bundles on P^1.

    Total in (c1, rk F), where F is the maximal trivial subbundle of the
    normalized splitting.  c1 > 3 means rho > 2 and is refused.
    """
    if (spec.base_dim, spec.rank) != (1, 4) or not spec.is_split:
        raise ValueError("classification needs a split rank-4 bundle over P^1")
    norm = spec.normalized()
    c1 = norm.c1
    if c1 > 3:
        raise RhoNotTwoError(f"c1 = {c1} > 3 forces rho > 2")
    rk_f = sum(1 for d in norm.split_degrees if d == 0)
    if c1 == 3:
        if rk_f >= 3:
            return ContractionReport(c1, rk_f, ContractionKind.EXCLUDED)
        return ContractionReport(c1, rk_f, ContractionKind.DIVISOR_TO_SURFACE)
    if c1 == 2:
        if rk_f == 2:
            return ContractionReport(
                c1, rk_f, ContractionKind.RULED_OVER_POINTS, count=4
            )
        return ContractionReport(
            c1, rk_f, ContractionKind.RULED_OVER_QUARTIC, quartic_degree=4
        )
    if c1 == 1:
        return ContractionReport(
            c1,
            rk_f,
            ContractionKind.SIXTEEN_CURVES,
            count=16,
            k_y_squared=verify_KY_squared(norm),
            image="quintic in P^4 with 16 double points on a linearly embedded P^2",
        )
    return ContractionReport(c1, rk_f, ContractionKind.SIXTY_FOUR_CURVES, count=64)


def verify_KY_squared(spec: BundleSpec) -> int:
    """(-K_Z).(xi - H)^3 on Z for the blow-up case E = 3O + O(1); equals -7.

    xi - H is the class of the exceptional divisor of the blow-down of Z to
    P^4; the integral is the self-intersection of the canonical divisor of
    the contracted surface.
    """
    if spec.base_dim != 1 or spec.normalized().split_degrees != (0, 0, 0, 1):
        raise ValueError("K_Y^2 verification is for degrees (0, 0, 0, 1)")
    norm = spec.normalized()
    e = ChowClass.xi(norm) - ChowClass.hyperplane(norm)
    val = integrate(anticanonical_class(norm) * e * e * e)
    if val.denominator != 1:
        raise ArithmeticError("K_Y^2 is not an integer")
    return int(val)
