"""Chow-ring arithmetic for projectivized bundles over projective space.

Z = P(E) for E a bundle over P^m.  The ring is Q[xi, H] modulo

  * H^(m+1) = 0, and
  * the defining relation of the projectivization,
      xi^r = c1*H*xi^(r-1) - c2*H^2*xi^(r-2) + ...  (signs alternating),

so every class has a unique normal form with xi-power < r and H-power <= m.
The two supported geometries are (m, r) = (3, 2) and (1, 4); one reduction
engine serves both.

Top-degree integration reads off the coefficient of xi^(r-1) * H^m, which is
the class of a point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

SUPPORTED_CASES = {(3, 2), (1, 4)}


@dataclass(frozen=True)
class BundleSpec:
    """The input datum: a rank-r bundle over P^m described by Chern data.

    ``split_degrees`` is present iff the bundle is a direct sum of line
    bundles; cone and contraction work additionally requires it normalized
    (minimal degree 0).  For m = 1 all Chern classes above c1 vanish on the
    base, so only c1 is stored.
    """

    base_dim: int
    rank: int
    c1: int
    c2: int = 0
    split_degrees: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if (self.base_dim, self.rank) not in SUPPORTED_CASES:
            raise ValueError(
                f"unsupported (base_dim, rank) = ({self.base_dim}, {self.rank})"
            )
        if self.base_dim == 1 and self.c2 != 0:
            raise ValueError("c2 vanishes identically over P^1")
        if self.split_degrees is not None:
            degs = self.split_degrees
            if len(degs) != self.rank:
                raise ValueError("split degree count must equal the rank")
            if list(degs) != sorted(degs):
                raise ValueError("split degrees must be sorted ascending")
            if sum(degs) != self.c1:
                raise ValueError("c1 must equal the sum of the split degrees")
            if self.base_dim == 3:
                a, b = degs
                if self.c2 != a * b:
                    raise ValueError("c2 must equal the product of the split degrees")

    @classmethod
    def from_split(cls, base_dim: int, degrees: Sequence[int]) -> "BundleSpec":
        degs = tuple(sorted(int(d) for d in degrees))
        c1 = sum(degs)
        c2 = degs[0] * degs[1] if base_dim == 3 else 0
        return cls(base_dim, len(degs), c1, c2, degs)

    @classmethod
    def from_chern(cls, c1: int, c2: int) -> "BundleSpec":
        """Rank-2 bundle over P^3 known only through (c1, c2)."""
        return cls(3, 2, c1, c2)

    @property
    def is_split(self) -> bool:
        return self.split_degrees is not None

    @property
    def is_normalized(self) -> bool:
        return self.is_split and min(self.split_degrees) == 0

    def normalized(self) -> "BundleSpec":
        """Twist so the minimal split degree is 0."""
        if not self.is_split:
            raise ValueError("normalization needs split degrees")
        lo = min(self.split_degrees)
        return BundleSpec.from_split(
            self.base_dim, [d - lo for d in self.split_degrees]
        )

    def chern_coefficient(self, k: int) -> int:
        """c_k(E) as an integer multiple of H^k; zero outside the stored range."""
        if k == 0:
            return 1
        if k == 1:
            return self.c1
        if k == 2 and self.base_dim >= 2:
            return self.c2
        return 0

    def gamma(self) -> int:
        """The twist-invariant c1^2 - 4*c2 of a rank-2 bundle over P^3."""
        if (self.base_dim, self.rank) != (3, 2):
            raise ValueError("gamma is defined for rank-2 bundles over P^3")
        return self.c1 ** 2 - 4 * self.c2


FormalPoly = Dict[Tuple[int, int], Fraction]  # (xi_pow, h_pow) -> coefficient


class ChowClass:
    """A class on Z in normal form: coefficient grid over xi^i * H^j.

    Grid indices satisfy 0 <= i < rank and 0 <= j <= base_dim.  Mixed-degree
    (inhomogeneous) classes are allowed; ``graded_part`` extracts pure pieces.
    """

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: BundleSpec, coeffs: Optional[FormalPoly] = None) -> None:
        self.spec = spec
        self.coeffs: FormalPoly = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if not (0 <= i < spec.rank and 0 <= j <= spec.base_dim):
                    raise ValueError(f"({i},{j}) is not in normal form")
                self.coeffs[(i, j)] = c

    @classmethod
    def zero(cls, spec: BundleSpec) -> "ChowClass":
        return cls(spec)

    @classmethod
    def one(cls, spec: BundleSpec) -> "ChowClass":
        return cls(spec, {(0, 0): Fraction(1)})

    @classmethod
    def xi(cls, spec: BundleSpec) -> "ChowClass":
        return cls(spec, {(1, 0): Fraction(1)})

    @classmethod
    def hyperplane(cls, spec: BundleSpec) -> "ChowClass":
        return cls(spec, {(0, 1): Fraction(1)})

    def coefficient(self, xi_pow: int, h_pow: int) -> Fraction:
        return self.coeffs.get((xi_pow, h_pow), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChowClass)
            and self.spec == other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.spec, frozenset(self.coeffs.items())))

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        cs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            cs[k] = cs.get(k, Fraction(0)) + c
        return ChowClass(self.spec, cs)

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.spec, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(
                self.spec, {k: c * other for k, c in self.coeffs.items()}
            )
        self._check(other)
        formal: FormalPoly = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                formal[k] = formal.get(k, Fraction(0)) + c1 * c2
        return reduce(self.spec, formal)

    __rmul__ = __mul__

    def graded_part(self, degree: int) -> "ChowClass":
        return ChowClass(
            self.spec,
            {k: c for k, c in self.coeffs.items() if k[0] + k[1] == degree},
        )

    def _check(self, other: "ChowClass") -> None:
        if self.spec != other.spec:
            raise ValueError("classes live on different bundles")

    def to_json_terms(self) -> List[dict]:
        """Serialize the grid as a list of {xi_pow, h_pow, coeff} entries."""
        out = []
        for (i, j) in sorted(self.coeffs):
            c = self.coeffs[(i, j)]
            out.append(
                {"xi_pow": i, "h_pow": j, "coeff": f"{c.numerator}/{c.denominator}"}
            )
        return out

    def __repr__(self) -> str:
        if self.is_zero():
            return "ChowClass(0)"
        parts = []
        for (i, j) in sorted(self.coeffs):
            mono = []
            if i:
                mono.append("xi" if i == 1 else f"xi^{i}")
            if j:
                mono.append("H" if j == 1 else f"H^{j}")
            c = self.coeffs[(i, j)]
            parts.append(f"{c}*" + "*".join(mono) if mono else f"{c}")
        return "ChowClass(" + " + ".join(parts) + ")"


def reduce(spec: BundleSpec, formal: FormalPoly) -> ChowClass:
    """Normal form of a formal polynomial in xi and H.

    Powers H^j with j > m are dropped; powers xi^t with t >= r are rewritten
    through the defining relation
        xi^r = sum_k (-1)^(k+1) * c_k * H^k * xi^(r-k),
    each substitution strictly lowering the xi-degree, so this terminates.
    """
    m, r = spec.base_dim, spec.rank
    work = {k: Fraction(c) for k, c in formal.items() if c != 0}
    out: FormalPoly = {}
    while work:
        (i, j), c = work.popitem()
        if c == 0 or j > m:
            continue
        if i < r:
            key = (i, j)
            out[key] = out.get(key, Fraction(0)) + c
            continue
        for k in range(1, r + 1):
            ck = spec.chern_coefficient(k)
            if ck == 0:
                continue
            sign = 1 if k % 2 == 1 else -1
            nk = (i - k, j + k)
            work[nk] = work.get(nk, Fraction(0)) + c * sign * ck
    return ChowClass(spec, {k: c for k, c in out.items() if c != 0})


def integrate(c: ChowClass) -> Fraction:
    """Degree of the top piece: the coefficient of xi^(r-1) * H^m."""
    return c.coefficient(c.spec.rank - 1, c.spec.base_dim)


def anticanonical_class(spec: BundleSpec) -> ChowClass:
    """-K_Z = r*xi + (m + 1 - c1)*H."""
    return ChowClass(
        spec,
        {
            (1, 0): Fraction(spec.rank),
            (0, 1): Fraction(spec.base_dim + 1 - spec.c1),
        },
    )


@dataclass(frozen=True)
class IntersectionNumbers:
    """Top intersection numbers of xi and H powers on Z (dim Z = 4)."""

    xi1_h3: int
    xi2_h2: int
    xi3_h1: int
    xi4: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.xi1_h3, self.xi2_h2, self.xi3_h1, self.xi4)


def closed_form_intersections(spec: BundleSpec) -> IntersectionNumbers:
    """Closed forms for the four top intersections.

    (m, r) = (3, 2):  (1, c1, c1^2 - c2, c1^3 - 2*c1*c2)
    (m, r) = (1, 4):  the analog record (xi^3*H = 1, xi^4 = c1); the two
    mixed entries xi*H^3 and xi^2*H^2 vanish because H^2 = 0 on P^1.
    """
    c1, c2 = spec.c1, spec.c2
    if (spec.base_dim, spec.rank) == (3, 2):
        return IntersectionNumbers(1, c1, c1 ** 2 - c2, c1 ** 3 - 2 * c1 * c2)
    return IntersectionNumbers(0, 0, 1, c1)


def intersection_numbers_by_reduction(spec: BundleSpec) -> IntersectionNumbers:
    """Same record computed by reduce + integrate; oracle for the closed forms."""
    vals = []
    for i, j in ((1, 3), (2, 2), (3, 1), (4, 0)):
        v = integrate(reduce(spec, {(i, j): Fraction(1)}))
        if v.denominator != 1:
            raise ArithmeticError("intersection number is not an integer")
        vals.append(int(v))
    return IntersectionNumbers(*vals)


@dataclass
class ChernTotal:
    """Graded components c0..c4 of a total Chern class on Z."""

    parts: List[ChowClass]

    def __getitem__(self, k: int) -> ChowClass:
        return self.parts[k]

    def total(self) -> ChowClass:
        acc = ChowClass.zero(self.parts[0].spec)
        for p in self.parts:
            acc = acc + p
        return acc


def tangent_total_chern(spec: BundleSpec) -> ChernTotal:
    """Total Chern class of the tangent bundle of Z for split E.

    From the relative Euler sequence and the pullback of the Euler sequence
    on the base:  c(T_Z) = prod_i (1 + xi - a_i*H) * (1 + H)^(m+1).
    The split degrees are the Chern roots of E, hence the product form.
    """
    if not spec.is_split:
        raise ValueError("tangent Chern classes need split degrees")
    acc = ChowClass.one(spec)
    for a in spec.split_degrees:
        factor = ChowClass(
            spec, {(0, 0): Fraction(1), (1, 0): Fraction(1), (0, 1): Fraction(-a)}
        )
        acc = acc * factor
    h_factor = ChowClass(spec, {(0, 0): Fraction(1), (0, 1): Fraction(1)})
    for _ in range(spec.base_dim + 1):
        acc = acc * h_factor
    return ChernTotal([acc.graded_part(k) for k in range(5)])
