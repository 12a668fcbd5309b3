"""Assembly and exact solution of the linear system for the seven Chern
numbers of a hyperkahler tenfold of OG10 type.

Two expansions of the Euler characteristic of a line bundle are compared as
polynomials in y = sqrt(lambda/4 + 1), where lambda is the characteristic
value of the bundle. The closed side is binom(8y^2 - 2, 5), the Riemann-Roch
polynomial in the lambda normalization. The integral side exponentiates
-2 * sum_k b_{2k} p_{2k} T_{2k}(y) (modified Bernoulli numbers, power sums
of the Chern roots, even Chebyshev polynomials) and integrates; each of its
y-coefficients is a linear functional on the seven top Chern monomials.
Matching even coefficients yields six linear equations of rank three; the
four known chi^p invariants of the deformation type complete the system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .algebra import Poly, binomial_poly, chebyshev_t, modified_bernoulli
from .chern import (
    ChernNumbers,
    GradedClass,
    IntegralForm,
    Monomial,
    RingSpec,
    chi_p_form,
    integrate,
    one,
    power_sum,
)
from .linalg import matrix_rank, solve_unique

OG10_RING = RingSpec(10, hk=True)

# Fixed ordering of the seven weight-10 monomials, used for solution tuples,
# tables and JSON output.
OG10_MONOMIALS: tuple[Monomial, ...] = (
    (2, 2, 2, 2, 2),
    (2, 2, 2, 4),
    (2, 2, 6),
    (2, 8),
    (2, 4, 4),
    (4, 6),
    (10,),
)

# Known chi^p = sum_q (-1)^q h^{p,q} invariants of the OG10 deformation type,
# from its computed Hodge numbers. chi^3 is sometimes misquoted as -7151;
# -7173 is the value consistent with the integral Chern numbers (with -7151
# the system below still has rank 7 but its solution is non-integral).
HODGE_CHI: Mapping[int, Fraction] = {
    1: Fraction(-111),
    2: Fraction(1062),
    3: Fraction(-7173),
    4: Fraction(33534),
}


class ClassPoly:
    """Polynomial in one formal variable with graded-class coefficients."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: RingSpec, coeffs: Iterable[GradedClass] = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.spec = spec
        self.coeffs = tuple(cs)

    @classmethod
    def tensor(cls, gc: GradedClass, poly: Poly) -> "ClassPoly":
        """The element gc (x) poly, i.e. gc scaled by each poly coefficient."""
        return cls(gc.spec, (gc * c for c in poly.coeffs))

    def coefficient(self, j: int) -> GradedClass:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return GradedClass(self.spec)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "ClassPoly") -> "ClassPoly":
        if self.spec != other.spec:
            raise ValueError("ring specs differ")
        n = max(len(self.coeffs), len(other.coeffs))
        return ClassPoly(
            self.spec, (self.coefficient(j) + other.coefficient(j) for j in range(n))
        )

    def __mul__(self, other: "ClassPoly | Fraction | int") -> "ClassPoly":
        if isinstance(other, (int, Fraction)):
            return ClassPoly(self.spec, (c * other for c in self.coeffs))
        if self.spec != other.spec:
            raise ValueError("ring specs differ")
        if not self.coeffs or not other.coeffs:
            return ClassPoly(self.spec)
        out = [GradedClass(self.spec) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return ClassPoly(self.spec, out)

    __rmul__ = __mul__

    def exp(self) -> "ClassPoly":
        """Exponential, finite because every coefficient class is nilpotent."""
        if any(c.coefficient(()) for c in self.coeffs):
            raise ValueError("exp requires coefficients with no constant part")
        result = ClassPoly(self.spec, [one(self.spec)])
        term = result
        m = 0
        while True:
            m += 1
            term = term * self
            if not term:
                return result
            result = result + term * Fraction(1, factorial(m))

    def integrate(self) -> "FormPoly":
        return FormPoly(self.spec, (integrate(c) for c in self.coeffs))


class FormPoly:
    """Polynomial in one formal variable whose coefficients are integral
    forms on the top Chern monomials."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: RingSpec, coeffs: Iterable[IntegralForm] = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.spec = spec
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def coefficient(self, j: int) -> IntegralForm:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return IntegralForm(self.spec)

    def evaluate(self, numbers: ChernNumbers) -> Poly:
        """Pair every coefficient functional with concrete Chern numbers."""
        return Poly(form.evaluate(numbers) for form in self.coeffs)


@lru_cache(maxsize=None)
def chern_chi_expansion() -> FormPoly:
    """Integral side of the identity: the y-expansion of the line-bundle
    Euler characteristic with top Chern monomials left symbolic.

    The exponent sum stops at k = 5 because p_{2k} vanishes above the top
    weight.
    """
    spec = OG10_RING
    exponent = ClassPoly(spec)
    for k in range(1, spec.half + 1):
        weight = 2 * k
        scaled = power_sum(spec, weight) * (-2 * modified_bernoulli(weight))
        exponent = exponent + ClassPoly.tensor(scaled, chebyshev_t(weight))
    return exponent.exp().integrate()


def binomial_chi_expansion() -> Poly:
    """Closed side of the identity: binom(8y^2 - 2, 5) as a polynomial in y."""
    return binomial_poly(8, -2, 5).compose(Poly([0, 0, 1]))


@dataclass(frozen=True)
class Row:
    vector: tuple[Fraction, ...]
    rhs: Fraction
    source: str


@dataclass(frozen=True)
class LinearSystem:
    """Exact linear constraints on the seven top Chern monomials, each row
    tagged with the identity it came from."""

    unknowns: tuple[Monomial, ...]
    rows: tuple[Row, ...]

    def __add__(self, other: "LinearSystem") -> "LinearSystem":
        if self.unknowns != other.unknowns:
            raise ValueError("systems constrain different unknowns")
        return LinearSystem(self.unknowns, self.rows + other.rows)

    def coefficient_rank(self) -> int:
        return matrix_rank([list(row.vector) for row in self.rows])

    def residuals(self, numbers: ChernNumbers) -> dict[str, Fraction]:
        """Left-hand side minus right-hand side of every row; all zero iff
        the assignment satisfies the system."""
        out: dict[str, Fraction] = {}
        for row in self.rows:
            lhs = sum(
                (c * numbers[m] for c, m in zip(row.vector, self.unknowns)),
                Fraction(0),
            )
            out[row.source] = lhs - row.rhs
        return out


def assemble_rr_equations() -> LinearSystem:
    """One row per even power of y, equating the two chi expansions."""
    forms = chern_chi_expansion()
    target = binomial_chi_expansion()
    rows = []
    for j in range(0, 11, 2):
        rows.append(
            Row(
                forms.coefficient(j).vector(OG10_MONOMIALS),
                target.coefficient(j),
                f"y^{j} coefficient",
            )
        )
    return LinearSystem(OG10_MONOMIALS, tuple(rows))


def assemble_hodge_equations(include_chi0: bool = False) -> LinearSystem:
    """Rows chi^p = value for p = 1..4; optionally the chi^0 = 6 consistency
    row, which adds no new constraint."""
    rows = []
    if include_chi0:
        rows.append(
            Row(chi_p_form(OG10_RING, 0).vector(OG10_MONOMIALS), Fraction(6), "chi^0")
        )
    for p, value in HODGE_CHI.items():
        rows.append(
            Row(chi_p_form(OG10_RING, p).vector(OG10_MONOMIALS), value, f"chi^{p}")
        )
    return LinearSystem(OG10_MONOMIALS, tuple(rows))


def solve(system: LinearSystem) -> ChernNumbers:
    """Exact Gaussian elimination; raises unless the solution is unique."""
    values = solve_unique(
        [list(row.vector) for row in system.rows], [row.rhs for row in system.rows]
    )
    return ChernNumbers(OG10_RING, dict(zip(system.unknowns, values)))


def og10_chern_numbers() -> ChernNumbers:
    """Solve the combined coefficient-matching + chi^p system."""
    return solve(assemble_rr_equations() + assemble_hodge_equations())


def euler_characteristic_check(numbers: ChernNumbers) -> Fraction:
    """Alternating sum of the chi^p functionals paired with `numbers`.

    For a consistent assignment this equals the c_10 entry, the topological
    Euler characteristic.
    """
    return sum(
        ((-1) ** p * chi_p_form(OG10_RING, p).evaluate(numbers) for p in range(11)),
        Fraction(0),
    )
