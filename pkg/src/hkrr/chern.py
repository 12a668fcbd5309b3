"""Truncated graded ring of formal Chern classes.

The ring of a compact complex 2n-fold is modelled by its generators
c_1, ..., c_{2n} (only the even ones in holomorphic-symplectic mode, where
the odd Chern classes vanish), truncated above weight 2n. On top of the
ring arithmetic this module provides the symmetric-function toolbox:
Newton identities between Chern classes and power sums, Chern characters,
Adams operations, exterior powers, the Todd class, and formal integration
of the top-weight component.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from .algebra import todd_series
from .linalg import solve_unique

# A monomial is the nondecreasing tuple of its generator weights,
# e.g. c2^2*c4 -> (2, 2, 4) and the unit monomial -> ().
Monomial = tuple[int, ...]


@dataclass(frozen=True)
class RingSpec:
    """Ambient ring data: complex dimension and generator parity.

    With hk=True the generator set is c_2, c_4, ..., c_{2n}; odd-degree
    generators never exist, so no quotient step is needed later.
    """

    dim: int
    hk: bool = True

    def __post_init__(self) -> None:
        if self.dim <= 0 or self.dim % 2:
            raise ValueError("complex dimension must be a positive even integer")

    @property
    def half(self) -> int:
        return self.dim // 2

    @property
    def generators(self) -> tuple[int, ...]:
        step = 2 if self.hk else 1
        return tuple(range(step, self.dim + 1, step))

    def monomials(self, weight: int) -> tuple[Monomial, ...]:
        """All monomials of the given total weight."""
        return _partitions(weight, self.generators)

    def top_monomials(self) -> tuple[Monomial, ...]:
        return self.monomials(self.dim)


@lru_cache(maxsize=None)
def _partitions(weight: int, parts: tuple[int, ...]) -> tuple[Monomial, ...]:
    def descend(remaining: int, start: int, prefix: list[int]):
        if remaining == 0:
            yield tuple(prefix)
            return
        for i in range(start, len(parts)):
            part = parts[i]
            if part > remaining:
                break
            prefix.append(part)
            yield from descend(remaining - part, i, prefix)
            prefix.pop()

    return tuple(descend(weight, 0, []))


def monomial_label(mono: Monomial) -> str:
    """Render (2, 2, 4) as 'c2^2*c4'; the unit monomial as '1'."""
    if not mono:
        return "1"
    counts = Counter(mono)
    pieces = []
    for weight in sorted(counts):
        e = counts[weight]
        pieces.append(f"c{weight}" + (f"^{e}" if e > 1 else ""))
    return "*".join(pieces)


class GradedClass:
    """Element of the truncated Chern-class ring over a RingSpec.

    Stored sparsely as monomial -> coefficient. Products are truncated above
    weight spec.dim. Instances are immutable by convention.
    """

    __slots__ = ("spec", "components")

    def __init__(
        self,
        spec: RingSpec,
        components: Mapping[Monomial, Fraction | int] | None = None,
    ):
        generators = set(spec.generators)
        merged: dict[Monomial, Fraction] = {}
        for mono, value in (components or {}).items():
            key = tuple(sorted(mono))
            if any(w not in generators for w in key):
                raise ValueError(f"monomial {mono} uses weights outside the generators")
            if sum(key) > spec.dim:
                raise ValueError(f"monomial {mono} exceeds the top weight {spec.dim}")
            total = merged.get(key, Fraction(0)) + Fraction(value)
            if total:
                merged[key] = total
            else:
                merged.pop(key, None)
        self.spec = spec
        self.components = merged

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.components.get(tuple(sorted(mono)), Fraction(0))

    def weight_component(self, weight: int) -> "GradedClass":
        return GradedClass(
            self.spec,
            {m: v for m, v in self.components.items() if sum(m) == weight},
        )

    def __bool__(self) -> bool:
        return bool(self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.spec == other.spec and self.components == other.components

    __hash__ = None  # mutable dict inside

    def _check(self, other: "GradedClass") -> None:
        if self.spec != other.spec:
            raise ValueError("ring specs differ")

    def __add__(self, other: "GradedClass | Fraction | int") -> "GradedClass":
        if isinstance(other, (int, Fraction)):
            other = GradedClass(self.spec, {(): other})
        self._check(other)
        merged = dict(self.components)
        for mono, value in other.components.items():
            total = merged.get(mono, Fraction(0)) + value
            if total:
                merged[mono] = total
            else:
                merged.pop(mono, None)
        return GradedClass(self.spec, merged)

    __radd__ = __add__

    def __neg__(self) -> "GradedClass":
        return GradedClass(self.spec, {m: -v for m, v in self.components.items()})

    def __sub__(self, other: "GradedClass | Fraction | int") -> "GradedClass":
        if isinstance(other, (int, Fraction)):
            other = GradedClass(self.spec, {(): other})
        return self + (-other)

    def __mul__(self, other: "GradedClass | Fraction | int") -> "GradedClass":
        if isinstance(other, (int, Fraction)):
            return GradedClass(
                self.spec, {m: v * other for m, v in self.components.items()}
            )
        self._check(other)
        dim = self.spec.dim
        out: dict[Monomial, Fraction] = {}
        for m1, v1 in self.components.items():
            w1 = sum(m1)
            for m2, v2 in other.components.items():
                if w1 + sum(m2) > dim:
                    continue
                key = tuple(sorted(m1 + m2))
                total = out.get(key, Fraction(0)) + v1 * v2
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        return GradedClass(self.spec, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "GradedClass":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = one(self.spec)
        for _ in range(exponent):
            result = result * self
        return result

    def exp(self) -> "GradedClass":
        """exp(a) = sum a^m/m!, finite because a is nilpotent.

        Requires a vanishing weight-0 component.
        """
        if self.coefficient(()):
            raise ValueError("exp requires a vanishing constant part")
        result = one(self.spec)
        term = one(self.spec)
        m = 0
        while True:
            m += 1
            term = term * self
            if not term:
                return result
            result = result + term * Fraction(1, factorial(m))

    def __repr__(self) -> str:
        if not self.components:
            return "GradedClass(0)"
        body = " + ".join(
            f"{v}*{monomial_label(m)}"
            for m, v in sorted(self.components.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        )
        return f"GradedClass({body})"


def zero(spec: RingSpec) -> GradedClass:
    return GradedClass(spec)


def one(spec: RingSpec) -> GradedClass:
    return GradedClass(spec, {(): 1})


def generator(spec: RingSpec, weight: int) -> GradedClass:
    if weight not in spec.generators:
        raise ValueError(f"c_{weight} is not a generator of this ring")
    return GradedClass(spec, {(weight,): 1})


@lru_cache(maxsize=None)
def power_sums(spec: RingSpec) -> tuple[GradedClass, ...]:
    """Power sums p_1, ..., p_{2n} of the Chern roots, in the c-basis.

    Newton's identity: p_k = sum_{i<k} (-1)^(i-1) c_i p_{k-i} + (-1)^(k-1) k c_k,
    with c_i = 0 whenever i is not a generator.
    """
    generators = set(spec.generators)

    def c(i: int) -> GradedClass:
        return generator(spec, i) if i in generators else zero(spec)

    ps: list[GradedClass] = []
    for k in range(1, spec.dim + 1):
        acc = c(k) * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            acc = acc + c(i) * ps[k - i - 1] * ((-1) ** (i - 1))
        ps.append(acc)
    return tuple(ps)


def power_sum(spec: RingSpec, k: int) -> GradedClass:
    if not 1 <= k <= spec.dim:
        raise ValueError("k out of range")
    return power_sums(spec)[k - 1]


def chern_from_power_sums(spec: RingSpec) -> tuple[GradedClass, ...]:
    """Rebuild c_1, ..., c_{2n} from the power sums via the inverse Newton
    identity e_k = (1/k) sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i.

    Evaluated in the c-basis this must return the generators themselves,
    which is the roundtrip guarantee for the two Newton maps.
    """
    ps = power_sums(spec)
    es: list[GradedClass] = [one(spec)]
    for k in range(1, spec.dim + 1):
        acc = zero(spec)
        for i in range(1, k + 1):
            acc = acc + es[k - i] * ps[i - 1] * ((-1) ** (i - 1))
        es.append(acc * Fraction(1, k))
    return tuple(es[1:])


def _power_sum_monomial(spec: RingSpec, partition: Monomial) -> GradedClass:
    term = one(spec)
    for k in partition:
        term = term * power_sum(spec, k)
    return term


def class_to_power_sums(a: GradedClass) -> dict[Monomial, Fraction]:
    """Coordinates of `a` in the basis of power-sum monomials.

    Per weight the transition matrix from products of p_k to Chern monomials
    is square and invertible, so the coordinates are solved exactly.
    """
    spec = a.spec
    coords: dict[Monomial, Fraction] = {}
    unit = a.coefficient(())
    if unit:
        coords[()] = unit
    for weight in range(1, spec.dim + 1):
        c_monos = spec.monomials(weight)
        if not c_monos:
            continue
        target = [a.coefficient(m) for m in c_monos]
        if not any(target):
            continue
        columns = [_power_sum_monomial(spec, part) for part in c_monos]
        matrix = [[col.coefficient(m) for col in columns] for m in c_monos]
        solution = solve_unique(matrix, target)
        for part, value in zip(c_monos, solution):
            if value:
                coords[part] = value
    return coords


def class_from_power_sums(
    spec: RingSpec, coords: Mapping[Monomial, Fraction | int]
) -> GradedClass:
    total = zero(spec)
    for partition, value in coords.items():
        total = total + _power_sum_monomial(spec, tuple(sorted(partition))) * Fraction(value)
    return total


def chern_character(spec: RingSpec, rank: int) -> GradedClass:
    """rank + sum_k p_k/k!, the character of a bundle whose Chern classes
    are the ring generators."""
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    ch = one(spec) * rank
    for k, p in enumerate(power_sums(spec), start=1):
        ch = ch + p * Fraction(1, factorial(k))
    return ch


def adams(ch: GradedClass, m: int) -> GradedClass:
    """Adams operation: multiply the weight-w component by m^w."""
    return GradedClass(
        ch.spec,
        {mono: v * Fraction(m) ** sum(mono) for mono, v in ch.components.items()},
    )


def exterior_power_ch(ch: GradedClass, rank: int, p: int) -> GradedClass:
    """Character of the p-th exterior power of a rank-`rank` bundle.

    The exponentiated Chern roots have power sums adams(ch, m); Newton's
    identity e_p = (1/p) sum_m (-1)^(m-1) e_{p-m} q_m then produces their
    elementary symmetric functions.
    """
    if not 0 <= p <= rank:
        raise ValueError(f"exterior power {p} out of range for rank {rank}")
    es: list[GradedClass] = [one(ch.spec)]
    for j in range(1, p + 1):
        acc = zero(ch.spec)
        for m in range(1, j + 1):
            acc = acc + es[j - m] * adams(ch, m) * ((-1) ** (m - 1))
        es.append(acc * Fraction(1, j))
    return es[p]


@lru_cache(maxsize=None)
def todd_class(spec: RingSpec) -> GradedClass:
    """Todd class exp(sum_k gamma_k p_k) with gamma_k the Taylor coefficients
    of log(x/(1 - e^-x))."""
    gammas = todd_series(spec.dim).log()
    exponent = zero(spec)
    for k, p in enumerate(power_sums(spec), start=1):
        exponent = exponent + p * gammas.coefficient(k)
    return exponent.exp()


class IntegralForm:
    """Exact linear functional on the top-weight Chern monomials.

    The coefficient map always covers the full top-monomial key set.
    """

    __slots__ = ("spec", "coefficients")

    def __init__(
        self,
        spec: RingSpec,
        coefficients: Mapping[Monomial, Fraction | int] | None = None,
    ):
        table = {m: Fraction(0) for m in spec.top_monomials()}
        for mono, value in (coefficients or {}).items():
            key = tuple(sorted(mono))
            if key not in table:
                raise ValueError(f"{mono} is not a top-weight monomial")
            table[key] = Fraction(value)
        self.spec = spec
        self.coefficients = table

    def __bool__(self) -> bool:
        return any(self.coefficients.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegralForm):
            return NotImplemented
        return self.spec == other.spec and self.coefficients == other.coefficients

    __hash__ = None

    def __add__(self, other: "IntegralForm") -> "IntegralForm":
        if self.spec != other.spec:
            raise ValueError("ring specs differ")
        return IntegralForm(
            self.spec,
            {m: v + other.coefficients[m] for m, v in self.coefficients.items()},
        )

    def __sub__(self, other: "IntegralForm") -> "IntegralForm":
        return self + (other * -1)

    def __mul__(self, scalar: Fraction | int) -> "IntegralForm":
        return IntegralForm(
            self.spec, {m: v * scalar for m, v in self.coefficients.items()}
        )

    __rmul__ = __mul__

    def vector(self, order: Iterable[Monomial]) -> tuple[Fraction, ...]:
        return tuple(self.coefficients[tuple(sorted(m))] for m in order)

    def evaluate(self, numbers: "ChernNumbers") -> Fraction:
        if self.spec != numbers.spec:
            raise ValueError("ring specs differ")
        return sum(
            (v * numbers.values[m] for m, v in self.coefficients.items()),
            Fraction(0),
        )

    def __repr__(self) -> str:
        body = ", ".join(
            f"{monomial_label(m)}: {v}" for m, v in self.coefficients.items() if v
        )
        return f"IntegralForm({{{body}}})"


class ChernNumbers:
    """A complete assignment of rational values to the top-weight monomials."""

    __slots__ = ("spec", "values")

    def __init__(self, spec: RingSpec, values: Mapping[Monomial, Fraction | int]):
        table = {tuple(sorted(m)): Fraction(v) for m, v in values.items()}
        expected = set(spec.top_monomials())
        if set(table) != expected:
            raise ValueError("values must cover exactly the top-weight monomials")
        self.spec = spec
        self.values = table

    def __getitem__(self, mono: Monomial) -> Fraction:
        return self.values[tuple(sorted(mono))]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChernNumbers):
            return NotImplemented
        return self.spec == other.spec and self.values == other.values

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"{monomial_label(m)}: {v}" for m, v in self.values.items())
        return f"ChernNumbers({{{body}}})"


def integrate(a: GradedClass) -> IntegralForm:
    """Formal integration: the weight-2n component of `a` as a functional."""
    spec = a.spec
    return IntegralForm(spec, {m: a.coefficient(m) for m in spec.top_monomials()})


@lru_cache(maxsize=None)
def chi_p_form(spec: RingSpec, p: int) -> IntegralForm:
    """Functional computing chi^p = integral of ch(Omega^p) * td.

    Only valid in holomorphic-symplectic mode, where the vanishing of the odd
    classes identifies the characters of the tangent and cotangent bundles.
    """
    if not spec.hk:
        raise ValueError("chi^p functionals require the symplectic mode")
    ch = chern_character(spec, spec.dim)
    return integrate(exterior_power_ch(ch, spec.dim, p) * todd_class(spec))
