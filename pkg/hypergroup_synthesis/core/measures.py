"""
The measure algebra of a discrete hypergroup: finitely supported measures,
convolution, pairing against functions and the Fourier-Laplace transform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Callable, Iterable, Iterator, Mapping

from sympy.polys.domains import QQ

from .exceptions import HGUsageError
from .polyring import MultiPoly, expand_in_basis, grlex_key
from .scalars import Domain, Scalar, canonical, domain_of, lift, unify

if TYPE_CHECKING:
    from .hypergroup import Element, Hypergroup


@dataclass(frozen=True, eq=False)
class Measure:
    hypergroup: "Hypergroup"
    weights: Mapping[tuple, Scalar] = field(default_factory=dict)
    domain: Domain = QQ

    @classmethod
    def build(
        cls,
        hypergroup: "Hypergroup",
        weights: Mapping[tuple, Scalar] | Iterable[tuple[tuple, Scalar]],
        domain: Domain | None = None,
    ) -> "Measure":
        items = list(weights.items()) if isinstance(weights, Mapping) else list(weights)
        if domain is None:
            domain = domain_of(*(weight for _, weight in items))
        merged: dict[tuple, Scalar] = {}
        for point, weight in items:
            point = hypergroup.element(point)
            merged[point] = merged.get(point, domain.zero) + lift(weight, domain)
        cleaned = {point: merged[point] for point in sorted(merged, key=grlex_key) if merged[point]}
        return cls(hypergroup, cleaned, domain)

    @classmethod
    def delta(cls, hypergroup: "Hypergroup", point: Iterable[int]) -> "Measure":
        return cls.build(hypergroup, {tuple(point): QQ.one}, QQ)

    @classmethod
    def zero(cls, hypergroup: "Hypergroup") -> "Measure":
        return cls(hypergroup, {}, QQ)

    @property
    def support(self) -> list[tuple]:
        return list(self.weights)

    @property
    def is_zero(self) -> bool:
        return not self.weights

    def mass(self) -> Scalar:
        total = self.domain.zero
        for weight in self.weights.values():
            total += weight
        return canonical(total)

    def __getitem__(self, point: tuple) -> Scalar:
        return canonical(self.weights.get(tuple(point), self.domain.zero))

    def items(self) -> Iterator[tuple[tuple, Scalar]]:
        for point, weight in self.weights.items():
            yield point, canonical(weight)

    def _check_base(self, other: "Measure", operation: str) -> None:
        if other.hypergroup is not self.hypergroup and other.hypergroup != self.hypergroup:
            raise HGUsageError("Measures live on different hypergroups", operation=operation)

    def __add__(self, other: "Measure") -> "Measure":
        self._check_base(other, "add")
        return Measure.build(
            self.hypergroup,
            list(self.weights.items()) + list(other.weights.items()),
            unify(self.domain, other.domain),
        )

    def __neg__(self) -> "Measure":
        return self.scale(-1)

    def __sub__(self, other: "Measure") -> "Measure":
        return self + (-other)

    def scale(self, value: Scalar) -> "Measure":
        domain = unify(self.domain, domain_of(value))
        factor = lift(value, domain)
        return Measure.build(
            self.hypergroup,
            [(point, lift(weight, domain) * factor) for point, weight in self.weights.items()],
            domain,
        )

    def involution(self) -> "Measure":
        # the involution of a polynomial hypergroup is the identity map
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Measure):
            return NotImplemented
        return self.hypergroup == other.hypergroup and dict(self.items()) == dict(other.items())

    def __hash__(self) -> int:
        return hash(frozenset(self.items()))

    def __repr__(self) -> str:
        body = " + ".join(f"{weight}*d{list(point)}" for point, weight in self.items())
        return f"Measure({body or '0'})"


def convolve(mu: Measure, nu: Measure) -> Measure:
    mu._check_base(nu, "convolve")
    hypergroup = mu.hypergroup
    domain = unify(mu.domain, nu.domain)
    acc: dict[tuple, Scalar] = {}
    for x, weight_x in mu.weights.items():
        for y, weight_y in nu.weights.items():
            factor = lift(weight_x, domain) * lift(weight_y, domain)
            for w, c in hypergroup.linearization(x, y).weights.items():
                acc[w] = acc.get(w, domain.zero) + factor * lift(c, domain)
    return Measure.build(hypergroup, acc, domain)


def pair(f: Callable[[tuple], Scalar], mu: Measure) -> Scalar:
    """Integral of ``f`` against ``mu``; ``f`` is any callable on elements."""
    function_domain = getattr(f, "domain", QQ)
    domain = unify(function_domain, mu.domain)
    total = domain.zero
    for point, weight in mu.weights.items():
        total += lift(weight, domain) * lift(f(point), domain)
    return canonical(total)


def fourier(mu: Measure) -> MultiPoly:
    hypergroup = mu.hypergroup
    result = MultiPoly.constant(hypergroup.dimension, 0)
    for point, weight in mu.items():
        result = result + hypergroup.basis_poly(point).scale(weight)
    return result


def inverse_fourier(p: MultiPoly, hypergroup: "Hypergroup") -> Measure:
    return expand_in_basis(p, hypergroup)


def mod_diff_measure(m: Any, y: "Element") -> Measure:
    """The measure ``delta_y - m(y) delta_o`` realizing the modified difference."""
    if not getattr(m, "is_exponential", False):
        raise HGUsageError(
            "The modified difference needs an exponential",
            operation="mod_diff_measure",
        )
    hypergroup = m.hypergroup
    y = hypergroup.element(y)
    return Measure.delta(hypergroup, y) - Measure.delta(hypergroup, hypergroup.identity).scale(m(y))
