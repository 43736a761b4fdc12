"""
Exact sparse multivariate polynomials over ``QQ`` and ``QQ_I``.

``MultiPoly`` wraps a sympy ``PolyElement`` in a graded-lexicographic ring on
the variables ``z1, ..., zd``.  Wrapped elements are never mutated in place.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from math import comb, prod
from typing import TYPE_CHECKING, Any, Iterable, Iterator, Mapping, Sequence

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from .exceptions import HGUsageError
from .scalars import EXACT_DOMAINS, Scalar, canonical, domain_of, lift, unify

if TYPE_CHECKING:
    from .hypergroup import Hypergroup
    from .measures import Measure

MultiIndex = tuple[int, ...]


# Multi-index helpers

def multi_index(entries: Iterable[int], dimension: int | None = None) -> MultiIndex:
    alpha = tuple(int(entry) for entry in entries)
    if any(entry < 0 for entry in alpha):
        raise HGUsageError(f"Multi-index entries must be nonnegative: {alpha}")
    if dimension is not None and len(alpha) != dimension:
        raise HGUsageError(
            f"Multi-index {alpha} has length {len(alpha)}, expected {dimension}",
            operation="multi_index",
        )
    return alpha


def order(alpha: MultiIndex) -> int:
    return sum(alpha)


def index_leq(beta: MultiIndex, alpha: MultiIndex) -> bool:
    return all(b <= a for b, a in zip(beta, alpha))


def index_sub(alpha: MultiIndex, beta: MultiIndex) -> MultiIndex:
    return tuple(a - b for a, b in zip(alpha, beta))


def index_binomial(alpha: MultiIndex, beta: MultiIndex) -> int:
    return prod(comb(a, b) for a, b in zip(alpha, beta))


def grlex_key(alpha: MultiIndex) -> tuple:
    return (sum(alpha), alpha)


def indices_below(alpha: MultiIndex) -> list[MultiIndex]:
    """All beta <= alpha, in graded-lexicographic order."""
    return sorted(cartesian(*(range(a + 1) for a in alpha)), key=grlex_key)


def unit_index(dimension: int, i: int) -> MultiIndex:
    return tuple(1 if j == i else 0 for j in range(dimension))


# Rings

@lru_cache(maxsize=None)
def polynomial_ring(dimension: int, domain: Any = QQ) -> PolyRing:
    if dimension < 1:
        raise HGUsageError(f"Polynomial dimension must be positive, got {dimension}")
    symbols = ",".join(f"z{i + 1}" for i in range(dimension))
    return PolyRing(symbols, domain, grlex)


def _lift_element(element: PolyElement, domain: Any) -> PolyElement:
    ring = element.ring
    if ring.domain == domain:
        return element
    return element.set_ring(polynomial_ring(ring.ngens, domain))


@dataclass(frozen=True)
class MultiPoly:
    element: PolyElement

    @classmethod
    def from_terms(
        cls,
        dimension: int,
        terms: Mapping[MultiIndex, Scalar] | Iterable[tuple[MultiIndex, Scalar]],
    ) -> "MultiPoly":
        items = list(terms.items()) if isinstance(terms, Mapping) else list(terms)
        domain = domain_of(*(coeff for _, coeff in items))
        ring = polynomial_ring(dimension, domain)
        element = ring.zero
        for alpha, coeff in items:
            alpha = multi_index(alpha, dimension)
            element = element + ring.term_new(alpha, lift(coeff, domain))
        return cls(element)

    @classmethod
    def constant(cls, dimension: int, value: Scalar = 1) -> "MultiPoly":
        return cls.from_terms(dimension, {(0,) * dimension: value})

    @classmethod
    def variable(cls, dimension: int, i: int) -> "MultiPoly":
        return cls(polynomial_ring(dimension).gens[i])

    @property
    def dimension(self) -> int:
        return self.element.ring.ngens

    @property
    def domain(self) -> Any:
        return self.element.ring.domain

    @property
    def is_zero(self) -> bool:
        return not self.element

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return max(sum(monom) for monom in self.element.itermonoms())

    def terms(self) -> list[tuple[MultiIndex, Scalar]]:
        """Nonzero terms in decreasing graded-lexicographic order."""
        return [(monom, canonical(coeff)) for monom, coeff in self.element.terms()]

    def coefficient(self, alpha: MultiIndex) -> Scalar:
        return canonical(self.element.get(tuple(alpha), self.domain.zero))

    def leading_term(self) -> tuple[MultiIndex, Scalar]:
        monom, coeff = self.element.LT
        return monom, coeff

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        p, q = _aligned(self, other, "poly_add")
        return MultiPoly(p + q)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        p, q = _aligned(self, other, "poly_sub")
        return MultiPoly(p - q)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(-self.element)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        return poly_mul(self, other)

    def scale(self, value: Scalar) -> "MultiPoly":
        domain = unify(self.domain, domain_of(value))
        return MultiPoly(_lift_element(self.element, domain) * lift(value, domain))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if other.dimension != self.dimension:
            return False
        return self.terms() == other.terms()

    def __hash__(self) -> int:
        return hash((self.dimension, tuple(self.terms())))

    def __str__(self) -> str:
        return str(self.element)


def _aligned(p: MultiPoly, q: MultiPoly, operation: str) -> tuple[PolyElement, PolyElement]:
    if p.dimension != q.dimension:
        raise HGUsageError(
            f"Dimension mismatch: {p.dimension} vs {q.dimension}",
            {"left": p.dimension, "right": q.dimension},
            operation=operation,
        )
    domain = unify(p.domain, q.domain)
    return _lift_element(p.element, domain), _lift_element(q.element, domain)


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    left, right = _aligned(p, q, "poly_mul")
    return MultiPoly(left * right)


def poly_derive(p: MultiPoly, alpha: Sequence[int]) -> MultiPoly:
    alpha = multi_index(alpha, p.dimension)
    element = p.element
    gens = element.ring.gens
    for i, times in enumerate(alpha):
        for _ in range(times):
            if not element:
                return MultiPoly(element)
            element = element.diff(gens[i])
    return MultiPoly(element)


def _horner(terms: dict[MultiIndex, Any], point: Sequence[Any], zero: Any) -> Any:
    if not point:
        return terms.get((), zero)
    groups: dict[int, dict[MultiIndex, Any]] = {}
    for monom, coeff in terms.items():
        groups.setdefault(monom[0], {})[monom[1:]] = coeff
    head, tail = point[0], point[1:]
    acc = zero
    for exponent in range(max(groups), -1, -1):
        acc = acc * head
        if exponent in groups:
            acc = acc + _horner(groups[exponent], tail, zero)
    return acc


def poly_eval(p: MultiPoly, point: Sequence[Any], mode: str = "exact") -> Any:
    if len(point) != p.dimension:
        raise HGUsageError(
            f"Point of length {len(point)} for a polynomial in {p.dimension} variables",
            operation="poly_eval",
        )
    if p.is_zero:
        return 0j if mode == "float" else QQ.zero
    if mode == "float":
        from .scalars import to_complex

        terms = {monom: to_complex(canonical(coeff)) for monom, coeff in p.element.items()}
        return _horner(terms, [to_complex(v) for v in point], 0j)
    domain = unify(p.domain, domain_of(*point))
    terms = {monom: lift(coeff, domain) for monom, coeff in p.element.items()}
    values = [lift(v, domain) for v in point]
    return canonical(_horner(terms, values, domain.zero))


def expand_in_basis(p: MultiPoly, hypergroup: "Hypergroup") -> "Measure":
    """Coefficients ``c`` with ``sum c_x Q_x == p``, by a degree-graded triangular solve."""
    from .measures import Measure

    if p.domain not in EXACT_DOMAINS:
        raise HGUsageError(
            "Basis conversion is exact-only",
            {"domain": str(p.domain)},
            operation="expand_in_basis",
        )
    if p.dimension != hypergroup.dimension:
        raise HGUsageError(
            f"Dimension mismatch: polynomial {p.dimension}, hypergroup {hypergroup.dimension}",
            operation="expand_in_basis",
        )
    domain = p.domain
    remaining = p.element
    weights: dict[tuple, Scalar] = {}
    while remaining:
        monom, coeff = remaining.LT
        basis = _lift_element(hypergroup.basis_poly(monom).element, domain)
        lead_monom, lead_coeff = basis.LT
        if lead_monom != monom:
            raise HGUsageError(
                f"Q_{monom} does not lead with z^{monom}",
                {"element": list(monom), "leading": list(lead_monom)},
                operation="expand_in_basis",
            )
        weight = coeff / lead_coeff
        weights[monom] = weight
        remaining = remaining - basis * weight
    return Measure.build(hypergroup, weights)


def leibniz_terms(alpha: MultiIndex) -> Iterator[tuple[MultiIndex, MultiIndex, int]]:
    """``(beta, alpha - beta, binomial(alpha, beta))`` for every beta <= alpha."""
    for beta in indices_below(alpha):
        yield beta, index_sub(alpha, beta), index_binomial(alpha, beta)
