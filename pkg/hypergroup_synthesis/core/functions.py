"""
Functions on a polynomial hypergroup in closed form.

An ``HFunction`` is a finite sum

    x -> sum_j c_j [d^{alpha_j} Q_x](lambda_j)

kept in normal form: terms with equal ``(alpha, lambda)`` are merged and zero
coefficients dropped.  The functions ``x -> [d^alpha Q_x](lambda)`` for distinct
``(alpha, lambda)`` are linearly independent, so two HFunctions are equal as
functions exactly when their normal forms agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

from sympy.polys.domains import QQ

from ..config import VALID_EQUATION_KINDS, VALID_MODES, Config
from ..utils.logger import logger
from ..utils.rng import SplitMix64
from .exceptions import HGUsageError, HGValidationError
from .hypergroup import Element, Hypergroup
from .linalg import exact_rank
from .polyring import (
    MultiIndex,
    MultiPoly,
    grlex_key,
    index_binomial,
    index_sub,
    indices_below,
    leibniz_terms,
    multi_index,
    order,
    poly_derive,
    poly_eval,
    unit_index,
)
from .scalars import (
    FLOAT_DOMAIN,
    Domain,
    Scalar,
    canonical,
    close,
    domain_of,
    lift,
    relative_residual,
    require_exact,
    scalar_to_json,
    sort_key,
    to_complex,
    unify,
)
from .sweep import ordered_map

Point = tuple
Atom = tuple[MultiIndex, Point]


def atom_key(atom: Atom) -> tuple:
    alpha, point = atom
    return grlex_key(alpha), tuple(sort_key(value) for value in point)


@dataclass(frozen=True, eq=False)
class HFunction:
    hypergroup: Hypergroup
    coefficients: Mapping[Atom, Scalar] = field(default_factory=dict)
    domain: Domain = QQ

    @classmethod
    def build(
        cls,
        hypergroup: Hypergroup,
        terms: Iterable[tuple[Scalar, Sequence[int], Sequence[Scalar]]],
    ) -> "HFunction":
        """Normalize ``(coeff, alpha, point)`` terms."""
        dimension = hypergroup.dimension
        items: list[tuple[Atom, Scalar]] = []
        for coeff, alpha, point in terms:
            point = tuple(canonical(value) for value in point)
            if len(point) != dimension:
                raise HGUsageError(
                    f"Point {list(map(str, point))} has length {len(point)}, expected {dimension}",
                    operation="hfunction",
                )
            items.append(((multi_index(alpha, dimension), point), canonical(coeff)))
        domain = unify(
            domain_of(*(coeff for _, coeff in items)),
            *(domain_of(*atom[1]) for atom, _ in items),
        )
        merged: dict[Atom, Scalar] = {}
        for atom, coeff in items:
            merged[atom] = merged.get(atom, lift(0, domain)) + lift(coeff, domain)
        kept = [atom for atom in sorted(merged, key=atom_key) if merged[atom]]
        final = unify(
            domain_of(*(canonical(merged[atom]) for atom in kept)),
            *(domain_of(*atom[1]) for atom in kept),
        )
        return cls(hypergroup, {atom: lift(merged[atom], final) for atom in kept}, final)

    @classmethod
    def zero(cls, hypergroup: Hypergroup) -> "HFunction":
        return cls(hypergroup, {}, QQ)

    # Structure

    @property
    def atoms(self) -> list[Atom]:
        return list(self.coefficients)

    def terms(self) -> list[tuple[Scalar, MultiIndex, Point]]:
        return [(canonical(coeff), alpha, point) for (alpha, point), coeff in self.coefficients.items()]

    def coefficient(self, alpha: Sequence[int], point: Sequence[Scalar]) -> Scalar:
        atom = (tuple(alpha), tuple(canonical(value) for value in point))
        return canonical(self.coefficients.get(atom, self.domain.zero))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def points(self) -> list[Point]:
        seen: list[Point] = []
        for _, point in self.coefficients:
            if point not in seen:
                seen.append(point)
        return seen

    def order_bound(self, point: Optional[Sequence[Scalar]] = None) -> MultiIndex:
        """Componentwise maximum of the orders, optionally only at ``point``."""
        bound = [0] * self.hypergroup.dimension
        target = None if point is None else tuple(canonical(value) for value in point)
        for alpha, at in self.coefficients:
            if target is None or at == target:
                bound = [max(b, a) for b, a in zip(bound, alpha)]
        return tuple(bound)

    @property
    def order(self) -> int:
        """Largest ``|alpha|``; -1 for the zero function."""
        return max((order(alpha) for alpha, _ in self.coefficients), default=-1)

    @property
    def is_exponential(self) -> bool:
        if len(self.coefficients) != 1:
            return False
        (alpha, _), coeff = next(iter(self.coefficients.items()))
        return not any(alpha) and canonical(coeff) == 1

    @property
    def exponential_point(self) -> Point:
        if not self.is_exponential:
            raise HGUsageError("Function is not an exponential", operation="exponential_point")
        return next(iter(self.coefficients))[1]

    # Algebra

    def _check_base(self, other: "HFunction", operation: str) -> None:
        if other.hypergroup is not self.hypergroup and other.hypergroup != self.hypergroup:
            raise HGUsageError("Functions live on different hypergroups", operation=operation)

    def __add__(self, other: "HFunction") -> "HFunction":
        self._check_base(other, "add")
        return HFunction.build(self.hypergroup, self.terms() + other.terms())

    def __neg__(self) -> "HFunction":
        return self.scale(-1)

    def __sub__(self, other: "HFunction") -> "HFunction":
        return self + (-other)

    def scale(self, value: Scalar) -> "HFunction":
        value = canonical(value)
        domain = unify(self.domain, domain_of(value))
        factor = lift(value, domain)
        return HFunction.build(
            self.hypergroup,
            [(lift(coeff, domain) * factor, alpha, point) for coeff, alpha, point in self.terms()],
        )

    def __call__(self, x: Iterable[int]) -> Scalar:
        return evaluate(self, x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HFunction):
            return NotImplemented
        return self.hypergroup == other.hypergroup and self.terms() == other.terms()

    def __hash__(self) -> int:
        return hash(tuple(self.terms()))

    def __repr__(self) -> str:
        parts = [
            f"{coeff}*d{list(alpha)}Q({', '.join(str(v) for v in point)})"
            for coeff, alpha, point in self.terms()
        ]
        return f"HFunction({' + '.join(parts) or '0'})"


@dataclass(frozen=True)
class MomentFamily:
    hypergroup: Hypergroup
    point: Point
    order_cap: MultiIndex
    members: Mapping[MultiIndex, HFunction]

    @property
    def exponential(self) -> HFunction:
        return self.members[(0,) * self.hypergroup.dimension]

    def member(self, alpha: Sequence[int]) -> HFunction:
        alpha = multi_index(alpha, self.hypergroup.dimension)
        try:
            return self.members[alpha]
        except KeyError as exc:
            raise HGUsageError(
                f"alpha {list(alpha)} exceeds the order cap {list(self.order_cap)}",
                operation="moment_family",
            ) from exc


# Construction

def _point(hypergroup: Hypergroup, point: Sequence[Scalar]) -> Point:
    point = tuple(canonical(value) for value in point)
    if len(point) != hypergroup.dimension:
        raise HGUsageError(
            f"Point has length {len(point)}, expected {hypergroup.dimension}",
            operation="point",
        )
    return point


def evaluate(f: HFunction, x: Iterable[int], mode: str = "exact") -> Any:
    hypergroup = f.hypergroup
    x = hypergroup.element(x)
    if mode == "float":
        total = 0j
        basis = hypergroup.basis_poly(x)
        for (alpha, point), coeff in f.coefficients.items():
            derived = poly_derive(basis, alpha)
            if not derived.is_zero:
                total += to_complex(canonical(coeff)) * poly_eval(derived, point, "float")
        return total
    total = f.domain.zero
    for (alpha, point), coeff in f.coefficients.items():
        total += coeff * lift(hypergroup.derivative_value(x, alpha, point), f.domain)
    return canonical(total)


def exponential(hypergroup: Hypergroup, point: Sequence[Scalar]) -> HFunction:
    point = _point(hypergroup, point)
    return HFunction.build(hypergroup, [(1, (0,) * hypergroup.dimension, point)])


def sine(hypergroup: Hypergroup, a: Sequence[Scalar], point: Sequence[Scalar]) -> HFunction:
    point = _point(hypergroup, point)
    if len(a) != hypergroup.dimension:
        raise HGUsageError(
            f"Sine direction has length {len(a)}, expected {hypergroup.dimension}",
            operation="sine",
        )
    return HFunction.build(
        hypergroup,
        [(value, unit_index(hypergroup.dimension, i), point) for i, value in enumerate(a)],
    )


def moment_family(hypergroup: Hypergroup, point: Sequence[Scalar], order_cap: Sequence[int]) -> MomentFamily:
    point = _point(hypergroup, point)
    order_cap = multi_index(order_cap, hypergroup.dimension)
    members = {
        alpha: HFunction.build(hypergroup, [(1, alpha, point)]) for alpha in indices_below(order_cap)
    }
    return MomentFamily(hypergroup, point, order_cap, members)


def apply_pdo(p: MultiPoly, point: Sequence[Scalar], hypergroup: Hypergroup) -> HFunction:
    """``x -> [P(d) Q_x](point)`` for a constant-coefficient operator ``P``."""
    if p.dimension != hypergroup.dimension:
        raise HGUsageError(
            f"Operator in {p.dimension} variables on a {hypergroup.dimension}-dimensional hypergroup",
            operation="apply_pdo",
        )
    point = _point(hypergroup, point)
    return HFunction.build(hypergroup, [(coeff, alpha, point) for alpha, coeff in p.terms()])


# Translation and modified differences

def translate(f: HFunction, y: Iterable[int]) -> HFunction:
    """``x -> f(x * y)`` by the Leibniz expansion of ``d^alpha (Q_x Q_y)``."""
    require_exact(f.domain, "translate")
    hypergroup = f.hypergroup
    y = hypergroup.element(y)
    terms = []
    for (alpha, point), coeff in f.coefficients.items():
        for beta, rest, binomial in leibniz_terms(alpha):
            factor = lift(hypergroup.derivative_value(y, rest, point), f.domain)
            if factor:
                terms.append((coeff * factor * binomial, beta, point))
    return HFunction.build(hypergroup, terms)


def _require_exponential(m: HFunction, operation: str) -> None:
    if not isinstance(m, HFunction) or not m.is_exponential:
        raise HGUsageError("An exponential is required", {"function": repr(m)}, operation=operation)


def mod_diff(f: HFunction, m: HFunction, ys: Sequence[Iterable[int]]) -> HFunction:
    """The iterated modified difference ``Delta_{m; y_1, ..., y_n} * f``."""
    _require_exponential(m, "mod_diff")
    f._check_base(m, "mod_diff")
    if not ys:
        raise HGUsageError("mod_diff needs at least one y", operation="mod_diff")
    for y in ys:
        f = translate(f, y) - f.scale(m(y))
        if f.is_zero:
            break
    return f


# Equation sweeps

@dataclass
class EquationReport:
    kind: str
    mode: str
    box: int
    passed: bool
    checked: int
    counterexample: Optional[dict[str, Any]] = None
    max_residual: Optional[float] = None
    tolerance: Optional[float] = None

    def to_dict(self) -> dict[str, Any]:
        report: dict[str, Any] = {
            "kind": self.kind,
            "mode": self.mode,
            "box": self.box,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }
        if self.mode == "float":
            report["max_residual"] = self.max_residual
            report["tolerance"] = self.tolerance
        else:
            report["residual"] = "0" if self.passed else None
        return report


class _Arithmetic:
    def __init__(self, hypergroup: Hypergroup, mode: str, domain: Domain) -> None:
        self.hypergroup = hypergroup
        self.mode = mode
        self.domain = domain

    @property
    def zero(self) -> Any:
        return 0j if self.mode == "float" else self.domain.zero

    def coerce(self, value: Any) -> Any:
        return to_complex(value) if self.mode == "float" else lift(value, self.domain)

    def mismatch(self, lhs: Any, rhs: Any, tolerance: float) -> tuple[bool, float]:
        if self.mode == "float":
            return not close(lhs, rhs, tolerance), relative_residual(lhs, rhs)
        return lhs != rhs, 0.0

    def render(self, value: Any) -> Any:
        if self.mode == "float":
            return [value.real, value.imag]
        return scalar_to_json(canonical(value))


class _Values:
    """Memoized point values of a function, coerced for the sweep."""

    def __init__(self, f: HFunction, arithmetic: _Arithmetic) -> None:
        self.f = f
        self.arithmetic = arithmetic
        self._cache: dict[Element, Any] = {}

    def __call__(self, x: Element) -> Any:
        value = self._cache.get(x)
        if value is None:
            value = self.arithmetic.coerce(evaluate(self.f, x, self.arithmetic.mode))
            self._cache[x] = value
        return value


class _Convolved:
    """
    ``f(x * y)`` for ``x, y`` in the box, one coordinate at a time.

    Each atom ``[d^alpha Q_x](lambda)`` is a product of one-variable atoms and
    ``delta_x * delta_y`` is the product of the one-variable convolutions, so
    ``f(x * y) = sum_j c_j prod_i T_ij[x_i][y_i]`` with small per-coordinate
    tables ``T_ij[k][l] = sum_n c_i(k, l, n) [d^{alpha_ji} Q_n](lambda_ji)``.
    """

    def __init__(self, f: HFunction, arithmetic: _Arithmetic, box: int) -> None:
        self.arithmetic = arithmetic
        leaves = f.hypergroup.factors_1d()
        tables: dict[tuple, list[list[Any]]] = {}
        self.terms = []
        for coeff, alpha, point in f.terms():
            row = []
            for leaf, a, value in zip(leaves, alpha, point):
                key = (leaf, a, value)
                if key not in tables:
                    tables[key] = self._table(leaf, a, value, box)
                row.append(tables[key])
            self.terms.append((arithmetic.coerce(coeff), row))

    def _table(self, leaf: Hypergroup, a: int, value: Scalar, box: int) -> list[list[Any]]:
        arithmetic = self.arithmetic
        table = []
        for k in range(box + 1):
            row = []
            for l in range(box + 1):
                total = arithmetic.zero
                for w, weight in leaf.linearization((k,), (l,)).weights.items():
                    total += arithmetic.coerce(weight) * arithmetic.coerce(leaf.derivative_value(w, (a,), (value,)))
                row.append(total)
            table.append(row)
        return table

    def __call__(self, x: Element, y: Element) -> Any:
        total = self.arithmetic.zero
        for coeff, tables in self.terms:
            value = coeff
            for table, k, l in zip(tables, x, y):
                value = value * table[k][l]
            total += value
        return total


def _sweep(
    kind: str,
    arithmetic: _Arithmetic,
    rows: Sequence[Any],
    row_check: Callable[[Any], Iterable[tuple[tuple, Any, Any]]],
    describe: Callable[[tuple], dict[str, Any]],
    box: int,
    tolerance: float,
    jobs: int,
) -> EquationReport:
    def run_row(row: Any) -> tuple[int, Optional[dict[str, Any]], float]:
        checked, worst = 0, 0.0
        for where, lhs, rhs in row_check(row):
            checked += 1
            failed, residual = arithmetic.mismatch(lhs, rhs, tolerance)
            worst = max(worst, residual)
            if failed:
                witness = dict(describe(where), lhs=arithmetic.render(lhs), rhs=arithmetic.render(rhs))
                return checked, witness, worst
        return checked, None, worst

    results = ordered_map(run_row, rows, jobs)
    checked = sum(count for count, _, _ in results)
    counterexample = next((witness for _, witness, _ in results if witness is not None), None)
    worst = max((residual for _, _, residual in results), default=0.0)
    mode = arithmetic.mode
    return EquationReport(
        kind=kind,
        mode=mode,
        box=box,
        passed=counterexample is None,
        checked=checked,
        counterexample=counterexample,
        max_residual=worst if mode == "float" else None,
        tolerance=tolerance if mode == "float" else None,
    )


def _pair(where: tuple) -> dict[str, Any]:
    x, y = where
    return {"x": list(x), "y": list(y)}


def _pair_with_alpha(where: tuple) -> dict[str, Any]:
    x, y, alpha = where
    return {"x": list(x), "y": list(y), "alpha": list(alpha)}


def _tuple_at(where: tuple) -> dict[str, Any]:
    x, ys = where
    return {"x": list(x), "ys": [list(y) for y in ys]}


def check_equation(
    kind: str,
    hypergroup: Hypergroup,
    *,
    box: int,
    function: Optional[HFunction] = None,
    exponential: Optional[HFunction] = None,
    family: Optional[MomentFamily] = None,
    degree: Optional[int] = None,
    mode: str = "exact",
    tolerance: Optional[float] = None,
    trials: Optional[int] = None,
    rng: Optional[SplitMix64] = None,
    jobs: int = 1,
) -> EquationReport:
    """
    Sweep a functional equation over all ``x, y`` in the box.

    kinds:
        exponential  m(x*y) = m(x) m(y) and m(o) = 1           (``function``)
        sine         s(x*y) = s(x) m(y) + s(y) m(x)           (``function``, ``exponential``)
        moment       f_a(x*y) = sum binom(a, b) f_b(x) f_{a-b}(y)  (``family``)
        degree       Delta_{m; y_1..y_{n+1}} f = 0 on sampled tuples (``function``, ``exponential``, ``degree``)

    Functions at non-rational points (domain ``CC``) need ``mode="float"``.
    """
    if kind not in VALID_EQUATION_KINDS:
        raise HGValidationError(
            f"Unknown equation kind: {kind}",
            {"valid_kinds": list(VALID_EQUATION_KINDS)},
            field="kind",
        )
    if mode not in VALID_MODES:
        raise HGValidationError(f"Unknown mode: {mode}", {"valid_modes": list(VALID_MODES)}, field="mode")
    if box < 0:
        raise HGValidationError("Box must be nonnegative", field="box")
    tolerance = Config.FLOAT_TOLERANCE if tolerance is None else tolerance
    points = hypergroup.box(box)

    if kind == "moment":
        if family is None:
            raise HGUsageError("The moment check needs a family", operation="check_equation")
        domain = unify(*(member.domain for member in family.members.values()))
    else:
        if function is None:
            raise HGUsageError(f"The {kind} check needs a function", operation="check_equation")
        domain = function.domain
        if kind in ("sine", "degree"):
            _require_exponential(exponential, "check_equation")
            domain = unify(domain, exponential.domain)
    if mode == "exact" and domain == FLOAT_DOMAIN:
        raise HGUsageError(
            "Inputs at non-rational points need --mode float", {"kind": kind}, operation="check_equation"
        )
    arithmetic = _Arithmetic(hypergroup, mode, domain)
    upper_pairs = [(i, x) for i, x in enumerate(points)]

    if kind == "exponential":
        values = _Values(function, arithmetic)
        convolved = _Convolved(function, arithmetic, box)
        identity = hypergroup.identity
        one = arithmetic.coerce(QQ.one)
        at_identity = values(identity)
        failed, _ = arithmetic.mismatch(at_identity, one, tolerance)
        if failed:
            return EquationReport(
                kind, mode, box, False, 1,
                {"x": list(identity), "lhs": arithmetic.render(at_identity), "rhs": arithmetic.render(one)},
                None, tolerance if mode == "float" else None,
            )

        def row_check(row):
            i, x = row
            m_x = values(x)
            for y in points[i:]:
                yield (x, y), convolved(x, y), m_x * values(y)

        return _sweep(kind, arithmetic, upper_pairs, row_check, _pair, box, tolerance, jobs)

    if kind == "sine":
        s_values, m_values = _Values(function, arithmetic), _Values(exponential, arithmetic)
        convolved = _Convolved(function, arithmetic, box)

        def row_check(row):
            i, x = row
            s_x, m_x = s_values(x), m_values(x)
            for y in points[i:]:
                yield (x, y), convolved(x, y), s_x * m_values(y) + s_values(y) * m_x

        return _sweep(kind, arithmetic, upper_pairs, row_check, _pair, box, tolerance, jobs)

    if kind == "moment":
        member_values = {alpha: _Values(member, arithmetic) for alpha, member in family.members.items()}
        member_convolved = {
            alpha: _Convolved(member, arithmetic, box) for alpha, member in family.members.items()
        }
        splits = {
            alpha: [(beta, index_sub(alpha, beta), index_binomial(alpha, beta)) for beta in indices_below(alpha)]
            for alpha in family.members
        }

        def row_check(row):
            i, x = row
            for y in points[i:]:
                for alpha, convolved in member_convolved.items():
                    rhs = arithmetic.zero
                    for beta, rest, binomial in splits[alpha]:
                        rhs += member_values[beta](x) * member_values[rest](y) * binomial
                    yield (x, y, alpha), convolved(x, y), rhs

        return _sweep(kind, arithmetic, upper_pairs, row_check, _pair_with_alpha, box, tolerance, jobs)

    # degree
    if degree is None or degree < 0:
        raise HGUsageError("The degree check needs a nonnegative degree", operation="check_equation")
    if box < 1:
        raise HGValidationError("Differences need a box of at least 1", field="box")
    rng = rng or SplitMix64(Config.DEFAULT_SEED)
    trials = Config.DEGREE_TRIALS if trials is None else trials
    identity = {hypergroup.identity}
    tuples = [
        tuple(rng.sample_elements(hypergroup.dimension, box, degree + 1, exclude=identity))
        for _ in range(trials)
    ]
    f_values, m_values = _Values(function, arithmetic), _Values(exponential, arithmetic)

    def row_check(ys):
        memo: dict[tuple[int, Element], Any] = {}

        def difference(depth: int, x: Element) -> Any:
            if depth == len(ys):
                return f_values(x)
            key = (depth, x)
            if key not in memo:
                y = ys[depth]
                shifted = arithmetic.zero
                for w, weight in hypergroup.linearization(x, y).weights.items():
                    shifted += arithmetic.coerce(weight) * difference(depth + 1, w)
                memo[key] = shifted - m_values(y) * difference(depth + 1, x)
            return memo[key]

        for x in points:
            yield (x, ys), difference(0, x), arithmetic.zero

    return _sweep(kind, arithmetic, tuples, row_check, _tuple_at, box, tolerance, jobs)


# Degree of an exponential monomial

@dataclass
class DegreeReport:
    degree: Optional[int]
    witness: Optional[list[Element]]
    spot_checks: int
    certified: bool
    upper_bound: Optional[int] = None
    reason: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "witness": None if self.witness is None else [list(y) for y in self.witness],
            "spot_checks": self.spot_checks,
            "certified": self.certified,
            "upper_bound": self.upper_bound,
            "reason": self.reason,
        }


def monomial_degree(
    f: HFunction,
    m: HFunction,
    box: int,
    n_max: int,
    trials: Optional[int] = None,
    rng: Optional[SplitMix64] = None,
) -> DegreeReport:
    """
    Smallest ``n <= n_max`` with ``Delta_{m; y_1..y_{n+1}} f == 0``.

    Each difference lowers the order of every term at m's point, so ``f.order``
    is a symbolic upper bound.  Random ``(n+1)``-tuples from the box test each
    smaller ``n``; a tuple with a nonzero difference is kept as the witness of
    the lower bound.
    """
    _require_exponential(m, "monomial_degree")
    f._check_base(m, "monomial_degree")
    require_exact(unify(f.domain, m.domain), "monomial_degree")
    trials = Config.DEGREE_TRIALS if trials is None else trials
    if trials < 1:
        raise HGValidationError("trials must be at least 1", field="trials")
    if box < 1:
        raise HGValidationError("Differences need a box of at least 1", field="box")
    rng = rng or SplitMix64(Config.DEFAULT_SEED)
    if f.is_zero:
        return DegreeReport(None, None, 0, False, reason="zero function")
    point = m.exponential_point
    if any(other != point for other in f.points):
        return DegreeReport(None, None, 0, True, reason="terms at another exponential")

    upper = f.order
    dimension = f.hypergroup.dimension
    identity = {f.hypergroup.identity}
    witness: Optional[list[Element]] = None
    spot_checks = 0
    for n in range(min(upper, n_max) + 1):
        annihilated = True
        for _ in range(trials):
            ys = rng.sample_elements(dimension, box, n + 1, exclude=identity)
            spot_checks += 1
            if not mod_diff(f, m, ys).is_zero:
                witness, annihilated = ys, False
                break
        if annihilated:
            lower_bound_shown = n == 0 or (witness is not None and len(witness) == n)
            if n < upper:
                logger.warning("Degree %s found below the order bound %s; point may be degenerate", n, upper)
            return DegreeReport(n, witness, spot_checks, n == upper and lower_bound_shown, upper)
    return DegreeReport(None, witness, spot_checks, False, upper, reason=f"degree exceeds {n_max}")


# Recovery of exponentials and sine functions from their values

def recover_exponential(hypergroup: Hypergroup, f: Callable[[Element], Scalar], box: int) -> Optional[Point]:
    """
    The point ``lambda`` with ``f(x) = Q_x(lambda)`` on the box, or None.

    ``lambda_i = a_0 f(e_i) + b_0`` for the i-th one-variable factor.
    """
    dimension = hypergroup.dimension
    point = []
    for i, factor in enumerate(hypergroup.factors_1d()):
        a_0, b_0, _ = factor.recurrence.coefficients(0)
        value = canonical(f(unit_index(dimension, i)))
        domain = domain_of(value)
        point.append(canonical(lift(a_0, domain) * lift(value, domain) + lift(b_0, domain)))
    candidate = exponential(hypergroup, point)
    for x in hypergroup.box(box):
        if canonical(f(x)) != candidate(x):
            return None
    return tuple(point)


def recover_sine_coefficients(
    hypergroup: Hypergroup,
    s: Callable[[Element], Scalar],
    m: HFunction,
    box: int,
) -> Optional[tuple]:
    """The direction ``a`` with ``s = sum_i a_i [d_i Q](lambda)`` on the box, or None."""
    _require_exponential(m, "recover_sine_coefficients")
    point = m.exponential_point
    dimension = hypergroup.dimension
    a = []
    for i in range(dimension):
        e_i = unit_index(dimension, i)
        value = canonical(s(e_i))
        slope = hypergroup.derivative_value(e_i, e_i, point)
        domain = unify(domain_of(value), domain_of(slope))
        a.append(canonical(lift(value, domain) / lift(slope, domain)))
    candidate = sine(hypergroup, a, point)
    for x in hypergroup.box(box):
        if canonical(s(x)) != candidate(x):
            return None
    return tuple(a)


@dataclass
class IndependenceWitness:
    points: list[Element]
    matrix: list[list[Scalar]]
    rank: int
    independent: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "points": [list(x) for x in self.points],
            "matrix": [[scalar_to_json(v) for v in row] for row in self.matrix],
            "rank": self.rank,
            "independent": self.independent,
        }


def sine_independence_witness(hypergroup: Hypergroup, point: Sequence[Scalar]) -> IndependenceWitness:
    """Evaluate the generators ``[d_j Q](lambda)`` at the unit elements ``e_i``."""
    dimension = hypergroup.dimension
    generators = [sine(hypergroup, unit_index(dimension, j), point) for j in range(dimension)]
    units = [unit_index(dimension, i) for i in range(dimension)]
    matrix = [[generator(e_i) for generator in generators] for e_i in units]
    domain = unify(*(generator.domain for generator in generators))
    rank = exact_rank(matrix, dimension, domain)
    return IndependenceWitness(units, matrix, rank, rank == dimension)
