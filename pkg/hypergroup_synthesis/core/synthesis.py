"""
Varieties of exponential polynomials and their decomposition into moment
functions.

A variety is built from the translates of its seed.  Its dimension is computed
exactly in atom coordinates (the functions ``x -> [d^alpha Q_x](lambda)``) and
then confirmed by the rank of sampled values on a box of elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, Iterable, Optional, Sequence

from ..config import BoxPolicy, Config
from ..utils.logger import logger
from ..utils.rng import SplitMix64
from .codec import atom_to_json, function_to_json
from .exceptions import HGInconclusiveError, HGUsageError
from .functions import (
    Atom,
    HFunction,
    Point,
    atom_key,
    exponential,
    monomial_degree,
    translate,
)
from .hypergroup import Element, Hypergroup
from .linalg import exact_rank, independent_columns, nullity, solve
from .polyring import grlex_key, indices_below
from .scalars import Domain, Scalar, canonical, domain_of, require_exact, scalar_to_json, unify

# sampled rows are added in chunks of at least this many
MIN_CHUNK = 8


@dataclass
class Variety:
    hypergroup: Hypergroup
    seed: HFunction
    box: int
    radius: int
    spanning_set: list[Element]
    generators: list[HFunction]
    basis: list[HFunction]
    atoms: list[Atom]
    domain: Domain
    sample_points: list[Element] = field(default_factory=list)
    values: list[list[Scalar]] = field(default_factory=list)
    stable: bool = True

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, g: HFunction) -> Optional[list[Scalar]]:
        return contains(self, g)[1]

    def to_dict(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "box": self.box,
            "radius": self.radius,
            "stable": self.stable,
            "basis": [function_to_json(b) for b in self.basis],
            "atoms": [atom_to_json(atom) for atom in self.atoms],
            "samples": len(self.sample_points),
        }


@dataclass
class Decomposition:
    seed: HFunction
    point: Point
    atoms: list[Atom]
    coefficients: list[Scalar]
    residual: Scalar
    unique: bool
    symbolic_exact: bool
    variety: Variety
    in_variety: bool = True

    def combination(self) -> HFunction:
        return HFunction.build(
            self.seed.hypergroup,
            [(coeff, alpha, point) for coeff, (alpha, point) in zip(self.coefficients, self.atoms)],
        )


def _grid(dimension: int, radius: int) -> list[Element]:
    return sorted(cartesian(range(radius + 1), repeat=dimension), key=grlex_key)


def _translates(f: HFunction, ys: Iterable[Element]) -> list[HFunction]:
    seen: list[HFunction] = []
    for y in ys:
        g = translate(f, y)
        if not g.is_zero and g not in seen:
            seen.append(g)
    return seen


def _atom_matrix(functions: Sequence[HFunction], atoms: Sequence[Atom]) -> list[list[Scalar]]:
    """Rows are atoms, columns are functions."""
    return [[f.coefficient(*atom) for f in functions] for atom in atoms]


def _atoms_of(functions: Iterable[HFunction]) -> list[Atom]:
    found = {atom for f in functions for atom in f.atoms}
    return sorted(found, key=atom_key)


def _sample(basis: Sequence[HFunction], points: Sequence[Element], domain: Domain):
    """Grow sampled rows in chunks until the value matrix reaches full rank."""
    dim = len(basis)
    chunk = max(MIN_CHUNK, 2 * dim)
    used: list[Element] = []
    rows: list[list[Scalar]] = []
    rank = 0
    for start in range(0, len(points), chunk):
        for x in points[start:start + chunk]:
            used.append(x)
            rows.append([b(x) for b in basis])
        rank = exact_rank(rows, dim, domain)
        if rank == dim:
            break
    return used, rows, rank


def variety_basis(f: HFunction, box: Optional[int] = None) -> Variety:
    require_exact(f.domain, "variety_basis")
    hypergroup = f.hypergroup
    dimension = hypergroup.dimension
    if f.is_zero:
        return Variety(hypergroup, f, box or 0, 0, [], [], [], [], f.domain)

    radius = sum(max(f.order_bound(point)) + 1 for point in f.points)
    spanning_set = _grid(dimension, radius)
    generators = _translates(f, spanning_set)
    wider = generators + _translates(f, [y for y in _grid(dimension, radius + 1) if max(y) > radius])
    atoms = _atoms_of(wider)
    domain = unify(*(g.domain for g in wider))

    pivots = independent_columns(_atom_matrix(generators, atoms), len(generators), domain)
    wider_rank = exact_rank(_atom_matrix(wider, atoms), len(wider), domain)
    if wider_rank != len(pivots):
        raise HGInconclusiveError(
            f"Translate span did not stabilize: rank {len(pivots)} at radius {radius}, "
            f"{wider_rank} at radius {radius + 1}",
            {"radius": radius},
            box=box,
        )
    basis = [generators[i] for i in pivots]
    dim = len(basis)

    initial = BoxPolicy.SCALE * len(atoms) + BoxPolicy.OFFSET if box is None else box
    current = initial
    for attempt in range(BoxPolicy.MAX_DOUBLINGS + 1):
        used, rows, rank = _sample(basis, hypergroup.box(current), domain)
        if rank == dim:
            logger.debug("Variety of dimension %s confirmed on %s sampled points", dim, len(used))
            return Variety(
                hypergroup, f, current, radius, spanning_set, generators, basis, atoms, domain,
                used, rows, stable=True,
            )
        if attempt < BoxPolicy.MAX_DOUBLINGS:
            logger.warning("Sampled rank %s < %s on box %s; doubling the box", rank, dim, current)
            current *= 2
    raise HGInconclusiveError(
        f"Sampled rank {rank} did not reach the variety dimension {dim} on box {current}; "
        "try a larger box",
        {"rank": rank, "dim": dim, "initial_box": initial},
        box=current,
    )


def contains(variety: Variety, g: HFunction) -> tuple[bool, Optional[list[Scalar]]]:
    """Exact membership; on success the coordinates of ``g`` in the basis."""
    variety.seed._check_base(g, "contains")
    if g.is_zero:
        return True, [canonical(variety.domain.zero)] * variety.dim
    known = set(variety.atoms)
    if any(atom not in known for atom in g.atoms):
        return False, None
    domain = unify(variety.domain, g.domain)
    rows = _atom_matrix(variety.basis, variety.atoms)
    rhs = [g.coefficient(*atom) for atom in variety.atoms]
    solution, _ = solve(rows, rhs, variety.dim, domain)
    if solution is None:
        return False, None
    return True, solution


def sine_dimension(variety: Variety, m: HFunction) -> int:
    """Dimension of the m-sine functions inside the variety."""
    if not isinstance(m, HFunction) or not m.is_exponential:
        raise HGUsageError("sine_dimension needs an exponential", operation="sine_dimension")
    if not contains(variety, m)[0]:
        raise HGUsageError("The exponential is not in the variety", operation="sine_dimension")
    if variety.dim == 0:
        return 0
    # s(x*y) - s(x) m(y) - s(y) m(x) as a function of x, for each y of the spanning set
    columns: list[list[HFunction]] = [[] for _ in variety.basis]
    for y in variety.spanning_set:
        m_y = m(y)
        for i, b in enumerate(variety.basis):
            columns[i].append(translate(b, y) - b.scale(m_y) - m.scale(b(y)))
    constraint_atoms = _atoms_of(g for column in columns for g in column)
    rows = [
        [columns[i][k].coefficient(*atom) for i in range(variety.dim)]
        for k in range(len(variety.spanning_set))
        for atom in constraint_atoms
    ]
    domain = unify(variety.domain, m.domain)
    return nullity(rows, variety.dim, domain)


def _fit(
    f: HFunction,
    atoms: Sequence[Atom],
    sample_points: Sequence[Element],
    domain: Domain,
) -> tuple[Optional[list[Scalar]], bool]:
    members = [HFunction.build(f.hypergroup, [(1, alpha, at)]) for alpha, at in atoms]
    domain = unify(domain, *(member.domain for member in members))
    rows = [[member(x) for member in members] for x in sample_points]
    rhs = [f(x) for x in sample_points]
    return solve(rows, rhs, len(members), domain)


def moment_span_decompose(
    f: HFunction,
    point: Optional[Sequence[Scalar]] = None,
    box: Optional[int] = None,
) -> Decomposition:
    """
    Express ``f`` over the moment functions ``[d^beta Q](lambda)`` lying in its variety.

    When those members do not reach ``f`` (the variety only holds some of them
    in combination), the atoms of the seed itself are used instead and
    the decomposition is flagged with ``in_variety=False``.
    """
    hypergroup = f.hypergroup
    points = f.points
    if point is None:
        if len(points) != 1:
            raise HGUsageError(
                f"Seed has terms at {len(points)} points; pass the point explicitly",
                operation="moment_span_decompose",
            )
        point = points[0]
    point = tuple(canonical(value) for value in point)
    if any(other != point for other in points):
        raise HGUsageError(
            "Every term of the seed must sit at the given point",
            {"point": [scalar_to_json(v) for v in point]},
            operation="moment_span_decompose",
        )

    variety = variety_basis(f, box)
    below = [(beta, point) for beta in indices_below(f.order_bound(point))]
    atoms = [
        atom for atom in below
        if contains(variety, HFunction.build(hypergroup, [(1, *atom)]))[0]
    ]
    in_variety = True
    solution, unique = _fit(f, atoms, variety.sample_points, variety.domain)
    if solution is None:
        logger.warning(
            "Moment functions in the variety do not reach the seed; using its %s atoms", len(f.atoms)
        )
        # atoms are independent, so the coordinates are read off the seed
        atoms, in_variety = list(f.atoms), False
        solution, unique = [f.coefficient(*atom) for atom in atoms], True
    domain = unify(variety.domain, domain_of(*point))
    if solution is None:
        solution = [canonical(domain.zero)] * len(atoms)
    if not unique:
        logger.warning("Moment coefficients are not unique at %s", [str(v) for v in point])

    combination = HFunction.build(
        hypergroup, [(coeff, alpha, at) for coeff, (alpha, at) in zip(solution, atoms)]
    )
    residual = canonical(domain.zero)
    gap = f - combination
    for x in variety.sample_points:
        difference = gap(x)
        if difference:
            residual = difference
            break
    return Decomposition(
        seed=f,
        point=point,
        atoms=atoms,
        coefficients=solution,
        residual=residual,
        unique=unique,
        symbolic_exact=combination == f,
        variety=variety,
        in_variety=in_variety,
    )


def exponentials_in_variety(variety: Variety, candidates: Iterable[Sequence[Scalar]]) -> list[Point]:
    found: list[Point] = []
    seen: list[Point] = []
    for candidate in candidates:
        candidate = tuple(canonical(value) for value in candidate)
        if candidate in seen:
            continue
        seen.append(candidate)
        if contains(variety, exponential(variety.hypergroup, candidate))[0]:
            found.append(candidate)
    return found


def decomposition_report(
    f: HFunction,
    point: Optional[Sequence[Scalar]] = None,
    box: Optional[int] = None,
    trials: Optional[int] = None,
    rng: Optional[SplitMix64] = None,
) -> dict[str, Any]:
    decomposition = moment_span_decompose(f, point, box)
    variety = decomposition.variety
    m = exponential(f.hypergroup, decomposition.point)
    sine_dim = sine_dimension(variety, m) if contains(variety, m)[0] else None
    degree = monomial_degree(
        f,
        m,
        box=max(variety.radius, 1),
        n_max=max(f.order, 0),
        trials=trials or Config.DEGREE_TRIALS,
        rng=rng,
    )
    return {
        "seed": function_to_json(f),
        "atoms": [atom_to_json(atom) for atom in decomposition.atoms],
        "coefficients": [scalar_to_json(c) for c in decomposition.coefficients],
        "variety_dim": variety.dim,
        "sine_dim": sine_dim,
        "degree": degree.degree,
        "box": variety.box,
        "stable": variety.stable,
        "unique": decomposition.unique,
        "symbolic_exact": decomposition.symbolic_exact,
        "atoms_in_variety": decomposition.in_variety,
        "residual": scalar_to_json(decomposition.residual),
    }
