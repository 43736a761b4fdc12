"""
Exact linear algebra over ``QQ`` / ``QQ_I`` on top of sympy's ``DomainMatrix``.
"""

from __future__ import annotations

from typing import Optional, Sequence

from sympy.polys.matrices import DomainMatrix

from .scalars import Domain, Scalar, canonical, lift


def _matrix(rows: Sequence[Sequence[Scalar]], ncols: int, domain: Domain) -> DomainMatrix:
    lifted = [[lift(value, domain) for value in row] for row in rows]
    return DomainMatrix(lifted, (len(lifted), ncols), domain)


def rref(rows: Sequence[Sequence[Scalar]], ncols: int, domain: Domain) -> tuple[list[list[Scalar]], tuple[int, ...]]:
    if not rows or not ncols:
        return [], ()
    reduced, pivots = _matrix(rows, ncols, domain).rref()
    return reduced.to_list(), tuple(pivots)


def exact_rank(rows: Sequence[Sequence[Scalar]], ncols: int, domain: Domain) -> int:
    if not rows or not ncols:
        return 0
    return _matrix(rows, ncols, domain).rank()


def nullity(rows: Sequence[Sequence[Scalar]], ncols: int, domain: Domain) -> int:
    return ncols - exact_rank(rows, ncols, domain)


def independent_columns(rows: Sequence[Sequence[Scalar]], ncols: int, domain: Domain) -> tuple[int, ...]:
    """Pivot columns: the earliest maximal independent set of columns."""
    return rref(rows, ncols, domain)[1]


def solve(
    rows: Sequence[Sequence[Scalar]],
    rhs: Sequence[Scalar],
    ncols: int,
    domain: Domain,
) -> tuple[Optional[list[Scalar]], bool]:
    """
    Solve ``A c = rhs`` exactly.

    Returns ``(solution, unique)``; ``solution`` is None when the system is
    inconsistent.  Free variables are set to zero.
    """
    if ncols == 0:
        consistent = all(not lift(value, domain) for value in rhs)
        return ([] if consistent else None), True
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    reduced, pivots = rref(augmented, ncols + 1, domain)
    if ncols in pivots:
        return None, False
    solution = [domain.zero] * ncols
    for row, column in zip(reduced, pivots):
        solution[column] = row[ncols]
    return [canonical(value) for value in solution], len(pivots) == ncols
