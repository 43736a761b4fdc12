#!/usr/bin/env python3
"""
Run the full-size acceptance sweeps that the unit tests only sample.

Usage: python scripts/acceptance_audit.py [--seed N] [--jobs N] [--only NAME ...]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Callable

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from hypergroup_synthesis.config import Config  # noqa: E402
from hypergroup_synthesis.core import (  # noqa: E402
    HFunction,
    HGRejectionError,
    Measure,
    MultiPoly,
    Recurrence1D,
    RecurrenceHypergroup,
    apply_pdo,
    brute_force_linearization,
    check_equation,
    chebyshev,
    convolve,
    exponential,
    exponentials_in_variety,
    fourier,
    inverse_fourier,
    moment_family,
    moment_span_decompose,
    monomial_degree,
    poly_mul,
    sine_dimension,
    variety_basis,
    verify_axioms,
)
from hypergroup_synthesis.core.polyring import indices_below  # noqa: E402
from hypergroup_synthesis.utils.rng import SplitMix64  # noqa: E402

NEGATIVE_RECURRENCE = {
    "kind": "recurrence1d",
    "a": ["1", "1/2"],
    "b": ["0", "-1/4"],
    "c": ["0", "3/4"],
    "tail": {"a": "1/2", "b": "-1/4", "c": "3/4", "from": 1},
}


class AuditFailure(Exception):
    """Raised when an acceptance sweep finds a counterexample."""


def require(condition: bool, message: str) -> None:
    if not condition:
        raise AuditFailure(message)


def one_variable_axioms(rng: SplitMix64, jobs: int) -> None:
    report = verify_axioms(chebyshev(1), 32, jobs=jobs, associativity_box=32)
    failed = [check.name for check in report.checks if not check.passed]
    require(not failed, f"failed checks: {failed}")


def two_variable_closed_form(rng: SplitMix64, jobs: int) -> None:
    report = verify_axioms(chebyshev(2), 16, jobs=jobs)
    check = report.check("chebyshev_closed_form")
    require(check.passed, f"witness {check.witness}")


def exponential_law(rng: SplitMix64, jobs: int) -> None:
    for dimension in (1, 2, 3):
        hypergroup = chebyshev(dimension)
        points = [(1,) * dimension] + [rng.point(dimension) for _ in range(5)]
        for point in points:
            report = check_equation(
                "exponential", hypergroup, function=exponential(hypergroup, point), box=12, jobs=jobs
            )
            require(report.passed, f"d={dimension} at {point}: {report.counterexample}")


def moment_identity(rng: SplitMix64, jobs: int) -> None:
    cheb2 = chebyshev(2)
    report = check_equation("moment", cheb2, family=moment_family(cheb2, rng.point(2), (2, 2)), box=10, jobs=jobs)
    require(report.passed, f"2-D: {report.counterexample}")
    cheb1 = chebyshev(1)
    report = check_equation("moment", cheb1, family=moment_family(cheb1, rng.point(1), (4,)), box=10, jobs=jobs)
    require(report.passed, f"1-D: {report.counterexample}")


def degree_law(rng: SplitMix64, jobs: int) -> None:
    cheb2 = chebyshev(2)
    for _ in range(3):
        point = rng.point(2)
        m = exponential(cheb2, point)
        for alpha in indices_below((2, 2)):
            f = HFunction.build(cheb2, [(1, alpha, point)])
            result = monomial_degree(f, m, box=4, n_max=4, trials=64, rng=rng)
            require(result.degree == sum(alpha) and result.certified, f"alpha={alpha} at {point}: {result}")


def sine_dimensions(rng: SplitMix64, jobs: int) -> None:
    for dimension, expected, count in ((2, 2, 5), (1, 1, 3)):
        hypergroup = chebyshev(dimension)
        for _ in range(count):
            point = rng.point(dimension)
            variety = variety_basis(HFunction.build(hypergroup, [(1, (1,) * dimension, point)]))
            found = sine_dimension(variety, exponential(hypergroup, point))
            require(found == expected, f"d={dimension} at {point}: {found}")


def random_measure(rng: SplitMix64, hypergroup, size: int = 4) -> Measure:
    return Measure.build(
        hypergroup,
        [(rng.element(hypergroup.dimension, 4), rng.rational(9)) for _ in range(rng.randint(0, size))],
    )


def fourier_isomorphism(rng: SplitMix64, jobs: int) -> None:
    cheb2 = chebyshev(2)
    for index in range(100):
        mu, nu = random_measure(rng, cheb2), random_measure(rng, cheb2)
        require(fourier(convolve(mu, nu)) == poly_mul(fourier(mu), fourier(nu)), f"pair {index}: homomorphism")
        require(inverse_fourier(fourier(mu), cheb2) == mu, f"pair {index}: round trip")
        require(fourier(mu).is_zero == mu.is_zero, f"pair {index}: injectivity")


def operator_round_trip(rng: SplitMix64, jobs: int) -> None:
    for index in range(20):
        dimension = 1 + index % 2
        hypergroup = chebyshev(dimension)
        terms = {}
        for _ in range(rng.randint(1, 4)):
            alpha = tuple(rng.randint(0, 3) for _ in range(dimension))
            if sum(alpha) <= 3:
                terms[alpha] = rng.rational(9, nonzero=True)
        p = MultiPoly.from_terms(dimension, terms or {(0,) * dimension: 1})
        point = rng.point(dimension)
        f = apply_pdo(p, point, hypergroup)
        decomposition = moment_span_decompose(f)
        require(decomposition.residual == 0, f"operator {index}: residual {decomposition.residual}")
        require(decomposition.combination() == f, f"operator {index}: coefficients differ")


def exponential_exclusion(rng: SplitMix64, jobs: int) -> None:
    cheb2 = chebyshev(2)
    for _ in range(3):
        point = rng.point(2)
        variety = variety_basis(HFunction.build(cheb2, [(1, (1, 1), point)]))
        candidates = [point] + [rng.point(2, exclude=[point]) for _ in range(9)]
        found = exponentials_in_variety(variety, candidates)
        require(found == [point], f"at {point}: {found}")


def rejection_path(rng: SplitMix64, jobs: int) -> None:
    hypergroup = RecurrenceHypergroup(Recurrence1D.from_spec(NEGATIVE_RECURRENCE))
    try:
        hypergroup.linearization((1,), (1,))
    except HGRejectionError as exc:
        x, y, w = exc.witness
        oracle = brute_force_linearization(hypergroup, x, y)[w]
        require(oracle == exc.value and exc.value < 0, f"witness value {exc.value}, oracle {oracle}")
        return
    raise AuditFailure("negative recurrence was accepted")


AUDITS: dict[str, Callable[[SplitMix64, int], None]] = {
    "axioms_1d": one_variable_axioms,
    "closed_form_2d": two_variable_closed_form,
    "exponential_law": exponential_law,
    "moment_identity": moment_identity,
    "degree_law": degree_law,
    "sine_dimension": sine_dimensions,
    "fourier_isomorphism": fourier_isomorphism,
    "operator_round_trip": operator_round_trip,
    "exponential_exclusion": exponential_exclusion,
    "rejection_path": rejection_path,
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    parser.add_argument("--jobs", type=int, default=Config.JOBS)
    parser.add_argument("--only", nargs="*", choices=sorted(AUDITS), default=None)
    args = parser.parse_args()

    failed = []
    for name, audit in AUDITS.items():
        if args.only and name not in args.only:
            continue
        started = time.perf_counter()
        try:
            audit(SplitMix64(args.seed), args.jobs)
        except AuditFailure as exc:
            failed.append(name)
            print(f"{name}: FAILED ({exc})")
            continue
        print(f"{name}: OK ({time.perf_counter() - started:.1f}s)")

    if failed:
        print(f"{len(failed)} acceptance sweep(s) failed: {', '.join(failed)}")
        return 1
    print("All acceptance sweeps passed.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
