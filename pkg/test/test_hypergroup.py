import pytest
from sympy.polys.domains import QQ

from hypergroup_synthesis.core.exceptions import HGRejectionError, HGUsageError, HGValidationError
from hypergroup_synthesis.core.hypergroup import (
    Recurrence1D,
    RecurrenceHypergroup,
    brute_force_linearization,
    build_from_recurrence,
    chebyshev,
    chebyshev_closed_form,
    hypergroup_from_spec,
    product,
    verify_axioms,
)
from hypergroup_synthesis.core.measures import Measure
from hypergroup_synthesis.core.polyring import MultiPoly, poly_derive, poly_eval

from .conftest import BADREC_SPEC

HALF = QQ(1, 2)
QUARTER = QQ(1, 4)


def test_chebyshev_polynomials(cheb1):
    assert cheb1.basis_poly((3,)) == MultiPoly.from_terms(1, {(3,): 4, (1,): -3})
    assert cheb1.basis_poly((0,)) == MultiPoly.constant(1, 1)


def test_chebyshev_1d_linearization(cheb1):
    assert cheb1.linearization((3,), (4,)) == Measure.build(cheb1, {(1,): HALF, (7,): HALF})
    assert cheb1.linearization((0,), (5,)) == Measure.delta(cheb1, (5,))


def test_chebyshev_2d_linearization(cheb2):
    measure = cheb2.linearization((1, 1), (1, 1))
    assert measure == Measure.build(
        cheb2,
        {(0, 0): QUARTER, (0, 2): QUARTER, (2, 0): QUARTER, (2, 2): QUARTER},
    )


def test_closed_form_coalesces_duplicate_points(cheb2):
    expected = Measure.build(cheb2, {(0, 0): HALF, (2, 0): HALF})
    assert chebyshev_closed_form((1, 0), (1, 0), cheb2) == expected
    assert cheb2.linearization((1, 0), (1, 0)) == expected


def test_linearization_is_symmetric(cheb2):
    assert cheb2.linearization((2, 1), (0, 3)) == cheb2.linearization((0, 3), (2, 1))


def test_product_matches_chebyshev_basis(cheb1, cheb2):
    pair = product(cheb1, cheb1)
    assert pair.basis_poly((2, 1)) == cheb2.basis_poly((2, 1))
    assert pair.to_spec() == {
        "kind": "product",
        "factors": [{"kind": "chebyshev", "dim": 1}, {"kind": "chebyshev", "dim": 1}],
    }


def test_negative_coefficient_is_rejected_with_witness(badrec):
    raw = badrec.raw_linearization((1,), (1,))
    assert dict(raw.items()) == {(0,): QQ(3, 4), (1,): QQ(-1, 4), (2,): HALF}

    with pytest.raises(HGRejectionError) as excinfo:
        badrec.linearization((1,), (1,))
    assert excinfo.value.witness == ((1,), (1,), (1,))
    assert excinfo.value.value == QQ(-1, 4)


def test_rejection_witness_matches_brute_force(badrec):
    oracle = brute_force_linearization(badrec, (1,), (1,))
    assert oracle[(1,)] == QQ(-1, 4)
    assert oracle == badrec.raw_linearization((1,), (1,))


def test_build_from_recurrence_certifies(badrec):
    with pytest.raises(HGRejectionError):
        build_from_recurrence(badrec.recurrence, 2)
    hypergroup = build_from_recurrence(Recurrence1D.chebyshev(), 4)
    assert hypergroup.linearization((2,), (2,)).mass() == 1


@pytest.mark.parametrize(
    "fields, field",
    [
        ({"a": ["1"], "b": ["1"], "c": ["0"]}, "recurrence"),
        ({"a": ["1"], "b": ["1/2"], "c": ["-1/2"]}, "c"),
        ({"a": ["0"], "b": ["1"], "c": ["0"]}, "a"),
        ({"a": ["1", "1"], "b": ["0"], "c": ["0"]}, "recurrence"),
    ],
)
def test_recurrence_validation(fields, field):
    with pytest.raises(HGValidationError) as excinfo:
        Recurrence1D.from_spec(dict(fields, kind="recurrence1d"))
    assert excinfo.value.field == field


def test_finite_prefix_without_tail_stops():
    hypergroup = RecurrenceHypergroup(Recurrence1D(a=(QQ(1),), b=(QQ(0),), c=(QQ(0),)))
    assert hypergroup.basis_poly((1,)) == MultiPoly.variable(1, 0)
    with pytest.raises(HGUsageError):
        hypergroup.basis_poly((2,))


def test_hypergroup_from_spec():
    assert hypergroup_from_spec({"kind": "chebyshev", "dim": 2}) == chebyshev(2)
    assert hypergroup_from_spec(BADREC_SPEC).to_spec()["tail"]["from"] == 1
    with pytest.raises(HGValidationError) as excinfo:
        hypergroup_from_spec({"kind": "laguerre"})
    assert excinfo.value.field == "kind"
    with pytest.raises(HGValidationError):
        hypergroup_from_spec({"kind": "chebyshev", "dim": 0})


def test_derivative_value_matches_polynomial_derivative(cheb1, cheb2):
    point = (QQ(1, 3),)
    for n in range(7):
        for j in range(4):
            expected = poly_eval(poly_derive(cheb1.basis_poly((n,)), (j,)), point)
            assert cheb1.derivative_value((n,), (j,), point) == expected

    point = (QQ(1, 3), QQ(-2, 7))
    for x in [(2, 1), (3, 3), (0, 2)]:
        for alpha in [(0, 0), (1, 0), (1, 1), (2, 1)]:
            expected = poly_eval(poly_derive(cheb2.basis_poly(x), alpha), point)
            assert cheb2.derivative_value(x, alpha, point) == expected


def test_leading_coefficient(cheb1):
    assert cheb1.leading_coefficient(4) == 8
    assert cheb1.basis_poly((4,)).leading_term()[1] == 8


def test_verify_axioms_chebyshev_1d(cheb1):
    report = verify_axioms(cheb1, 8)
    assert report.passed
    names = [check.name for check in report.checks]
    assert names[0] == "degree_basis"
    assert "chebyshev_closed_form" in names
    assert "two_variable_recursion" not in names


def test_verify_axioms_chebyshev_2d(cheb2):
    report = verify_axioms(cheb2, 4)
    assert report.passed
    assert report.check("chebyshev_closed_form").checked > 0
    assert report.check("two_variable_recursion").passed


def test_verify_axioms_chebyshev_3d(cheb3):
    assert verify_axioms(cheb3, 2, associativity_box=3).passed


def test_verify_axioms_reports_negative_coefficient(badrec):
    report = verify_axioms(badrec, 4)
    assert not report.passed
    check = report.check("nonnegativity")
    assert check.witness == {"x": [1], "y": [1], "w": [1], "value": "-1/4"}
    assert report.check("mass").passed
    assert report.check("linearization_formula").passed


def test_verify_axioms_parallel_matches_serial():
    serial = verify_axioms(chebyshev(2), 3, jobs=1).to_dict()
    parallel = verify_axioms(chebyshev(2), 3, jobs=4).to_dict()
    assert serial == parallel


@pytest.mark.slow
def test_verify_axioms_chebyshev_box_32(cheb1):
    assert verify_axioms(cheb1, 32).passed
