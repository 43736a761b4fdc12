import pytest
from sympy.polys.domains import QQ

import hypergroup_synthesis.core.synthesis as synthesis
from hypergroup_synthesis.core.exceptions import HGInconclusiveError, HGUsageError
from hypergroup_synthesis.core.functions import HFunction, apply_pdo, exponential, sine
from hypergroup_synthesis.core.polyring import MultiPoly
from hypergroup_synthesis.core.synthesis import (
    contains,
    decomposition_report,
    exponentials_in_variety,
    moment_span_decompose,
    sine_dimension,
    variety_basis,
)
from hypergroup_synthesis.utils.rng import SplitMix64


def member(hypergroup, alpha, point):
    return HFunction.build(hypergroup, [(1, alpha, point)])


def random_operator(rng, dimension, max_degree=3):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        alpha = tuple(rng.randint(0, max_degree) for _ in range(dimension))
        if sum(alpha) <= max_degree:
            terms[alpha] = rng.rational(9, nonzero=True)
    return MultiPoly.from_terms(dimension, terms or {(0,) * dimension: 1})


def test_variety_of_exponential_is_a_line(cheb2, lam):
    variety = variety_basis(exponential(cheb2, lam))
    assert variety.dim == 1
    assert variety.radius == 1
    assert variety.stable


def test_variety_of_moment_function(cheb2, lam):
    variety = variety_basis(member(cheb2, (1, 1), lam))
    assert variety.dim == 4
    assert variety.radius == 2
    assert sorted(alpha for alpha, _ in variety.atoms) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(variety.sample_points) >= 4


def test_zero_function_has_empty_variety(cheb2):
    assert variety_basis(HFunction.zero(cheb2)).dim == 0


def test_contains_and_coordinates(cheb2, lam):
    variety = variety_basis(member(cheb2, (1, 1), lam))
    m = exponential(cheb2, lam)
    assert contains(variety, m)[0]
    coordinates = variety.coordinates(m)
    assert coordinates is not None and len(coordinates) == 4
    assert not contains(variety, exponential(cheb2, (QQ(1, 2), QQ(1, 2))))[0]
    assert not contains(variety, member(cheb2, (2, 0), lam))[0]


def test_sine_dimension_2d(cheb2, rng):
    for _ in range(2):
        point = rng.point(2)
        variety = variety_basis(member(cheb2, (1, 1), point))
        assert sine_dimension(variety, exponential(cheb2, point)) == 2


def test_sine_dimension_1d(cheb1):
    point = (QQ(-2, 9),)
    variety = variety_basis(member(cheb1, (1,), point))
    assert sine_dimension(variety, exponential(cheb1, point)) == 1


def test_sine_dimension_needs_exponential_in_variety(cheb2, lam):
    variety = variety_basis(member(cheb2, (1, 1), lam))
    with pytest.raises(HGUsageError):
        sine_dimension(variety, sine(cheb2, (QQ(1), QQ(0)), lam))
    with pytest.raises(HGUsageError):
        sine_dimension(variety, exponential(cheb2, (QQ(0), QQ(0))))


def test_decompose_exponential(cheb2, lam):
    decomposition = moment_span_decompose(exponential(cheb2, lam).scale(QQ(5, 3)))
    assert decomposition.atoms == [((0, 0), lam)]
    assert decomposition.coefficients == [QQ(5, 3)]
    assert decomposition.residual == 0


def test_decompose_recovers_operator_coefficients(cheb2, lam):
    p = MultiPoly.from_terms(2, {(0, 0): 2, (1, 0): QQ(-1, 2), (1, 1): 3, (2, 1): QQ(1, 7)})
    decomposition = moment_span_decompose(apply_pdo(p, lam, cheb2))
    recovered = {
        alpha: coeff
        for coeff, (alpha, _) in zip(decomposition.coefficients, decomposition.atoms)
        if coeff
    }
    assert recovered == dict(p.terms())
    assert decomposition.residual == 0
    assert decomposition.unique
    assert decomposition.symbolic_exact


def test_decompose_falls_back_when_members_leave_the_variety(cheb2, lam):
    # the variety of z1^2 z2 + z1 z2^2 holds d^(2,1) Q and d^(1,2) Q only in combination
    p = MultiPoly.from_terms(2, {(2, 1): 1, (1, 2): 1})
    f = apply_pdo(p, lam, cheb2)
    decomposition = moment_span_decompose(f)
    assert not decomposition.in_variety
    assert decomposition.combination() == f
    assert decomposition.residual == 0


def test_sine_decomposition(cheb2, lam):
    # the variety is spanned by Q(lambda) and the sine itself
    decomposition = moment_span_decompose(sine(cheb2, (QQ(3), QQ(-5)), lam))
    assert decomposition.variety.dim == 2
    assert not decomposition.in_variety
    assert [alpha for alpha, _ in decomposition.atoms] == [(0, 1), (1, 0)]
    assert decomposition.coefficients == [QQ(-5), QQ(3)]
    assert decomposition.residual == 0


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_decompose_random_operators(seed):
    from hypergroup_synthesis.core.hypergroup import chebyshev

    rng = SplitMix64(seed)
    dimension = 1 + seed % 2
    hypergroup = chebyshev(dimension)
    p = random_operator(rng, dimension)
    point = rng.point(dimension, bound=9)
    decomposition = moment_span_decompose(apply_pdo(p, point, hypergroup))
    assert decomposition.combination() == apply_pdo(p, point, hypergroup)
    assert decomposition.residual == 0


def test_decompose_needs_a_single_point(cheb2, lam):
    other = (QQ(1), QQ(1, 2))
    f = exponential(cheb2, lam) + exponential(cheb2, other)
    with pytest.raises(HGUsageError):
        moment_span_decompose(f)
    with pytest.raises(HGUsageError):
        moment_span_decompose(f, point=lam)


def test_exponentials_in_variety_exclude_other_points(cheb2, rng):
    for _ in range(2):
        point = rng.point(2)
        variety = variety_basis(member(cheb2, (1, 1), point))
        candidates = [point] + [rng.point(2, exclude=[point]) for _ in range(9)]
        assert exponentials_in_variety(variety, candidates) == [point]


def test_decomposition_report(cheb2, lam):
    report = decomposition_report(member(cheb2, (1, 1), lam), rng=SplitMix64(3))
    assert report["variety_dim"] == 4
    assert report["sine_dim"] == 2
    assert report["degree"] == 2
    assert report["residual"] == "0"
    assert report["atoms_in_variety"]
    assert report["coefficients"] == ["0", "0", "0", "1"]
    assert [atom["alpha"] for atom in report["atoms"]] == [[0, 0], [0, 1], [1, 0], [1, 1]]
    assert report["atoms"][0]["lambda"] == ["1/3", "2/5"]


def test_unconfirmed_rank_is_inconclusive(cheb2, lam, monkeypatch):
    monkeypatch.setattr(synthesis, "_sample", lambda basis, points, domain: (list(points), [], 0))
    with pytest.raises(HGInconclusiveError) as excinfo:
        variety_basis(exponential(cheb2, lam))
    assert excinfo.value.box == 16


def test_exponential_carries_no_sine(cheb2, lam):
    m = exponential(cheb2, lam)
    assert sine_dimension(variety_basis(m), m) == 0


def test_one_variable_varieties(cheb1):
    point = (QQ(3, 7),)
    assert variety_basis(member(cheb1, (1,), point)).dim == 2
    variety = variety_basis(member(cheb1, (2,), point))
    assert variety.dim == 3
    assert sine_dimension(variety, exponential(cheb1, point)) == 1


def test_exponentials_in_variety_of_a_sum(cheb2, lam):
    other, outside = (QQ(1), QQ(-1, 2)), (QQ(2, 9), QQ(0))
    variety = variety_basis(exponential(cheb2, lam) + exponential(cheb2, other))
    assert variety.dim == 2
    assert exponentials_in_variety(variety, [lam, other, outside]) == [lam, other]


def test_synthesis_is_exact_only(cheb2):
    seed = exponential(cheb2, (complex(0.5, 0.25), QQ(1, 3)))
    with pytest.raises(HGUsageError):
        variety_basis(seed)
    with pytest.raises(HGUsageError):
        decomposition_report(seed)
