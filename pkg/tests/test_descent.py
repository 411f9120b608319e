from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ribbonroots.descent import (
    NewtonForm,
    brute_force_descent_count,
    check_coefficient_monotonicity,
    check_refined_corollaries,
    check_shifted_positivity,
    descent_data,
    descent_polynomial,
    eval_pt_formula,
    excitation_factor,
    first_row_polynomial,
    integer_root_structure,
    lemma33_coefficients,
    naruse_bridge,
    trivial_part,
)
from ribbonroots.errors import DomainError, ResourceError
from ribbonroots.excited import brute_force_count, naruse_count
from ribbonroots.polynomial import RationalPolynomial as P
from ribbonroots.shapes import DescentSet, Partition, SkewShape, extend_first_row, ribbon_from_descent_set
from ribbonroots.suites import descent_sets

I35 = DescentSet((3, 5))
SHAPE35 = ribbon_from_descent_set(I35)


def test_example_coefficients():
    nf = excitation_factor(SHAPE35)
    assert nf.alphas == (5, 4, 3)
    assert nf.coeffs == (27, 27, 21, 24)
    assert lemma33_coefficients(SHAPE35) == [27, 27, 21, 24]
    assert trivial_part(SHAPE35, I35) == P([0, 2, 1]) / 360


def test_example_polynomial_display():
    N = P.x()
    E = 27 * N * (N - 1) * (N - 2) + 27 * N * (N - 1) + 21 * N + 24
    assert descent_polynomial(I35) == (N - 5) * (N - 3) / 360 * E


def test_empty_set():
    assert descent_polynomial(DescentSet()) == P([1])
    assert trivial_part(SkewShape(Partition((1,))), DescentSet()) == P([1])
    nf = excitation_factor(SkewShape(Partition((3, 2))))
    assert nf.coeffs == (1,) and nf.s == 0
    assert check_coefficient_monotonicity(nf).vacuous
    assert check_shifted_positivity(DescentSet()).vacuous


def test_single_descent_formulas_agree():
    shape = ribbon_from_descent_set(DescentSet((2,)))
    assert list(excitation_factor(shape).coeffs) == lemma33_coefficients(shape)


def test_trivial_part_for_one():
    I = DescentSet((1,))
    shape = ribbon_from_descent_set(I)
    p = trivial_part(shape, I) * excitation_factor(shape).to_monomial()
    for n in range(2, 8):
        assert p(n - 1) == brute_force_descent_count(I, n)


def test_unnormalized_shape_rejected():
    with pytest.raises(DomainError):
        excitation_factor(SkewShape(Partition((4, 3)), Partition((1,))))
    with pytest.raises(DomainError):
        excitation_factor(SkewShape(Partition((3, 1)), Partition((1,))))
    with pytest.raises(DomainError):
        lemma33_coefficients(SkewShape(Partition((3, 3)), Partition((1,))))
    with pytest.raises(DomainError):
        trivial_part(SHAPE35, DescentSet((3,)))


def test_brute_force_examples():
    assert brute_force_descent_count((1,), 3) == 2
    assert brute_force_descent_count((), 4) == 1
    assert brute_force_descent_count(I35, 7) == descent_polynomial(I35)(7) == 155
    assert brute_force_descent_count((5,), 4) == 0
    with pytest.raises(ResourceError):
        brute_force_descent_count((1,), 11)


def test_124_against_scan():
    d = descent_polynomial((1, 2, 4))
    for n in range(5, 10):
        assert d(n) == brute_force_descent_count((1, 2, 4), n)


def test_monotonicity_example():
    v = check_coefficient_monotonicity(excitation_factor(SHAPE35))
    assert v.holds
    assert v.details["ratios"] == [27, 27, Fraction(21, 2), 4]


def test_monotonicity_detects_violation():
    v = check_coefficient_monotonicity(NewtonForm((3, 1), (1, 5, 2)))
    assert not v.holds and v.details["violations"] == [0]


def test_equal_chain_for_two_rows():
    # lam = (m, m), mu = (m-1): every column has length two
    for m in range(2, 8):
        shape = ribbon_from_descent_set(DescentSet((m,)))
        v = check_refined_corollaries(shape)
        assert v.holds and not v.vacuous
        assert any(a["kind"] == "equal" and a["i"] == 0 for a in v.details["applied"])
        ratios = excitation_factor(shape).ratios()
        assert len(set(ratios)) == 1


def test_refined_chains_vacuous_without_inner():
    assert check_refined_corollaries(SkewShape(Partition((3, 3, 3)))).vacuous


def test_shifted_positivity_and_sign():
    v = check_shifted_positivity(I35)
    assert v.holds
    cs = v.details["coefficients"]
    assert cs[0] == 0 and all(c > 0 for c in cs[1:])
    for m in range(1, 9):
        assert check_shifted_positivity(DescentSet((m,))).holds


def test_value_at_zero():
    for I in descent_sets(6):
        assert descent_polynomial(I)(0) == (-1) ** len(I)


def test_integer_roots():
    assert integer_root_structure(I35).holds
    assert descent_polynomial(I35).degree == 5


@pytest.mark.parametrize("I", [(3, 5), (2,), (1, 3, 4), (2, 3, 6)])
def test_factorial_formula_matches_naruse(I):
    shape = ribbon_from_descent_set(DescentSet(I))
    assert naruse_bridge(shape).holds
    assert eval_pt_formula(shape, 2) == naruse_count(SkewShape(extend_first_row(shape.outer, 2), shape.inner))


@pytest.mark.parametrize("outer, inner", [
    ((5, 3, 2), (2, 1)), ((4, 4, 1), (1,)), ((3, 2), ()), ((6,), (2,)), ((3, 3, 3), (2, 2)),
])
def test_first_row_polynomial(outer, inner):
    shape = SkewShape(Partition(outer), Partition(inner))
    p = first_row_polynomial(shape)
    for t in range(1, 5):
        assert p(t) == brute_force_count(SkewShape(extend_first_row(shape.outer, t), shape.inner))


def test_first_row_polynomial_normalizes_ribbon():
    I = DescentSet((2, 4))
    data = descent_data(I)
    assert first_row_polynomial(data.shape) == data.p


def test_newton_form_round_trip_and_validation():
    nf = excitation_factor(SHAPE35)
    assert NewtonForm.from_json(nf.to_json()) == nf
    with pytest.raises(DomainError):
        NewtonForm((3, 4), (1, 1, 1))
    with pytest.raises(DomainError):
        NewtonForm((3,), (1, 0))
    with pytest.raises(DomainError):
        NewtonForm.from_json('{"alphas": [1]}')


@given(st.lists(st.integers(0, 30), min_size=0, max_size=5, unique=True),
       st.lists(st.integers(1, 1000), min_size=6, max_size=6),
       st.integers(-20, 20))
def test_newton_to_monomial(alphas, coeffs, t):
    alphas = sorted(alphas, reverse=True)
    nf = NewtonForm(tuple(alphas), tuple(coeffs[:len(alphas) + 1]))
    assert nf.to_monomial()(t) == nf.evaluate(t)
    assert nf.to_monomial().degree == nf.s


def test_sweep_exactness_and_formulas():
    for I in descent_sets(8):
        shape = ribbon_from_descent_set(I)
        nf = excitation_factor(shape)
        assert list(nf.coeffs) == lemma33_coefficients(shape)
        d = descent_polynomial(I)
        for n in range(I.m + 1, min(I.m + 3, 10) + 1):
            assert d(n) == brute_force_descent_count(I, n)
