import math
import random
from fractions import Fraction
from math import factorial

import pytest

from ribbonroots.descent import descent_polynomial
from ribbonroots.errors import DomainError, NumericalError
from ribbonroots.polynomial import RationalPolynomial as P
from ribbonroots.roots import (
    PerturbedPolynomial,
    appendix_a_polynomial,
    check_excitation_bounds,
    check_k7_interior,
    check_lemma_a1,
    check_lemma_a2,
    check_main_bounds,
    check_perturbation_lemma,
    check_root_bridge,
    find_roots,
    perturbed_polynomial,
    random_perturbed,
    sharp_instance,
)
from ribbonroots.shapes import DescentSet, Partition, SkewShape, ribbon_from_descent_set


def test_simple_quadratic():
    r = find_roots(P.from_roots([1, 2]))
    assert r.roots == [1, 2]
    assert r.exact_roots == [1, 2]


def test_root_count_and_residuals():
    p = descent_polynomial((2, 4, 7))
    r = find_roots(p)
    assert r.degree == p.degree == 7
    assert max(r.residuals) <= 1e-10


def test_single_descent_ten_roots():
    r = find_roots(descent_polynomial((10,)))
    assert r.exact_roots == [-1, 10]
    expected = [(0.123556, 2.080159), (2.852828, 3.469780), (6.147172, 3.469780), (8.876444, 2.080159)]
    for x, y in expected:
        for sign in (1, -1):
            assert min(abs(z - complex(x, sign * y)) for z in r.roots) < 1e-6


def test_binomial_form_of_single_descent():
    # permutations with exactly one descent, at position m: C(n, m) - 1
    x = P.x()
    m = 6
    binom = P([1])
    for i in range(m):
        binom = binom * (x - i)
    assert descent_polynomial((m,)) == binom / factorial(m) - 1


def test_integer_roots_exact():
    assert {3, 5} <= set(find_roots(descent_polynomial((3, 5))).exact_roots)


def test_repeated_rational_root():
    p = P.from_roots([Fraction(1, 2), Fraction(1, 2), 1, 3])
    r = find_roots(p)
    assert sum(1 for z in r.roots if abs(z - 0.5) < 1e-12) == 2


def test_constant_rejected():
    with pytest.raises(DomainError):
        find_roots(P([3]))


def test_nonconvergence_reported():
    p = P.from_roots([Fraction(1, 3), Fraction(2, 7), Fraction(-5, 11), Fraction(9, 13)])
    with pytest.raises(NumericalError) as info:
        find_roots(p, max_iter=1)
    assert "estimates" in info.value.diagnostics


def test_main_bounds_examples():
    v = check_main_bounds((10,))
    assert v.holds
    assert abs(v.details["checks"]["modulus"]["min_margin"]) < 1e-12
    assert abs(v.details["checks"]["real-part"]["min_margin"]) < 1e-12
    one = check_main_bounds((1,))
    assert one.holds
    # d_{1}(n) = n - 1
    assert one.details["report"].roots == [1]
    assert check_main_bounds(()).vacuous


def test_excitation_bounds_example():
    v = check_excitation_bounds(ribbon_from_descent_set(DescentSet((3, 5))))
    assert v.holds and v.details["report"].degree == 3
    assert check_excitation_bounds(SkewShape(Partition((2, 2)))).vacuous


def test_bridge():
    for I in [(3, 5), (1, 3, 4, 6), (10,), (2, 5, 6)]:
        assert check_root_bridge(I).holds


def test_factorial_quotient_polynomials():
    assert appendix_a_polynomial(1) == P([1])
    assert appendix_a_polynomial(2) == P([3, 1])
    for k in range(1, 10):
        assert appendix_a_polynomial(k).coeffs[0] == sum(Fraction(factorial(k), i) for i in range(1, k + 1))
    with pytest.raises(DomainError):
        appendix_a_polynomial(0)


def test_lemma_a1():
    v = check_lemma_a1(3)
    assert v.holds and v.details["min_margin_plusk"] > 0 and not v.details["strict_flag"]
    assert check_lemma_a1(1).vacuous


def test_lemma_a2():
    one = check_lemma_a2(1, samples=64)
    assert one.holds and math.isclose(one.details["min_abs"], 1.0)
    assert check_lemma_a2(12, samples=10_000).holds


def test_lemma_a2_reports_witness(monkeypatch):
    import ribbonroots.roots as R
    monkeypatch.setattr(R, "appendix_a_polynomial", lambda k: P([Fraction(1, 10)]))
    v = R.check_lemma_a2(3, samples=16)
    assert not v.holds and v.details["witness"] is not None


def test_k7_interior():
    v = check_k7_interior()
    assert v.holds
    assert v.details["triangle_bound"] == 1932 > factorial(6)


def test_perturbed_examples():
    assert perturbed_polynomial(PerturbedPolynomial((5,), (0,))) == P([5, 1])
    z = P.x()
    expected = (z + 3) * (z + 2) * (z + 1) + (z + 3) * (z + 2) + 2 * (z + 3) + 6
    pp = PerturbedPolynomial((1, 2, 3), (1, 2, 3))
    assert perturbed_polynomial(pp) == expected
    assert expected(-4) == 0
    v = check_perturbation_lemma(PerturbedPolynomial((2, 5), (1, 2)))
    assert v.holds


def test_zero_perturbation():
    pp = PerturbedPolynomial((1, 4, 9), (0, 0, 0))
    assert find_roots(perturbed_polynomial(pp)).exact_roots == [-9, -4, -1]


def test_sharpness_family():
    for k in (3, 5, 7):
        for c in (0, 1, 4):
            v = check_perturbation_lemma(sharp_instance(k, c))
            assert v.holds and v.details["sharp_vanishes"]
    assert not sharp_instance(4).is_sharp_family()


def test_perturbed_validation():
    with pytest.raises(DomainError):
        PerturbedPolynomial((2, 2), (0, 0))
    with pytest.raises(DomainError):
        PerturbedPolynomial((1, 2), (2, 0))
    with pytest.raises(DomainError):
        PerturbedPolynomial((), ())


def test_random_perturbed_sample():
    rng = random.Random(7)
    for _ in range(40):
        assert check_perturbation_lemma(random_perturbed(rng)).holds
