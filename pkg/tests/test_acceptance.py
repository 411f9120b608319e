"""Acceptance criteria, one test each; conftest prints a PASS/FAIL line per criterion."""
import random
import time
import timeit
from math import factorial

from ribbonroots.descent import (
    brute_force_descent_count,
    check_coefficient_monotonicity,
    check_refined_corollaries,
    descent_data,
    excitation_factor,
)
from ribbonroots.excited import brute_force_count, enumerate_excited, naruse_count
from ribbonroots.polynomial import RationalPolynomial as P
from ribbonroots.roots import (
    check_excitation_bounds,
    check_k7_interior,
    check_lemma_a1,
    check_lemma_a2,
    check_main_bounds,
    check_perturbation_lemma,
    find_roots,
    random_perturbed,
    sharp_instance,
)
from ribbonroots.shapes import Cell, Partition, SkewShape, alpha_vector, ribbon_from_descent_set
from ribbonroots.sqci import SqciDiagram, check_slice_and_push, check_slice_without_push
from ribbonroots.suites import (
    DEFAULT_SEED,
    NO_PUSH_WITNESS,
    SweepConfig,
    descent_sets,
    suite_oracles,
    suite_sap,
)


def _clock(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_ac1_naruse_333_22():
    shape = SkewShape(Partition((3, 3, 3)), Partition((2, 2)))
    diagrams = enumerate_excited(shape)
    assert sorted(d.weight for d in diagrams) == [12, 20, 40, 40, 80, 240]
    assert naruse_count(shape) == 6 == brute_force_count(shape)
    best = min(timeit.repeat(lambda: naruse_count(SkewShape(Partition((3, 3, 3)), Partition((2, 2)))),
                             number=20, repeat=5)) / 20
    assert best < 1e-3, f"{best * 1e3:.3f} ms"


def test_ac2_descent_35_end_to_end():
    def work():
        data = descent_data((3, 5))
        assert tuple(alpha_vector(data.shape.outer)) == (5, 4, 3, 1)
        assert tuple(data.newton.coeffs) == (27, 27, 21, 24)
        t = P.x()
        assert data.trivial == t * (t + 2) / 360
        N = P.x()
        displayed = (N - 5) * (N - 3) / 360 * (
            27 * N * (N - 1) * (N - 2) + 27 * N * (N - 1) + 21 * N + 24)
        assert data.polynomial == displayed
        for n in range(6, 10):
            assert data.polynomial(n) == brute_force_descent_count((3, 5), n)
    _, elapsed = _clock(work)
    assert elapsed < 1.0


def test_ac3_slice_push_example():
    lam = Partition((5, 5, 4, 3, 2))
    d = SqciDiagram((Cell(1, 1), Cell(1, 2), Cell(2, 1), Cell(2, 2)), (), lam)
    v = check_slice_and_push(d, 1)
    assert (v.lhs, v.rhs, v.holds) == (9120, 4560, True)
    lam, circles, k = NO_PUSH_WITNESS
    bare = check_slice_without_push(SqciDiagram(circles, (), lam), k)
    assert list(lam) == [4, 3]
    assert (bare.lhs, bare.rhs) == (27, 28) and not bare.holds


def test_ac4_monotonicity_sweep():
    def work():
        sets = descent_sets(7)
        assert len(sets) == 127
        chains = 0
        for I in sets:
            shape = ribbon_from_descent_set(I)
            assert check_coefficient_monotonicity(excitation_factor(shape)).holds, I
            cors = check_refined_corollaries(shape)
            assert cors.holds, I
            chains += len(cors.details.get("applied", []))
        return chains
    chains, elapsed = _clock(work)
    assert chains > 0
    assert elapsed < 30


def test_ac5_slice_and_push_suite():
    res, elapsed = _clock(lambda: suite_sap(SweepConfig(seed=DEFAULT_SEED)))
    assert res.passed, res.failures[:3]
    assert res.details["random"] == 1000 and res.details["max_size"] == 10
    assert elapsed < 120


TEN_ROOTS = [(0.123556, 2.080159), (0.123556, -2.080159), (2.852828, 3.469780),
              (2.852828, -3.469780), (6.147172, 3.469780), (6.147172, -3.469780),
              (8.876444, 2.080159), (8.876444, -2.080159), (-1.0, 0.0), (10.0, 0.0)]


def test_ac6_descent_root_bounds():
    def work():
        sets = descent_sets(8)
        assert len(sets) == 255
        worst = 0.0
        for I in sets:
            v = check_main_bounds(I)
            assert v.holds, I
            checks = v.details["checks"]
            worst = min(worst, checks["modulus"]["min_margin"], checks["real-part"]["min_margin"])
        assert worst >= -1e-9
        roots = find_roots(descent_data((10,)).polynomial).roots
        assert len(roots) == 10
        for x, y in TEN_ROOTS:
            assert min(abs(z - complex(x, y)) for z in roots) <= 1e-4
    _, elapsed = _clock(work)
    assert elapsed < 30


def test_ac7_excitation_root_bounds():
    def work():
        for I in descent_sets(8):
            assert check_excitation_bounds(ribbon_from_descent_set(I)).holds, I
    _, elapsed = _clock(work)
    assert elapsed < 30


def test_ac8_factorial_quotient_bounds():
    def work():
        flagged = {}
        for k in range(2, 13):
            v = check_lemma_a1(k)
            assert v.holds, k
            flagged[k] = v.details["strict_flag"]
        for k in range(1, 13):
            v = check_lemma_a2(k, samples=4096)
            assert v.holds, (k, v.details.get("witness"))
            assert v.details["min_abs"] >= factorial(k - 1) * (1 - 1e-9)
        k7 = check_k7_interior(4096)
        assert k7.holds and k7.details["triangle_bound"] == 1932 > factorial(6)
        return flagged
    flagged, elapsed = _clock(work)
    assert not any(flagged.values())
    assert elapsed < 60


def test_ac9_perturbation_lemma():
    def work():
        rng = random.Random(DEFAULT_SEED)
        for _ in range(500):
            pp = random_perturbed(rng)
            assert pp.k <= 8 and pp.a[-1] <= 20
            assert all(0 <= g <= i + 1 for i, g in enumerate(pp.g))
            assert check_perturbation_lemma(pp, tol=1e-8).holds, pp
        for k in (3, 5, 7):
            pp = sharp_instance(k)
            assert pp.a == tuple(range(1, k + 1)) and pp.g == tuple(range(1, k + 1))
            v = check_perturbation_lemma(pp)
            assert v.holds and v.details["sharp_vanishes"]
    _, elapsed = _clock(work)
    assert elapsed < 60


def test_ac10_oracle_triangle():
    res, elapsed = _clock(lambda: suite_oracles(SweepConfig(seed=DEFAULT_SEED)))
    assert res.passed, res.failures[:3]
    assert res.checked == 200 + 255 + 63
    assert elapsed < 120
