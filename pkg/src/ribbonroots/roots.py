"""Root finding with exact post-processing, and the root-location checkers.

Pipeline in :func:`find_roots`:

1. strip integer roots exactly (candidates inside the Fujiwara bound);
2. split the rest into squarefree factors (Yun) and run Aberth-Ehrlich in
   double precision on each factor;
3. Newton steps in exact rational complex arithmetic, snapped to a
   ``2**-120`` grid, which leaves a root far more precise than a double;
4. a scaled residual ``|p(z)| / (|lead| max(1,|z|)^deg)`` evaluated exactly
   at that precise root and checked against ``RESIDUAL_TOL``.

Reported roots are the precise roots rounded to doubles; the rounding is
folded into the per-root error radius used by the bound checks.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import numpy as np

from .descent import descent_data, excitation_factor
from .errors import DomainError, NumericalError
from .polynomial import RationalPolynomial
from .shapes import SkewShape, alpha_vector, as_descent_set
from .verdict import Verdict

RESIDUAL_TOL = 1e-10
BOUND_SLACK = 1e-9
MAX_ITER = 500
STRICT_FLAG = 1e-6
POLISH_STEPS = 3


@dataclass
class RootReport:
    roots: list[complex]
    exact_roots: list[Fraction]
    residuals: list[float]
    errors: list[float]
    bound_checks: dict[str, dict] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return len(self.roots)


# --- exact helpers ----------------------------------------------------------

def _eval_exact(coeffs, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
    re = im = Fraction(0)
    for c in reversed(coeffs):
        re, im = re * x - im * y + c, re * y + im * x
    return re, im


GRID = 2 ** 120


def _snap(q: Fraction) -> Fraction:
    return Fraction(round(q * GRID), GRID)


def _newton_exact(p: RationalPolynomial, dp: RationalPolynomial, x: Fraction, y: Fraction):
    """One Newton step in exact arithmetic, snapped to a fine dyadic grid."""
    pr, pi = _eval_exact(p.coeffs, x, y)
    dr, di = _eval_exact(dp.coeffs, x, y)
    den = dr * dr + di * di
    if den == 0:
        return x, y
    qr = (pr * dr + pi * di) / den
    qi = (pi * dr - pr * di) / den
    return _snap(x - qr), _snap(y - qi)


def _hypot(a: Fraction, b: Fraction) -> float:
    # scale before converting; exact values can overflow or underflow a double
    m = max(abs(a), abs(b))
    if m == 0:
        return 0.0
    e = m.numerator.bit_length() - m.denominator.bit_length()
    return math.ldexp(math.hypot(float(a / Fraction(2) ** e), float(b / Fraction(2) ** e)), e)


def _scaled_residual(p: RationalPolynomial, x: Fraction, y: Fraction) -> float:
    pr, pi = _eval_exact(p.coeffs, x, y)
    modulus = math.hypot(float(x), float(y))
    return _hypot(pr, pi) / (abs(float(p.leading)) * max(1.0, modulus) ** p.degree)


def _error_estimate(p: RationalPolynomial, x: Fraction, y: Fraction) -> float:
    """``deg * |p(z)/p'(z)|`` plus the rounding of ``z`` to a double.

    A disk of the first radius around the precise root contains a true root.
    """
    rounding = 2.3e-16 * max(1.0, math.hypot(float(x), float(y)))
    pr, pi = _eval_exact(p.coeffs, x, y)
    if pr == 0 and pi == 0:
        return rounding
    dr, di = _eval_exact(p.derivative().coeffs, x, y)
    dmag = _hypot(dr, di)
    if dmag == 0:
        return math.inf
    return p.degree * _hypot(pr, pi) / dmag + rounding


def fujiwara_bound(p: RationalPolynomial) -> float:
    n = p.degree
    lead = abs(p.leading)
    terms = []
    for k in range(1, n + 1):
        c = abs(p.coeffs[n - k]) / lead
        if c:
            if k == n:
                c /= 2
            terms.append(float(c) ** (1.0 / k))
    return 2.0 * max(terms) if terms else 0.0


def _integer_roots(p: RationalPolynomial) -> tuple[list[Fraction], RationalPolynomial]:
    found = []
    ints = p.primitive_integer_coeffs()
    while p.degree >= 1 and p.coeffs[0] == 0:
        found.append(Fraction(0))
        p = RationalPolynomial(p.coeffs[1:])
        ints = ints[1:]
    if p.degree < 1:
        return found, p
    bound = math.ceil(fujiwara_bound(p)) + 1
    for r in range(-bound, bound + 1):
        if r == 0:
            continue
        while p.degree >= 1:
            acc = 0
            for c in reversed(ints):
                acc = acc * r + c
            if acc:
                break
            found.append(Fraction(r))
            p = p.deflate(r)
            ints = p.primitive_integer_coeffs()
    return found, p


def _aberth(p: RationalPolynomial, max_iter: int = MAX_ITER) -> np.ndarray:
    n = p.degree
    lead = p.leading
    c = np.array([complex(float(x / lead)) for x in reversed(p.coeffs)])
    if n == 1:
        return np.array([-c[1]])
    dc = np.polyder(c)
    center = -c[1] / n
    radius = max(fujiwara_bound(p), 1.0) / 2
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    z = center + radius * np.exp(1j * angles)
    eye = np.eye(n, dtype=bool)
    absc = np.abs(c)
    eps = np.finfo(float).eps
    done = np.zeros(n, dtype=bool)
    for it in range(max_iter):
        pz = np.polyval(c, z)
        dpz = np.polyval(dc, z)
        # backward-error test: |p(z)| at the rounding level of the evaluation
        noise = 8 * eps * np.polyval(absc, np.abs(z))
        done |= np.abs(pz) <= noise
        if done.all():
            return z
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dpz != 0, pz / dpz, 0)
            diff = z[:, None] - z[None, :]
            diff[eye] = 1
            inv = 1 / diff
            inv[eye] = 0
            step = ratio / (1 - ratio * inv.sum(axis=1))
        step[done] = 0
        if not np.all(np.isfinite(step)):
            raise NumericalError("Aberth iteration produced non-finite values",
                                 {"iteration": it, "degree": n})
        z = z - step
        if np.max(np.abs(step) / np.maximum(1, np.abs(z))) < 1e-14:
            return z
    raise NumericalError(
        f"Aberth iteration did not converge in {max_iter} steps",
        {"degree": n, "unconverged": int((~done).sum()), "estimates": z.tolist()},
    )


def _sort_key(z: complex):
    return (round(z.real, 9), round(z.imag, 9))


def find_roots(p: RationalPolynomial, tol: float = RESIDUAL_TOL, max_iter: int = MAX_ITER) -> RootReport:
    """All complex roots of ``p`` with multiplicity, certified by exact residuals.

    Raises:
        DomainError: for constant polynomials.
        NumericalError: on non-convergence or a residual above ``tol``.
    """
    if p.degree < 1:
        raise DomainError("root finding needs a polynomial of degree >= 1")
    exact, rest = _integer_roots(p)
    precise = [(r, Fraction(0)) for r in exact]
    errors = [0.0] * len(exact)
    # numeric work only ever sees squarefree factors, so every root is simple
    for factor, mult in rest.squarefree_decomposition():
        df = factor.derivative()
        for z in _aberth(factor, max_iter):
            x, y = Fraction(float(z.real)), Fraction(float(z.imag))
            for _ in range(POLISH_STEPS):
                x, y = _newton_exact(factor, df, x, y)
            err = _error_estimate(factor, x, y)
            precise.extend([(x, y)] * mult)
            errors.extend([err] * mult)
    residuals = [_scaled_residual(p, x, y) for x, y in precise]
    roots = [complex(float(x), float(y)) for x, y in precise]
    order = sorted(range(len(roots)), key=lambda i: _sort_key(roots[i]))
    roots = [roots[i] for i in order]
    residuals = [residuals[i] for i in order]
    errors = [errors[i] for i in order]
    worst = max(residuals)
    if worst > tol:
        raise NumericalError(f"root residual {worst:.3e} exceeds {tol:.1e}",
                             {"residuals": residuals, "roots": roots})
    return RootReport(roots, sorted(exact), residuals, errors)


# --- descent polynomial bounds ---------------------------------------------

def _margin_verdict(name, margins, slacks) -> dict:
    lowest = min(margins) if margins else math.inf
    ok = all(mg >= -(BOUND_SLACK + sl) for mg, sl in zip(margins, slacks))
    return {"holds": ok, "min_margin": lowest}


def check_main_bounds(I) -> Verdict:
    """Every root ``z`` of ``d_I`` has ``|z| <= m`` and ``Re z >= -1``."""
    I = as_descent_set(I)
    if not I.elements:
        return Verdict("main-bounds", True, vacuous=True)
    report = find_roots(descent_data(I).polynomial)
    m = I.m
    report.bound_checks["modulus"] = _margin_verdict(
        "modulus", [m - abs(z) for z in report.roots], report.errors)
    report.bound_checks["real-part"] = _margin_verdict(
        "real-part", [z.real + 1 for z in report.roots], report.errors)
    ok = all(v["holds"] for v in report.bound_checks.values())
    return Verdict("main-bounds", ok, details={"I": list(I), "report": report,
                                                "checks": report.bound_checks})


def check_excitation_bounds(shape: SkewShape) -> Verdict:
    """Every root ``z`` of ``E`` has ``|z + m| <= m`` and ``|z + 1| <= m``, with ``m = alpha_1``."""
    nf = excitation_factor(shape)
    if nf.s == 0:
        return Verdict("excitation-bounds", True, vacuous=True)
    m = alpha_vector(shape.outer)[0]
    report = find_roots(nf.to_monomial())
    report.bound_checks["shifted-m"] = _margin_verdict(
        "shifted-m", [m - abs(z + m) for z in report.roots], report.errors)
    report.bound_checks["shifted-1"] = _margin_verdict(
        "shifted-1", [m - abs(z + 1) for z in report.roots], report.errors)
    ok = all(v["holds"] for v in report.bound_checks.values())
    return Verdict("excitation-bounds", ok, details={"report": report, "checks": report.bound_checks})


def _match_multisets(a: list[complex], b: list[complex], tol: float) -> float:
    """Greedy nearest matching; returns the largest pairing distance (inf on size mismatch)."""
    if len(a) != len(b):
        return math.inf
    pool = list(b)
    worst = 0.0
    for z in sorted(a, key=_sort_key):
        j = min(range(len(pool)), key=lambda k: abs(pool[k] - z))
        worst = max(worst, abs(pool[j] - z))
        pool.pop(j)
    return worst


def check_root_bridge(I, tol: float = 1e-8) -> Verdict:
    """Roots of ``d_I`` are the roots of ``E`` shifted by ``alpha_1`` plus ``alpha_1 - beta``."""
    I = as_descent_set(I)
    if not I.elements:
        return Verdict("root-bridge", True, vacuous=True)
    data = descent_data(I)
    a1 = data.alpha1
    alphas = set(alpha_vector(data.shape.outer))
    linear = [complex(a1 - b) for b in range(data.shape.size) if b not in alphas]
    E = data.newton.to_monomial()
    shifted = [z + a1 for z in find_roots(E).roots] if E.degree >= 1 else []
    roots = find_roots(data.polynomial).roots
    dist = _match_multisets(roots, shifted + linear, tol)
    return Verdict("root-bridge", dist <= tol, details={"max_distance": dist})


# --- ((z+1)...(z+k) - k!)/z --------------------------------

def appendix_a_polynomial(k: int) -> RationalPolynomial:
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    full = RationalPolynomial.from_roots(range(-1, -k - 1, -1)) - factorial(k)
    q, rem = full.divmod_linear(0)
    assert rem == 0
    return q


def check_lemma_a1(k: int) -> Verdict:
    """Roots satisfy ``|z+1| <= k`` and ``|z+k| < k``; the strict one is flagged, not asserted."""
    P = appendix_a_polynomial(k)
    if P.degree < 1:
        return Verdict("lemma-a1", True, vacuous=True, details={"k": k})
    report = find_roots(P)
    m1 = [k - abs(z + 1) for z in report.roots]
    mk = [k - abs(z + k) for z in report.roots]
    slack = [BOUND_SLACK + e for e in report.errors]
    ok = all(a >= -s for a, s in zip(m1, slack)) and all(b >= -s for b, s in zip(mk, slack))
    near = [z for z, b in zip(report.roots, mk) if b < STRICT_FLAG]
    return Verdict("lemma-a1", ok, details={
        "k": k, "min_margin_plus1": min(m1), "min_margin_plusk": min(mk),
        "strict_flag": near, "roots": report.roots,
    })


DEFAULT_RADII = (1.0, 1.01, 1.1, 2.0, 10.0)


def check_lemma_a2(k: int, samples: int = 4096, radii=DEFAULT_RADII) -> Verdict:
    """Sample ``|P(z)|`` on circles ``|z + k + 1| = (k+1) r`` against ``(k-1)!``."""
    P = appendix_a_polynomial(k)
    c = np.array([float(x) for x in reversed(P.coeffs)])
    floor = factorial(k - 1) * (1 - 1e-9)
    theta = 2 * np.pi * np.arange(samples) / samples
    worst = math.inf
    witness = None
    for r in radii:
        z = -(k + 1) + (k + 1) * r * np.exp(1j * theta)
        vals = np.abs(np.polyval(c, z))
        i = int(np.argmin(vals))
        if vals[i] < worst:
            worst, witness = float(vals[i]), complex(z[i])
    ok = worst >= floor
    return Verdict("lemma-a2", ok, details={
        "k": k, "min_abs": worst, "floor": factorial(k - 1), "ratio": worst / factorial(k - 1),
        "witness": None if ok else witness,
    })


K7_W_EXPANSION = (1008, 192, 44, 20, -3, -2, 1)


def check_k7_interior(samples: int = 4096) -> Verdict:
    """For ``k = 7`` in ``w = z + 5``: verify the expansion and ``|P| >= 1932`` on ``|w| = 5``."""
    Pw = appendix_a_polynomial(7).shift(-5)
    expansion_ok = Pw == RationalPolynomial(K7_W_EXPANSION)
    lead, *rest = reversed(K7_W_EXPANSION)
    bound = abs(lead) * 5 ** 6 - sum(abs(c) * 5 ** (5 - i) for i, c in enumerate(rest))
    c = np.array([float(x) for x in reversed(Pw.coeffs)])
    w = 5 * np.exp(2j * np.pi * np.arange(samples) / samples)
    lowest = float(np.min(np.abs(np.polyval(c, w))))
    ok = expansion_ok and bound == 1932 and bound > factorial(6) and lowest >= bound
    return Verdict("k7-interior", ok, details={
        "expansion_ok": expansion_ok, "triangle_bound": bound, "sampled_min": lowest,
    })


# --- perturbed products --------------------------------------------------

@dataclass(frozen=True)
class PerturbedPolynomial:
    a: tuple[int, ...]
    g: tuple[Fraction, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        g = tuple(Fraction(x) for x in self.g)
        if not a:
            raise DomainError("need k >= 1")
        if len(g) != len(a):
            raise DomainError(f"a and g must have equal length, got {len(a)} and {len(g)}")
        if a[0] < 1 or any(x >= y for x, y in zip(a, a[1:])):
            raise DomainError(f"a must be strictly increasing positive integers: {a}")
        for i, gi in enumerate(g, 1):
            if not 0 <= gi <= i:
                raise DomainError(f"g_{i} = {gi} is outside [0, {i}]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "g", g)

    @property
    def k(self) -> int:
        return len(self.a)

    def is_sharp_family(self) -> bool:
        return (self.k % 2 == 1
                and all(y - x == 1 for x, y in zip(self.a, self.a[1:]))
                and all(gi == i for i, gi in enumerate(self.g, 1)))


def perturbed_polynomial(pp: PerturbedPolynomial) -> RationalPolynomial:
    total = RationalPolynomial()
    weight = Fraction(1)
    for i in range(pp.k + 1):
        if i:
            weight *= pp.g[i - 1]
        total = total + RationalPolynomial.from_roots(-x for x in pp.a[i:]) * weight
    return total


def check_perturbation_lemma(pp: PerturbedPolynomial, tol: float = 1e-8) -> Verdict:
    P = perturbed_polynomial(pp)
    report = find_roots(P)
    bound = pp.a[-1] + 1
    margins = [bound - abs(z) for z in report.roots]
    ok = all(mg >= -(tol + e) for mg, e in zip(margins, report.errors))
    details = {"a": pp.a, "g": pp.g, "min_margin": min(margins)}
    if pp.is_sharp_family():
        ints = [int(c) for c in P.coeffs] if all(c.denominator == 1 for c in P.coeffs) else None
        z0 = -bound
        vanishes = ints is not None and sum(c * z0 ** i for i, c in enumerate(ints)) == 0
        details["sharp_vanishes"] = vanishes
        ok = ok and vanishes
    return Verdict("perturbation", ok, details=details)


def random_perturbed(rng: random.Random, max_k: int = 8, max_a: int = 20, grid: int = 1000) -> PerturbedPolynomial:
    """Random instance with ``g_i`` drawn uniformly from the grid ``{0, 1/grid, ..., i}``."""
    k = rng.randint(1, max_k)
    a = tuple(sorted(rng.sample(range(1, max_a + 1), k)))
    g = tuple(Fraction(rng.randint(0, grid * i), grid) for i in range(1, k + 1))
    return PerturbedPolynomial(a, g)


def sharp_instance(k: int, c: int = 0) -> PerturbedPolynomial:
    return PerturbedPolynomial(tuple(range(c + 1, c + k + 1)), tuple(range(1, k + 1)))


__all__ = [
    "PerturbedPolynomial",
    "RootReport",
    "appendix_a_polynomial",
    "check_excitation_bounds",
    "check_k7_interior",
    "check_lemma_a1",
    "check_lemma_a2",
    "check_main_bounds",
    "check_perturbation_lemma",
    "check_root_bridge",
    "find_roots",
    "fujiwara_bound",
    "perturbed_polynomial",
    "random_perturbed",
    "sharp_instance",
]
