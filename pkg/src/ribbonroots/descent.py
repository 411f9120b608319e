"""Excitation factor in the Newton basis and assembly of descent polynomials.

For a connected shape ``lam/mu`` with ``lam_1 = lam_2`` let ``lam^(t)`` be
``lam`` with its first row stretched by ``t - 1`` cells. The excited diagrams
of ``lam^(t)/mu`` do not depend on ``t``; their first-row cells are always
``c_{1,1..d}`` and those cells have hooks ``t + alpha_i``. Grouping by ``d``
gives

    E(t) = sum_d C_{s-d} (t + alpha_1) ... (t + alpha_d),   s = mu_1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from . import kernels
from .errors import DomainError, InternalConsistencyError, ResourceError
from .excited import enumerate_excited, naruse_count
from .polynomial import RationalPolynomial
from .shapes import (
    DescentSet,
    Partition,
    SkewShape,
    alpha_vector,
    as_descent_set,
    conjugate,
    extend_first_row,
    hook_multiset_below_first_row,
    hook_table,
    ribbon_from_descent_set,
)
from .sqci import SliceKind, SliceSpec, SqciDiagram, push, slice_cells, sqci_weight
from .verdict import Verdict

PERMUTATION_BUDGET = 10


@dataclass(frozen=True)
class NewtonForm:
    """``E(t) = sum_j coeffs[j] * prod_{i <= s - j} (t + alphas[i-1])``."""

    alphas: tuple[int, ...]
    coeffs: tuple[int, ...]

    def __post_init__(self):
        alphas = tuple(int(a) for a in self.alphas)
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != len(alphas) + 1:
            raise DomainError(f"need s+1 coefficients for s={len(alphas)}, got {len(coeffs)}")
        if any(a <= b for a, b in zip(alphas, alphas[1:])) or any(a < 0 for a in alphas):
            raise DomainError(f"alphas must be strictly decreasing and nonnegative: {alphas}")
        if any(c <= 0 for c in coeffs):
            raise DomainError(f"coefficients must be positive: {coeffs}")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def s(self) -> int:
        return len(self.alphas)

    def evaluate(self, t):
        total = 0
        basis = 1
        for d in range(self.s + 1):
            total += self.coeffs[self.s - d] * basis
            if d < self.s:
                basis *= t + self.alphas[d]
        return total

    def to_monomial(self) -> RationalPolynomial:
        # Horner in the Newton basis: C_0 (t+a_s) + C_1, times (t+a_{s-1}), + C_2, ...
        acc = RationalPolynomial([self.coeffs[0]])
        for j in range(1, self.s + 1):
            acc = acc * RationalPolynomial([self.alphas[self.s - j], 1]) + self.coeffs[j]
        return acc

    def ratios(self) -> list[Fraction]:
        """``C_d / d!`` for ``d = 0..s``."""
        return [Fraction(c, factorial(d)) for d, c in enumerate(self.coeffs)]

    def to_dict(self) -> dict:
        return {"alphas": [str(a) for a in self.alphas], "coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text) -> NewtonForm:
        data = json.loads(text) if isinstance(text, str) else text
        try:
            return cls(tuple(int(a) for a in data["alphas"]), tuple(int(c) for c in data["coeffs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed Newton form: {text!r}") from exc


def _require_normalized(shape: SkewShape) -> None:
    if not shape.is_connected():
        raise DomainError(f"{shape} is not connected")
    lam = shape.outer
    if shape.inner and lam.part(1) != lam.part(2):
        raise DomainError(f"{shape} needs lam_1 = lam_2; got {lam.part(1)} and {lam.part(2)}")


def excitation_factor(shape: SkewShape) -> NewtonForm:
    """Group excited diagrams by their number of first-row cells."""
    _require_normalized(shape)
    s = shape.inner.part(1)
    alphas = alpha_vector(shape.outer)[:s]
    table = hook_table(shape.outer)
    coeffs = [0] * (s + 1)
    for diagram in enumerate_excited(shape):
        d = diagram.first_row_count()
        coeffs[s - d] += prod(table[c.row - 1][c.col - 1] for c in diagram.below_first_row())
    return NewtonForm(alphas, tuple(coeffs))


def lemma33_coefficients(shape: SkewShape) -> list[int]:
    """The same coefficients, each written as one circle/square weight.

    ``C_{s-i}`` is the weight of the inner diagram minus its first row, cut
    after column ``i`` with the right part pushed into squares, times the
    hooks at the bottom of columns ``i+2 .. s+1``.
    """
    if not shape.is_ribbon():
        raise DomainError(f"{shape} is not a ribbon")
    _require_normalized(shape)
    lam, mu = shape.outer, shape.inner
    s = mu.part(1)
    if s == 0:
        return [1]
    conj = conjugate(lam)
    table = hook_table(lam)
    lower = slice_cells(mu.cells(), SliceSpec(SliceKind.BELOW, 1))
    out = [0] * (s + 1)
    for i in range(s + 1):
        kept = slice_cells(lower, SliceSpec(SliceKind.LEFT, i))
        cut = slice_cells(lower, SliceSpec(SliceKind.RIGHT, i))
        w = sqci_weight(SqciDiagram(tuple(kept), tuple(push(cut, "right")), lam))
        for col in range(i + 2, s + 2):
            w *= table[conj[col - 1] - 1][col - 1]
        out[s - i] = w
    return out


def _ribbon_for(I: DescentSet) -> SkewShape:
    return ribbon_from_descent_set(I)


def trivial_part(shape: SkewShape, I) -> RationalPolynomial:
    """``T(t)``: the factors of ``p(t)`` not coming from ``E(t)``."""
    I = as_descent_set(I)
    if shape != _ribbon_for(I):
        raise DomainError(f"{shape} is not the ribbon of {I}")
    if not I.elements:
        return RationalPolynomial([1])
    a1 = alpha_vector(shape.outer)[0]
    num = RationalPolynomial.from_roots(i - a1 for i in I)
    return num / prod(hook_multiset_below_first_row(shape.outer))


def trivial_part_parts(shape: SkewShape, I) -> tuple[RationalPolynomial, int]:
    """``T(t)`` split into an integer numerator polynomial and a denominator."""
    I = as_descent_set(I)
    T = trivial_part(shape, I)
    if not I.elements:
        return RationalPolynomial([1]), 1
    den = prod(hook_multiset_below_first_row(shape.outer))
    return T * den, den


def _normalize(shape: SkewShape) -> tuple[SkewShape, int]:
    """Return an equivalent shape with ``lam_1 = lam_2`` and the shift ``u - 1``."""
    lam, mu = shape.outer, shape.inner
    if lam.part(1) == lam.part(2):
        return shape, 0
    rest = tuple(lam[1:])
    core = SkewShape(Partition((lam.part(2),) + rest), mu)
    return core, lam.part(1) - lam.part(2)


def first_row_polynomial(shape: SkewShape) -> RationalPolynomial:
    """``p(t) = f^{lam^(t)/mu}`` as an exact polynomial in ``t``.

    Uses the factorization into ``E(t)`` and the linear factors ``t + beta``
    for ``beta`` in ``{0..n-1}`` minus the first-row alphas. Shapes with a
    long first row are reduced by shifting ``t``.
    """
    if not shape.is_connected():
        raise DomainError(f"{shape} is not connected")
    if len(shape.nonempty_rows()) == 1:
        return RationalPolynomial([1])
    core, shift = _normalize(shape)
    if shift:
        return first_row_polynomial(core).shift(shift)
    n = core.size
    alphas = set(alpha_vector(core.outer))
    linear = RationalPolynomial.from_roots(-b for b in range(n) if b not in alphas)
    E = excitation_factor(core).to_monomial()
    return linear * E / prod(hook_multiset_below_first_row(core.outer))


def eval_pt_formula(shape: SkewShape, t: int) -> Fraction:
    """The fully expanded ratio of factorials and hooks for ``p(t)``, at integer ``t >= 1``."""
    _require_normalized(shape)
    if t < 1:
        raise DomainError(f"t must be a positive integer, got {t}")
    n = shape.size
    alphas = alpha_vector(shape.outer)
    value = Fraction(factorial(n + t - 1), factorial(t - 1))
    value /= prod(hook_multiset_below_first_row(shape.outer))
    value /= prod(t + a for a in alphas)
    return value * excitation_factor(shape).evaluate(t)


def descent_polynomial(I) -> RationalPolynomial:
    """``d_I(N)``, the number of permutations of ``N`` letters with descent set ``I``."""
    return descent_data(I).polynomial


@dataclass(frozen=True)
class DescentData:
    I: DescentSet
    shape: SkewShape
    newton: NewtonForm
    trivial: RationalPolynomial
    p: RationalPolynomial
    polynomial: RationalPolynomial

    @property
    def alpha1(self) -> int:
        return alpha_vector(self.shape.outer)[0]


@lru_cache(maxsize=1024)
def _descent_data(I: DescentSet) -> DescentData:
    shape = _ribbon_for(I)
    if not I.elements:
        one = RationalPolynomial([1])
        return DescentData(I, shape, NewtonForm((), (1,)), one, one, one)
    nf = excitation_factor(shape)
    T = trivial_part(shape, I)
    p = T * nf.to_monomial()
    a1 = alpha_vector(shape.outer)[0]
    return DescentData(I, shape, nf, T, p, p.shift(-a1))


def descent_data(I) -> DescentData:
    return _descent_data(as_descent_set(I))


@lru_cache(maxsize=None)
def _histogram(n: int) -> tuple[int, ...]:
    return tuple(kernels.descent_histogram(n))


def brute_force_descent_count(I, n: int, budget: int = PERMUTATION_BUDGET) -> int:
    """Scan all permutations of ``n`` letters and count those with descent set ``I``."""
    I = as_descent_set(I)
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > budget:
        raise ResourceError(f"n={n} exceeds the permutation budget {budget}")
    if I.m >= n:
        return 0
    return _histogram(n)[sum(1 << (i - 1) for i in I)]


def check_coefficient_monotonicity(nf: NewtonForm) -> Verdict:
    ratios = nf.ratios()
    if nf.s == 0:
        return Verdict("monotonicity", True, vacuous=True, details={"ratios": ratios})
    bad = [d for d in range(nf.s) if ratios[d] < ratios[d + 1]]
    return Verdict("monotonicity", not bad, details={"ratios": ratios, "violations": bad})


def check_refined_corollaries(shape: SkewShape) -> Verdict:
    """Check both refined chains wherever their column-length hypotheses apply.

    Strict drop ``lam'_{i+1} > lam'_{i+2}`` gives ``C_{s-i}/0! >= ... >= C_s/i!``.
    Columns ``i+1 .. s+1`` all of length two give ``C_0/0! = ... = C_{s-i}/(s-i)!``.
    """
    nf = excitation_factor(shape)
    s = nf.s
    C = nf.coeffs
    conj = conjugate(shape.outer)
    col = lambda x: conj.part(x)  # noqa: E731
    applied = []
    ok = True
    for i in range(1, s + 1):
        if col(i + 1) > col(i + 2):
            chain = [Fraction(C[s - i + j], factorial(j)) for j in range(i + 1)]
            good = all(a >= b for a, b in zip(chain, chain[1:]))
            applied.append({"kind": "decreasing", "i": i, "holds": good, "chain": chain})
            ok &= good
    for i in range(0, s + 1):
        if col(i + 1) == col(s + 1) == 2:
            chain = [Fraction(C[j], factorial(j)) for j in range(s - i + 1)]
            good = all(a == b for a, b in zip(chain, chain[1:]))
            applied.append({"kind": "equal", "i": i, "holds": good, "chain": chain})
            ok &= good
    return Verdict("refined-corollaries", ok, vacuous=not applied, details={"applied": applied})


def check_shifted_positivity(I) -> Verdict:
    """Expand ``d_I(x + alpha_1)`` and check its coefficient signs.

    The constant coefficient is ``d_I(alpha_1) = d_I(m) = 0`` because ``m``
    lies in ``I``; every higher coefficient must be strictly positive.
    """
    I = as_descent_set(I)
    data = descent_data(I)
    if not I.elements:
        return Verdict("shifted-positivity", True, vacuous=True)
    shifted = data.polynomial.shift(data.alpha1)
    if shifted != data.p:
        raise InternalConsistencyError(f"shift round trip failed for {I}")
    cs = list(shifted.coeffs)
    ok = cs[0] == 0 and all(c > 0 for c in cs[1:]) and len(cs) == I.m + 1
    at_zero = data.polynomial(0)
    sign_ok = at_zero == (-1) ** len(I)
    return Verdict("shifted-positivity", ok and sign_ok,
                   details={"coefficients": cs, "d_at_0": at_zero, "d_at_0_ok": sign_ok})


def naruse_bridge(shape: SkewShape, ts=(1, 2, 3, 4)) -> Verdict:
    """Compare the expanded factorial formula with Naruse counts of ``lam^(t)/mu``."""
    rows = []
    ok = True
    for t in ts:
        formula = eval_pt_formula(shape, t)
        count = naruse_count(SkewShape(extend_first_row(shape.outer, t), shape.inner))
        rows.append({"t": t, "formula": formula, "naruse": count})
        ok &= formula == count
    return Verdict("pt-formula", ok, details={"rows": rows})


def integer_root_structure(I) -> Verdict:
    """``d_I`` has degree ``m`` and vanishes on ``I``."""
    I = as_descent_set(I)
    d = descent_polynomial(I)
    zeros = {i: d(i) for i in I}
    ok = d.degree == I.m and all(v == 0 for v in zeros.values())
    return Verdict("integer-roots", ok, details={"degree": d.degree, "values": zeros})


__all__ = [
    "DescentData",
    "NewtonForm",
    "brute_force_descent_count",
    "check_coefficient_monotonicity",
    "check_refined_corollaries",
    "check_shifted_positivity",
    "descent_data",
    "descent_polynomial",
    "eval_pt_formula",
    "excitation_factor",
    "first_row_polynomial",
    "integer_root_structure",
    "lemma33_coefficients",
    "naruse_bridge",
    "trivial_part",
    "trivial_part_parts",
]
