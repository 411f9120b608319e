"""Exact univariate polynomials over the rationals (monomial basis)."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable

from .errors import DomainError


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact coefficient expected, got {type(x).__name__}")


class RationalPolynomial:
    """Immutable polynomial with ``Fraction`` coefficients, lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @classmethod
    def constant(cls, c) -> RationalPolynomial:
        return cls([c])

    @classmethod
    def x(cls) -> RationalPolynomial:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, leading=1) -> RationalPolynomial:
        """``leading * prod (x - r)``."""
        p = cls([leading])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if self.coeffs else x * 0

    def evaluate_float(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = _frac(scalar)
        if scalar == 0:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return RationalPolynomial(c / scalar for c in self.coeffs)

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        out = RationalPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def shift(self, c) -> RationalPolynomial:
        """The polynomial ``x -> p(x + c)`` (Taylor shift, exact)."""
        c = _frac(c)
        a = list(self.coeffs)
        n = len(a)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                a[j] += c * a[j + 1]
        return RationalPolynomial(a)

    def divmod_linear(self, r) -> tuple[RationalPolynomial, Fraction]:
        """Synthetic division by ``x - r``: returns quotient and remainder ``p(r)``."""
        r = _frac(r)
        if not self.coeffs:
            return RationalPolynomial(), Fraction(0)
        out = []
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
            out.append(acc)
        remainder = out.pop()
        return RationalPolynomial(reversed(out)), remainder

    def deflate(self, r) -> RationalPolynomial:
        q, rem = self.divmod_linear(r)
        if rem != 0:
            raise DomainError(f"{r} is not a root")
        return q

    def derivative(self) -> RationalPolynomial:
        return RationalPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> RationalPolynomial:
        if not self.coeffs:
            return self
        return self / self.leading

    def __divmod__(self, other: RationalPolynomial):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        lead = other.leading
        for k in range(len(rem) - 1, dq - 1, -1):
            f = rem[k] / lead
            if f:
                quot[k - dq] = f
                for j, c in enumerate(other.coeffs):
                    rem[k - dq + j] -= f * c
        return RationalPolynomial(quot), RationalPolynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other: RationalPolynomial) -> RationalPolynomial:
        """Monic greatest common divisor (Euclid over the rationals)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree_decomposition(self) -> list[tuple[RationalPolynomial, int]]:
        """Yun's algorithm: monic squarefree ``f_i`` with ``self = lead * prod f_i**i``.

        Factors equal to 1 are omitted.
        """
        if self.degree < 1:
            return []
        out = []
        dp = self.derivative()
        a = self.gcd(dp)
        b = self // a
        c = dp // a
        d = c - b.derivative()
        i = 1
        while b.degree >= 1:
            a = b.gcd(d)
            if a.degree >= 1:
                out.append((a, i))
            b = b // a
            c = d // a
            d = c - b.derivative()
            i += 1
        return out

    def primitive_integer_coeffs(self) -> list[int]:
        """Integer coefficients of a positive rational multiple of ``self``."""
        if not self.coeffs:
            return []
        den = lcm(*(c.denominator for c in self.coeffs))
        return [int(c * den) for c in self.coeffs]

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> RationalPolynomial:
        return cls(Fraction(s) for s in items)

    def __repr__(self):
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            coef = "" if (mag == 1 and i) else str(mag)
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            body = f"{coef}*{mono}" if coef and mono else (coef or mono)
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out
