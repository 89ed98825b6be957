"""Exact polynomial arithmetic over the rationals.

Everything in the package that is "a polynomial in q" is a :class:`RationalPoly`.
Coefficients are :class:`fractions.Fraction` in lowest terms, stored densely in
ascending order of power.  Complex evaluation goes through mpmath with an
explicit working precision per call.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational
from typing import Iterable, Sequence, Union

import mpmath

Scalar = Union[int, Fraction]

DEFAULT_PREC = 256


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


class RationalPoly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``q**k``.  Instances are immutable and
    hashable.  The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_as_fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "_c", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    # construction helpers

    @classmethod
    def q(cls) -> "RationalPoly":
        """The indeterminate ``q``."""
        return cls((0, 1))

    @classmethod
    def const(cls, c: Scalar) -> "RationalPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> "RationalPoly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-_as_fraction(r), 1))
        return p

    # basic properties

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def lead(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def int_coeffs(self) -> list:
        """Coefficients as Python ints; raises ValueError if any is fractional."""
        if not self.is_integral():
            bad = next(k for k, c in enumerate(self._c) if c.denominator != 1)
            raise ValueError(f"coefficient of q^{bad} is not an integer: {self._c[bad]}")
        return [c.numerator for c in self._c]

    # arithmetic

    @staticmethod
    def _coerce(other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        return RationalPoly((other,))

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        return RationalPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly([-c for c in self._c])

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RationalPoly):
            a, b = self._c, other._c
            if not a or not b:
                return RationalPoly()
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return RationalPoly(out)
        try:
            s = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return RationalPoly([c * s for c in self._c])

    __rmul__ = __mul__

    def __truediv__(self, other):
        s = _as_fraction(other)
        if s == 0:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return RationalPoly([c / s for c in self._c])

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = RationalPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self) -> "RationalPoly":
        return RationalPoly([k * c for k, c in enumerate(self._c)][1:])

    def divmod_linear(self, root: Scalar) -> tuple:
        """Synthetic division by ``(q - root)``; returns (quotient, remainder)."""
        r = _as_fraction(root)
        if not self._c:
            return RationalPoly(), Fraction(0)
        acc = Fraction(0)
        out = []
        for c in reversed(self._c):
            acc = acc * r + c
            out.append(acc)
        rem = out.pop()
        return RationalPoly(reversed(out)), rem

    # evaluation

    def __call__(self, x):
        """Horner evaluation.  Exact for int/Fraction arguments."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self._c):
                acc = acc * x + c
            return acc
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == RationalPoly((other,))._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"RationalPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def to_strings(self) -> list:
        """Ascending coefficients as ``"num/den"`` strings (``"num"`` when integral)."""
        return [str(c) for c in self._c]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "RationalPoly":
        return cls(Fraction(s) for s in items)


Q = RationalPoly.q()


def falling_factorial(x, k: int):
    """``x (x-1) ... (x-k+1)``; the empty product (k=0) is 1.

    Works for exact scalars and for :class:`RationalPoly`.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if isinstance(x, RationalPoly):
        out = RationalPoly.const(1)
        for s in range(k):
            out = out * (x - s)
        return out
    out = 1
    for s in range(k):
        out = out * (x - s)
    return out


@lru_cache(maxsize=None)
def f_poly(b: int, i: int) -> RationalPoly:
    """Basis function ``f_i(b, q) = sum_s (-1)^s C(b-i, s) (q-i-s)^{(b-i-s)}``.

    Zero when ``i > b``.
    """
    if b < 0 or i < 0:
        raise ValueError("b and i must be non-negative")
    if i > b:
        return RationalPoly()
    n = b - i
    out = RationalPoly()
    for s in range(n + 1):
        term = falling_factorial(Q - (i + s), n - s)
        out = out + term * ((-1) ** s * comb(n, s))
    return out


# ---------------------------------------------------------------------------
# arbitrary-precision complex evaluation


@lru_cache(maxsize=None)
def mp_context(prec: int = DEFAULT_PREC) -> mpmath.ctx_mp.MPContext:
    """A private mpmath context at ``prec`` bits.

    Contexts are never mutated after creation, so sharing them between threads
    is safe (unlike the global ``mpmath.mp``).
    """
    if prec < 53:
        raise ValueError("precision must be at least 53 bits")
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


def to_mpc(z, prec: int = DEFAULT_PREC):
    ctx = mp_context(prec)
    if isinstance(z, Fraction):
        return ctx.mpc(ctx.mpf(z.numerator) / z.denominator)
    if isinstance(z, tuple):
        re, im = z
        return ctx.mpc(to_mpc(re, prec).real, to_mpc(im, prec).real)
    return ctx.mpc(z)


def eval_complex(p: RationalPoly, z, prec: int = DEFAULT_PREC):
    """Evaluate ``p`` at complex ``z`` by Horner's rule in ``prec``-bit arithmetic.

    ``z`` may be any number mpmath understands, a Fraction, or an (re, im) pair.
    Returns an ``mpc`` bound to the ``prec``-bit context.
    """
    if prec < 64:
        raise ValueError("complex evaluation needs at least 64 bits")
    ctx = mp_context(prec)
    x = to_mpc(z, prec)
    acc = ctx.mpc(0)
    for c in reversed(p.coeffs):
        acc = acc * x + (ctx.mpf(c.numerator) / c.denominator)
    return acc
