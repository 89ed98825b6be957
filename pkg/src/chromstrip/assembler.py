"""Assemble P(B_m(b), q) from a catalog: sum over (d, j) of c * c' * lambda^m."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .catalog import FamilySpec, get_catalog
from .polycore import DEFAULT_PREC, Q, RationalPoly, eval_complex, falling_factorial, mp_context


class IntegralityError(ArithmeticError):
    """An assembled chromatic polynomial has a non-integer coefficient."""


@dataclass(frozen=True)
class ChromaticResult:
    family: FamilySpec
    m: int
    poly: RationalPoly

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def formal(self) -> bool:
        # m = 1 strips carry self-linking edges; the closed form is only formal there
        return self.m == 1

    def coefficients(self) -> list:
        return self.poly.int_coeffs()


def _family(family, boundary=None) -> FamilySpec:
    if isinstance(family, FamilySpec):
        return family
    return FamilySpec(int(family), boundary or "torus")


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"strip length m must be a positive int, got {m!r}")


def assemble(family, m: int, boundary: str | None = None) -> ChromaticResult:
    """Exact expansion of the chromatic polynomial of the length-m strip.

    Raises :class:`IntegralityError` if the expansion is not integral, which
    would mean a catalog transcription error.
    """
    fam = _family(family, boundary)
    _check_m(m)
    total = RationalPoly()
    for e in fam.catalog:
        if e.contributing:
            total = total + e.coeff_poly * e.lam**m
    if not total.is_integral():
        bad = [k for k, c in enumerate(total.coeffs) if c.denominator != 1]
        raise IntegralityError(
            f"P(b={fam.b}, {fam.boundary}, m={m}) has non-integer coefficients at powers {bad[:5]}"
        )
    return ChromaticResult(fam, m, total)


def eval_at(family, m: int, q, boundary: str | None = None, prec: int = DEFAULT_PREC):
    """Evaluate ``sum c(q) lambda(q)^m`` without expanding.

    Exact for int/Fraction ``q`` (returns a Fraction); otherwise evaluated in
    ``prec``-bit complex arithmetic and returned as an mpmath ``mpc``.
    """
    fam = _family(family, boundary)
    _check_m(m)
    if isinstance(q, (int, Fraction)):
        q = Fraction(q)
        return sum((e.coeff_poly(q) * e.lam(q) ** m for e in fam.catalog if e.contributing), Fraction(0))
    ctx = mp_context(prec)
    acc = ctx.mpc(0)
    for e in fam.catalog:
        if e.contributing:
            acc += eval_complex(e.coeff_poly, q, prec) * eval_complex(e.lam, q, prec) ** m
    return acc


def coefficient_sum(family, boundary: str | None = None) -> RationalPoly:
    """Sum of all coefficient polynomials ``c * c'`` of the family."""
    fam = _family(family, boundary)
    total = RationalPoly()
    for e in fam.catalog:
        total = total + e.coeff_poly
    return total


def complete_graph_poly(b: int) -> RationalPoly:
    """P(K_b, q) = q (q-1) ... (q-b+1)."""
    return falling_factorial(Q, b)


def klein_level_sum(b: int, d: int) -> RationalPoly:
    """Sum of the Klein-bottle coefficients at level ``d``."""
    fam = FamilySpec(b, "klein")
    if not 0 <= d <= b:
        raise ValueError(f"level d={d} outside [0, {b}]")
    total = RationalPoly()
    for e in fam.catalog:
        if e.d == d:
            total = total + e.coeff_poly
    return total


def klein_level_sum_conjecture(b: int, d: int) -> RationalPoly:
    """Conjectured closed form of :func:`klein_level_sum` for any ``b``."""
    if b % 2 == 0:
        if d % 2:
            return RationalPoly()
        return RationalPoly.const((-1) ** (d // 2) * comb(b // 2, d // 2))
    h = (b - 1) // 2
    if d % 2 == 0:
        return RationalPoly.const((-1) ** (d // 2) * comb(h, d // 2))
    return (Q - 1) * ((-1) ** ((d - 1) // 2) * comb(h, (d - 1) // 2))
