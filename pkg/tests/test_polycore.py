from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromstrip.polycore import (
    Q,
    RationalPoly,
    eval_complex,
    f_poly,
    falling_factorial,
    mp_context,
    to_mpc,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(fractions, max_size=6).map(RationalPoly)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RationalPoly()
    assert a * 1 == a


@settings(max_examples=60, deadline=None)
@given(polys, polys, fractions)
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@settings(max_examples=40, deadline=None)
@given(polys, fractions)
def test_divmod_linear_reconstructs(p, r):
    quot, rem = p.divmod_linear(r)
    assert quot * (Q - r) + rem == p
    assert rem == p(r)


def test_trimming_and_degree():
    assert RationalPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert RationalPoly([0, 0]).degree == -1
    assert RationalPoly().is_zero()
    assert (Q**3).degree == 3
    assert RationalPoly([0, 0, 5]).lead == 5


def test_zero_poly_evaluates_to_zero():
    assert RationalPoly()(Fraction(7, 3)) == 0
    assert abs(eval_complex(RationalPoly(), (1, 1))) == 0


def test_integral_coefficients():
    p = RationalPoly([Fraction(1, 2), 1])
    assert not p.is_integral()
    with pytest.raises(ValueError):
        p.int_coeffs()
    assert (p * 2).int_coeffs() == [1, 2]


def test_from_roots_and_str():
    p = RationalPoly.from_roots([1, 2])
    assert p == Q**2 - 3 * Q + 2
    assert str(Q**3 - 12 * Q**2 + 50 * Q - 73) == "q^3 - 12*q^2 + 50*q - 73"


def test_string_round_trip():
    p = RationalPoly([Fraction(-7, 3), 0, Fraction(5, 2), 10**40])
    assert RationalPoly.from_strings(p.to_strings()) == p


def test_falling_factorial():
    assert falling_factorial(Fraction(7), 3) == 210
    assert falling_factorial(Fraction(7), 0) == 1
    assert falling_factorial(Q, 3) == Q * (Q - 1) * (Q - 2)


# explicit basis functions as printed in the source
F5 = [
    [-501, 609, -325, 95, -15, 1],
    [209, -200, 77, -14, 1],
    [-73, 50, -12, 1],
    [21, -9, 1],
    [-5, 1],
    [1],
]
F6 = [
    [4051, -5155, 2944, -965, 190, -21, 1],
    [-1546, 1609, -710, 165, -20, 1],
    [501, -400, 125, -18, 1],
    [-136, 77, -15, 1],
    [31, -11, 1],
    [-6, 1],
    [1],
]


@pytest.mark.parametrize("b, table", [(5, F5), (6, F6)])
def test_basis_functions_match_printed_lists(b, table):
    for i, coeffs in enumerate(table):
        assert f_poly(b, i) == RationalPoly(coeffs), f"f_{i}({b}, q)"


def test_basis_function_above_b_is_zero():
    assert f_poly(5, 6).is_zero()


def test_complex_evaluation_matches_exact():
    p = f_poly(6, 0)
    z = eval_complex(p, Fraction(7, 2), 128)
    assert abs(z - mpmath.mpf(float(p(Fraction(7, 2))))) < 1e-20
    w = eval_complex(Q**2 + 1, (0, 1), 128)
    assert abs(w) < 1e-30


def test_precision_floor():
    with pytest.raises(ValueError):
        eval_complex(Q, 1, prec=32)


def test_contexts_are_cached_and_isolated():
    a = mp_context(200)
    assert a is mp_context(200)
    assert a.prec == 200 and mp_context(128).prec == 128
    assert to_mpc((Fraction(1, 2), 3), 128) == mp_context(128).mpc(0.5, 3)
