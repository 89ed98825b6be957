from fractions import Fraction

import pytest

from chromstrip.assembler import (
    assemble,
    coefficient_sum,
    complete_graph_poly,
    eval_at,
    klein_level_sum,
    klein_level_sum_conjecture,
)
from chromstrip.catalog import FamilySpec
from chromstrip.polycore import Q, eval_complex


def test_coefficient_sums():
    assert coefficient_sum(5) == Q * (Q - 1) * (Q - 2) * (Q - 3) * (Q - 4)
    assert coefficient_sum(6) == complete_graph_poly(6)
    assert coefficient_sum(5, "klein").is_zero()
    assert coefficient_sum(6, "klein").is_zero()


@pytest.mark.parametrize("b", [5, 6])
@pytest.mark.parametrize("boundary", ["torus", "klein"])
@pytest.mark.parametrize("m", [2, 3, 4])
def test_degree_and_integer_roots(b, boundary, m):
    res = assemble(b, m, boundary)
    assert res.degree == b * m
    assert res.poly.lead == 1
    assert all(res.poly(k) == 0 for k in range(b))
    assert res.poly(b) != 0


def test_m1_is_formal():
    # a single K_b joined to itself: the torus link is a loop at every vertex
    assert assemble(5, 1).poly.is_zero()
    assert assemble(5, 1).formal
    assert assemble(6, 1, "klein").poly == complete_graph_poly(6)
    # odd b: the twisted self-link fixes the middle vertex, a loop
    assert assemble(5, 1, "klein").poly.is_zero()


def test_eval_at_matches_expansion():
    res = assemble(6, 3, "klein")
    for q in (Fraction(-3, 2), Fraction(7), Fraction(11, 3)):
        assert eval_at(6, 3, q, "klein") == res.poly(q)
    z = (Fraction(3, 2), Fraction(1, 3))
    assert abs(eval_at(6, 3, z, "klein") - eval_complex(res.poly, z)) < 1e-40


def test_family_spec_accepted():
    assert assemble(FamilySpec(5, "klein"), 2).poly == assemble(5, 2, "klein").poly


def test_bad_m():
    with pytest.raises(ValueError):
        assemble(5, 0)


@pytest.mark.parametrize("b", [5, 6])
def test_klein_level_sum_closed_forms(b):
    for d in range(b + 1):
        assert klein_level_sum(b, d) == klein_level_sum_conjecture(b, d)


def test_klein_level_sum_examples():
    assert klein_level_sum(5, 1) == Q - 1
    assert klein_level_sum(6, 2) == -3
    assert klein_level_sum(6, 3).is_zero()
