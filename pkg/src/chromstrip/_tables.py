"""Transcribed eigenvalue and coefficient tables for b = 5, 6.

Eigenvalues are integer weights over the basis f_i(b, q).  Coefficient rows
list (partition, c') pairs; rows mixing several partitions also carry the
combined polynomial exactly as tabulated, and the top level (d = b) carries
only the explicit polynomial.  The printed eigenvalue polynomials and the
single-partition coefficient products live in the test fixtures.
"""

from fractions import Fraction as F

from .polycore import Q

# EIGENVALUES[b][d] = list over j = 1.. of {basis index: weight}
EIGENVALUES = {
    5: {
        0: [{0: 1}],
        1: [{1: -1, 2: 4}, {1: -1, 2: -1}],
        2: [
            {2: 1, 3: -6, 4: 6},
            {2: 1, 3: -1, 4: -4},
            {2: 1, 3: 2, 4: 2},
            {2: 1, 3: -3},
            {2: 1, 3: 2},
        ],
        3: [
            {3: -1, 4: 6, 5: -6},
            {3: -1, 4: 1, 5: 4},
            {3: -1, 4: -2, 5: -2},
            {3: -1, 4: 4, 5: -2},
            {3: -1, 4: 1, 5: 1},
            {3: -1, 4: -1, 5: 3},
            {3: -1, 4: -3, 5: -3},
            {3: -1, 4: 2},
            {3: -1, 4: -3},
        ],
        4: [
            {4: 1, 5: -4},
            {4: 1, 5: 1},
            {4: 1, 5: -3},
            {4: 1, 5: 3},
            {4: 1, 5: 2},
            {4: 1},
            {4: 1, 5: -2},
            {4: 1, 5: -1},
            {4: 1, 5: 4},
        ],
        5: [{5: -1}],
    },
    6: {
        0: [{0: 1}],
        1: [{1: -1, 2: 5}, {1: -1, 2: -1}],
        2: [
            {2: 1, 3: -8, 4: 12},
            {2: 1, 3: -2, 4: -6},
            {2: 1, 3: 2, 4: 2},
            {2: 1, 3: -4},
            {2: 1, 3: 2},
        ],
        3: [
            {3: -1, 4: 9, 5: -18, 6: 6},
            {3: -1, 4: 3, 5: 6, 6: -6},
            {3: -1, 4: -1, 5: 2, 6: 6},
            {3: -1, 4: -3, 5: -6, 6: -6},
            {3: -1, 4: 6, 5: -6},
            {3: -1, 4: 2, 5: 2},
            {3: -1, 5: 6},
            {3: -1, 4: -3, 5: -3},
            {3: -1, 4: 3},
            {3: -1, 4: -3},
        ],
        4: [
            {4: 1, 5: -8, 6: 12},
            {4: 1, 5: -2, 6: -6},
            {4: 1, 5: 2, 6: 2},
            {4: 1, 6: -6},
            {4: 1, 5: -2, 6: -2},
            {4: 1},
            {4: 1, 5: 3, 6: 3},
            {4: 1, 5: -6, 6: 6},
            {4: 1, 5: 1, 6: -3},
            {4: 1, 5: 4, 6: 6},
            {4: 1, 5: -4, 6: 2},
            {4: 1, 5: 2, 6: -4},
            {4: 1, 5: -1, 6: -1},
            {4: 1, 5: 4, 6: 4},
            {4: 1, 5: -2},
            {4: 1, 5: 4},
        ],
        5: [
            {5: -1, 6: 5},
            {5: -1, 6: -1},
            {5: -1, 6: 4},
            {5: -1},
            {5: -1, 6: -2},
            {5: -1, 6: 3},
            {5: -1, 6: 1},
            {5: -1, 6: -3},
            {5: -1, 6: 2},
            {5: -1, 6: -4},
            {5: -1, 6: -5},
        ],
        6: [{6: 1}],
    },
}

# COEFFICIENTS[(boundary, b)][d] = list over j of rows.  A row is either
#   [(partition, c'), ...]                   single or multi partition
#   ([(partition, c'), ...], combined_poly)  multi partition with tabulated sum
#   (None, poly)                             top level, partitions not listed
COEFFICIENTS = {
    ("torus", 5): {
        0: [[("", 1)]],
        1: [[("1", 1)], [("1", 4)]],
        2: [[("2", 1)], [("2", 4)], [("2", 5)], [("11", 4)], [("11", 6)]],
        3: [
            [("3", 1)], [("3", 4)], [("3", 5)],
            [("21", 8)], [("21", 10)], [("21", 12)], [("21", 10)],
            [("111", 6)], [("111", 4)],
        ],
        4: [
            [("4", 1)],
            [("4", 4)],
            [("31", 12)],
            [("211", 12)],
            ([("31", 18), ("22", 10)], F(1, 6) * Q * (Q - 1) * (7 * Q**2 - 63 * Q + 131)),
            ([("31", 15), ("211", 15)], F(5, 4) * Q * (Q - 3) * (Q**2 - 7 * Q + 8)),
            ([("211", 18), ("22", 10)], F(1, 6) * Q * (Q - 5) * (7 * Q**2 - 35 * Q + 37)),
            [("1111", 4)],
            [("1111", 1)],
        ],
        5: [(None, Q**5 - 15 * Q**4 + 75 * Q**3 - 145 * Q**2 + 89 * Q - 1)],
    },
    ("torus", 6): {
        0: [[("", 1)]],
        1: [[("1", 1)], [("1", 5)]],
        2: [[("2", 1)], [("2", 5)], [("2", 9)], [("11", 5)], [("11", 10)]],
        3: [
            [("3", 1)], [("3", 5)], [("3", 9)], [("3", 5)],
            [("21", 10)], [("21", 18)], [("21", 20)], [("21", 32)],
            [("111", 10)], [("111", 10)],
        ],
        4: [
            [("4", 1)], [("4", 5)], [("4", 9)],
            [("31", 30)], [("31", 27)], [("31", 15)], [("31", 48)], [("31", 15)],
            [("22", 32)],
            [("22", 10)],
            ([("22", 18), ("211", 30)], F(1, 2) * Q * (Q - 5) * (2 * Q - 3) * (2 * Q - 7)),
            [("211", 30)], [("211", 48)], [("211", 27)],
            [("1111", 10)], [("1111", 5)],
        ],
        5: [
            [("5", 1)],
            ([("5", 5), ("221", 25)], F(1, 4) * Q * (Q - 1) * (Q - 3) * (Q - 4) * (Q - 7)),
            [("41", 20)],
            (
                [("41", 36), ("311", 96), ("2111", 36)],
                F(1, 5) * Q * (Q - 4) * (7 * Q**3 - 77 * Q**2 + 217 * Q - 162),
            ),
            ([("41", 40), ("32", 80)], Q * (Q - 1) * (Q - 2) * (Q**2 - 12 * Q + 34)),
            ([("32", 45), ("311", 60)], F(1, 8) * Q * (Q - 1) * (Q - 7) * (7 * Q**2 - 49 * Q + 78)),
            ([("32", 25), ("11111", 5)], F(1, 4) * (Q - 1) * (Q - 2) * (Q - 5) * (Q**2 - 7 * Q + 2)),
            ([("311", 60), ("221", 45)], F(1, 8) * Q * (Q - 1) * (Q - 3) * (7 * Q**2 - 77 * Q + 202)),
            ([("221", 80), ("2111", 40)], Q * (Q - 3) * (Q - 6) * (Q**2 - 6 * Q + 6)),
            [("2111", 20)],
            [("11111", 1)],
        ],
        6: [(None, Q**6 - 21 * Q**5 + 160 * Q**4 - 545 * Q**3 + 814 * Q**2 - 415 * Q + 1)],
    },
    ("klein", 5): {
        0: [[("", 1)]],
        1: [[("1", 1)], [("1", 0)]],
        2: [[("2", 1)], [("2", 0)], [("2", 1)], [("11", 0)], [("11", -2)]],
        3: [
            [("3", 1)], [("3", 0)], [("3", 1)],
            [("21", 0)], [("21", 2)], [("21", -4)], [("21", 2)],
            [("111", -2)], [("111", 0)],
        ],
        4: [
            [("4", 1)],
            [("4", 0)],
            [("31", 0)],
            [("211", 0)],
            ([("31", -6), ("22", 2)], -F(1, 6) * Q * (Q - 1) * (Q**2 - 9 * Q + 17)),
            ([("31", 3), ("211", 3)], F(1, 4) * Q * (Q - 3) * (Q**2 - 7 * Q + 8)),
            ([("211", -6), ("22", 2)], -F(1, 6) * Q * (Q - 5) * (Q**2 - 5 * Q + 7)),
            [("1111", 0)],
            [("1111", 1)],
        ],
        5: [(None, Q - 1)],
    },
    ("klein", 6): {
        0: [[("", 1)]],
        1: [[("1", 1)], [("1", -1)]],
        2: [[("2", 1)], [("2", -1)], [("2", 3)], [("11", -1)], [("11", -2)]],
        3: [
            [("3", 1)], [("3", -1)], [("3", 3)], [("3", -3)],
            [("21", -2)], [("21", 6)], [("21", -4)], [("21", 0)],
            [("111", -2)], [("111", 2)],
        ],
        4: [
            [("4", 1)], [("4", -1)], [("4", 3)],
            [("31", -6)], [("31", 9)], [("31", -9)], [("31", 0)], [("31", -3)],
            [("22", 0)],
            [("22", 6)],
            ([("22", 6), ("211", -6)], -F(1, 2) * Q * (Q - 5)),
            [("211", 6)], [("211", 0)], [("211", -9)],
            [("1111", 2)], [("1111", 1)],
        ],
        5: [
            [("5", 1)],
            ([("5", -1), ("221", 15)], F(1, 60) * Q * (Q - 1) * (Q - 3) * (7 * Q**2 - 77 * Q + 216)),
            [("41", -4)],
            ([("41", 12), ("2111", -12)], -Q * (Q - 2) * (Q - 4)),
            [("41", -8)],
            ([("32", 15), ("311", -12)], F(1, 40) * Q * (Q - 1) * (Q - 7) * (Q**2 - 7 * Q + 2)),
            (
                [("32", -15), ("11111", 1)],
                -F(1, 60) * (Q - 1) * (Q - 2) * (Q - 5) * (7 * Q**2 - 49 * Q - 6),
            ),
            ([("311", 12), ("221", -15)], -F(1, 40) * Q * (Q - 1) * (Q - 3) * (Q**2 - 11 * Q + 38)),
            [("2111", 8)],
            [("2111", 4)],
            [("11111", -1)],
        ],
        6: [(None, -1 * Q**0)],
    },
}


# ---------------------------------------------------------------------------
# Torus -> Klein relation of c' values for levels d <= 4.
# Each row: (partition kind, levels the row applies to, torus c'(b),
# Klein c'(b) for odd b, Klein c'(b) for even b).  ``"[d]"`` rows apply to
# partition [d] at every level d >= the listed minimum; ``"[1^d]"`` rows to
# partition [1^d] at the listed levels; other kinds name a fixed partition.

_F = F


def _ge(k):
    return ("ge", k)


CPRIME_TRANSFORMS = [
    ("[d]", _ge(0), lambda b: _F(1), lambda b: _F(1), lambda b: _F(1)),
    ("[d]", _ge(1), lambda b: _F(b - 1), lambda b: _F(0), lambda b: _F(-1)),
    ("[d]", _ge(2), lambda b: _F(b * (b - 3), 2), lambda b: _F(b - 3, 2), lambda b: _F(b, 2)),
    ("[d]", _ge(3), lambda b: _F(b * (b - 1) * (b - 5), 6), lambda b: _F(0), lambda b: _F(-b, 2)),
    (
        "[d]",
        _ge(4),
        lambda b: _F(b * (b - 1) * (b - 2) * (b - 7), 24),
        lambda b: _F((b - 1) * (b - 7), 8),
        lambda b: _F(b * (b - 2), 8),
    ),
    ("[1^d]", (2,), lambda b: _F(b - 1), lambda b: _F(0), lambda b: _F(-1)),
    ("[1^d]", (2, 3), lambda b: _F((b - 1) * (b - 2), 2), lambda b: _F(-(b - 1), 2), lambda b: _F(-(b - 2), 2)),
    ("[1^d]", (3, 4), lambda b: _F((b - 1) * (b - 2) * (b - 3), 6), lambda b: _F(0), lambda b: _F(b - 2, 2)),
    (
        "[1^d]",
        (4, 5),
        lambda b: _F((b - 1) * (b - 2) * (b - 3) * (b - 4), 24),
        lambda b: _F((b - 1) * (b - 3), 8),
        lambda b: _F((b - 2) * (b - 4), 8),
    ),
    ("[21]", (3,), lambda b: _F(2 * (b - 1)), lambda b: _F(0), lambda b: _F(-2)),
    ("[21]", (3,), lambda b: _F(b * (b - 3)), lambda b: _F(b - 3), lambda b: _F(b)),
    ("[21]", (3,), lambda b: _F((b - 1) * (b - 2)), lambda b: _F(-(b - 1)), lambda b: _F(-(b - 2))),
    ("[21]", (3,), lambda b: _F(2 * b * (b - 2) * (b - 4), 3), lambda b: _F(2), lambda b: _F(0)),
    ("[31]", (4,), lambda b: _F(3 * (b - 1)), lambda b: _F(0), lambda b: _F(-3)),
    ("[31]", (4,), lambda b: _F(3 * b * (b - 3), 2), lambda b: _F(3 * (b - 3), 2), lambda b: _F(3 * b, 2)),
    ("[31]", (4,), lambda b: _F(3 * (b - 1) * (b - 2), 2), lambda b: _F(-3 * (b - 1), 2), lambda b: _F(-3 * (b - 2), 2)),
    ("[31]", (4,), lambda b: _F(b * (b - 1) * (b - 5), 2), lambda b: _F(0), lambda b: _F(-3 * b, 2)),
    ("[31]", (4,), lambda b: _F(b * (b - 2) * (b - 4)), lambda b: _F(3), lambda b: _F(0)),
    (
        "[31]",
        (4,),
        lambda b: _F(3 * b * (b - 1) * (b - 3) * (b - 6), 8),
        lambda b: _F(-3 * (b - 1) * (b - 3), 8),
        lambda b: _F(-3 * b * (b - 6), 8),
    ),
    ("[22]", (4,), lambda b: _F(b * (b - 3)), lambda b: _F(b - 3), lambda b: _F(b)),
    ("[22]", (4,), lambda b: _F(2 * b * (b - 2) * (b - 4), 3), lambda b: _F(2), lambda b: _F(0)),
    (
        "[22]",
        (4,),
        lambda b: _F(b * (b - 1) * (b - 4) * (b - 5), 6),
        lambda b: _F((b - 1) * (b - 5), 2),
        lambda b: _F(b * (b - 4), 2),
    ),
    ("[211]", (4,), lambda b: _F(3 * (b - 1) * (b - 2), 2), lambda b: _F(-3 * (b - 1), 2), lambda b: _F(-3 * (b - 2), 2)),
    ("[211]", (4,), lambda b: _F((b - 1) * (b - 2) * (b - 3), 2), lambda b: _F(0), lambda b: _F(3 * (b - 2), 2)),
    ("[211]", (4,), lambda b: _F(b * (b - 2) * (b - 4)), lambda b: _F(3), lambda b: _F(0)),
    (
        "[211]",
        (4,),
        lambda b: _F(3 * b * (b - 2) * (b - 3) * (b - 5), 8),
        lambda b: _F(-3 * (b - 3) * (b - 5), 8),
        lambda b: _F(-3 * b * (b - 2), 8),
    ),
]
