import json
from fractions import Fraction
from importlib import resources

import pytest

from chromstrip.catalog import (
    CatalogError,
    FamilySpec,
    FBasisVector,
    catalog_from_dict,
    catalog_to_dict,
    dump_catalog,
    entry,
    general_lambda_alternating,
    general_lambda_principal,
    get_catalog,
    klein_catalog,
    lambda21_family,
    toroidal_catalog,
)
from chromstrip.partitions import PartitionX
from chromstrip.polycore import Q, RationalPoly

EXPLICIT = json.loads(resources.files("chromstrip").joinpath("data/explicit_eigenvalues.json").read_text())


def test_explicit_fixture_covers_every_entry():
    keys = {(r["b"], r["d"], r["j"]) for r in EXPLICIT}
    assert len(keys) == 73
    assert keys == {(b, e.d, e.j) for b in (5, 6) for e in toroidal_catalog(b)}


@pytest.mark.parametrize("row", EXPLICIT, ids=lambda r: f"b{r['b']}-{r['d']}-{r['j']}")
def test_fbasis_expansion_matches_printed_polynomial(row):
    assert entry(row["b"], row["d"], row["j"]).lam == RationalPoly(row["coeffs"])


def test_level_counts():
    assert FamilySpec(5).per_d_counts == (1, 2, 5, 9, 9, 1)
    assert FamilySpec(6).per_d_counts == (1, 2, 5, 10, 16, 11, 1)
    assert len(toroidal_catalog(5)) == 27 and len(toroidal_catalog(6)) == 46


def test_klein_contributing():
    k5, k6 = FamilySpec(5, "klein"), FamilySpec(6, "klein")
    assert k5.total_lambda_count == 17 and k6.total_lambda_count == 42
    off5 = {e.key for e in klein_catalog(5) if not e.contributing}
    assert off5 == {(1, 2), (2, 2), (2, 4), (3, 2), (3, 4), (3, 9), (4, 2), (4, 3), (4, 4), (4, 8)}
    off6 = {e.key for e in klein_catalog(6) if not e.contributing}
    assert off6 == {(3, 8), (4, 7), (4, 9), (4, 13)}


def test_klein_shares_eigenvalues():
    for b in (5, 6):
        assert [e.eigenvalue for e in toroidal_catalog(b)] == [e.eigenvalue for e in klein_catalog(b)]


def test_chromatic_number_field():
    assert FamilySpec(5).chromatic_number == 5


def test_unsupported_width():
    with pytest.raises(CatalogError, match=r"\(5, 6\)"):
        get_catalog(7)
    with pytest.raises(CatalogError):
        FamilySpec(5, "mobius")


# c' columns per level, as tabulated: {(b, boundary, d): [(partition, c'), ...] by j}
CPRIME = {
    (5, "torus", 2): [("2", 1), ("2", 4), ("2", 5), ("11", 4), ("11", 6)],
    (5, "torus", 3): [("3", 1), ("3", 4), ("3", 5), ("21", 8), ("21", 10), ("21", 12), ("21", 10), ("111", 6), ("111", 4)],
    (6, "torus", 2): [("2", 1), ("2", 5), ("2", 9), ("11", 5), ("11", 10)],
    (6, "torus", 3): [
        ("3", 1), ("3", 5), ("3", 9), ("3", 5), ("21", 10), ("21", 18), ("21", 20), ("21", 32), ("111", 10), ("111", 10),
    ],
    (5, "klein", 2): [("2", 1), ("2", 0), ("2", 1), ("11", 0), ("11", -2)],
    (5, "klein", 3): [("3", 1), ("3", 0), ("3", 1), ("21", 0), ("21", 2), ("21", -4), ("21", 2), ("111", -2), ("111", 0)],
    (6, "klein", 2): [("2", 1), ("2", -1), ("2", 3), ("11", -1), ("11", -2)],
    (6, "klein", 3): [
        ("3", 1), ("3", -1), ("3", 3), ("3", -3), ("21", -2), ("21", 6), ("21", -4), ("21", 0), ("111", -2), ("111", 2),
    ],
}


@pytest.mark.parametrize("key", sorted(CPRIME), ids=str)
def test_tabulated_cprime_columns(key):
    b, boundary, d = key
    level = [e for e in get_catalog(b, boundary) if e.d == d]
    assert [(e.j) for e in level] == list(range(1, len(CPRIME[key]) + 1))
    for e, (part, c) in zip(level, CPRIME[key]):
        assert e.cprime(part) == c, (e.key, part)


# multi-partition rows: the tabulated product polynomial
PRODUCTS = [
    (5, "torus", 4, 5, Q * (Q - 1) * (7 * Q**2 - 63 * Q + 131) / 6),
    (5, "torus", 4, 6, Q * (Q - 3) * (Q**2 - 7 * Q + 8) * Fraction(5, 4)),
    (5, "torus", 4, 7, Q * (Q - 5) * (7 * Q**2 - 35 * Q + 37) / 6),
    (6, "torus", 4, 11, Q * (Q - 5) * (2 * Q - 3) * (2 * Q - 7) / 2),
    (6, "torus", 5, 4, Q * (Q - 4) * (7 * Q**3 - 77 * Q**2 + 217 * Q - 162) / 5),
    (6, "torus", 5, 9, Q * (Q - 3) * (Q - 6) * (Q**2 - 6 * Q + 6)),
    (5, "klein", 4, 5, -Q * (Q - 1) * (Q**2 - 9 * Q + 17) / 6),
    (6, "klein", 4, 11, -Q * (Q - 5) / 2),
    (6, "klein", 5, 4, -Q * (Q - 2) * (Q - 4)),
    (6, "klein", 5, 7, -(Q - 1) * (Q - 2) * (Q - 5) * (7 * Q**2 - 49 * Q - 6) / 60),
    (5, "torus", 5, 1, Q**5 - 15 * Q**4 + 75 * Q**3 - 145 * Q**2 + 89 * Q - 1),
    (6, "torus", 6, 1, Q**6 - 21 * Q**5 + 160 * Q**4 - 545 * Q**3 + 814 * Q**2 - 415 * Q + 1),
    (5, "klein", 5, 1, Q - 1),
    (6, "klein", 6, 1, RationalPoly.const(-1)),
]


@pytest.mark.parametrize("b, boundary, d, j, poly", PRODUCTS, ids=lambda v: str(v) if isinstance(v, (int, str)) else "")
def test_tabulated_products(b, boundary, d, j, poly):
    assert entry(b, d, j, boundary).coeff_poly == poly


def test_multi_partition_rows_are_consistent():
    # where partitions are listed, sum c' * c_X must reproduce the stored product
    for b in (5, 6):
        for boundary in ("torus", "klein"):
            for e in get_catalog(b, boundary):
                if e.partitions and e.d < b:
                    assert e.partition_sum() == e.coeff_poly, (b, boundary, e.key)


def test_fbasis_vector_validation_and_str():
    v = FBasisVector.of(5, 2, {2: 1, 3: -6, 4: 6})
    assert str(v) == "f2 - 6f3 + 6f4"
    assert v.as_dict() == {2: 1, 3: -6, 4: 6}
    with pytest.raises(ValueError):
        FBasisVector.of(5, 2, {1: 1})


def test_alternating_family_is_first_of_each_level():
    for b in (5, 6):
        for d in range(b + 1):
            assert entry(b, d, 1).eigenvalue == general_lambda_alternating(b, d)


def test_principal_family_weights():
    v = general_lambda_principal(5, 1)
    assert v.as_dict() == {1: 1, 2: 4}


def test_lambda21_family_b5():
    fam = lambda21_family(5)
    assert [c for _, c in fam] == [8, 10, 12, 10]
    assert fam[0][0].as_dict() == {3: -1, 4: 4, 5: -2}


def test_lambda21_needs_b3():
    with pytest.raises(ValueError):
        lambda21_family(2)


@pytest.mark.parametrize("b", [5, 6])
@pytest.mark.parametrize("boundary", ["torus", "klein"])
def test_json_round_trip(b, boundary):
    doc = json.loads(dump_catalog(b, boundary))
    assert catalog_from_dict(doc) == get_catalog(b, boundary)
    assert doc == catalog_to_dict(b, boundary)


def test_json_rejects_inconsistent_lambda():
    doc = catalog_to_dict(5, "torus")
    doc["entries"][3]["lambda_coeffs"] = ["1"]
    with pytest.raises(CatalogError):
        catalog_from_dict(doc)


def test_partition_lookup():
    e = entry(6, 4, 11)
    assert e.cprime(PartitionX.parse("[22]")) == 18 and e.cprime("211") == 30 and e.cprime("31") == 0
