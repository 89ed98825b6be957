"""Eigenvalue/coefficient catalogs for toroidal and Klein-bottle K_b chains.

A catalog is a tuple of :class:`SpectrumEntry`, one per ``(d, j)``, ordered by
level ``d`` and then ``j``.  Only ``b = 5, 6`` have full catalogs; other widths
are reachable through the general eigenvalue families at the bottom of this
module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

from . import _tables
from .partitions import PartitionX, coeff_c
from .polycore import RationalPoly, f_poly, falling_factorial

SUPPORTED_B = (5, 6)
BOUNDARIES = ("torus", "klein")


class CatalogError(ValueError):
    pass


def _check_supported(b: int, boundary: str = "torus") -> None:
    if boundary not in BOUNDARIES:
        raise CatalogError(f"unknown boundary {boundary!r}; expected one of {BOUNDARIES}")
    if b not in SUPPORTED_B:
        raise CatalogError(f"no catalog for b={b}; supported widths are {SUPPORTED_B}")


@dataclass(frozen=True)
class FBasisVector:
    """An eigenvalue written as ``sum_i weights[i] * f_i(b, q)``."""

    b: int
    d: int
    weights: tuple  # sorted ((i, w), ...) with w != 0

    def __post_init__(self):
        w = self.weights.items() if isinstance(self.weights, dict) else self.weights
        clean = tuple(sorted((int(i), int(c)) for i, c in w if c != 0))
        if any(i < self.d or i > self.b for i, _ in clean):
            raise ValueError(f"basis indices must lie in [{self.d}, {self.b}]: {clean}")
        object.__setattr__(self, "weights", clean)

    @classmethod
    def of(cls, b: int, d: int, weights: dict) -> "FBasisVector":
        return cls(b, d, tuple(weights.items()))

    def as_dict(self) -> dict:
        return dict(self.weights)

    def poly(self) -> RationalPoly:
        return _expand(self.b, self.weights)

    def __str__(self):
        parts = []
        for i, w in self.weights:
            sign = "-" if w < 0 else "+"
            mag = "" if abs(w) == 1 else str(abs(w))
            parts.append(f"{sign} {mag}f{i}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


@lru_cache(maxsize=None)
def _expand(b: int, weights: tuple) -> RationalPoly:
    out = RationalPoly()
    for i, w in weights:
        out = out + f_poly(b, i) * w
    return out


@dataclass(frozen=True)
class SpectrumEntry:
    d: int
    j: int
    eigenvalue: FBasisVector
    partitions: tuple  # ((PartitionX, c'), ...); empty at the top level
    coeff_poly: RationalPoly

    @property
    def contributing(self) -> bool:
        return not self.coeff_poly.is_zero()

    @property
    def key(self) -> tuple:
        return (self.d, self.j)

    @property
    def lam(self) -> RationalPoly:
        return self.eigenvalue.poly()

    def cprime(self, partition) -> int:
        """c' attached to ``partition`` in this entry (0 when absent)."""
        X = PartitionX.parse(partition)
        return sum(c for p, c in self.partitions if p == X)

    def partition_sum(self) -> RationalPoly:
        """``sum c' * c_{X,d}`` over the listed partitions."""
        out = RationalPoly()
        for X, c in self.partitions:
            out = out + coeff_c(X) * c
        return out


@dataclass(frozen=True)
class FamilySpec:
    b: int
    boundary: str = "torus"
    chromatic_number: int = field(init=False)
    per_d_counts: tuple = field(init=False)
    contributing_counts: tuple = field(init=False)
    total_lambda_count: int = field(init=False)

    def __post_init__(self):
        _check_supported(self.b, self.boundary)
        entries = get_catalog(self.b, self.boundary)
        per_d = [0] * (self.b + 1)
        contrib = [0] * (self.b + 1)
        for e in entries:
            per_d[e.d] += 1
            contrib[e.d] += e.contributing
        object.__setattr__(self, "chromatic_number", self.b)
        object.__setattr__(self, "per_d_counts", tuple(per_d))
        object.__setattr__(self, "contributing_counts", tuple(contrib))
        object.__setattr__(self, "total_lambda_count", sum(contrib))

    @property
    def catalog(self) -> tuple:
        return get_catalog(self.b, self.boundary)


def _build(b: int, boundary: str) -> tuple:
    lam_table = _tables.EIGENVALUES[b]
    coef_table = _tables.COEFFICIENTS[(boundary, b)]
    entries = []
    for d in range(b + 1):
        lams, rows = lam_table[d], coef_table[d]
        if len(lams) != len(rows):
            raise CatalogError(f"b={b} {boundary} level {d}: {len(lams)} eigenvalues, {len(rows)} coefficient rows")
        for j, (weights, row) in enumerate(zip(lams, rows), start=1):
            if isinstance(row, tuple):
                pairs, combined = row
            else:
                pairs, combined = row, None
            parts = tuple((PartitionX.parse(p), c) for p, c in (pairs or ()))
            entry = SpectrumEntry(d, j, FBasisVector.of(b, d, weights), parts, RationalPoly())
            coeff = combined if combined is not None else entry.partition_sum()
            entries.append(SpectrumEntry(d, j, entry.eigenvalue, parts, coeff))
    return tuple(entries)


@lru_cache(maxsize=None)
def get_catalog(b: int, boundary: str = "torus") -> tuple:
    _check_supported(b, boundary)
    return _build(b, boundary)


def toroidal_catalog(b: int) -> tuple:
    """All ``(d, j)`` entries for the toroidal chain ``B_m(b)``."""
    return get_catalog(b, "torus")


def klein_catalog(b: int) -> tuple:
    """All ``(d, j)`` entries for the Klein-bottle chain.

    Eigenvalues coincide with the toroidal catalog; entries whose coefficient
    vanishes are kept with ``contributing == False``.
    """
    return get_catalog(b, "klein")


def entry(b: int, d: int, j: int, boundary: str = "torus") -> SpectrumEntry:
    for e in get_catalog(b, boundary):
        if e.d == d and e.j == j:
            return e
    raise KeyError(f"no entry (d={d}, j={j}) for b={b} {boundary}")


# ---------------------------------------------------------------------------
# general-b eigenvalue families


def _check_level(b: int, d: int) -> None:
    if b < 1:
        raise ValueError("b must be >= 1")
    if not 0 <= d <= b:
        raise ValueError(f"level d={d} outside [0, b={b}]")


def general_lambda_alternating(b: int, d: int) -> FBasisVector:
    """Level-d eigenvalue ``(-1)^d sum_j (-1)^j C(d,j) (b-d)^{(j)} f_{d+j}``.

    This is the largest-magnitude level-d eigenvalue on the non-positive real
    axis, and the ``j = 1`` entry of each level of the b = 5, 6 catalogs.
    """
    _check_level(b, d)
    w = {}
    for j in range(d + 1):
        if d + j <= b:
            w[d + j] = (-1) ** (d + j) * comb(d, j) * falling_factorial(b - d, j)
    return FBasisVector.of(b, d, w)


def general_lambda_principal(b: int, d: int) -> FBasisVector:
    """All-positive analogue ``sum_j C(d,j) (b-d)^{(j)} f_{d+j}``; an upper bound for q >= b."""
    _check_level(b, d)
    w = {}
    for j in range(d + 1):
        if d + j <= b:
            w[d + j] = comb(d, j) * falling_factorial(b - d, j)
    return FBasisVector.of(b, d, w)


def lambda21_family(b: int) -> list:
    """The four level-3 eigenvalues of partition [21] with their toroidal c'.

    Returns ``[(FBasisVector, c'), ...]`` in the order of the general formulas.
    """
    if b < 3:
        raise ValueError("the [21] family needs b >= 3")
    forms = [
        {3: -1, 4: 2 * (b - 3), 5: -(b - 3) * (b - 4)},
        {3: -1, 4: b - 4, 5: b - 4},
        {3: -1, 4: b - 6, 5: 3 * (b - 4)},
        {3: -1, 4: -3, 5: -3},
    ]
    cprimes = [
        Fraction(2 * (b - 1)),
        Fraction(b * (b - 3)),
        Fraction((b - 1) * (b - 2)),
        Fraction(2 * b * (b - 2) * (b - 4), 3),
    ]
    return [
        (FBasisVector.of(b, 3, {i: w for i, w in f.items() if i <= b}), c)
        for f, c in zip(forms, cprimes)
    ]


# ---------------------------------------------------------------------------
# JSON interchange


def catalog_to_dict(b: int, boundary: str) -> dict:
    entries = []
    for e in get_catalog(b, boundary):
        entries.append(
            {
                "d": e.d,
                "j": e.j,
                "partitions": [list(X.parts) for X, _ in e.partitions],
                "cprime": [c for _, c in e.partitions],
                "lambda_fbasis": {str(i): w for i, w in e.eigenvalue.weights},
                "lambda_coeffs": e.lam.to_strings(),
                "coeff_poly_coeffs": e.coeff_poly.to_strings(),
                "contributing": e.contributing,
            }
        )
    return {"b": b, "boundary": boundary, "entries": entries}


def catalog_from_dict(doc: dict) -> tuple:
    """Rebuild catalog entries from :func:`catalog_to_dict` output.

    The f-basis weights are authoritative; ``lambda_coeffs`` is cross-checked.
    """
    b = int(doc["b"])
    out = []
    for row in doc["entries"]:
        vec = FBasisVector.of(b, int(row["d"]), {int(i): int(w) for i, w in row["lambda_fbasis"].items()})
        if vec.poly() != RationalPoly.from_strings(row["lambda_coeffs"]):
            raise CatalogError(f"entry ({row['d']},{row['j']}): lambda_coeffs disagree with lambda_fbasis")
        parts = tuple(
            (PartitionX(tuple(p)), int(c)) for p, c in zip(row["partitions"], row["cprime"])
        )
        coeff = RationalPoly.from_strings(row["coeff_poly_coeffs"])
        e = SpectrumEntry(int(row["d"]), int(row["j"]), vec, parts, coeff)
        if e.contributing != bool(row["contributing"]):
            raise CatalogError(f"entry ({e.d},{e.j}): contributing flag inconsistent")
        out.append(e)
    return tuple(out)


def dump_catalog(b: int, boundary: str, indent: Optional[int] = 2) -> str:
    return json.dumps(catalog_to_dict(b, boundary), indent=indent)
