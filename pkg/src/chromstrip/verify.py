"""Report builders behind ``chromstrip verify``.

Each function returns a :class:`~chromstrip.spectra.Report`; nothing here
writes files.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .assembler import assemble, coefficient_sum, complete_graph_poly, eval_at
from .catalog import FamilySpec, catalog_from_dict, catalog_to_dict, entry, get_catalog
from .oracle import build_graph, count_colorings_dp
from .polycore import RationalPoly
from .spectra import (
    Report,
    negative_axis_samples,
    verify_crossing_conjecture,
    verify_klein_level_sums,
    verify_klein_transform_conjectures,
    verify_lambda21,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
)

EXPECTED_COUNTS = {5: (1, 2, 5, 9, 9, 1), 6: (1, 2, 5, 10, 16, 11, 1)}
EXPECTED_KLEIN_CONTRIBUTING = {5: 17, 6: 42}


@lru_cache(maxsize=None)
def explicit_eigenvalues() -> tuple:
    """Expanded eigenvalue polynomials as printed in the source, ``((b, d, j, coeffs), ...)``."""
    raw = resources.files("chromstrip").joinpath("data/explicit_eigenvalues.json").read_text()
    return tuple((r["b"], r["d"], r["j"], tuple(r["coeffs"])) for r in json.loads(raw))


def identities_report(b: int) -> Report:
    rep = Report(f"catalog identities (b={b})")
    torus = FamilySpec(b, "torus")
    klein = FamilySpec(b, "klein")
    rep.add("per-level eigenvalue counts", torus.per_d_counts == EXPECTED_COUNTS[b], str(torus.per_d_counts))
    rep.add("total eigenvalue count", len(torus.catalog) == sum(EXPECTED_COUNTS[b]), str(len(torus.catalog)))
    rep.add(
        "Klein contributing count",
        klein.total_lambda_count == EXPECTED_KLEIN_CONTRIBUTING[b],
        str(klein.total_lambda_count),
    )
    rep.add(
        "Klein eigenvalues equal torus eigenvalues",
        all(t.eigenvalue == k.eigenvalue for t, k in zip(torus.catalog, klein.catalog)),
    )
    s = coefficient_sum(torus)
    rep.add(f"torus coefficient sum equals P(K_{b})", s == complete_graph_poly(b), str(s))
    s = coefficient_sum(klein)
    rep.add("Klein coefficient sum vanishes", s.is_zero(), str(s))
    bad = []
    rows = [r for r in explicit_eigenvalues() if r[0] == b]
    for _, d, j, coeffs in rows:
        if entry(b, d, j).lam != RationalPoly(coeffs):
            bad.append((d, j))
    rep.add(f"f-basis expansions match {len(rows)} explicit polynomials", not bad and len(rows) == len(torus.catalog), str(bad))
    for boundary in ("torus", "klein"):
        back = catalog_from_dict(json.loads(json.dumps(catalog_to_dict(b, boundary))))
        rep.add(f"{boundary} catalog JSON round-trip", back == get_catalog(b, boundary))
    return rep


def _oracle_case(args):
    b, boundary, m, q = args
    dp = count_colorings_dp(build_graph(b, m, boundary), q)
    val = eval_at(b, m, q, boundary)
    return b, boundary, m, q, dp, val


def oracle_report(
    bs=(5, 6), boundaries=("torus", "klein"), ms=(2, 3), qs=None, threads: int = 1
) -> Report:
    """Assembled values against transfer-operator coloring counts at integer q."""
    rep = Report("assembler vs coloring-count oracle")
    cases = [
        (b, bd, m, q)
        for b in bs
        for bd in boundaries
        for m in ms
        for q in (qs if qs is not None else range(b + 3))
    ]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_oracle_case, cases))
    else:
        results = [_oracle_case(c) for c in cases]
    for b, bd, m, q, dp, val in results:
        rep.add(f"b={b} {bd} m={m} q={q}", val == Fraction(dp), f"oracle {dp}, assembled {val}")
    return rep


def theorems_report(b_max: int = 10) -> Report:
    rep = Report("theorem checks")
    for b in (5, 6):
        rep.extend(verify_theorem1(b))
        rep.extend(verify_theorem2(b, negative_axis_samples()))
    rep.extend(verify_theorem3(range(4, b_max + 1)))
    return rep


def conjectures_report(bs=(5, 6)) -> Report:
    rep = Report("conjecture checks")
    for b in bs:
        rep.extend(verify_crossing_conjecture(b))
        rep.extend(verify_lambda21(b))
        rep.extend(verify_klein_transform_conjectures(b))
        rep.extend(verify_klein_level_sums(b))
    return rep


def assembly_integrality(b: int, boundary: str, ms=range(1, 6)) -> Report:
    rep = Report(f"integral expansions (b={b}, {boundary})")
    for m in ms:
        res = assemble(b, m, boundary)
        rep.add(f"m={m}", res.poly.is_integral(), f"degree {res.degree}")
    return rep
