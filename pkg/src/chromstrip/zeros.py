"""Chromatic zeros of finite strips by Aberth-Ehrlich iteration.

The integer roots ``0 .. b-1`` are divided out of the exact expansion first.
The iteration itself evaluates ``P`` and ``P'`` through the eigenvalue form
``sum c(q) lambda(q)^m``: the power-basis expansion has coefficients with
dozens of digits and loses most of a 256-bit mantissa to cancellation near
the locus.  Residuals are then computed exactly from the integer
coefficients at the (dyadic rational) root approximations.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .assembler import ChromaticResult, _family, assemble
from .polycore import DEFAULT_PREC, mp_context

DEFAULT_SEED = 20010913


@dataclass
class Root:
    value: object  # mpc
    residual: float
    multiplicity: int = 1
    converged: bool = True

    @property
    def z(self) -> complex:
        return complex(self.value)


@dataclass
class ZeroSet:
    b: int
    boundary: str
    m: int
    prec: int
    roots: list = field(default_factory=list)
    iterations: int = 0
    bits: int = 0

    @property
    def count(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    @property
    def converged(self) -> bool:
        return all(r.converged for r in self.roots)

    @property
    def max_residual(self) -> float:
        return max((r.residual for r in self.roots), default=0.0)

    def as_array(self, with_multiplicity: bool = False) -> np.ndarray:
        if with_multiplicity:
            return np.array([r.z for r in self.roots for _ in range(r.multiplicity)], dtype=complex)
        return np.array([r.z for r in self.roots], dtype=complex)

    def nonreal(self, tol: float = 1e-12) -> np.ndarray:
        z = self.as_array()
        return z[np.abs(z.imag) > tol]


class _EigenForm:
    """``P`` and ``P'`` at a point from the catalog, in a fixed mp context."""

    def __init__(self, result: ChromaticResult, prec: int):
        self.ctx = ctx = mp_context(prec)
        self.m = result.m

        def mpcoeffs(p):
            return [ctx.mpf(c.numerator) / c.denominator for c in reversed(p.coeffs)]

        self.terms = []
        for e in result.family.catalog:
            if e.contributing:
                c, lam = e.coeff_poly, e.lam
                self.terms.append(
                    (mpcoeffs(c), mpcoeffs(c.derivative()), mpcoeffs(lam), mpcoeffs(lam.derivative()))
                )

    @staticmethod
    def _horner(cs, z):
        acc = 0
        for c in cs:
            acc = acc * z + c
        return acc

    def __call__(self, z):
        m, h = self.m, self._horner
        p = dp = 0
        for c, dc, lam, dlam in self.terms:
            lv = h(lam, z)
            cv = h(c, z)
            lpow = lv ** (m - 1)
            p += cv * lpow * lv
            dp += h(dc, z) * lpow * lv + cv * m * lpow * h(dlam, z)
        return p, dp


def _deflate_integer_roots(coeffs: list, b: int) -> tuple:
    """Divide out ``(q - k)`` for k = 0..b-1 as often as it divides exactly."""
    mult = {}
    c = list(coeffs)  # ascending ints
    for k in range(b):
        count = 0
        while len(c) > 1:
            # synthetic division, descending
            acc = 0
            quot = []
            for a in reversed(c):
                acc = acc * k + a
                quot.append(acc)
            if quot[-1] != 0:
                break
            c = list(reversed(quot[:-1]))
            count += 1
        mult[k] = count
    return c, mult


def _signed_man_exp(x) -> tuple:
    # mpf.man_exp carries an unsigned mantissa
    man, exp = x.man_exp
    return (-int(man) if x < 0 else int(man)), int(exp)


def _exact_residual(coeffs: list, z, prec: int) -> float:
    """``|P(z)| / |P'(z)| / max(1, |z|)`` with P evaluated exactly at the dyadic ``z``."""
    ctx = mp_context(prec)
    # z = (a + i*c) / 2^e with integers a, c
    (mr, er), (mi, ei) = _signed_man_exp(ctx.mpf(z.real)), _signed_man_exp(ctx.mpf(z.imag))
    e = max(0, -er if mr else 0, -ei if mi else 0)
    a = int(mr) << (er + e) if mr else 0
    c = int(mi) << (ei + e) if mi else 0
    n = len(coeffs) - 1

    def scaled_horner(cs):
        # returns 2^{e*deg} * poly(z) as a Gaussian integer
        deg = len(cs) - 1
        xr = xi = 0
        for k in range(deg, -1, -1):
            xr, xi = xr * a - xi * c + (cs[k] << (e * (deg - k))), xr * c + xi * a
        return xr, xi, deg

    pr, pi, pd = scaled_horner(coeffs)
    dr, di, dd = scaled_horner([k * coeffs[k] for k in range(1, n + 1)])
    lo = mp_context(64)
    pmag = lo.hypot(lo.mpf(pr), lo.mpf(pi)) * lo.mpf(2) ** (-e * pd)
    dmag = lo.hypot(lo.mpf(dr), lo.mpf(di)) * lo.mpf(2) ** (-e * dd)
    if dmag == 0:
        return math.inf if pmag else 0.0
    return float(pmag / dmag) / max(1.0, abs(complex(z)))


def find_zeros(
    family,
    m: int,
    prec: int = DEFAULT_PREC,
    max_iters: int = 500,
    boundary: Optional[str] = None,
    seed: int = DEFAULT_SEED,
    cluster_tol: float = 1e-10,
    max_bits: int = 2048,
    polish_steps: int = 4,
) -> ZeroSet:
    """All ``m*b`` zeros of the strip's chromatic polynomial.

    Aberth sweeps run at ``prec`` bits.  Roots whose exact residual then
    exceeds ``2^(-prec/2)`` are polished at doubled precision, up to
    ``max_bits``; cancellation among the eigenvalue terms can exceed the
    working mantissa near the origin.  Roots still above the target are
    returned with ``converged=False``.
    """
    if prec < 128:
        raise ValueError("zero finding needs at least 128 bits")
    res = assemble(_family(family, boundary), m)
    fam = res.family
    b = fam.b
    if res.poly.is_zero():
        raise ValueError(f"P is identically zero for b={b} {fam.boundary} m={m} (self-loops); no zero set")
    ints = res.coefficients()
    reduced, mult = _deflate_integer_roots(ints, b)
    n = len(reduced) - 1
    ctx = mp_context(prec)
    zs = ZeroSet(b, fam.boundary, m, prec, bits=prec)
    for k in range(b):
        if mult[k]:
            zs.roots.append(Root(ctx.mpc(k), 0.0, mult[k], True))
    if n <= 0:
        return zs

    rng = random.Random(seed)
    z = _initial_guesses(reduced, rng, ctx)
    int_roots = [(k, mult[k]) for k in range(b) if mult[k]]
    done, zs.iterations = _aberth(z, _EigenForm(res, prec), int_roots, max_iters)

    # polish anything the working precision could not resolve
    target = 2.0 ** (-prec // 2)
    resid = [_exact_residual(ints, zi, prec) for zi in z]
    bits = prec
    while max(resid) > target and bits < max_bits:
        bits = min(2 * bits, max_bits)
        form = _EigenForm(res, bits)
        wctx = form.ctx
        for i in [k for k in range(n) if resid[k] > target]:
            zi = wctx.mpc(z[i])
            for _ in range(polish_steps):
                zi = zi - _aberth_delta(form, int_roots, zi, z, i)
            z[i] = zi
            resid[i] = _exact_residual(ints, zi, bits)
    zs.bits = bits

    eps = 2.0 ** (40 - prec)
    order = sorted(range(n), key=lambda k: (float(z[k].real), float(z[k].imag)))
    clusters = []
    for k in order:
        for cl in clusters:
            if abs(z[cl[0]] - z[k]) < cluster_tol:
                cl.append(k)
                break
        else:
            clusters.append([k])
    for cl in clusters:
        value = sum((z[k] for k in cl), ctx.mpc(0)) / len(cl)
        if abs(value.imag) < eps:
            value = ctx.mpc(value.real, 0)
        # residual of the stored (prec-bit) value, not of the polished one
        r = _exact_residual(ints, value, prec)
        zs.roots.append(Root(value, r, len(cl), all(done[k] for k in cl) and r <= target))
    zs.roots.sort(key=lambda r: (float(r.value.real), float(r.value.imag)))
    return zs


def _initial_guesses(reduced: list, rng: random.Random, ctx) -> list:
    """Perturbed circle about the root centroid, radius ``|N(c)/lead|^(1/n)``."""
    n = len(reduced) - 1
    lead = ctx.mpf(reduced[-1])
    centre = -ctx.mpf(reduced[-2]) / (n * lead)
    nc = ctx.mpf(0)
    for a in reversed(reduced):
        nc = nc * centre + a
    radius = max(abs(nc / lead) ** (ctx.mpf(1) / n), ctx.mpf(1) / 2)
    phase = rng.random() * 2 * math.pi / n + 0.4
    return [
        centre + radius * (1 + ctx.mpf(rng.random()) / 100) * ctx.expj(2 * ctx.pi * k / n + phase)
        for k in range(n)
    ]


def _aberth_delta(form: _EigenForm, int_roots: list, zi, z: list, i: int):
    """Aberth correction for ``z[i]`` against the deflated polynomial."""
    p, dp = form(zi)
    if p == 0:
        return form.ctx.mpc(0)
    ld = dp / p
    for k, mk in int_roots:
        ld -= mk / (zi - k)
    s = 0
    for j, zj in enumerate(z):
        if j != i:
            s += 1 / (zi - zj)
    return 1 / (ld - s)


def _aberth(z: list, form: _EigenForm, int_roots: list, max_iters: int) -> tuple:
    """Gauss-Seidel Aberth sweeps in place; returns ``(done flags, sweeps)``."""
    ctx = form.ctx
    eps = ctx.mpf(2) ** (40 - ctx.prec)
    n = len(z)
    done = [False] * n
    it = 0
    while it < max_iters and not all(done):
        it += 1
        for i in range(n):
            if not done[i]:
                delta = _aberth_delta(form, int_roots, z[i], z, i)
                z[i] -= delta
                done[i] = abs(delta) <= eps * max(1, abs(z[i]))
    return done, it


def zero_support_check(zs: ZeroSet, epsilon: float = 1e-6) -> tuple:
    """``(ok, offending)``: ok iff every root has real part >= -epsilon."""
    bad = [r for r in zs.roots if float(r.value.real) < -epsilon]
    return (not bad, bad)


def conjugate_unmatched(zs: ZeroSet, tol: float = 1e-12) -> list:
    """Roots whose complex conjugate is not also a root (within ``tol``)."""
    z = zs.as_array(with_multiplicity=True)
    unmatched = []
    used = np.zeros(z.size, dtype=bool)
    for i in range(z.size):
        if used[i]:
            continue
        d = np.abs(z - np.conj(z[i]))
        d[used] = np.inf
        if abs(z[i].imag) <= tol:
            used[i] = True
            continue
        d[i] = np.inf
        j = int(np.argmin(d))
        if d[j] <= tol * max(1.0, abs(z[i])):
            used[i] = used[j] = True
        else:
            unmatched.append(z[i])
            used[i] = True
    return unmatched
