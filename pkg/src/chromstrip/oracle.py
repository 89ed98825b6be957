"""Independent coloring counts on the explicit strip graphs.

``count_colorings_dp`` is a transfer-operator trace over proper colorings of
one K_b slice; ``count_colorings_naive`` enumerates every assignment and is
only meant for tiny graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import perm

import numpy as np

NAIVE_LIMIT = 10**8


@dataclass(frozen=True)
class StripGraph:
    """``m`` copies of K_b joined in a ring.

    ``links[s]`` is the matching from slice ``s`` to slice ``s+1 (mod m)``:
    vertex ``i`` of slice ``s`` is joined to vertex ``links[s][i]`` of the next
    slice.  Vertex ``(s, i)`` has id ``s*b + i``.
    """

    b: int
    m: int
    boundary: str
    links: tuple
    edges: frozenset
    loops: tuple

    @property
    def n(self) -> int:
        return self.b * self.m

    @property
    def has_loops(self) -> bool:
        return bool(self.loops)


def build_graph(b: int, m: int, boundary: str = "torus") -> StripGraph:
    if b < 1 or m < 1:
        raise ValueError("b and m must be positive")
    if boundary not in ("torus", "klein"):
        raise ValueError(f"unknown boundary {boundary!r}")
    identity = tuple(range(b))
    reverse = tuple(reversed(identity))
    links = [identity] * m
    if boundary == "klein":
        links[-1] = reverse  # the wrap step carries the twist
    edges = set()
    loops = []
    for s in range(m):
        base = s * b
        edges.update((base + i, base + k) for i in range(b) for k in range(i + 1, b))
    for s, link in enumerate(links):
        t = (s + 1) % m
        for i in range(b):
            u, v = s * b + i, t * b + link[i]
            if u == v:
                loops.append(u)
            else:
                edges.add((min(u, v), max(u, v)))
    return StripGraph(b, m, boundary, tuple(links), frozenset(edges), tuple(sorted(set(loops))))


def slice_states(b: int, q: int) -> np.ndarray:
    """All ordered b-tuples of distinct colours from ``range(q)``, shape (S, b)."""
    if q < b:
        return np.zeros((0, b), dtype=np.int64)
    return np.array(list(itertools.permutations(range(q), b)), dtype=np.int64).reshape(-1, b)


class _SliceOperator:
    """Applies ``T(sigma, tau) = prod_i [sigma_i != tau_i]`` to a vector over states.

    Uses inclusion-exclusion over the set of positions forced equal, so each
    application costs ``2^b`` grouped sums over the state list instead of a
    dense S x S product.
    """

    def __init__(self, b: int, q: int):
        self.b, self.q = b, q
        self.states = slice_states(b, q)
        self.index = {tuple(s): k for k, s in enumerate(self.states.tolist())}
        S = len(self.states)
        self.groups = []
        for mask in range(1 << b):
            pos = [i for i in range(b) if mask >> i & 1]
            if pos:
                key = np.zeros(S, dtype=np.int64)
                for i in pos:
                    key = key * q + self.states[:, i]
                _, inv = np.unique(key, return_inverse=True)
                ngroups = int(inv.max()) + 1
            else:
                inv = np.zeros(S, dtype=np.int64)
                ngroups = 1
            sign = -1 if len(pos) % 2 else 1
            self.groups.append((sign, inv.ravel(), ngroups))
        # permutation of state indices induced by relabelling positions
        self._perm_cache = {}

    def apply(self, v: np.ndarray) -> np.ndarray:
        out = np.zeros_like(v)
        for sign, inv, ngroups in self.groups:
            acc = np.zeros(ngroups, dtype=v.dtype)
            np.add.at(acc, inv, v)
            if sign > 0:
                out += acc[inv]
            else:
                out -= acc[inv]
        return out

    def position_perm(self, link: tuple) -> np.ndarray:
        """Index array P with ``P[k]`` = index of the state ``tau'``, ``tau'_i = tau_k[link[i]]``."""
        if link not in self._perm_cache:
            permuted = self.states[:, list(link)]
            self._perm_cache[link] = np.array([self.index[tuple(r)] for r in permuted.tolist()], dtype=np.int64)
        return self._perm_cache[link]


def count_colorings_dp(g: StripGraph, q: int) -> int:
    """Number of proper ``q``-colourings of the strip graph, exactly.

    Computes ``Tr(prod_s T_{link_s})``.  Colour relabelling acts transitively on
    slice states and commutes with every factor, so the trace is the number of
    states times one diagonal element.
    """
    if q < 0:
        raise ValueError("q must be non-negative")
    if g.has_loops:
        return 0
    b, m = g.b, g.m
    if q < b:
        return 0
    op = _SliceOperator(b, q)
    S = len(op.states)
    # every intermediate magnitude is bounded by 2^b * S^m
    dtype = np.int64 if (2**b) * S**m < 2**62 else object
    v = np.zeros(S, dtype=dtype)
    v[0] = 1
    for link in g.links:
        # (v T_link)(tau) = (v T)(tau o link)
        v = op.apply(v)[op.position_perm(link)]
    return int(v[0]) * S


def count_colorings_naive(g: StripGraph, q: int) -> int:
    """Brute-force count over all ``q**n`` assignments."""
    if q < 0:
        raise ValueError("q must be non-negative")
    if q**g.n > NAIVE_LIMIT:
        raise ValueError(f"naive enumeration of {q}^{g.n} colourings exceeds the {NAIVE_LIMIT:.0e} guard")
    if g.has_loops:
        return 0
    edges = sorted(g.edges)
    count = 0
    for colors in itertools.product(range(q), repeat=g.n):
        if all(colors[u] != colors[v] for u, v in edges):
            count += 1
    return count


def slice_state_count(b: int, q: int) -> int:
    return perm(q, b) if q >= b else 0
