"""Covering radius: ambient search, coset leaders, closed forms and bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import ceil

import numpy as np

from . import linalg
from .codes import Code, dual_distance, parity_check_matrix

MAX_AMBIENT = 2**24
MAX_SYNDROMES = 2**24

EXACT_AMBIENT = "exact_ambient"
COSET_LEADER = "coset_leader"
KNOWN_FORMULA = "known_formula"
UPPER_BOUND_ONLY = "upper_bound_only"


@dataclass(frozen=True)
class CoveringResult:
    value: int | None
    method: str
    certifier: tuple[int, ...] | None = None
    vacuous: bool = False

    @property
    def is_exact(self) -> bool:
        return self.method in (EXACT_AMBIENT, COSET_LEADER, KNOWN_FORMULA)

    def to_dict(self) -> dict:
        doc = {"value": self.value, "method": self.method, "vacuous": self.vacuous}
        if self.certifier is not None:
            doc["certifier"] = list(self.certifier)
        return doc


def _digits(index: int, q: int, n: int) -> tuple[int, ...]:
    return tuple((index // q ** (n - 1 - i)) % q for i in range(n))


def ambient_distances(C: Code) -> np.ndarray:
    """d(x, C) for every x in F_q^n, indexed in lexicographic order.

    Multi-source breadth-first search over the Hamming graph of F_q^n,
    starting from all codewords at once.
    """
    q, n = C.q, C.n
    size = q**n
    if size > MAX_AMBIENT:
        raise ValueError(f"ambient space q^n = {q}^{n} is too large for exhaustive search")
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    dist = np.full(size, -1, dtype=np.int16)
    frontier = C.words.astype(np.int64) @ powers
    dist[frontier] = 0
    level = 0
    while frontier.size:
        level += 1
        found = []
        for i, pw in enumerate(powers):
            digit = (frontier // pw) % q
            for delta in range(1, q):
                nb = frontier + (((digit + delta) % q) - digit) * pw
                nb = nb[dist[nb] < 0]
                dist[nb] = level
                found.append(nb)
        frontier = np.unique(np.concatenate(found)) if found else frontier[:0]
    return dist


def covering_radius_exact(C: Code) -> CoveringResult:
    """max over x in F_q^n of d(x, C), with a word attaining it."""
    dist = ambient_distances(C)
    x = int(np.argmax(dist))
    return CoveringResult(int(dist[x]), EXACT_AMBIENT, _digits(x, C.q, C.n))


def coset_leader_weights(C: Code) -> tuple[np.ndarray, np.ndarray]:
    """Minimum weight and a minimum-weight representative for every syndrome.

    Error patterns are enumerated by increasing weight; the first pattern to
    reach a syndrome is its coset leader.  Returns ``(weights, leaders)``
    indexed by the syndrome read as a base-q integer.
    """
    if not C.is_linear:
        raise ValueError("coset-leader search requires a linear code")
    F, n = C.field, C.n
    H = parity_check_matrix(C)
    r = H.shape[0]
    n_syn = F.q**r
    if n_syn > MAX_SYNDROMES:
        raise ValueError(f"syndrome space q^(n-k) = {F.q}^{r} is too large")
    powers = F.q ** np.arange(r - 1, -1, -1, dtype=np.int64)
    weights = np.full(n_syn, -1, dtype=np.int64)
    leaders = np.zeros((n_syn, n), dtype=np.uint8)
    weights[0] = 0
    remaining = n_syn - 1
    for w in range(1, n + 1):
        if remaining == 0:
            break
        for E in _error_patterns(n, w, F.q):
            syn = linalg.matmul(F, E, H.T).astype(np.int64) @ powers
            fresh_syn, first = np.unique(syn, return_index=True)
            mask = weights[fresh_syn] < 0
            fresh_syn, first = fresh_syn[mask], first[mask]
            weights[fresh_syn] = w
            leaders[fresh_syn] = E[first]
            remaining -= len(fresh_syn)
            if remaining == 0:
                break
    return weights, leaders


def _error_patterns(n: int, w: int, q: int, chunk: int = 1 << 16):
    """All weight-``w`` vectors of F_q^n, in chunks of rows."""
    values = np.array(list(itertools.product(range(1, q), repeat=w)), dtype=np.uint8)
    supports = itertools.combinations(range(n), w)
    per_chunk = max(1, chunk // len(values))
    while True:
        block = np.array(list(itertools.islice(supports, per_chunk)), dtype=np.int64)
        if len(block) == 0:
            return
        E = np.zeros((len(block), len(values), n), dtype=np.uint8)
        rows = np.arange(len(block))[:, None, None]
        cols = np.broadcast_to(block[:, None, :], (len(block), len(values), w))
        E[rows, np.arange(len(values))[None, :, None], cols] = values[None, :, :]
        yield E.reshape(-1, n)


def covering_radius_coset_leader(C: Code) -> CoveringResult:
    weights, leaders = coset_leader_weights(C)
    s = int(np.argmax(weights))
    return CoveringResult(int(weights[s]), COSET_LEADER, tuple(int(x) for x in leaders[s]))


def rm1_covering_radius(m: int) -> int:
    """Covering radius of RM(1, m): 2^(m-1) - 2^(ceil(m/2) - 1)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return 2 ** (m - 1) - 2 ** (ceil(m / 2) - 1)


def janwa_mattson_value(n: int, q: int, dual_dist: int) -> int:
    """n - sum_{i=0}^{dual_dist-2} ceil((n - i) / q), evaluated as written."""
    return n - sum(-(-(n - i) // q) for i in range(dual_dist - 1))


def janwa_mattson_bound(C: Code, exact: int | None = None) -> CoveringResult:
    """The dual-distance expression, quarantined.

    The value is reported but flagged ``vacuous`` when it is negative or when
    a known exact radius (passed in, or computed when cheap) exceeds it.  A
    vacuous result must never be used as a bound.
    """
    if not C.is_linear:
        raise ValueError("the dual-distance bound requires a linear code")
    dd = dual_distance(C)
    if dd is None:
        return CoveringResult(None, UPPER_BOUND_ONLY, vacuous=True)
    value = janwa_mattson_value(C.n, C.q, dd)
    if exact is None and C.q**C.n <= 2**16:
        exact = covering_radius_exact(C).value
    vacuous = value < 0 or (exact is not None and exact > value)
    return CoveringResult(value, UPPER_BOUND_ONLY, vacuous=vacuous)


def known_covering_radius(C: Code) -> int | None:
    """Covering radius implied by the family tag, if any."""
    kind, param = C.family.kind, C.family.param
    if kind == "perfect":
        return param
    if kind == "quasi_perfect":
        return param + 1
    if kind == "reed_muller1":
        return rm1_covering_radius(param)
    return None


def covering_radius(C: Code) -> CoveringResult | None:
    """Best available exact value: family formula, then coset leaders, then ambient search."""
    known = known_covering_radius(C)
    if known is not None:
        return CoveringResult(known, KNOWN_FORMULA)
    if C.is_linear and C.q ** (C.n - C.k) <= MAX_SYNDROMES:
        return covering_radius_coset_leader(C)
    if C.q**C.n <= MAX_AMBIENT:
        return covering_radius_exact(C)
    return None
