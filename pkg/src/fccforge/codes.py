"""Explicit and linear codes, classical families, and their classification.

Codes are immutable: the codeword array is read-only and the pairwise
distance extrema are computed once on first use.  Linear codes (those built
from a generator matrix) list their codewords in message order, i.e. row
``i`` is the encoding of the ``i``-th vector of F_q^k in lexicographic order.

Coordinate positions taken by the public functions here are 1-based, as in
the usual coding-theory notation.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

from . import linalg
from .gf import GF, field, pack_bits, popcount_distances

MAX_CODEWORDS = 2**20
MAX_LENGTH = 24

GF2 = field(2)

FAMILY_KINDS = ("perfect", "quasi_perfect", "mds", "reed_muller1", "generic")


@dataclass(frozen=True)
class Family:
    """Structural tag; ``param`` is ``t`` for (quasi-)perfect codes and ``m`` for RM(1, m)."""

    kind: str = "generic"
    param: int | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}")

    def __str__(self):
        return self.kind if self.param is None else f"{self.kind}({self.param})"


GENERIC = Family()


def worker_count() -> int:
    """Worker cap from ``FCCFORGE_THREADS`` (default: CPU count)."""
    env = os.environ.get("FCCFORGE_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


class Code:
    """A code of length ``n`` over ``field`` given by its ``M`` codewords."""

    def __init__(self, field: GF, words, generator=None, name=None, family=GENERIC, eval_points=None):
        words = np.array(words, dtype=np.uint8)
        if words.ndim != 2:
            raise ValueError("codewords must form a 2-d array")
        words.setflags(write=False)
        self.field = field
        self.words = words
        if generator is not None:
            generator = np.array(generator, dtype=np.uint8).reshape(-1, words.shape[1])
            generator.setflags(write=False)
        self.generator = generator
        self.name = name
        self.family = family
        self.eval_points = None if eval_points is None else tuple(int(a) for a in eval_points)

    @property
    def n(self) -> int:
        return self.words.shape[1]

    @property
    def M(self) -> int:
        return self.words.shape[0]

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def is_linear(self) -> bool:
        return self.generator is not None

    @property
    def k(self) -> int | None:
        """Dimension for linear codes, ``None`` otherwise."""
        return self.generator.shape[0] if self.is_linear else None

    def __len__(self):
        return self.M

    def __iter__(self):
        return iter(self.words)

    def __repr__(self):
        label = self.name or "Code"
        if self.is_linear:
            return f"<{label} [{self.n},{self.k},{self.d_min}] over {self.field!r}>"
        return f"<{label} ({self.n},{self.M},{self.d_min}) over {self.field!r}>"

    @cached_property
    def packed(self) -> np.ndarray | None:
        """Bit-packed codewords for binary codes, else ``None``."""
        return pack_bits(self.words) if self.q == 2 else None

    @cached_property
    def _index(self) -> dict:
        return {w.tobytes(): i for i, w in enumerate(self.words)}

    def index_of(self, word) -> int | None:
        return self._index.get(np.asarray(word, dtype=np.uint8).tobytes())

    def __contains__(self, word):
        return self.index_of(word) is not None

    def distance_row(self, i: int) -> np.ndarray:
        """Distances from codeword ``i`` to every codeword."""
        if self.packed is not None:
            return popcount_distances(self.packed, self.packed[i])
        return np.count_nonzero(self.words != self.words[i], axis=1)

    def distance_block(self, start: int, stop: int) -> np.ndarray:
        """Distances from codewords ``start:stop`` to every codeword, shape (stop-start, M)."""
        if self.packed is not None:
            x = self.packed[start:stop, None, :] ^ self.packed[None, :, :]
            return np.bitwise_count(x).sum(axis=2, dtype=np.int64)
        return np.count_nonzero(self.words[start:stop, None, :] != self.words[None, :, :], axis=2)

    def _block_rows(self) -> int:
        per_row = self.M * (self.packed.shape[1] * 8 if self.packed is not None else self.n)
        return max(1, min(self.M, (32 << 20) // max(per_row, 1)))

    @cached_property
    def _extrema(self) -> tuple[int | None, int | None]:
        if self.M < 2:
            return None, None
        if self.is_linear:
            w = np.count_nonzero(self.words, axis=1)
            return int(w[w > 0].min()), int(w.max())
        step = self._block_rows()

        def scan(start):
            D = self.distance_block(start, min(start + step, self.M))
            upper = np.arange(self.M)[None, :] > np.arange(start, start + D.shape[0])[:, None]
            vals = D[upper]
            return (int(vals.min()), int(vals.max())) if vals.size else (None, None)

        starts = range(0, self.M - 1, step)
        with ThreadPoolExecutor(max_workers=worker_count()) as pool:
            parts = [p for p in pool.map(scan, starts) if p[0] is not None]
        return min(p[0] for p in parts), max(p[1] for p in parts)

    @property
    def d_min(self) -> int | None:
        """Minimum distance, or ``None`` when the code has a single codeword."""
        return self._extrema[0]

    @property
    def d_max(self) -> int | None:
        return self._extrema[1]


def _check_symbols(F: GF, arr: np.ndarray):
    if arr.size and (arr.min() < 0 or arr.max() >= F.q):
        raise ValueError(f"symbols must lie in [0, {F.q})")


def from_generator(F: GF, G, name=None, family=None, eval_points=None) -> Code:
    """Linear code spanned by the rows of ``G`` (rows must be independent)."""
    G = np.array(G, dtype=np.int64)
    if G.ndim != 2:
        raise ValueError("generator must be a matrix")
    k, n = G.shape
    if n > MAX_LENGTH:
        raise ValueError(f"length {n} exceeds {MAX_LENGTH}")
    _check_symbols(F, G)
    G = G.astype(np.uint8)
    if linalg.rank(F, G) != k:
        raise ValueError("generator matrix is rank deficient")
    if F.q**k > MAX_CODEWORDS:
        raise ValueError(f"q^k = {F.q}^{k} exceeds the enumeration cap {MAX_CODEWORDS}")
    words = linalg.matmul(F, linalg.all_vectors(F.q, k), G)
    C = Code(F, words, generator=G, name=name, eval_points=eval_points)
    C.family = _validated_family(C, family) if family is not None else classify(C)
    return C


def from_list(F: GF, words, name=None) -> Code:
    """Explicit (possibly nonlinear) code from a list of words."""
    rows = [list(w) for w in words]
    if not rows:
        raise ValueError("a code needs at least one codeword")
    if len({len(r) for r in rows}) != 1:
        raise ValueError("codewords have ragged lengths")
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), len(rows[0]))
    _check_symbols(F, arr)
    if len(np.unique(arr, axis=0)) != len(arr):
        raise ValueError("duplicate codewords")
    if len(arr) > MAX_CODEWORDS:
        raise ValueError(f"{len(arr)} codewords exceed the enumeration cap")
    C = Code(F, arr.astype(np.uint8), name=name)
    C.family = classify(C)
    return C


def parse_word(s: str) -> list[int]:
    """``"01101"`` -> ``[0, 1, 1, 0, 1]``; comma-separated symbols are also accepted."""
    s = s.strip()
    if "," in s:
        return [int(x) for x in s.split(",")]
    return [int(ch) for ch in s]


def minimum_distance(C: Code) -> int:
    if C.M < 2:
        raise ValueError("minimum distance needs at least two codewords")
    return C.d_min


def maximum_distance(C: Code) -> int:
    if C.M < 2:
        raise ValueError("maximum distance needs at least two codewords")
    return C.d_max


# -- structural predicates -----------------------------------------------------

def log_q(M: int, q: int) -> int | None:
    k, r = 0, 1
    while r < M:
        r *= q
        k += 1
    return k if r == M else None


def is_mds(C: Code) -> bool:
    """True iff M = q^(n - d + 1)."""
    if C.d_min is None:
        return False
    return C.M == C.q ** (C.n - C.d_min + 1)


def hamming_ball_size(n: int, radius: int, q: int) -> int:
    return sum(comb(n, i) * (q - 1) ** i for i in range(radius + 1))


def is_perfect(C: Code) -> bool:
    d = C.d_min
    if d is None or d % 2 == 0:
        return False
    return C.M * hamming_ball_size(C.n, (d - 1) // 2, C.q) == C.q**C.n


def classify(C: Code) -> Family:
    if is_perfect(C):
        return Family("perfect", (C.d_min - 1) // 2)
    if is_mds(C):
        return Family("mds")
    return GENERIC


def _validated_family(C: Code, family: Family) -> Family:
    if family.kind == "perfect" and not (is_perfect(C) and C.d_min == 2 * family.param + 1):
        raise ValueError(f"{C.name or 'code'} is not perfect({family.param})")
    if family.kind == "mds" and not is_mds(C):
        raise ValueError(f"{C.name or 'code'} is not MDS")
    return family


def _require_linear(C: Code, what: str):
    if not C.is_linear:
        raise ValueError(f"{what} requires a linear code")


def min_weight_codewords(C: Code) -> np.ndarray:
    """W_d: the codewords of weight d_min."""
    _require_linear(C, "min_weight_codewords")
    if C.d_min is None:
        return C.words[:0]
    return C.words[np.count_nonzero(C.words, axis=1) == C.d_min]


def min_weight_span_test(C: Code) -> bool:
    """True iff the minimum-weight codewords span C."""
    _require_linear(C, "min_weight_span_test")
    W = min_weight_codewords(C)
    return linalg.rank(C.field, W) == C.k


# -- families -------------------------------------------------------------------

def _hamming_parity_rows(m: int) -> np.ndarray:
    # Nonzero m-bit columns of weight >= 2, by weight then descending
    # lexicographic order; for m = 3 this gives p1 = u1+u2+u4, p2 = u1+u3+u4,
    # p3 = u2+u3+u4.
    cols = [v for v in linalg.all_vectors(2, m).tolist() if sum(v) >= 2]
    cols.sort(key=lambda v: (sum(v), [-x for x in v]))
    return np.array(cols, dtype=np.uint8)


def hamming_code(m: int) -> Code:
    """Binary Hamming code [2^m - 1, 2^m - 1 - m, 3] in systematic form."""
    if m < 2:
        raise ValueError("Hamming codes need m >= 2")
    A = _hamming_parity_rows(m)
    k = A.shape[0]
    G = np.hstack([np.eye(k, dtype=np.uint8), A])
    return from_generator(GF2, G, name=f"hamming({m})", family=Family("perfect", 1))


def extended_hamming_code(m: int) -> Code:
    C = extend_parity(hamming_code(m))
    C.name = f"extended_hamming({m})"
    return C


GOLAY_POLY = (1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1)  # 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11


def binary_golay() -> Code:
    """The cyclic binary Golay code [23, 12, 7]."""
    n, k = 23, 12
    G = np.zeros((k, n), dtype=np.uint8)
    for i in range(k):
        G[i, i : i + len(GOLAY_POLY)] = GOLAY_POLY
    return from_generator(GF2, G, name="golay", family=Family("perfect", 3))


def extended_golay() -> Code:
    C = extend_parity(binary_golay())
    C.name = "extended_golay"
    return C


def reed_muller1(m: int) -> Code:
    """First-order Reed-Muller code RM(1, m) = [2^m, m + 1, 2^(m-1)]."""
    if m < 1:
        raise ValueError("RM(1, m) needs m >= 1")
    points = linalg.all_vectors(2, m)
    G = np.vstack([np.ones((1, 2**m), dtype=np.uint8), points.T])
    return from_generator(GF2, G, name=f"rm1({m})", family=Family("reed_muller1", m))


def repetition(n: int, F: GF = GF2) -> Code:
    if n < 1:
        raise ValueError("length must be positive")
    return from_generator(F, np.ones((1, n), dtype=np.uint8), name=f"repetition({n})")


def even_weight(n: int) -> Code:
    """Binary single parity-check code [n, n - 1, 2]."""
    if n < 2:
        raise ValueError("even-weight codes need n >= 2")
    G = np.zeros((n - 1, n), dtype=np.uint8)
    G[:, :-1] = np.eye(n - 1, dtype=np.uint8)
    G[:, -1] = 1
    return from_generator(GF2, G, name=f"even_weight({n})")


def reed_solomon(F: GF, n: int, k: int, eval_points=None) -> Code:
    """Evaluations of all polynomials of degree < k at ``n`` distinct points.

    Message ``(m_0, ..., m_{k-1})`` is the polynomial ``sum m_i x^i``.
    """
    if not 1 <= k <= n <= F.q:
        raise ValueError(f"need 1 <= k <= n <= q, got k={k}, n={n}, q={F.q}")
    points = list(range(n)) if eval_points is None else [int(a) for a in eval_points]
    if len(points) != n or len(set(points)) != n or not all(0 <= a < F.q for a in points):
        raise ValueError("evaluation points must be n distinct field elements")
    G = np.zeros((k, n), dtype=np.uint8)
    for j, a in enumerate(points):
        power = 1
        for i in range(k):
            G[i, j] = power
            power = int(F.mul(power, a))
    return from_generator(F, G, name=f"rs({F.q},{n},{k})", family=Family("mds"), eval_points=points)


# -- derived codes -----------------------------------------------------------------

def extend_parity(C: Code) -> Code:
    """Append an overall check symbol so every codeword sums to zero."""
    if not C.field.is_prime:
        raise ValueError("parity extension is defined here for prime fields only")
    p = C.field.p

    def ext(A):
        A = np.asarray(A, dtype=np.int64)
        return np.hstack([A, (-A.sum(axis=1, keepdims=True)) % p]).astype(np.uint8)

    family = Family("quasi_perfect", C.family.param) if C.family.kind == "perfect" else None
    name = f"extended({C.name})" if C.name else None
    if C.is_linear:
        return from_generator(C.field, ext(C.generator), name=name, family=family)
    out = from_list(C.field, ext(C.words), name=name)
    if family is not None:
        out.family = family
    return out


def puncture_at(C: Code, position: int) -> Code:
    """Delete coordinate ``position`` (1-based)."""
    if not 1 <= position <= C.n:
        raise ValueError(f"position {position} outside 1..{C.n}")
    keep = [j for j in range(C.n) if j != position - 1]
    words = C.words[:, keep]
    if len(np.unique(words, axis=0)) != C.M:
        raise ValueError("puncturing merges codewords")
    name = f"punctured({C.name})" if C.name else None
    if C.is_linear:
        return from_generator(C.field, C.generator[:, keep], name=name)
    return from_list(C.field, words, name=name)


def dual_code(C: Code) -> Code:
    _require_linear(C, "dual_code")
    H = linalg.null_space(C.field, C.generator, C.n)
    return from_generator(C.field, H, name=f"dual({C.name})" if C.name else None)


def dual_distance(C: Code) -> int | None:
    """Minimum distance of the dual code (``None`` when the dual is {0})."""
    return dual_code(C).d_min


def parity_check_matrix(C: Code) -> np.ndarray:
    _require_linear(C, "parity_check_matrix")
    return linalg.null_space(C.field, C.generator, C.n)
