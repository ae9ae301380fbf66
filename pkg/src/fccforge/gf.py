"""Finite fields GF(p^m) with q <= 256 and Hamming-metric primitives.

Field elements are integers in ``range(q)``.  For extension fields the
integer ``a`` encodes the polynomial whose coefficient of ``x^i`` is the
``i``-th base-``p`` digit of ``a``.  All arithmetic goes through lookup
tables built once per field, so vectorised numpy indexing works on whole
arrays of symbols.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

MAX_ORDER = 256


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``b`` over GF(p), low-to-high coefficients."""
    a = list(a)
    db = len(b) - 1
    for shift in range(len(a) - 1 - db, -1, -1):
        c = a[shift + db] % p
        if c:
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bc) % p
    rem = [x % p for x in a[:db]]
    return rem + [0] * (db - len(rem))


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = [int(c) % p for c in poly]
    m = len(poly) - 1
    if m < 1 or poly[-1] == 0:
        return False
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            divisor = list(low) + [1]
            if not any(_poly_mod(poly, divisor, p)):
                return False
    return True


def default_poly(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``m``, ordered by its value at x=p."""
    for value in range(p**m, 2 * p**m):
        low = [(value // p**i) % p for i in range(m)]
        poly = tuple(low) + (1,)
        if is_irreducible(poly, p):
            return poly
    raise ValueError(f"no irreducible polynomial of degree {m} over GF({p})")


class GF:
    """The finite field with ``p**m`` elements.

    >>> F = GF(5)
    >>> int(F.mul(2, 3)), int(F.inv(2))
    (1, 3)
    >>> F4 = GF(2, 2)
    >>> int(F4.mul(2, 2))  # x * x = x + 1
    3
    """

    def __init__(self, p: int, m: int = 1, poly=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**m
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds {MAX_ORDER}")
        self.p, self.m, self.q = p, m, q
        if m == 1:
            if poly is not None:
                raise ValueError("prime fields take no reduction polynomial")
            self.poly = None
        else:
            poly = default_poly(p, m) if poly is None else tuple(int(c) for c in poly)
            if len(poly) != m + 1 or poly[-1] != 1:
                raise ValueError(f"reduction polynomial must be monic of degree {m}")
            if not is_irreducible(poly, p):
                raise ValueError(f"polynomial {poly} is reducible over GF({p})")
            self.poly = poly
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        digits = np.array([[(a // p**i) % p for i in range(m)] for a in range(q)], dtype=np.int64)
        weights = p ** np.arange(m, dtype=np.int64)
        self.add_table = (((digits[:, None, :] + digits[None, :, :]) % p) @ weights).astype(np.uint8)
        self.neg_table = (((-digits) % p) @ weights).astype(np.uint8)
        if m == 1:
            a = np.arange(q)
            self.mul_table = ((a[:, None] * a[None, :]) % p).astype(np.uint8)
        else:
            mul = np.zeros((q, q), dtype=np.uint8)
            for a in range(q):
                for b in range(a, q):
                    prod = np.convolve(digits[a], digits[b]) % p
                    rem = _poly_mod(list(prod), list(self.poly), p)
                    mul[a, b] = mul[b, a] = int(np.dot(rem, weights))
            self.mul_table = self._via_exp_log(mul)
        self.inv_table = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            self.inv_table[a] = int(np.nonzero(self.mul_table[a] == 1)[0][0])

    def _via_exp_log(self, mul):
        # Rebuild multiplication from exp/log tables of a primitive element.
        q = self.q
        for g in range(2, q):
            exp = [1]
            for _ in range(q - 2):
                exp.append(int(mul[exp[-1], g]))
            if len(set(exp)) == q - 1:
                break
        else:  # pragma: no cover - every finite field has a primitive element
            raise RuntimeError("no primitive element found")
        self.exp = np.array(exp + exp, dtype=np.int64)
        self.log = np.zeros(q, dtype=np.int64)
        self.log[self.exp[: q - 1]] = np.arange(q - 1)
        a = np.arange(1, q)
        table = np.zeros((q, q), dtype=np.uint8)
        table[1:, 1:] = self.exp[self.log[a][:, None] + self.log[a][None, :]]
        return table

    # scalar and elementwise operations (numpy arrays accepted)
    def add(self, a, b):
        return self.add_table[a, b]

    def sub(self, a, b):
        return self.add_table[a, self.neg_table[b]]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul_table[a, self.inv(b)]

    @property
    def is_prime(self) -> bool:
        return self.m == 1

    def elements(self) -> range:
        return range(self.q)

    def to_dict(self) -> dict:
        doc = {"p": self.p, "m": self.m}
        if self.poly is not None:
            doc["poly"] = list(self.poly)
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "GF":
        return field(doc["p"], doc.get("m", 1), doc.get("poly"))

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.m, self.poly) == (other.p, other.m, other.poly)

    def __hash__(self):
        return hash((self.p, self.m, self.poly))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.p}^{self.m}, poly={list(self.poly)})"


@lru_cache(maxsize=None)
def _field(p: int, m: int, poly) -> GF:
    return GF(p, m, poly)


def field(p: int, m: int = 1, poly=None) -> GF:
    """Cached field constructor; ``field(2)`` is GF(2), ``field(2, 3)`` is GF(8)."""
    return _field(p, m, None if poly is None else tuple(poly))


def field_of_order(q: int) -> GF:
    if q < 2:
        raise ValueError(f"no field of order {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise ValueError(f"no field of order {q}")
    return field(p, m)


# -- Hamming metric -----------------------------------------------------------

def _as_words(*words):
    arrs = [np.asarray(w, dtype=np.int64) for w in words]
    shape = arrs[0].shape[-1:]
    for a in arrs[1:]:
        if a.shape[-1:] != shape:
            raise ValueError(f"length mismatch: {arrs[0].shape[-1]} vs {a.shape[-1]}")
    return arrs


def hamming_distance(u, v) -> int:
    """Number of coordinates in which ``u`` and ``v`` differ."""
    u, v = _as_words(u, v)
    if u.ndim != 1 or v.ndim != 1:
        raise ValueError("hamming_distance expects two single words")
    return int(np.count_nonzero(u != v))


def hamming_weight(u) -> int:
    return int(np.count_nonzero(np.asarray(u)))


def distances_to(words, x) -> np.ndarray:
    """Distances from ``x`` to every row of ``words``."""
    words, x = _as_words(words, x)
    return np.count_nonzero(words != x, axis=-1)


def distance_to_code(x, code) -> int:
    """d(x, C): distance from ``x`` to the nearest codeword."""
    words = code.words if hasattr(code, "words") else np.asarray(code)
    if len(words) == 0:
        raise ValueError("distance to an empty code is undefined")
    return int(distances_to(words, x).min())


def set_distance(A, B) -> int:
    """d(A, B): minimum distance over all cross pairs."""
    A, B = np.atleast_2d(np.asarray(A)), np.atleast_2d(np.asarray(B))
    if A.size == 0 or B.size == 0:
        raise ValueError("set distance needs two nonempty sets")
    A, B = _as_words(A, B)
    return int(min(distances_to(B, a).min() for a in A))


def pack_bits(words) -> np.ndarray:
    """Pack binary words (rows) into uint64 limbs so distance is a popcount."""
    words = np.asarray(words, dtype=np.uint8)
    n = words.shape[1]
    limbs = max(1, -(-n // 64))
    padded = np.zeros((words.shape[0], limbs * 64), dtype=np.uint8)
    padded[:, :n] = words
    packed = np.packbits(padded, axis=1, bitorder="little")
    return packed.view(np.uint64).reshape(words.shape[0], limbs)


def popcount_distances(packed: np.ndarray, row: np.ndarray) -> np.ndarray:
    return np.bitwise_count(packed ^ row).sum(axis=1, dtype=np.int64)
