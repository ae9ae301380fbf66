"""Row reduction, rank, null spaces and products over a :class:`~fccforge.gf.GF`."""

from __future__ import annotations

import numpy as np

from .gf import GF


def rref(F: GF, A):
    """Reduced row echelon form of ``A``; returns ``(R, pivot_columns)``."""
    R = np.array(A, dtype=np.uint8, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = F.mul(F.inv(R[r, c]), R[r])
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = F.sub(R[i], F.mul(R[i, c], R[r]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: GF, A) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def null_space(F: GF, A, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{x : A x^T = 0}``."""
    A = np.asarray(A, dtype=np.uint8)
    if A.size == 0:
        n = A.shape[1] if n is None else n
        return np.eye(n, dtype=np.uint8)
    R, pivots = rref(F, A)
    n = A.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for b, fc in enumerate(free):
        basis[b, fc] = 1
        for row, pc in enumerate(pivots):
            basis[b, pc] = F.neg(R[row, fc])
    return basis


def matmul(F: GF, X, G) -> np.ndarray:
    """``X @ G`` over the field; ``X`` is (N, k), ``G`` is (k, n)."""
    X = np.asarray(X, dtype=np.uint8)
    G = np.asarray(G, dtype=np.uint8)
    if F.is_prime:
        return ((X.astype(np.int64) @ G.astype(np.int64)) % F.p).astype(np.uint8)
    out = np.zeros((X.shape[0], G.shape[1]), dtype=np.uint8)
    for i in range(G.shape[0]):
        out = F.add(out, F.mul(X[:, i][:, None], G[i][None, :]))
    return out


def all_vectors(q: int, k: int) -> np.ndarray:
    """Every vector of F_q^k in lexicographic order (first coordinate most significant)."""
    idx = np.arange(q**k, dtype=np.int64)
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] // powers[None, :]) % q).astype(np.uint8)


def vector_index(q: int, v) -> int:
    """Position of ``v`` in :func:`all_vectors` order."""
    idx = 0
    for s in v:
        idx = idx * q + int(s)
    return idx
