"""Walking the minimum-distance graph of an MDS code.

Any ``k`` coordinates of an MDS code determine a unique codeword.  Starting
from ``u`` and aiming at ``v``, fix the coordinates where they agree, copy
one more coordinate from ``v``, and complete to a codeword: the result is a
neighbour of ``u`` at distance exactly ``d`` that is strictly closer to
``v``.  Iterating gives a path in the minimum-distance graph.

Index sets (``J`` and friends) are 1-based.  Where a choice is free the
smallest indices are taken, so paths are deterministic.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import Code, is_mds, log_q


@dataclass(frozen=True)
class PathStep:
    from_word: tuple[int, ...]
    to_word: tuple[int, ...]
    hop_distance: int
    agreement: tuple[int, ...]   # S^c
    difference: tuple[int, ...]  # S
    chosen: tuple[int, ...]      # J
    pivot: int                   # j


def _require_mds(C: Code) -> int:
    if not is_mds(C):
        raise ValueError(f"{C.name or 'code'} is not MDS")
    return log_q(C.M, C.q)


_bases: "weakref.WeakKeyDictionary[Code, dict]" = weakref.WeakKeyDictionary()


def _lagrange_basis(C: Code, J: tuple[int, ...]) -> np.ndarray:
    """Rows L_i evaluated at every point, where L_i is 1 at the i-th point of J and 0 at the rest."""
    per_code = _bases.setdefault(C, {})
    if J not in per_code:
        F = C.field
        xs = [C.eval_points[j - 1] for j in J]
        B = np.zeros((len(J), C.n), dtype=np.uint8)
        for i, xi in enumerate(xs):
            for pos, a in enumerate(C.eval_points):
                num, den = 1, 1
                for m, xm in enumerate(xs):
                    if m != i:
                        num = F.mul(num, F.sub(a, xm))
                        den = F.mul(den, F.sub(xi, xm))
                B[i, pos] = F.div(num, den)
        per_code[J] = B
    return per_code[J]


def _lagrange(C: Code, J, t) -> np.ndarray:
    B = _lagrange_basis(C, tuple(J))
    return linalg.matmul(C.field, np.asarray([t], dtype=np.uint8), B)[0]


_projection_index: "weakref.WeakKeyDictionary[Code, dict]" = weakref.WeakKeyDictionary()


def _by_table(C: Code, J, t) -> np.ndarray:
    per_code = _projection_index.setdefault(C, {})
    key = tuple(J)
    if key not in per_code:
        cols = [j - 1 for j in J]
        per_code[key] = {row[cols].tobytes(): i for i, row in enumerate(C.words)}
    i = per_code[key][np.asarray(t, dtype=np.uint8).tobytes()]
    return C.words[i].copy()


def projection_decode(C: Code, J, t) -> np.ndarray:
    """The unique codeword equal to ``t`` on the positions ``J``.

    Reed-Solomon codes interpolate through the constrained evaluation
    points; other MDS codes use a lookup keyed on the J-projection.
    """
    k = _require_mds(C)
    J = [int(j) for j in J]
    if len(J) != k or len(set(J)) != k:
        raise ValueError(f"J must hold k = {k} distinct positions")
    if not all(1 <= j <= C.n for j in J):
        raise ValueError(f"positions must lie in 1..{C.n}")
    t = [int(x) for x in t]
    if len(t) != k:
        raise ValueError("t must assign one symbol per position of J")
    if C.eval_points is not None:
        return _lagrange(C, J, t)
    return _by_table(C, J, t)


def _choose(k: int, u: np.ndarray, v: np.ndarray):
    """0-based (S, S^c, J, pivot) with the smallest free indices taken."""
    diff = u != v
    S, Sc = np.flatnonzero(diff), np.flatnonzero(~diff)
    J = np.sort(np.concatenate([Sc, S[: k - len(Sc)]]))
    return S, Sc, J, int(S[0])  # S[0] is in J because |S^c| < k


def _next_word(C: Code, k: int, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    if np.count_nonzero(u != v) == C.d_min:
        return v  # v agrees with the target on J, and the completion is unique
    S, Sc, J, pivot = _choose(k, u, v)
    t = u[J].copy()
    t[J == pivot] = v[pivot]
    if C.eval_points is not None:
        B = _lagrange_basis(C, tuple(int(j) + 1 for j in J))
        if C.field.is_prime:
            return ((t.astype(np.int64) @ B.astype(np.int64)) % C.q).astype(np.uint8)
        return linalg.matmul(C.field, t[None, :], B)[0]
    return _by_table(C, (J + 1).tolist(), t)


def _step(C: Code, k: int, u: np.ndarray, v: np.ndarray) -> PathStep:
    S, Sc, J, pivot = _choose(k, u, v)
    nxt = _next_word(C, k, u, v)
    return PathStep(
        tuple(int(x) for x in u), tuple(int(x) for x in nxt), int(np.count_nonzero(u != nxt)),
        tuple(int(i) + 1 for i in Sc), tuple(int(i) + 1 for i in S), tuple(int(j) + 1 for j in J), pivot + 1,
    )


def _as_codeword(C: Code, w) -> np.ndarray:
    w = np.asarray(w, dtype=np.uint8)
    if w.shape != (C.n,) or w not in C:
        raise ValueError(f"{w.tolist()} is not a codeword")
    return w


def neighbor_step_detail(C: Code, u, v) -> PathStep:
    k = _require_mds(C)
    u, v = _as_codeword(C, u), _as_codeword(C, v)
    if np.array_equal(u, v):
        raise ValueError("u and v must differ")
    return _step(C, k, u, v)


def neighbor_step(C: Code, u, v) -> np.ndarray:
    """A codeword at distance d from ``u`` and strictly closer to ``v`` (``v`` itself if d(u, v) = d)."""
    return np.array(neighbor_step_detail(C, u, v).to_word, dtype=np.uint8)


def mds_path_steps(C: Code, u, v) -> list[PathStep]:
    k = _require_mds(C)
    x, v = _as_codeword(C, u), _as_codeword(C, v)
    steps = []
    while not np.array_equal(x, v):
        step = _step(C, k, x, v)
        steps.append(step)
        x = np.array(step.to_word, dtype=np.uint8)
    return steps


def mds_path(C: Code, u, v) -> list[np.ndarray]:
    """Path ``u = x_0, ..., x_L = v`` whose hops all have length d_min."""
    k = _require_mds(C)
    x, v = _as_codeword(C, u), _as_codeword(C, v)
    path = [x]
    while not np.array_equal(x, v):
        x = _next_word(C, k, x, v)
        path.append(x)
    return path


def path_to_dict(C: Code, path) -> dict:
    hops = [int(np.count_nonzero(a != b)) for a, b in zip(path, path[1:])]
    return {"path": [[int(s) for s in w] for w in path], "hops": hops, "dMin": C.d_min}
