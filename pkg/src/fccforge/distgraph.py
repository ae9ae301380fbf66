"""Alpha-distance graphs of codes and their connected components.

The components of G_alpha(C) for every alpha are read off a single minimum
spanning tree of the complete distance graph (single-linkage merging): two
codewords are joined by a path of hops of length <= alpha exactly when the
tree path between them uses only edges of weight <= alpha.  The tree is
built with Prim's algorithm, one O(M) distance row per step, so no edge list
or distance matrix is ever stored.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from .codes import Code

MAX_DOT_VERTICES = 4096


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.count -= 1
        return True

    def labels(self) -> np.ndarray:
        """Component ids numbered 0, 1, ... in order of first appearance."""
        ids: dict[int, int] = {}
        return np.array([ids.setdefault(self.find(i), len(ids)) for i in range(len(self.parent))], dtype=np.int64)


_tree_cache: "weakref.WeakKeyDictionary[Code, np.ndarray]" = weakref.WeakKeyDictionary()


def spanning_tree(C: Code) -> np.ndarray:
    """Minimum spanning tree of the complete Hamming-distance graph on C.

    Returns an ``(M - 1, 3)`` array of ``(i, j, distance)`` rows sorted by distance.
    """
    cached = _tree_cache.get(C)
    if cached is not None:
        return cached
    M = C.M
    edges = np.zeros((max(M - 1, 0), 3), dtype=np.int64)
    if M > 1:
        in_tree = np.zeros(M, dtype=bool)
        best = np.full(M, np.iinfo(np.int64).max, dtype=np.int64)
        via = np.zeros(M, dtype=np.int64)
        current = 0
        in_tree[0] = True
        for step in range(M - 1):
            row = C.distance_row(current)
            closer = (row < best) & ~in_tree
            best[closer] = row[closer]
            via[closer] = current
            masked = np.where(in_tree, np.iinfo(np.int64).max, best)
            nxt = int(np.argmin(masked))
            edges[step] = (via[nxt], nxt, best[nxt])
            in_tree[nxt] = True
            current = nxt
        edges = edges[np.argsort(edges[:, 2], kind="stable")]
    edges.setflags(write=False)
    _tree_cache[C] = edges
    return edges


@dataclass(frozen=True)
class DistanceGraph:
    """G_alpha(C) summarised by its component partition."""

    code: Code
    alpha: int
    labels: np.ndarray

    @property
    def n_components(self) -> int:
        return int(self.labels.max()) + 1 if len(self.labels) else 0

    @property
    def is_connected(self) -> bool:
        return self.n_components == 1

    def components(self) -> list[list[int]]:
        """Codeword indices per component, ordered by smallest member."""
        return [np.nonzero(self.labels == c)[0].tolist() for c in range(self.n_components)]

    def edges(self) -> list[tuple[int, int]]:
        """Every pair ``i < j`` at distance <= alpha (materialised on demand)."""
        out = []
        for i in range(self.code.M - 1):
            row = self.code.distance_row(i)
            out.extend((i, int(j)) for j in np.nonzero(row[i + 1 :] <= self.alpha)[0] + i + 1)
        return out


def _components_at(C: Code, alpha: int) -> np.ndarray:
    uf = UnionFind(C.M)
    for i, j, d in spanning_tree(C):
        if d > alpha:
            break
        uf.union(int(i), int(j))
    return uf.labels()


def build_alpha_graph(C: Code, alpha: int) -> DistanceGraph:
    """Components of the graph joining codewords at distance <= ``alpha``.

    ``alpha`` must be at least the minimum distance of C.
    """
    if C.d_min is not None and alpha < C.d_min:
        raise ValueError(f"alpha={alpha} is below d_min={C.d_min}")
    return DistanceGraph(C, alpha, _components_at(C, alpha))


def minimum_distance_graph(C: Code) -> DistanceGraph:
    if C.M < 2:
        raise ValueError("the minimum-distance graph needs at least two codewords")
    return build_alpha_graph(C, C.d_min)


def component_count(C: Code, alpha: int) -> int:
    """Q(G_alpha(C)) for any ``alpha`` (no lower limit), straight from the tree."""
    tree = spanning_tree(C)
    return C.M - int(np.count_nonzero(tree[:, 2] <= alpha))


def connectivity_threshold(C: Code) -> int:
    """Least alpha >= d_min at which G_alpha(C) is connected."""
    if C.M < 2:
        raise ValueError("connectivity threshold needs at least two codewords")
    return max(int(spanning_tree(C)[:, 2].max()), C.d_min)


def component_profile(C: Code) -> list[tuple[int, int]]:
    """``(alpha, Q)`` for every alpha in ``[d_min, d_max]``."""
    if C.M < 2:
        raise ValueError("component profile needs at least two codewords")
    weights = spanning_tree(C)[:, 2]
    return [(a, C.M - int(np.count_nonzero(weights <= a))) for a in range(C.d_min, C.d_max + 1)]


def _symbols(word, q: int) -> str:
    return "".join(str(int(s)) for s in word) if q <= 10 else ",".join(str(int(s)) for s in word)


def export_dot(G: DistanceGraph) -> str:
    """Undirected DOT text with one cluster per component."""
    C = G.code
    if C.M > MAX_DOT_VERTICES:
        raise ValueError(f"DOT export is limited to {MAX_DOT_VERTICES} vertices")
    lines = [f"graph G_{G.alpha} {{", f'  label="alpha={G.alpha}, components={G.n_components}";']
    for c, members in enumerate(G.components()):
        lines.append(f"  subgraph cluster_{c} {{")
        lines.append(f'    label="component {c}";')
        for i in members:
            lines.append(f'    c{i} [label="{_symbols(C.words[i], C.q)}"];')
        lines.append("  }")
    for i, j in G.edges():
        lines.append(f"  c{i} -- c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
