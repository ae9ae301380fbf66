"""Function-correcting codes with data protection.

An encoding maps every message of F_q^k to a distinct codeword.  Its data
distance is the minimum distance over all message pairs; its function
distance is the minimum over pairs whose function values differ.  When the
function is constant there are no such pairs and the function distance is
``None`` (unconstrained), which satisfies every claim.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import comb

import numpy as np

from . import linalg
from .codes import Code, from_list, is_mds, min_weight_span_test
from .covering import covering_radius
from .distgraph import build_alpha_graph, component_count, component_profile, connectivity_threshold
from .gf import GF

THEOREMS = {
    "connected_graph": "connected-graph theorem: a connected G_alpha(C) admits no (f:d,d_f)-FCC with |Im(f)| >= 2 and d_f > alpha",
    "component_count": "component-count theorem: Q components of G_alpha(C) admit no (f:d,d_f)-FCC with |Im(f)| > Q and d_f > alpha",
    "covering_radius": "covering-radius corollary: no (f:d,d_f)-FCC with |Im(f)| >= 2 and d_f > 2R(C)+1",
    "perfect_connected": "perfect-code theorem: minimum-distance graphs of perfect codes are connected",
    "mds_connected": "MDS theorem: minimum-distance graphs of MDS codes are connected",
    "min_weight_span": "span corollary: a linear code generated by its minimum-weight codewords carries no strict FCC",
    "component_labelling": "component labelling: a function constant on each component of G_{d_f-1}(C) has function distance >= d_f",
    "perfect_redundancy": "perfect-code redundancy bound: r_f(k:d_d,d_f) >= n-k+1 when q^(n-k) equals the radius-t Hamming-ball volume",
    "mds_redundancy": "MDS redundancy bound: r_f(k:d,d_f) >= n-k+1 = d when an MDS (n,q^k,d) code exists",
}


# -- functions on messages ---------------------------------------------------------

FUNCTION_KINDS = ("parity", "weight_mod", "coordinate", "identity", "constant", "table")


@dataclass(frozen=True)
class FunctionSpec:
    """A total function F_q^k -> labels.

    ``param`` is the modulus for ``weight_mod`` and the 1-based position for
    ``coordinate``.  ``table`` maps message tuples to labels for ``table``.
    """

    q: int
    k: int
    kind: str
    param: int | None = None
    table: dict | None = dc_field(default=None, hash=False, compare=False)

    def __post_init__(self):
        if self.kind not in FUNCTION_KINDS:
            raise ValueError(f"unknown function kind {self.kind!r}")
        if self.kind == "weight_mod" and (self.param is None or self.param < 1):
            raise ValueError("weight_mod needs a positive modulus")
        if self.kind == "coordinate" and not (self.param and 1 <= self.param <= self.k):
            raise ValueError(f"coordinate must lie in 1..{self.k}")
        if self.kind == "table":
            if self.table is None:
                raise ValueError("table functions need a table")
            missing = [m for m in map(tuple, linalg.all_vectors(self.q, self.k).tolist()) if m not in self.table]
            if missing:
                raise ValueError(f"table is missing message {missing[0]}")

    def __call__(self, u):
        return evaluate(self, u)

    def values(self) -> list:
        """Label of every message, in lexicographic message order."""
        return [evaluate(self, u) for u in linalg.all_vectors(self.q, self.k)]

    @property
    def image(self) -> set:
        return set(self.values())

    def to_dict(self) -> dict:
        doc = {"kind": self.kind, "params": {} if self.param is None else {"value": self.param}}
        if self.kind == "table":
            doc["table"] = {"".join(map(str, m)) if self.q <= 10 else ",".join(map(str, m)): v for m, v in self.table.items()}
        return doc


def parity(k: int, q: int = 2) -> FunctionSpec:
    return FunctionSpec(q, k, "parity")


def weight_mod(k: int, s: int, q: int = 2) -> FunctionSpec:
    return FunctionSpec(q, k, "weight_mod", s)


def coordinate(k: int, i: int, q: int = 2) -> FunctionSpec:
    return FunctionSpec(q, k, "coordinate", i)


def table_function(q: int, k: int, table: dict) -> FunctionSpec:
    return FunctionSpec(q, k, "table", table={tuple(int(s) for s in m): v for m, v in table.items()})


def evaluate(f: FunctionSpec, u):
    u = tuple(int(s) for s in u)
    if len(u) != f.k:
        raise ValueError(f"message length {len(u)} != k = {f.k}")
    if f.kind == "parity":
        return sum(1 for s in u if s) % 2
    if f.kind == "weight_mod":
        return sum(1 for s in u if s) % f.param
    if f.kind == "coordinate":
        return u[f.param - 1]
    if f.kind == "identity":
        return u
    if f.kind == "constant":
        return 0
    try:
        return f.table[u]
    except KeyError:
        raise KeyError(f"table has no entry for message {u}") from None


# -- encodings -------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    i: int
    j: int
    distance: int
    requirement: str  # "data" or "function"


@dataclass(frozen=True)
class Verification:
    passed: bool
    data_distance: int | None
    function_distance: int | None
    violation: Violation | None = None


class FccEncoding:
    """Injective map from F_q^k (lexicographic order) to the rows of ``codewords``."""

    def __init__(self, field: GF, codewords, function: FunctionSpec, k: int | None = None):
        codewords = np.array(codewords, dtype=np.uint8)
        k = function.k if k is None else k
        if len(codewords) != field.q**k:
            raise ValueError(f"need {field.q**k} codewords for k={k}, got {len(codewords)}")
        if len(np.unique(codewords, axis=0)) != len(codewords):
            raise ValueError("encoding is not injective")
        codewords.setflags(write=False)
        self.field = field
        self.codewords = codewords
        self.function = function
        self.k = k
        self.labels = function.values()

    @property
    def length(self) -> int:
        return self.codewords.shape[1]

    @property
    def redundancy(self) -> int:
        return self.length - self.k

    @property
    def messages(self) -> np.ndarray:
        return linalg.all_vectors(self.field.q, self.k)

    def encode(self, u) -> np.ndarray:
        return self.codewords[linalg.vector_index(self.field.q, u)]

    def as_code(self, name=None) -> Code:
        return from_list(self.field, self.codewords, name=name)

    def _label_ids(self) -> np.ndarray:
        ids: dict = {}
        return np.array([ids.setdefault(v, len(ids)) for v in self.labels], dtype=np.int64)

    def distances(self) -> tuple[int | None, int | None, tuple | None, tuple | None]:
        """``(d_d, d_f, pair attaining d_d, pair attaining d_f)`` by a full pair scan."""
        return self._scan

    @cached_property
    def _scan(self):
        C = self.as_code()
        lab = self._label_ids()
        dd = df = None
        dd_pair = df_pair = None
        for i in range(C.M - 1):
            row = C.distance_row(i)[i + 1 :]
            j = int(np.argmin(row))
            if dd is None or row[j] < dd:
                dd, dd_pair = int(row[j]), (i, i + 1 + j)
            cross = lab[i + 1 :] != lab[i]
            if cross.any():
                masked = np.where(cross, row, np.iinfo(np.int64).max)
                j = int(np.argmin(masked))
                if df is None or masked[j] < df:
                    df, df_pair = int(masked[j]), (i, i + 1 + j)
        return dd, df, dd_pair, df_pair

    @property
    def data_distance(self) -> int | None:
        return self.distances()[0]

    @property
    def function_distance(self) -> int | None:
        return self.distances()[1]


def verify_fcc(E: FccEncoding, claimed_dd: int, claimed_df: int) -> Verification:
    """Check the (f:d_d,d_f) requirements; a failure carries a violating pair."""
    if claimed_dd > claimed_df:
        raise ValueError("claims must satisfy d_d <= d_f")
    dd, df, dd_pair, df_pair = E.distances()
    violation = None
    if dd is not None and dd < claimed_dd:
        violation = Violation(*dd_pair, dd, "data")
    elif df is not None and df < claimed_df:
        violation = Violation(*df_pair, df, "function")
    return Verification(violation is None, dd, df, violation)


def two_step_construct(f: FunctionSpec, inner: Code, function_code: Code | None = None, label_index: dict | None = None) -> FccEncoding:
    """Encode ``u`` as ``inner(u) || function_code[label_index[f(u)]]``.

    ``inner`` must be linear of dimension ``f.k`` (its codewords are in
    message order).  Without ``function_code`` the result is the plain inner
    code.  ``label_index`` defaults to the sorted labels taken in order.
    """
    if not inner.is_linear or inner.k != f.k:
        raise ValueError("inner code must be linear with dimension k")
    if inner.q != f.q:
        raise ValueError("function and inner code disagree on the field")
    labels = f.values()
    if function_code is None or function_code.n == 0:
        return FccEncoding(inner.field, inner.words, f)
    if function_code.field != inner.field:
        raise ValueError("function code is over a different field")
    if label_index is None:
        image = sorted(set(labels))
        if len(image) > function_code.M:
            raise ValueError(f"{len(image)} labels but only {function_code.M} function codewords")
        label_index = {v: i for i, v in enumerate(image)}
    idx = [label_index[v] for v in labels]
    if len(set(label_index[v] for v in set(labels))) != len(set(labels)):
        raise ValueError("label_index must be injective on Im(f)")
    tail = function_code.words[idx]
    return FccEncoding(inner.field, np.hstack([inner.words, tail]), f)


# -- strict-FCC feasibility -----------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    d_f: int
    n_values: int
    feasible: bool
    citations: tuple[str, ...]
    witness: tuple[tuple[int, ...], ...] | None = None


def _infeasibility_citations(C: Code, n_values: int, d_f: int, Q: int) -> tuple[str, ...]:
    if Q > 1:
        return ("component_count",)
    cites = ["connected_graph"]
    if d_f - 1 >= C.d_min:
        if C.family.kind == "perfect":
            cites.append("perfect_connected")
        if C.family.kind == "mds" or is_mds(C):
            cites.append("mds_connected")
        if C.is_linear and min_weight_span_test(C):
            cites.append("min_weight_span")
    R = covering_radius(C) if C.M >= 2 else None
    if R is not None and R.is_exact and d_f > 2 * R.value + 1:
        cites.append("covering_radius")
    return tuple(cites)


def strict_feasible(C: Code, n_values: int, d_f: int) -> Verdict:
    """Can C carry a function with ``n_values`` values at function distance ``d_f > d_min``?

    Feasible iff G_{d_f - 1}(C) has at least ``n_values`` components; the
    witness groups whole components, one per label.
    """
    if n_values < 2:
        raise ValueError("a nontrivial function needs at least two values")
    if C.M < 2:
        raise ValueError("feasibility needs at least two codewords")
    if d_f <= C.d_min:
        raise ValueError(f"d_f={d_f} <= d_min={C.d_min}: not strict (reduces to an ECC)")
    Q = component_count(C, d_f - 1)
    if Q < n_values:
        return Verdict(d_f, n_values, False, _infeasibility_citations(C, n_values, d_f, Q))
    comps = build_alpha_graph(C, d_f - 1).components()
    groups = [tuple(c) for c in comps[: n_values - 1]]
    groups.append(tuple(sorted(i for c in comps[n_values - 1 :] for i in c)))
    return Verdict(d_f, n_values, True, ("component_labelling",), tuple(groups))


@dataclass(frozen=True)
class FeasibilityReport:
    code: Code
    profile: list
    threshold: int
    max_strict_df: int | None
    verdicts: list
    covering: object = None
    covering_limit: int | None = None

    def to_dict(self) -> dict:
        C = self.code
        return {
            "code": {"name": C.name, "n": C.n, "M": C.M, "q": C.q, "d_min": C.d_min, "d_max": C.d_max, "family": str(C.family)},
            "profile": [{"alpha": a, "components": Q} for a, Q in self.profile],
            "threshold": self.threshold,
            "max_strict_df": self.max_strict_df,
            "strict_fcc_exists": self.max_strict_df is not None,
            "covering": None if self.covering is None else self.covering.to_dict(),
            "covering_limit": self.covering_limit,
            "verdicts": [verdict_dict(v) for v in self.verdicts],
        }


def verdict_dict(v: Verdict) -> dict:
    doc = {"d_f": v.d_f, "values": v.n_values, "feasible": v.feasible, "citations": [THEOREMS[c] for c in v.citations]}
    if v.witness is not None:
        doc["witness"] = [list(g) for g in v.witness]
    return doc


def feasibility_report(C: Code) -> FeasibilityReport:
    """Component profile, threshold alpha*, and two-valued verdicts for d_f in (d_min, alpha* + 1]."""
    if C.M < 2:
        raise ValueError("feasibility needs at least two codewords")
    profile = component_profile(C)
    threshold = connectivity_threshold(C)
    max_df = threshold if threshold > C.d_min else None
    verdicts = [strict_feasible(C, 2, d_f) for d_f in range(C.d_min + 1, threshold + 2)]
    R = covering_radius(C)
    limit = None
    if R is not None and R.is_exact:
        limit = 2 * R.value + 1
        assert threshold <= limit, "connectivity threshold exceeds 2R+1"
    return FeasibilityReport(C, profile, threshold, max_df, verdicts, R, limit)


# -- redundancy bounds ---------------------------------------------------------------------

@dataclass(frozen=True)
class RedundancyBound:
    q: int | None
    k: int
    d: int
    n: int | None
    bound: int | None
    source: str
    applicable: bool

    def to_dict(self) -> dict:
        return {"q": self.q, "k": self.k, "d": self.d, "n": self.n, "bound": self.bound,
                "source": self.source, "applicable": self.applicable, "citation": THEOREMS[self.source]}


PERFECT_SEARCH_SPAN = 64


def perfect_redundancy_bound(q: int, k: int, d_d: int) -> RedundancyBound:
    """r >= n - k + 1 for the n with q^(n-k) = sum_{i<=(d_d-1)/2} C(n,i)(q-1)^i, if one exists."""
    t = (d_d - 1) // 2
    for n in range(k + 1, k + PERFECT_SEARCH_SPAN + 1):
        if q ** (n - k) == sum(comb(n, i) * (q - 1) ** i for i in range(t + 1)):
            return RedundancyBound(q, k, d_d, n, n - k + 1, "perfect_redundancy", True)
    return RedundancyBound(q, k, d_d, None, None, "perfect_redundancy", False)


def mds_redundancy_bound(k: int, d: int) -> RedundancyBound:
    if d < 1:
        raise ValueError("d must be >= 1")
    n = k + d - 1
    return RedundancyBound(None, k, d, n, n - k + 1, "mds_redundancy", True)


# -- channel simulation ------------------------------------------------------------------------

@dataclass(frozen=True)
class ChannelStats:
    trials: int
    t_data: int
    t_func: int
    data_recovery: float
    function_recovery: float
    data_recovery_at_t_func: float

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _corrupt(rng, word: np.ndarray, t: int, q: int) -> np.ndarray:
    out = word.copy()
    pos = rng.choice(len(word), size=t, replace=False)
    out[pos] = (out[pos] + rng.integers(1, q, size=t)) % q
    return out


def nearest_codeword(E: FccEncoding, received) -> int:
    """Index of the closest codeword; ties go to the lowest index."""
    return int(np.argmin(np.count_nonzero(E.codewords != np.asarray(received), axis=1)))


def simulate_channel(E: FccEncoding, t_data: int, t_func: int, trials: int, seed: int) -> ChannelStats:
    """Monte Carlo nearest-codeword decoding under exactly ``t`` symbol errors.

    Runs ``trials`` transmissions with ``t_data`` errors (data recovery) and
    ``trials`` with ``t_func`` errors (function recovery, and data recovery
    at that error count).  Trial ``i`` draws from ``default_rng([seed, i])``.
    """
    dd, df, _, _ = E.distances()
    if dd is not None and 2 * t_data + 1 > dd:
        raise ValueError(f"2*t_data+1 = {2 * t_data + 1} exceeds d_d = {dd}")
    if df is not None and 2 * t_func + 1 > df:
        raise ValueError(f"2*t_func+1 = {2 * t_func + 1} exceeds d_f = {df}")
    q = E.field.q
    labels = E._label_ids()
    ok_data = ok_func = ok_data_tf = 0
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        m = int(rng.integers(len(E.codewords)))
        if nearest_codeword(E, _corrupt(rng, E.codewords[m], t_data, q)) == m:
            ok_data += 1
        got = nearest_codeword(E, _corrupt(rng, E.codewords[m], t_func, q))
        ok_func += int(labels[got] == labels[m])
        ok_data_tf += int(got == m)
    return ChannelStats(trials, t_data, t_func, ok_data / trials, ok_func / trials, ok_data_tf / trials)


def find_decoding_failure(E: FccEncoding, t: int):
    """Search for a message and ``t``-error pattern that decodes to another message.

    Returns ``(message_index, received_word, decoded_index)`` or ``None``.
    """
    q, n = E.field.q, E.length
    for m, c in enumerate(E.codewords):
        for support in itertools.combinations(range(n), t):
            for shift in itertools.product(range(1, q), repeat=t):
                r = c.copy()
                r[list(support)] = (r[list(support)] + np.array(shift)) % q
                got = nearest_codeword(E, r)
                if got != m:
                    return m, r, got
    return None
