import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fccforge import fcc
from fccforge.codes import from_generator, hamming_code, reed_solomon, repetition
from fccforge.distgraph import component_count
from fccforge.fcc import (
    FccEncoding,
    FunctionSpec,
    coordinate,
    evaluate,
    feasibility_report,
    find_decoding_failure,
    mds_redundancy_bound,
    parity,
    perfect_redundancy_bound,
    simulate_channel,
    strict_feasible,
    table_function,
    two_step_construct,
    verify_fcc,
    weight_mod,
)
from fccforge.gf import field, set_distance

from conftest import PARITY_FCC_TABLE, bits, brute_distance, brute_partition_feasible, random_code, random_linear_code

GF2 = field(2)


# -- functions --------------------------------------------------------------------

def test_parity_values():
    f = parity(4)
    assert evaluate(f, bits("0001")) == 1
    assert evaluate(f, bits("0000")) == 0
    assert [f(bits(m)) for m in PARITY_FCC_TABLE] == [m.count("1") % 2 for m in PARITY_FCC_TABLE]


def test_coordinate_is_one_based():
    assert evaluate(coordinate(4, 2), bits("0110")) == 1
    assert evaluate(coordinate(4, 1), bits("0110")) == 0
    with pytest.raises(ValueError):
        coordinate(4, 0)
    with pytest.raises(ValueError):
        coordinate(4, 5)


def test_weight_mod_and_parity_agree_over_gf2():
    assert weight_mod(5, 2).values() == parity(5).values()
    assert weight_mod(3, 3).image == {0, 1, 2}


def test_table_function():
    f = table_function(2, 2, {(0, 0): "a", (0, 1): "b", (1, 0): "a", (1, 1): "b"})
    assert f((1, 1)) == "b"
    with pytest.raises(ValueError):
        table_function(2, 2, {(0, 0): 0})


def test_bad_function_kind_and_length():
    with pytest.raises(ValueError):
        FunctionSpec(2, 3, "median")
    with pytest.raises(ValueError):
        evaluate(parity(3), [0, 1])


# -- verification and construction -------------------------------------------------------

def test_parity_fcc_reproduces_table(parity_fcc):
    got = ["".join(map(str, c)) for c in parity_fcc.codewords]
    assert got == list(PARITY_FCC_TABLE.values())
    assert parity_fcc.redundancy == 5 and parity_fcc.length == 9


def test_parity_fcc_verifies(parity_fcc):
    v = verify_fcc(parity_fcc, 3, 5)
    assert v.passed and (v.data_distance, v.function_distance) == (3, 5)


def test_parity_fcc_distances_by_brute_force(parity_fcc):
    words = list(PARITY_FCC_TABLE.values())
    msgs = list(PARITY_FCC_TABLE)
    dd = min(brute_distance(a, b) for a, b in itertools.combinations(words, 2))
    df = min(brute_distance(words[i], words[j]) for i, j in itertools.combinations(range(16), 2)
             if msgs[i].count("1") % 2 != msgs[j].count("1") % 2)
    assert (dd, df) == (3, 5)


def test_verification_failure_reports_pair(parity_fcc):
    v = verify_fcc(parity_fcc, 3, 6)
    assert not v.passed and v.violation.requirement == "function" and v.violation.distance == 5
    w = v.violation
    assert parity_fcc.labels[w.i] != parity_fcc.labels[w.j]
    assert brute_distance(parity_fcc.codewords[w.i], parity_fcc.codewords[w.j]) == 5
    d = verify_fcc(parity_fcc, 4, 6)
    assert d.violation.requirement == "data"


def test_verify_rejects_inverted_claims(parity_fcc):
    with pytest.raises(ValueError):
        verify_fcc(parity_fcc, 5, 3)


def test_identity_function_dd_equals_df():
    H = hamming_code(3)
    E = two_step_construct(FunctionSpec(2, 4, "identity"), H)
    assert E.distances()[:2] == (3, 3)


def test_constant_function_unconstrained():
    E = two_step_construct(FunctionSpec(2, 4, "constant"), hamming_code(3))
    assert E.function_distance is None
    assert verify_fcc(E, 3, 100).passed


def test_longer_label_code():
    E = two_step_construct(parity(4), hamming_code(3), repetition(3))
    assert E.distances()[:2] == (3, 6) and E.redundancy == 6


def test_no_label_code_is_plain_ecc():
    E = two_step_construct(parity(4), hamming_code(3))
    assert E.length == 7 and E.distances()[:2] == (3, 3)


def test_construct_errors():
    with pytest.raises(ValueError):
        two_step_construct(parity(3), hamming_code(3), repetition(2))
    with pytest.raises(ValueError):
        two_step_construct(weight_mod(4, 3), hamming_code(3), repetition(2))
    with pytest.raises(ValueError):
        two_step_construct(parity(4), hamming_code(3), repetition(2), label_index={0: 1, 1: 1})
    with pytest.raises(ValueError):
        two_step_construct(parity(4), hamming_code(3), repetition(2, field(3)))


def test_encoding_rejects_collisions():
    with pytest.raises(ValueError):
        FccEncoding(GF2, [[0, 0], [0, 0]], parity(1))
    with pytest.raises(ValueError):
        FccEncoding(GF2, [[0, 0]], parity(1))


def test_two_step_guarantees_on_random_codes():
    rng = np.random.default_rng(41)
    for _ in range(40):
        inner = random_linear_code(rng, n_max=9, k_max=4)
        if inner.M < 2:
            continue
        kind = rng.choice(["parity", "weight_mod", "coordinate"])
        f = {"parity": parity(inner.k), "weight_mod": weight_mod(inner.k, 3),
             "coordinate": coordinate(inner.k, int(rng.integers(1, inner.k + 1)))}[kind]
        n_labels = len(f.image)
        label = random_code(rng, n_max=6, m_max=8, m_min=max(n_labels, 2))
        E = two_step_construct(f, inner, label)
        dd, df, _, _ = E.distances()
        assert dd >= inner.d_min
        if df is not None:
            assert df >= inner.d_min + label.d_min
        assert E.redundancy == inner.n - inner.k + label.n


def test_passing_strict_fcc_implies_disconnected_graph():
    rng = np.random.default_rng(43)
    found = 0
    for _ in range(80):
        inner = random_linear_code(rng, n_max=8, k_max=4)
        if inner.M < 2 or len(parity(inner.k).image) < 2:
            continue
        E = two_step_construct(parity(inner.k), inner, repetition(int(rng.integers(1, 4))))
        dd, df, _, _ = E.distances()
        C = E.as_code()
        if df is not None and df > C.d_min and verify_fcc(E, dd, df).passed:
            found += 1
            assert component_count(C, df - 1) >= 2
    assert found > 10


# -- feasibility ------------------------------------------------------------------------

def test_two_triangles_feasible(triangles):
    v = strict_feasible(triangles, 2, 3)
    assert v.feasible
    A, B = ([triangles.words[i] for i in g] for g in v.witness)
    assert set_distance(A, B) == 3


def test_two_triangles_best_bipartition_separation(triangles):
    words = triangles.words.tolist()
    best = 0
    for mask in range(1, 2**5):  # word 0 always on side A: 31 nontrivial bipartitions
        A = [words[0]] + [words[i + 1] for i in range(5) if not mask >> i & 1]
        B = [words[i + 1] for i in range(5) if mask >> i & 1]
        best = max(best, min(brute_distance(a, b) for a in A for b in B))
    assert best == 3
    assert feasibility_report(triangles).max_strict_df == 3
    assert not strict_feasible(triangles, 2, 4).feasible


def test_hamming_infeasible_cites_perfect_theorem():
    v = strict_feasible(hamming_code(3), 2, 4)
    assert not v.feasible
    assert "perfect_connected" in v.citations and "connected_graph" in v.citations


def test_three_values_on_two_components(triangles):
    v = strict_feasible(triangles, 3, 3)
    assert not v.feasible and v.citations == ("component_count",)


def test_strictness_enforced(triangles):
    with pytest.raises(ValueError):
        strict_feasible(triangles, 2, 1)
    with pytest.raises(ValueError):
        strict_feasible(triangles, 1, 3)


def test_reports():
    assert feasibility_report(hamming_code(3)).max_strict_df is None
    rs = feasibility_report(reed_solomon(field(5), 4, 2))
    assert rs.max_strict_df is None
    assert all("mds_connected" in v.citations for v in rs.verdicts)
    doc = rs.to_dict()
    assert doc["strict_fcc_exists"] is False and doc["threshold"] == 3


def test_two_coset_code_report():
    C = from_generator(GF2, [bits("11000"), bits("11111")])
    rep = feasibility_report(C)
    assert rep.threshold == 3 and rep.max_strict_df == 3
    assert [v.feasible for v in rep.verdicts] == [True, False]


@pytest.mark.parametrize("seed", range(4))
def test_feasibility_matches_partition_oracle(seed):
    rng = np.random.default_rng(100 + seed)
    for _ in range(10):
        C = random_code(rng, n_max=6, m_max=8, m_min=3)
        words = C.words.tolist()
        for n_values in range(2, min(4, C.M) + 1):
            for d_f in range(C.d_min + 1, C.d_max + 1):
                v = strict_feasible(C, n_values, d_f)
                assert v.feasible == brute_partition_feasible(words, n_values, d_f)
                if v.feasible:
                    assert len(v.witness) == n_values
                    groups = [[words[i] for i in g] for g in v.witness]
                    for A, B in itertools.combinations(groups, 2):
                        assert set_distance(A, B) >= d_f


def test_verdicts_are_monotone():
    rng = np.random.default_rng(7)
    for _ in range(30):
        C = random_code(rng, n_max=8, m_max=12, m_min=3)
        table = {(v, d): strict_feasible(C, v, d).feasible
                 for v in range(2, min(4, C.M) + 1) for d in range(C.d_min + 1, C.d_max + 1)}
        for (v, d), ok in table.items():
            if ok:
                assert all(table[(v2, d2)] for (v2, d2) in table if v2 <= v and d2 <= d)


# -- bounds -------------------------------------------------------------------------------

def test_perfect_bounds():
    b = perfect_redundancy_bound(2, 4, 3)
    assert (b.n, b.bound, b.applicable) == (7, 4, True)
    assert b.bound <= 5
    b = perfect_redundancy_bound(2, 12, 7)
    assert (b.n, b.bound) == (23, 12)
    assert 2**11 == 1 + 23 + 253 + 1771
    b = perfect_redundancy_bound(2, 2, 3)
    assert not b.applicable and b.bound is None


def test_mds_bounds():
    assert mds_redundancy_bound(2, 3).bound == 3
    assert mds_redundancy_bound(7, 1).bound == 1
    assert mds_redundancy_bound(4, 5).bound == 5
    with pytest.raises(ValueError):
        mds_redundancy_bound(3, 0)


@settings(max_examples=50)
@given(st.integers(1, 30), st.integers(1, 12))
def test_mds_bound_is_d(k, d):
    assert mds_redundancy_bound(k, d).bound == d


# -- channel -----------------------------------------------------------------------------------

def test_simulation_recovery(parity_fcc):
    stats = simulate_channel(parity_fcc, 1, 2, 1000, seed=1)
    assert stats.data_recovery == 1.0 and stats.function_recovery == 1.0
    assert stats.data_recovery_at_t_func < 1.0


def test_simulation_is_deterministic(parity_fcc):
    a = simulate_channel(parity_fcc, 1, 2, 200, seed=5)
    assert a == simulate_channel(parity_fcc, 1, 2, 200, seed=5)


def test_simulation_preconditions(parity_fcc):
    with pytest.raises(ValueError):
        simulate_channel(parity_fcc, 2, 2, 10, seed=0)
    with pytest.raises(ValueError):
        simulate_channel(parity_fcc, 1, 3, 10, seed=0)


def test_two_error_failure_exists(parity_fcc):
    m, r, got = find_decoding_failure(parity_fcc, 2)
    assert got != m
    assert brute_distance(r, parity_fcc.codewords[m]) == 2
    assert parity_fcc.labels[got] == parity_fcc.labels[m]
    assert find_decoding_failure(parity_fcc, 1) is None


def test_nearest_codeword_ties_go_low():
    E = FccEncoding(GF2, [[0, 0], [1, 1]], parity(1))
    assert fcc.nearest_codeword(E, [0, 1]) == 0
    assert fcc.nearest_codeword(E, [1, 0]) == 0
