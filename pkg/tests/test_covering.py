import itertools

import numpy as np
import pytest

from fccforge import covering
from fccforge.codes import (
    binary_golay,
    extend_parity,
    extended_hamming_code,
    from_generator,
    from_list,
    hamming_code,
    reed_muller1,
    reed_solomon,
    repetition,
)
from fccforge.covering import (
    COSET_LEADER,
    EXACT_AMBIENT,
    KNOWN_FORMULA,
    ambient_distances,
    covering_radius,
    covering_radius_coset_leader,
    covering_radius_exact,
    janwa_mattson_bound,
    janwa_mattson_value,
    known_covering_radius,
    rm1_covering_radius,
)
from fccforge.distgraph import connectivity_threshold
from fccforge.gf import distance_to_code, field

from conftest import brute_covering_radius, random_code, random_linear_code

GF2 = field(2)


def test_hamming_radius_is_one():
    res = covering_radius_exact(hamming_code(3))
    assert res.value == 1 and res.method == EXACT_AMBIENT
    assert distance_to_code(res.certifier, hamming_code(3)) == 1


def test_whole_space_radius_zero():
    C = from_generator(GF2, np.eye(4, dtype=int))
    assert covering_radius_exact(C).value == 0
    assert covering_radius_coset_leader(C).value == 0


def test_two_triangles_radius(triangles):
    assert covering_radius_exact(triangles).value == 2
    assert brute_covering_radius(triangles.words.tolist(), 2, 5) == 2


def test_ambient_limit(monkeypatch):
    monkeypatch.setattr(covering, "MAX_AMBIENT", 2**6)
    with pytest.raises(ValueError, match="too large"):
        covering_radius_exact(hamming_code(3))


def test_coset_leader_families():
    assert covering_radius_coset_leader(extended_hamming_code(3)).value == 2
    assert covering_radius_coset_leader(reed_muller1(4)).value == 6
    res = covering_radius_coset_leader(binary_golay())
    assert res.value == 3 and res.method == COSET_LEADER
    assert distance_to_code(res.certifier, binary_golay()) == 3


def test_coset_leader_needs_linear(triangles):
    with pytest.raises(ValueError):
        covering_radius_coset_leader(triangles)


def test_coset_leader_weights_are_minimal():
    C = reed_solomon(field(3), 3, 1)
    weights, leaders = covering.coset_leader_weights(C)
    # brute force: minimum weight per coset of the ternary repetition code
    cosets = {}
    for x in itertools.product(range(3), repeat=3):
        key = tuple(sorted(tuple((a - b) % 3 for a, b in zip(x, c)) for c in C.words.tolist()))
        cosets[key] = min(cosets.get(key, 9), min(sum(1 for v in e if v) for e in key))
    assert sorted(weights.tolist()) == sorted(cosets.values())
    assert all(np.count_nonzero(l) == w for l, w in zip(leaders, weights))


@pytest.mark.parametrize("m,R", [(1, 0), (2, 1), (3, 2), (4, 6), (5, 12), (6, 28)])
def test_rm1_formula(m, R):
    assert rm1_covering_radius(m) == R


def test_rm1_formula_matches_exact():
    for m in range(1, 5):
        assert covering_radius_exact(reed_muller1(m)).value == rm1_covering_radius(m)
    with pytest.raises(ValueError):
        rm1_covering_radius(0)


def test_janwa_mattson_repetition_tight():
    res = janwa_mattson_bound(repetition(4))
    assert res.value == 2 and not res.vacuous
    assert covering_radius_exact(repetition(4)).value == 2


def test_janwa_mattson_hamming_vacuous():
    res = janwa_mattson_bound(hamming_code(3))
    assert res.value == -3 and res.vacuous and not res.is_exact


def test_janwa_mattson_empty_sum():
    assert janwa_mattson_value(9, 2, 1) == 9


def test_janwa_mattson_exceeded_is_vacuous():
    # value 2 but a caller-supplied exact radius above it
    assert janwa_mattson_bound(repetition(4), exact=3).vacuous


def test_janwa_mattson_needs_linear(triangles):
    with pytest.raises(ValueError):
        janwa_mattson_bound(triangles)


def test_known_radius():
    assert known_covering_radius(hamming_code(3)) == 1
    assert known_covering_radius(extended_hamming_code(3)) == 2
    assert known_covering_radius(reed_muller1(4)) == 6
    assert known_covering_radius(from_list(GF2, [[0, 0, 1], [1, 1, 0], [1, 1, 1]])) is None
    # a translate of the length-3 repetition code is itself perfect
    assert known_covering_radius(from_list(GF2, [[0, 0, 1], [1, 1, 0]])) == 1


def test_covering_radius_dispatch(triangles):
    assert covering_radius(hamming_code(3)).method == KNOWN_FORMULA
    assert covering_radius(reed_solomon(field(5), 4, 2)).method == COSET_LEADER
    assert covering_radius(triangles).method == EXACT_AMBIENT


def test_known_formulas_agree_with_exact():
    for C in (hamming_code(3), hamming_code(4), extended_hamming_code(3), extend_parity(hamming_code(4)),
              reed_muller1(2), reed_muller1(3), reed_muller1(4)):
        assert known_covering_radius(C) == covering_radius_exact(C).value


def test_perfect_and_quasi_perfect_radii():
    for C in (hamming_code(3), hamming_code(4), binary_golay()):
        t = (C.d_min - 1) // 2
        assert covering_radius_coset_leader(C).value == t
        assert covering_radius_coset_leader(extend_parity(C)).value == t + 1


def test_exact_matches_brute_force_on_random_codes():
    rng = np.random.default_rng(23)
    for _ in range(60):
        q = int(rng.choice([2, 3]))
        C = random_code(rng, q=q, n_max=6 if q == 2 else 4, m_max=10, m_min=1)
        res = covering_radius_exact(C)
        assert res.value == brute_covering_radius(C.words.tolist(), q, C.n)
        assert distance_to_code(res.certifier, C) == res.value


def test_every_word_within_radius():
    C = reed_solomon(field(5), 4, 2)
    dist = ambient_distances(C)
    R = covering_radius_coset_leader(C).value
    assert dist.max() == R and (dist == R).any() and (dist >= 0).all()


def test_coset_leader_agrees_with_ambient():
    rng = np.random.default_rng(29)
    for _ in range(60):
        q = int(rng.choice([2, 2, 3]))
        C = random_linear_code(rng, n_max=12 if q == 2 else 7, k_max=8, q=q)
        assert covering_radius_coset_leader(C).value == covering_radius_exact(C).value


def test_threshold_at_most_2r_plus_1():
    rng = np.random.default_rng(31)
    for _ in range(60):
        C = random_code(rng, n_max=8, m_max=16)
        assert connectivity_threshold(C) <= 2 * covering_radius_exact(C).value + 1
