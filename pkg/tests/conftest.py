import itertools

import pytest

from fccforge import codes, fcc
from fccforge.gf import field

TWO_TRIANGLES = ["00000", "00001", "00010", "01111", "10111", "11111"]

# parity FCC over the [7,4,3] Hamming code plus a 2-repetition label: message -> 9-bit codeword (u, p1 p2 p3, s s)
PARITY_FCC_TABLE = {
    "0000": "000000000",
    "0001": "000111111",
    "0010": "001001111",
    "0011": "001110000",
    "0100": "010010111",
    "0101": "010101000",
    "0110": "011011000",
    "0111": "011100111",
    "1000": "100011011",
    "1001": "100100100",
    "1010": "101010100",
    "1011": "101101011",
    "1100": "110001100",
    "1101": "110110011",
    "1110": "111000011",
    "1111": "111111100",
}


def bits(s):
    return [int(c) for c in s]


@pytest.fixture
def triangles():
    return codes.from_list(field(2), [bits(w) for w in TWO_TRIANGLES])


@pytest.fixture
def parity_fcc():
    f = fcc.parity(4)
    return fcc.two_step_construct(f, codes.hamming_code(3), codes.repetition(2))


# -- independent oracles -------------------------------------------------------------------

def brute_distance(u, v):
    return sum(1 for a, b in zip(u, v) if a != b)


def brute_dmin_dmax(words):
    ds = [brute_distance(a, b) for a, b in itertools.combinations(words, 2)]
    return min(ds), max(ds)


def brute_covering_radius(words, q, n):
    return max(min(brute_distance(x, c) for c in words) for x in itertools.product(range(q), repeat=n))


def brute_components(words, alpha):
    """Connected components by depth-first search over an explicit adjacency list."""
    words = [tuple(w) for w in words]
    adj = {i: [j for j in range(len(words)) if j != i and brute_distance(words[i], words[j]) <= alpha] for i in range(len(words))}
    seen, comps = set(), []
    for s in range(len(words)):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return sorted(comps)


def brute_partition_feasible(words, n_values, d_f):
    """Is there a labelling with exactly ``n_values`` nonempty classes and cross distance >= d_f?

    Exhaustive backtracking over label assignments (labels introduced in
    order to skip relabelings), pruning partial assignments that already
    put two close codewords in different classes.
    """
    words = [tuple(w) for w in words]
    M = len(words)
    D = [[brute_distance(a, b) for b in words] for a in words]
    labels = [-1] * M

    def go(i, used):
        if used + (M - i) < n_values:
            return False
        if i == M:
            return used == n_values
        for lab in range(min(used + 1, n_values)):
            if all(labels[j] == lab or D[i][j] >= d_f for j in range(i)):
                labels[i] = lab
                if go(i + 1, max(used, lab + 1)):
                    return True
        labels[i] = -1
        return False

    return go(0, 0)


def random_code(rng, q=2, n_max=8, m_max=12, m_min=2):
    n = int(rng.integers(2, n_max + 1))
    M = int(rng.integers(m_min, min(m_max, q**n) + 1))
    idx = rng.choice(q**n, size=M, replace=False)
    words = [[(int(i) // q ** (n - 1 - j)) % q for j in range(n)] for i in idx]
    return codes.from_list(field(q) if q in (2, 3, 5, 7) else field(2, 2), words)


def random_linear_code(rng, n_max=12, k_max=6, q=2):
    F = field(q)
    while True:
        n = int(rng.integers(2, n_max + 1))
        k = int(rng.integers(1, min(k_max, n) + 1))
        G = rng.integers(0, q, size=(k, n))
        try:
            return codes.from_generator(F, G)
        except ValueError:
            continue


# -- acceptance reporting ----------------------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
