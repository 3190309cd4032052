"""Shared fixtures: the worked five-variable example pair and small helpers."""

import random

import pytest

from bhkmirror import (IntMatrix, PhaseVector, build_orbifold, build_potential)

# Degree-24 pair in WP^4(3,3,6,8,4): diagonal monomials, and the same family
# member with the last monomial replaced by y4*y5^4.
A_ROWS = [[8, 0, 0, 0, 0],
          [0, 8, 0, 0, 0],
          [0, 0, 4, 0, 0],
          [0, 0, 0, 3, 0],
          [0, 0, 0, 0, 6]]
APRIME_ROWS = [[8, 0, 0, 0, 0],
               [0, 8, 0, 0, 0],
               [0, 0, 4, 0, 0],
               [0, 0, 0, 3, 0],
               [0, 0, 0, 1, 4]]
G_GENS = [(3, 3, 6, 8, 4), (18, 0, 6, 0, 0), (0, 0, 12, 0, 12)]


@pytest.fixture(scope="session")
def pot_a():
    return build_potential(IntMatrix(A_ROWS))


@pytest.fixture(scope="session")
def pot_aprime():
    return build_potential(IntMatrix(APRIME_ROWS))


@pytest.fixture(scope="session")
def orb_a(pot_a):
    return build_orbifold(pot_a, [PhaseVector.of(v, 24) for v in G_GENS])


@pytest.fixture(scope="session")
def orb_aprime(pot_aprime):
    return build_orbifold(pot_aprime, [PhaseVector.of(v, 24) for v in G_GENS])


@pytest.fixture()
def rng():
    return random.Random(20240817)


def brute_force_span(gens, modulus, dim):
    """Subgroup of (Z/modulus)^dim generated by the given residue vectors."""
    zero = (0,) * dim
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % modulus for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def random_atomic_matrix(rng, nvars, max_det=200, max_exp=5):
    """Random valid exponent matrix: shuffled atomic pieces, bounded |det|."""
    while True:
        vars_left = list(range(nvars))
        rng.shuffle(vars_left)
        rows = [[0] * nvars for _ in range(nvars)]
        det = 1
        while vars_left:
            size = rng.randint(1, min(3, len(vars_left)))
            piece, vars_left = vars_left[:size], vars_left[size:]
            kind = "fermat" if size == 1 else rng.choice(["loop", "chain"])
            exps = [rng.randint(2, max_exp) for _ in range(size)]
            if kind == "fermat":
                rows[piece[0]][piece[0]] = exps[0]
                det *= exps[0]
            elif kind == "chain":
                for i, v in enumerate(piece):
                    rows[v][v] = exps[i]
                    if i + 1 < size:
                        rows[v][piece[i + 1]] = 1
                prod = 1
                for e in exps:
                    prod *= e
                det *= prod
            else:
                for i, v in enumerate(piece):
                    rows[v][v] = exps[i]
                    rows[v][piece[(i + 1) % size]] = 1
                prod = 1
                for e in exps:
                    prod *= e
                det *= prod + (-1) ** (size + 1)
        if 0 < abs(det) <= max_det:
            order = list(range(nvars))
            rng.shuffle(order)
            return IntMatrix([rows[i] for i in order])


# Calabi-Yau corpus: every monomial row sums to nvars, so the weights are
# proportional to (1, ..., 1) and the degree equals the weight total.
def cy_matrix(nvars, pieces):
    """pieces: list of ('fermat',) | ('chain', m) | ('loop', m) consuming nvars."""
    rows = []
    var = 0
    for piece in pieces:
        if piece[0] == "fermat":
            row = [0] * nvars
            row[var] = nvars
            rows.append(row)
            var += 1
        else:
            m = piece[1]
            for i in range(m):
                row = [0] * nvars
                if piece[0] == "chain" and i == m - 1:
                    row[var + i] = nvars
                else:
                    row[var + i] = nvars - 1
                    row[var + (i + 1) % m] = 1
                rows.append(row)
            var += m
    assert var == nvars
    return IntMatrix(rows)
