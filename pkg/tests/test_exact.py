"""Exact kernel: determinants, scaled inverses, Hermite bases, congruences."""

from fractions import Fraction
from itertools import combinations, product

import pytest

from bhkmirror.errors import SingularMatrixError
from bhkmirror.exact import (IntMatrix, determinant, hermite_form,
                             lattice_contains, membership_congruences,
                             rational_inverse, rational_rank, scaled_inverse,
                             solve_congruences, sparse_rank)
from conftest import A_ROWS, APRIME_ROWS, random_atomic_matrix


def cofactor_det(rows):
    """Independent oracle: recursive cofactor expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j, e in enumerate(rows[0]):
        if e == 0:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        total += (-1) ** j * e * cofactor_det(minor)
    return total


def minor_rank(rows):
    """Independent oracle: largest k with a nonvanishing k x k minor."""
    m, n = len(rows), len(rows[0])
    for k in range(min(m, n), 0, -1):
        for rsel in combinations(range(m), k):
            for csel in combinations(range(n), k):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                if cofactor_det(sub) != 0:
                    return k
    return 0


class TestDeterminant:
    def test_identity(self):
        assert determinant(IntMatrix.identity(5)) == 1

    def test_section5_matrices(self):
        assert determinant(IntMatrix(A_ROWS)) == 4608
        assert determinant(IntMatrix(APRIME_ROWS)) == 3072
        assert cofactor_det(A_ROWS) == 4608
        assert cofactor_det(APRIME_ROWS) == 3072

    def test_against_cofactor_oracle(self, rng):
        for _ in range(40):
            n = rng.randint(1, 5)
            rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            assert determinant(IntMatrix(rows)) == cofactor_det(rows)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            determinant(IntMatrix([[1, 2, 3], [4, 5, 6]]))


class TestScaledInverse:
    def test_diagonal_section5(self):
        d, b = scaled_inverse(IntMatrix(A_ROWS))
        assert d == 24
        assert b == IntMatrix.diagonal([3, 3, 6, 8, 4])
        # row sums are the weights of WP^4(3,3,6,8,4)
        assert [sum(r) for r in b.rows] == [3, 3, 6, 8, 4]

    def test_aprime_section5(self):
        d, b = scaled_inverse(IntMatrix(APRIME_ROWS))
        assert d == 24
        assert b.rows == ((3, 0, 0, 0, 0), (0, 3, 0, 0, 0), (0, 0, 6, 0, 0),
                          (0, 0, 0, 8, 0), (0, 0, 0, -2, 6))
        assert [sum(r) for r in b.rows] == [3, 3, 6, 8, 4]

    def test_identity(self):
        d, b = scaled_inverse(IntMatrix.identity(3))
        assert d == 1 and b == IntMatrix.identity(3)

    def test_inverse_identity_and_minimality(self, rng):
        for _ in range(25):
            m = random_atomic_matrix(rng, rng.randint(2, 5))
            d, b = scaled_inverse(m)
            n = m.nrows
            assert m @ b == IntMatrix.identity(n).scaled(d)
            assert b @ m == IntMatrix.identity(n).scaled(d)
            # minimality: d is the lcm of the denominators of m^-1
            inv = rational_inverse(m)
            expect = 1
            for row in inv:
                for e in row:
                    expect = expect * e.denominator // __import__("math").gcd(expect, e.denominator)
            assert d == expect

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            scaled_inverse(IntMatrix([[1, 1], [1, 1]]))


class TestHermiteForm:
    def test_empty_generators(self):
        assert hermite_form([], 5, dim=2) == IntMatrix.diagonal([5, 5])

    def test_single_generator_membership_count(self):
        basis = hermite_form([(1, 1)], 5)
        members = [v for v in product(range(5), repeat=2)
                   if lattice_contains(basis, v)]
        assert len(members) == 5
        assert (1, 1) in [tuple(m) for m in members]

    def test_direct_span(self):
        assert hermite_form([(2, 0), (0, 2)], 4) == IntMatrix.diagonal([2, 2])

    def test_idempotent_and_permutation_invariant(self, rng):
        for _ in range(30):
            dim = rng.randint(1, 4)
            modulus = rng.randint(1, 8)
            gens = [[rng.randrange(modulus or 1) for _ in range(dim)]
                    for _ in range(rng.randint(0, 4))]
            h = hermite_form(gens, modulus, dim=dim)
            assert hermite_form(h.rows, modulus, dim=dim) == h
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert hermite_form(shuffled + gens, modulus, dim=dim) == h
            # triangular shape with reduced residues
            for i, row in enumerate(h.rows):
                assert all(e == 0 for e in row[i + 1:])
                assert row[i] > 0
                assert all(0 <= row[j] < h.rows[j][j] for j in range(i))

    def test_index_matches_brute_force_order(self, rng):
        from conftest import brute_force_span
        for modulus in (2, 3, 4, 5, 6):
            for _ in range(6):
                dim = rng.randint(1, 3)
                gens = [[rng.randrange(modulus) for _ in range(dim)]
                        for _ in range(rng.randint(0, 3))]
                h = hermite_form(gens, modulus, dim=dim)
                index = 1
                for i in range(dim):
                    index *= h.rows[i][i]
                order = modulus ** dim // index
                assert order == len(brute_force_span(gens, modulus, dim))


class TestRationalRank:
    def test_zero(self):
        assert rational_rank([[0, 0], [0, 0]]) == 0

    def test_identity(self):
        for k in (1, 3, 5):
            assert rational_rank(IntMatrix.identity(k).rows) == k

    def test_hand_example(self):
        assert rational_rank([[1, 2], [2, 4], [1, 0]]) == 2

    def test_fractions(self):
        rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]
        assert rational_rank(rows) == 1  # second row is 3 times the first
        rows[1][1] += Fraction(1, 7)
        assert rational_rank(rows) == 2

    def test_against_minor_oracle(self, rng):
        for _ in range(25):
            m = rng.randint(1, 4)
            n = rng.randint(1, 4)
            rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
            assert rational_rank(rows) == minor_rank(rows)

    def test_sparse_rank_agrees(self, rng):
        for _ in range(20):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
            sparse = [{j: e for j, e in enumerate(row) if e} for row in rows]
            assert sparse_rank(s for s in sparse if s) == rational_rank(rows)


class TestSolveCongruences:
    def test_no_rows_is_full_lattice(self):
        assert solve_congruences([], 7, dim=3) == IntMatrix.identity(3)

    def test_parity_plane(self):
        basis = solve_congruences([(1, 1)], 2)
        for v in product(range(-2, 3), repeat=2):
            assert lattice_contains(basis, v) == ((v[0] + v[1]) % 2 == 0)

    def test_unit_rows(self):
        assert solve_congruences([(1, 0), (0, 1)], 3) == IntMatrix.diagonal([3, 3])

    def test_brute_force_residues(self, rng):
        for modulus in (2, 3, 4, 5, 6):
            for _ in range(6):
                dim = rng.randint(1, 3)
                rows = [[rng.randrange(modulus) for _ in range(dim)]
                        for _ in range(rng.randint(1, 3))]
                basis = solve_congruences(rows, modulus, dim=dim)
                for v in product(range(modulus), repeat=dim):
                    direct = all(sum(a * b for a, b in zip(r, v)) % modulus == 0
                                 for r in rows)
                    assert lattice_contains(basis, v) == direct

    def test_contains_scaled_lattice(self, rng):
        for _ in range(10):
            dim = rng.randint(1, 3)
            modulus = rng.randint(2, 6)
            rows = [[rng.randrange(modulus) for _ in range(dim)]]
            basis = solve_congruences(rows, modulus, dim=dim)
            for i in range(dim):
                unit = [0] * dim
                unit[i] = modulus
                assert lattice_contains(basis, unit)


class TestMembershipCongruences:
    def test_round_trip(self, rng):
        for _ in range(15):
            dim = rng.randint(1, 3)
            modulus = rng.randint(2, 6)
            gens = [[rng.randrange(modulus) for _ in range(dim)]
                    for _ in range(rng.randint(0, 2))]
            basis = hermite_form(gens, modulus, dim=dim)
            crows, cmod = membership_congruences(basis)
            for v in product(range(modulus), repeat=dim):
                by_congruence = all(x % cmod == 0 for x in crows.mul_vec(v))
                assert by_congruence == lattice_contains(basis, v)
