"""Exact integer and rational linear algebra kernel.

Symmetry groups, group transport and Hodge counts are all built on the
primitives in this module: integer determinants, scaled inverses, canonical
lattice bases and exact ranks.  No floating point is used anywhere.

Finite-index sublattices of Z^n that contain m*Z^n are stored through their
Hermite basis.  The convention, fixed once and used for every equality check
in the package, is *lower triangular rows*: basis row i is supported on
columns 0..i, diagonal entries are positive, and entries below a pivot are
reduced into [0, pivot).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import SingularMatrixError

Vector = Sequence[int]


class IntMatrix:
    """Immutable matrix of arbitrary-precision integers, row major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(int(e) for e in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        self.rows: tuple[tuple[int, ...], ...] = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows))

    def scaled(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * e for e in row] for row in self.rows])

    def mul_vec(self, v: Vector) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum(e * x for e, x in zip(row, v)) for row in self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = other.transpose().rows
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({list(map(list, self.rows))})"


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with g = x*a + y*b and g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def determinant(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if not m.is_square:
        raise ValueError("determinant needs a square matrix")
    a = [list(row) for row in m.rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_inverse(m: IntMatrix) -> list[list[Fraction]]:
    """Inverse over Q via Gauss-Jordan elimination."""
    if not m.is_square:
        raise ValueError("inverse needs a square matrix")
    n = m.nrows
    work = [[Fraction(e) for e in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(m.rows)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col]), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        inv = 1 / work[col][col]
        work[col] = [e * inv for e in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                c = work[r][col]
                work[r] = [e - c * p for e, p in zip(work[r], work[col])]
    return [row[n:] for row in work]


def scaled_inverse(m: IntMatrix) -> tuple[int, IntMatrix]:
    """Smallest positive d with d*m^-1 integral, together with that matrix.

    Satisfies m @ b == b @ m == d * identity.
    """
    inv = rational_inverse(m)
    d = 1
    for row in inv:
        for e in row:
            d = lcm(d, e.denominator)
    b = IntMatrix([[int(e * d) for e in row] for row in inv])
    return d, b


def _lower_hnf(rows: list[list[int]], dim: int) -> list[list[int]]:
    """Canonical lower-triangular Hermite basis of a full-rank row lattice."""
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = [[] for _ in range(dim)]
    for col in range(dim - 1, -1, -1):
        pivot: list[int] | None = None
        rest: list[list[int]] = []
        for row in work:
            if row[col] == 0:
                rest.append(row)
                continue
            if pivot is None:
                pivot = row
                continue
            a, b = pivot[col], row[col]
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            folded = [x * p + y * r for p, r in zip(pivot, row)]
            cleared = [ag * r - bg * p for p, r in zip(pivot, row)]
            pivot = folded
            if any(cleared):
                rest.append(cleared)
        if pivot is None:
            raise ValueError("generators do not span a full-rank lattice")
        if pivot[col] < 0:
            pivot = [-e for e in pivot]
        basis[col] = pivot
        work = rest
    for i in range(dim):
        for j in range(i - 1, -1, -1):
            q = basis[i][j] // basis[j][j]
            if q:
                basis[i] = [e - q * f for e, f in zip(basis[i], basis[j])]
    return basis


def hermite_form(gens: Iterable[Vector], modulus: int, dim: int | None = None) -> IntMatrix:
    """Canonical basis of the lattice spanned by gens plus modulus*Z^dim.

    The result does not depend on the order of the generators or on
    redundant generators; feeding the output back in reproduces it.
    """
    gen_rows = [list(map(int, g)) for g in gens]
    if dim is None:
        if not gen_rows:
            raise ValueError("dim is required when no generators are given")
        dim = len(gen_rows[0])
    if any(len(g) != dim for g in gen_rows):
        raise ValueError("generator length mismatch")
    if modulus < 1:
        raise ValueError("modulus must be positive")
    scaled = [[modulus if j == i else 0 for j in range(dim)] for i in range(dim)]
    return IntMatrix(_lower_hnf(gen_rows + scaled, dim))


def solve_congruences(rows: Iterable[Vector], rhs_modulus: int,
                      dim: int | None = None) -> IntMatrix:
    """Canonical basis of {s in Z^dim : r . s = 0 (mod rhs_modulus) for all r}.

    The solution lattice always contains rhs_modulus * Z^dim.  Internally the
    system is lifted to Z^(dim+k): s solves the congruences exactly when
    (s, 0) lies in the lattice spanned by [I | R^T] and [0 | m*I], and the
    triangular shape of the Hermite basis hands back the s-block directly.
    """
    row_list = [list(map(int, r)) for r in rows]
    if dim is None:
        if not row_list:
            raise ValueError("dim is required when no congruences are given")
        dim = len(row_list[0])
    if any(len(r) != dim for r in row_list):
        raise ValueError("congruence row length mismatch")
    if rhs_modulus < 1:
        raise ValueError("modulus must be positive")
    k = len(row_list)
    if k == 0:
        return IntMatrix.identity(dim)
    stacked = []
    for i in range(dim):
        stacked.append([int(i == j) for j in range(dim)] + [r[i] for r in row_list])
    for t in range(k):
        stacked.append([0] * dim + [rhs_modulus * int(u == t) for u in range(k)])
    full = _lower_hnf(stacked, dim + k)
    return IntMatrix([row[:dim] for row in full[:dim]])


def lattice_contains(basis: IntMatrix, v: Vector) -> bool:
    """Membership test against a lower-triangular Hermite basis."""
    if len(v) != basis.ncols:
        raise ValueError("dimension mismatch")
    rem = list(v)
    for i in range(len(rem) - 1, -1, -1):
        pivot = basis.rows[i][i]
        if rem[i] % pivot:
            return False
        c = rem[i] // pivot
        if c:
            rem = [e - c * f for e, f in zip(rem, basis.rows[i])]
    return True

def membership_congruences(basis: IntMatrix) -> tuple[IntMatrix, int]:
    """Rewrite lattice membership as a congruence system.

    Returns (C, q) with: w in the row lattice of ``basis``  iff  C @ w = 0
    (mod q), where q = |det basis| and C is the adjugate of basis^T.
    """
    det = determinant(basis)
    if det == 0:
        raise SingularMatrixError("basis is not full rank")
    inv = rational_inverse(basis.transpose())
    q = abs(det)
    rows = []
    for row in inv:
        scaled = [e * q for e in row]
        if any(e.denominator != 1 for e in scaled):
            raise ArithmeticError("adjugate scaling failed")
        rows.append([int(e) for e in scaled])
    return IntMatrix(rows), q


def sparse_rank(rows: Iterable[dict[int, int | Fraction]]) -> int:
    """Exact rank over Q of rows given as {column: value} maps."""
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        work = {j: Fraction(v) for j, v in row.items() if v}
        while work:
            lead = min(work)
            piv = pivots.get(lead)
            if piv is None:
                scale = work[lead]
                pivots[lead] = {j: v / scale for j, v in work.items()}
                rank += 1
                break
            c = work.pop(lead)
            for j, v in piv.items():
                if j == lead:
                    continue
                nv = work.get(j, 0) - c * v
                if nv:
                    work[j] = nv
                else:
                    work.pop(j, None)
    return rank


def rational_rank(rows: Iterable[Sequence[int | Fraction]]) -> int:
    """Exact rank over Q of a dense matrix given as rows.

    Deterministic regardless of pivoting: rank is basis independent.
    """
    sparse = []
    for row in rows:
        entries = {j: v for j, v in enumerate(row) if v}
        if entries:
            sparse.append(entries)
    return sparse_rank(sparse)


def vec_gcd(v: Iterable[int]) -> int:
    g = 0
    for e in v:
        g = gcd(g, e)
    return g
