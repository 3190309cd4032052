"""Invertible quasihomogeneous potentials and their atomic structure.

A potential is stored through its square exponent matrix A: monomial i is
the product of x_j^A[i][j].  Admissible matrices are invertible, have a
positive weight system, and split into the three atomic monomial patterns
(pure power, loop, chain).  The split doubles as the decidable stand-in for
non-degeneracy: a summand pattern that cannot be matched is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ConditionError
from .exact import IntMatrix, determinant, scaled_inverse


@dataclass(frozen=True)
class AtomicPiece:
    """One pure-power, loop or chain summand on an ordered set of variables."""

    kind: str  # "fermat" | "loop" | "chain"
    variables: tuple[int, ...]
    exponents: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.variables)

    @property
    def symmetry_order(self) -> int:
        """Order of the diagonal symmetry group of this summand alone."""
        prod = 1
        for a in self.exponents:
            prod *= a
        if self.kind == "loop":
            return prod + (-1) ** (self.size + 1)
        return prod


@dataclass(frozen=True)
class InvertiblePotential:
    """Validated potential with its scaled inverse and weight system."""

    a: IntMatrix
    d: int
    b: IntMatrix
    weights: tuple[int, ...]
    scale: int
    det: int
    reduced_weights: tuple[int, ...]
    reduced_degree: int
    calabi_yau: bool
    gorenstein: bool
    pieces: tuple[AtomicPiece, ...]

    @property
    def nvars(self) -> int:
        return self.a.nrows

    @property
    def degree(self) -> int:
        return self.d

    def __repr__(self) -> str:
        return (f"InvertiblePotential(weights={self.weights}, degree={self.d}, "
                f"monomials={[list(r) for r in self.a.rows]})")


def _head_assignment(candidates: list[list[int]]) -> dict[int, int] | None:
    """Match each monomial to a distinct head variable, if possible."""
    n = len(candidates)
    order = sorted(range(n), key=lambda ri: len(candidates[ri]))
    assignment: dict[int, int] = {}
    used: set[int] = set()

    def place(k: int) -> bool:
        if k == n:
            return True
        ri = order[k]
        for v in candidates[ri]:
            if v not in used:
                used.add(v)
                assignment[ri] = v
                if place(k + 1):
                    return True
                used.remove(v)
                del assignment[ri]
        return False

    return assignment if place(0) else None


def atomic_pieces(a: IntMatrix) -> tuple[AtomicPiece, ...]:
    """Split an exponent matrix into atomic summands.

    Each monomial is either a pure power x^e (e >= 2) or of the form
    x_head^e * x_tail.  Heads are matched bijectively to variables; the
    induced head -> tail map must then consist of disjoint paths (chains,
    ending in a pure power) and cycles (loops).  Raises ConditionError(3)
    when no such structure exists.
    """
    if not a.is_square:
        raise ValueError("exponent matrix must be square")
    n = a.nrows
    supports: list[dict[int, int]] = []
    for ri, row in enumerate(a.rows):
        if any(e < 0 for e in row):
            raise ConditionError(3, f"monomial {ri} has a negative exponent")
        sup = {j: e for j, e in enumerate(row) if e}
        if not sup or len(sup) > 2:
            raise ConditionError(3, f"monomial {ri} must involve one or two variables")
        supports.append(sup)

    candidates: list[list[int]] = []
    for ri, sup in enumerate(supports):
        cands = []
        if len(sup) == 1:
            ((v, e),) = sup.items()
            if e < 2:
                raise ConditionError(3, f"pure power monomial {ri} needs exponent >= 2")
            cands.append(v)
        else:
            (v1, e1), (v2, e2) = sorted(sup.items())
            if e2 == 1:
                cands.append(v1)
            if e1 == 1:
                cands.append(v2)
            if not cands:
                raise ConditionError(3, f"monomial {ri} does not match an atomic pattern")
        candidates.append(cands)

    heads = _head_assignment(candidates)
    if heads is None:
        raise ConditionError(3, "monomials do not admit an atomic decomposition")

    row_of = {heads[ri]: ri for ri in range(n)}
    nxt: dict[int, int] = {}
    tails: set[int] = set()
    for ri in range(n):
        h = heads[ri]
        sup = supports[ri]
        if len(sup) == 2:
            t = next(v for v in sup if v != h)
            nxt[h] = t
            if t in tails:
                raise ConditionError(3, f"variable {t} appears as a tail twice")
            tails.add(t)

    pieces: list[AtomicPiece] = []
    seen: set[int] = set()
    for v in range(n):
        if v in seen or v in tails:
            continue
        comp = [v]
        seen.add(v)
        while comp[-1] in nxt:
            comp.append(nxt[comp[-1]])
            seen.add(comp[-1])
        exps = tuple(supports[row_of[u]][u] for u in comp)
        kind = "fermat" if len(comp) == 1 else "chain"
        pieces.append(AtomicPiece(kind, tuple(comp), exps))
    for v in range(n):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        w = nxt[v]
        while w != v:
            comp.append(w)
            seen.add(w)
            w = nxt[w]
        exps = tuple(supports[row_of[u]][u] for u in comp)
        pieces.append(AtomicPiece("loop", tuple(comp), exps))
    pieces.sort(key=lambda piece: piece.variables[0])
    return tuple(pieces)


def build_potential(a, scale: int = 1) -> InvertiblePotential:
    """Validate an exponent matrix and derive (d, B, weights, flags).

    d is the smallest positive integer making d*A^-1 integral, multiplied by
    the optional scale (everything downstream is invariant under that
    rescaling; it exists to reproduce non-minimal presentations).
    """
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    if not a.is_square:
        raise ValueError("exponent matrix must be square")
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    det = determinant(a)
    if det == 0:
        raise ConditionError(1, "exponent matrix is singular")
    d0, b0 = scaled_inverse(a)
    d = scale * d0
    b = b0.scaled(scale)
    weights = tuple(sum(row) for row in b.rows)
    if any(q <= 0 for q in weights):
        raise ConditionError(2, f"weight system {weights} is not positive")
    pieces = atomic_pieces(a)
    g = 0
    for q in weights:
        g = gcd(g, q)
    return InvertiblePotential(
        a=a,
        d=d,
        b=b,
        weights=weights,
        scale=scale,
        det=det,
        reduced_weights=tuple(q // g for q in weights),
        reduced_degree=d // g,
        calabi_yau=sum(weights) == d,
        gorenstein=all(d % q == 0 for q in weights),
        pieces=pieces,
    )


def decompose_atomic(p: InvertiblePotential) -> tuple[AtomicPiece, ...]:
    """Atomic summands, ordered by smallest variable index."""
    return p.pieces


def transpose_potential(p: InvertiblePotential) -> InvertiblePotential:
    """Potential of the transposed exponent matrix, at the same scale.

    The minimal scaling d is the same on both sides, so phase denominators
    match and groups on the two sides can be compared coordinate-wise.
    """
    return build_potential(p.a.transpose(), scale=p.scale)


def fermat_potential(degree: int, nvars: int, scale: int = 1) -> InvertiblePotential:
    """Sum of pure d-th powers in nvars variables."""
    if degree < 2:
        raise ValueError("degree must be at least 2")
    if nvars < 3:
        raise ValueError("need at least three variables")
    return build_potential(IntMatrix.diagonal([degree] * nvars), scale=scale)


def evaluate_numeric(p: InvertiblePotential, point) -> complex:
    """Evaluate the potential at a complex point (floating arithmetic)."""
    if len(point) != p.nvars:
        raise ValueError("point has the wrong number of coordinates")
    total = 0j
    for row in p.a.rows:
        term = 1 + 0j
        for e, z in zip(row, point):
            if e:
                term *= complex(z) ** e
        total += term
    return total
