"""Twisted sectors, graded Jacobian counts and Chen-Ruan Hodge diamonds.

The orbifold cohomology of a quotient hypersurface is assembled sector by
sector: every torsion element of the extended symmetry group with a fixed
coordinate subspace meeting the hypersurface contributes the invariant
cohomology of its fixed locus, shifted by its age.  Fixed loci split into
two kinds.  When the restricted potential is nonzero it is again an
invertible potential, quasi-smooth in its own weighted projective space,
and its primitive middle cohomology is counted by character-constrained
graded pieces of the Jacobian ring.  When the restriction vanishes
identically, the fixed subspace lies inside the hypersurface and
contributes ambient classes only; such sectors never come from honest
potential symmetries, and the eigenvalue their twist leaves on the normal
direction shifts their grading (``normal_twist`` below).

Everything is exact: ages, bidegrees and multiplicities are integers or
reduced rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import RestrictionError
from .exact import IntMatrix, determinant, sparse_rank
from .potential import InvertiblePotential, atomic_pieces
from .symmetry import (DEFAULT_ENUMERATION_LIMIT, OrbifoldDescriptor,
                       PhaseGroup, PhaseVector)

__all__ = [
    "Restriction", "Sector", "CharacterConstraint", "HodgeDiamond",
    "MirrorCheckReport", "age", "restrict_potential", "enumerate_sectors",
    "graded_jacobian_dim", "invariant_hypersurface_diamond", "cr_diamond",
    "mirror_check",
]


@dataclass(frozen=True)
class Restriction:
    """A potential cut down to the coordinate subspace of a fixed locus."""

    indices: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]
    degree: int
    kind: str  # "zero" | "empty" | "zero-dimensional" | "positive-dimensional"


@dataclass(frozen=True)
class Sector:
    """One twisted sector: group element, fixed coordinates, age data."""

    gamma: PhaseVector
    fixed_indices: tuple[int, ...]
    restriction: Restriction
    age: Fraction
    normal_twist: Fraction


@dataclass(frozen=True)
class CharacterConstraint:
    """Per-generator character targets cutting out an isotypic piece.

    Entry (phases, den, target): a monomial with exponents s is admitted
    when sum(s_i * phases_i) / den is congruent to target mod 1.
    """

    entries: tuple[tuple[tuple[int, ...], int, Fraction], ...] = ()

    @classmethod
    def trivial(cls) -> "CharacterConstraint":
        return cls(())

    def admits(self, exponents: Sequence[int]) -> bool:
        for phases, den, target in self.entries:
            dot = sum(e * ph for e, ph in zip(exponents, phases))
            if (Fraction(dot, den) - target) % 1:
                return False
        return True

    def shifted(self, variable: int) -> "CharacterConstraint":
        """Constraint for cofactors of the partial derivative by one variable."""
        return CharacterConstraint(tuple(
            (phases, den, (target + Fraction(phases[variable], den)) % 1)
            for phases, den, target in self.entries))


def age(gamma: PhaseVector) -> Fraction:
    """Sum of the fractional rotation angles over the non-fixed coordinates."""
    return Fraction(sum(gamma.nums), gamma.den)


def restrict_potential(p: InvertiblePotential, fixed: Iterable[int]) -> Restriction:
    """Monomials of the potential supported inside a coordinate subset."""
    indices = tuple(sorted(set(fixed)))
    if any(i < 0 or i >= p.nvars for i in indices):
        raise ValueError("fixed indices out of range")
    keep = set(indices)
    rows = []
    for row in p.a.rows:
        if all(e == 0 or j in keep for j, e in enumerate(row)):
            rows.append(tuple(row[i] for i in indices))
    weights = tuple(p.weights[i] for i in indices)
    if not rows:
        kind = "zero"
    elif len(indices) == 1:
        kind = "empty"
    elif len(indices) == 2:
        kind = "zero-dimensional"
    else:
        kind = "positive-dimensional"
    return Restriction(indices, tuple(rows), weights, p.d, kind)


def _sector_candidates(orb: OrbifoldDescriptor, limit: int):
    """All torsion elements of G*C^* fixing at least one coordinate.

    An element fixing coordinate i is g * u^q with u^(q_i) = g_i^(-1), so u
    is a root of unity and finitely many candidates cover everything.  The
    twist u^d on the defining equation is well defined per element and is
    recorded alongside.
    """
    p = orb.potential
    q = p.weights
    seen: dict[PhaseVector, Fraction] = {}
    for g in orb.group.elements(limit):
        nums = g.nums
        for i in range(p.nvars):
            for k in range(q[i]):
                # gamma_j = g_j + q_j * t over the common denominator D * q_i
                t_num = k * g.den - nums[i]
                gamma = PhaseVector.of(
                    [nums[j] * q[i] + q[j] * t_num for j in range(p.nvars)],
                    g.den * q[i],
                )
                twist = Fraction(p.d * t_num, g.den * q[i]) % 1
                prior = seen.get(gamma)
                if prior is None:
                    seen[gamma] = twist
                elif prior != twist:
                    raise AssertionError("inconsistent normal twist for a sector element")
    return seen


def enumerate_sectors(orb: OrbifoldDescriptor,
                      limit: int = DEFAULT_ENUMERATION_LIMIT) -> list[Sector]:
    """Sectors with nonempty fixed locus on the hypersurface, sorted.

    A vanishing restriction means the whole fixed subspace sits inside the
    hypersurface: nonempty for any fixed coordinate.  A nonvanishing
    restriction needs at least two surviving coordinates to cut a nonempty
    projective locus.
    """
    p = orb.potential
    sectors = []
    for gamma, twist in _sector_candidates(orb, limit).items():
        fixed = tuple(j for j, n in enumerate(gamma.nums) if n == 0)
        if not fixed:
            raise AssertionError("sector candidates must fix a coordinate")
        restriction = restrict_potential(p, fixed)
        if restriction.kind == "empty":
            continue
        if restriction.kind != "zero":
            if twist:
                raise AssertionError("nonzero restriction forces a trivial normal twist")
            normal = Fraction(0)
        else:
            normal = twist
        sectors.append(Sector(gamma, fixed, restriction, age(gamma), normal))
    sectors.sort(key=lambda s: s.gamma.phases())
    return sectors


def _weighted_monomials(weights: Sequence[int], total: int) -> list[tuple[int, ...]]:
    """Exponent tuples of a given weighted degree, in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def rec(pos: int, remaining: int, prefix: tuple[int, ...]):
        if pos == len(weights) - 1:
            e, r = divmod(remaining, weights[pos])
            if r == 0:
                out.append(prefix + (e,))
            return
        w = weights[pos]
        for e in range(remaining // w + 1):
            rec(pos + 1, remaining - e * w, prefix + (e,))

    if total < 0:
        return out
    if not weights:
        return [()] if total == 0 else out
    rec(0, total, ())
    return out


def graded_jacobian_dim(monomials: Sequence[Sequence[int]], weights: Sequence[int],
                        delta: int,
                        constraint: CharacterConstraint | None = None) -> int:
    """Dimension of one character-constrained graded piece of the Jacobian ring.

    Counts monomials of weighted degree delta in the admitted character
    class and subtracts the rank of the ideal slice spanned by cofactor
    multiples of the partial derivatives (each derivative is character
    homogeneous, so the slice respects the constraint).
    """
    if delta < 0:
        return 0
    rows = [tuple(r) for r in monomials]
    if not rows:
        raise ValueError("restriction has no monomials")
    if constraint is None:
        constraint = CharacterConstraint.trivial()
    d = sum(e * w for e, w in zip(rows[0], weights))
    basis = [m for m in _weighted_monomials(weights, delta) if constraint.admits(m)]
    if not basis:
        return 0
    index = {m: i for i, m in enumerate(basis)}
    ideal_rows = []
    for j, w in enumerate(weights):
        terms = [
            (row[j], tuple(e - (1 if c == j else 0) for c, e in enumerate(row)))
            for row in rows if row[j]
        ]
        if not terms:
            continue
        cofactor_degree = delta - (d - w)
        if cofactor_degree < 0:
            continue
        shifted = constraint.shifted(j)
        for cof in _weighted_monomials(weights, cofactor_degree):
            if not shifted.admits(cof):
                continue
            entry: dict[int, int] = {}
            for coeff, mono in terms:
                col = index[tuple(a + b for a, b in zip(cof, mono))]
                entry[col] = entry.get(col, 0) + coeff
            entry = {c: v for c, v in entry.items() if v}
            if entry:
                ideal_rows.append(entry)
    return len(basis) - sparse_rank(ideal_rows)


class HodgeDiamond:
    """Multiset of rational bidegrees (p, q) with nonnegative multiplicities."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: dict):
        cleaned = {}
        for (pp, qq), mult in entries.items():
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                cleaned[(Fraction(pp), Fraction(qq))] = int(mult)
        self.dim = dim
        self.entries = cleaned

    def h(self, p, q) -> int:
        return self.entries.get((Fraction(p), Fraction(q)), 0)

    def items(self) -> list[tuple[Fraction, Fraction, int]]:
        """Entries ordered by (p+q, p) ascending."""
        keys = sorted(self.entries, key=lambda pq: (pq[0] + pq[1], pq[0]))
        return [(p, q, self.entries[(p, q)]) for p, q in keys]

    def degree_totals(self) -> dict[Fraction, int]:
        totals: dict[Fraction, int] = {}
        for (p, q), mult in self.entries.items():
            totals[p + q] = totals.get(p + q, 0) + mult
        return totals

    def is_conjugation_symmetric(self) -> bool:
        return all(self.h(q, p) == mult for (p, q), mult in self.entries.items())

    def is_serre_symmetric(self) -> bool:
        n = self.dim
        return all(self.h(n - p, n - q) == mult for (p, q), mult in self.entries.items())

    def __eq__(self, other) -> bool:
        return (isinstance(other, HodgeDiamond)
                and self.dim == other.dim and self.entries == other.entries)

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.entries.items()))))

    def __repr__(self) -> str:
        cells = ", ".join(f"h[{p},{q}]={m}" for p, q, m in self.items())
        return f"HodgeDiamond(dim={self.dim}, {cells})"

    def pretty(self) -> str:
        """Centered text diamond; falls back to a list for fractional degrees."""
        if any(p.denominator != 1 or q.denominator != 1 for p, q in self.entries):
            return "\n".join(f"h^({p},{q}) = {m}" for p, q, m in self.items())
        n = self.dim
        grid = [[str(self.h(p, t - p)) for p in range(t, -1, -1) if 0 <= t - p <= n and 0 <= p <= n]
                for t in range(2 * n, -1, -1)]
        width = max(len(c) for row in grid for c in row) + 2
        span = max(len(row) for row in grid) * width
        return "\n".join("".join(c.center(width) for c in row).center(span).rstrip()
                         for row in grid)


def _group_constraint(group: PhaseGroup, fixed: Sequence[int]) -> CharacterConstraint:
    """Invariance twist for a sector: character must cancel the volume form.

    A middle cohomology class is a monomial times the residue form of the
    surviving coordinates; a symmetry scales that form by the sum of its
    phases on the fixed coordinates, so invariant classes are the ones whose
    monomial character is the opposite of that sum, for every generator.
    """
    entries = []
    for row in group.basis.rows:
        phases = tuple(row[i] for i in fixed)
        target = Fraction(-sum(phases), group.den) % 1
        entries.append((phases, group.den, target))
    return CharacterConstraint(tuple(entries))


def invariant_hypersurface_diamond(sector: Sector,
                                   orb: OrbifoldDescriptor) -> HodgeDiamond:
    """Group-invariant Hodge diamond of one sector's fixed locus.

    Vanishing restriction: the locus is the whole coordinate subspace and
    contributes one invariant ambient class in every (p, p) up to its
    projective dimension.  Otherwise the restriction must itself be an
    invertible potential (this holds for every sector produced by
    enumerate_sectors); ambient classes contribute (p, p) up to the
    hypersurface dimension and the primitive middle row is counted by
    character-constrained Jacobian dimensions.
    """
    r = sector.restriction
    nv = len(r.indices)
    if r.kind == "zero":
        return HodgeDiamond(nv - 1, {(p, p): 1 for p in range(nv)})
    if r.kind == "empty":
        raise RestrictionError("sector has an empty projective fixed locus")
    if len(r.rows) != nv:
        raise RestrictionError(
            "restriction is neither zero nor a square invertible potential")
    sub = IntMatrix(r.rows)
    if determinant(sub) == 0:
        raise RestrictionError("restricted exponent matrix is singular")
    atomic_pieces(sub)  # raises ConditionError when not quasi-smooth
    hyper_dim = nv - 2
    entries: dict[tuple, int] = {}
    for pdeg in range(hyper_dim + 1):
        entries[(pdeg, pdeg)] = entries.get((pdeg, pdeg), 0) + 1
    constraint = _group_constraint(orb.group, sector.fixed_indices)
    total_weight = sum(r.weights)
    for k in range(hyper_dim + 1):
        delta = (k + 1) * r.degree - total_weight
        mult = graded_jacobian_dim(r.rows, r.weights, delta, constraint)
        if mult:
            key = (hyper_dim - k, k)
            entries[key] = entries.get(key, 0) + mult
    return HodgeDiamond(hyper_dim, entries)


def cr_diamond(orb: OrbifoldDescriptor,
               limit: int = DEFAULT_ENUMERATION_LIMIT) -> HodgeDiamond:
    """Chen-Ruan Hodge diamond: age-shifted sum of sector contributions."""
    total: dict[tuple, int] = {}
    for sector in enumerate_sectors(orb, limit):
        sub = invariant_hypersurface_diamond(sector, orb)
        shift = sector.age - sector.normal_twist
        for (p, q), mult in sub.entries.items():
            key = (p + shift, q + shift)
            total[key] = total.get(key, 0) + mult
    return HodgeDiamond(orb.potential.nvars - 2, total)


@dataclass(frozen=True)
class MirrorCheckReport:
    passed: bool
    diamond: HodgeDiamond
    mirror_diamond: HodgeDiamond
    mismatches: tuple[tuple[Fraction, Fraction], ...]


def mirror_check(orb: OrbifoldDescriptor,
                 limit: int = DEFAULT_ENUMERATION_LIMIT) -> MirrorCheckReport:
    """Verify h^(p,q) of the orbifold equals h^(n-1-p,q) of its mirror."""
    from .symmetry import mirror_orbifold

    own = cr_diamond(orb, limit)
    other = cr_diamond(mirror_orbifold(orb), limit)
    n1 = Fraction(own.dim)
    keys = set(own.entries) | {(n1 - p, q) for p, q in other.entries}
    mismatches = tuple(sorted(
        (p, q) for p, q in keys if own.h(p, q) != other.h(n1 - p, q)))
    return MirrorCheckReport(not mismatches, own, other, mismatches)
