"""Finite diagonal symmetry groups of a potential.

Group elements are tuples of roots of unity, stored as reduced rational
phases.  Whole groups are stored as integer lattices: the group G at
denominator D corresponds to the lattice {v in Z^(n+1) : v/D mod 1 in G},
which always contains D*Z^(n+1).  All group arithmetic (spans, preimages,
intersections, duals) happens on these lattices, exactly; element-by-element
enumeration is reserved for small groups and test oracles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import (EnumerationLimitError, NotAnAutomorphismError,
                     NotSpecialLinearError)
from .exact import (IntMatrix, hermite_form, lattice_contains,
                    solve_congruences, vec_gcd)
from .potential import AtomicPiece, InvertiblePotential, transpose_potential

DEFAULT_ENUMERATION_LIMIT = 100_000


@dataclass(frozen=True)
class PhaseVector:
    """A tuple of roots of unity e^(2*pi*i*num_j/den), in canonical form.

    Canonical means 0 <= num_j < den and gcd(num_0, ..., num_n, den) = 1;
    the identity is all zeros over denominator 1.  The denominator of the
    canonical form equals the order of the element.
    """

    nums: tuple[int, ...]
    den: int

    @classmethod
    def of(cls, nums: Iterable[int], den: int) -> "PhaseVector":
        if den < 1:
            raise ValueError("denominator must be positive")
        reduced = [n % den for n in nums]
        g = gcd(vec_gcd(reduced), den)
        return cls(tuple(n // g for n in reduced), den // g)

    @classmethod
    def identity(cls, dim: int) -> "PhaseVector":
        return cls((0,) * dim, 1)

    @property
    def dim(self) -> int:
        return len(self.nums)

    @property
    def order(self) -> int:
        return self.den

    @property
    def is_identity(self) -> bool:
        return self.den == 1

    def phase(self, i: int) -> Fraction:
        return Fraction(self.nums[i], self.den)

    def phases(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def nums_at(self, den: int) -> tuple[int, ...]:
        if den % self.den:
            raise ValueError(f"cannot represent order-{self.den} element at denominator {den}")
        k = den // self.den
        return tuple(n * k for n in self.nums)

    def __add__(self, other: "PhaseVector") -> "PhaseVector":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        den = lcm(self.den, other.den)
        a, b = self.nums_at(den), other.nums_at(den)
        return PhaseVector.of([x + y for x, y in zip(a, b)], den)

    def __neg__(self) -> "PhaseVector":
        return PhaseVector.of([-n for n in self.nums], self.den)

    def __mul__(self, k: int) -> "PhaseVector":
        return PhaseVector.of([k * n for n in self.nums], self.den)


@dataclass(frozen=True)
class PhaseGroup:
    """Finite group of phase vectors, canonically presented.

    ``den`` is the exponent of the group (the smallest usable denominator)
    and ``basis`` the lower-triangular Hermite basis of the corresponding
    lattice, so equal groups compare equal structurally even when they were
    produced at different denominators.
    """

    dim: int
    den: int
    basis: IntMatrix
    order: int

    @classmethod
    def span(cls, dim: int, den: int, gens: Iterable[Sequence[int]]) -> "PhaseGroup":
        """Group generated by integer phase rows over a common denominator."""
        basis = hermite_form(gens, den, dim)
        exponent = 1
        for row in basis.rows:
            exponent = lcm(exponent, den // gcd(vec_gcd(row), den))
        if exponent != den:
            k = den // exponent
            basis = hermite_form([[e // k for e in row] for row in basis.rows],
                                 exponent, dim)
        order = exponent ** dim
        for i in range(dim):
            order //= basis.rows[i][i]
        return cls(dim, exponent, basis, order)

    @classmethod
    def from_phases(cls, dim: int, phases: Iterable[PhaseVector]) -> "PhaseGroup":
        phases = list(phases)
        den = 1
        for ph in phases:
            den = lcm(den, ph.den)
        return cls.span(dim, den, [ph.nums_at(den) for ph in phases])

    @classmethod
    def trivial(cls, dim: int) -> "PhaseGroup":
        return cls.span(dim, 1, [])

    def lattice_at(self, den: int) -> IntMatrix:
        """Hermite basis of {v : v/den mod 1 in group}; den must be a multiple."""
        if den % self.den:
            raise ValueError(f"denominator {den} incompatible with exponent {self.den}")
        k = den // self.den
        if k == 1:
            return self.basis
        return IntMatrix([[k * e for e in row] for row in self.basis.rows])

    def contains(self, ph: PhaseVector) -> bool:
        if ph.dim != self.dim:
            raise ValueError("dimension mismatch")
        if self.den % ph.den:
            return False
        return lattice_contains(self.basis, ph.nums_at(self.den))

    def __contains__(self, ph: PhaseVector) -> bool:
        return self.contains(ph)

    def is_subgroup_of(self, other: "PhaseGroup") -> bool:
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        if other.den % self.den:
            return False
        target = other.lattice_at(lcm(self.den, other.den))
        mine = self.lattice_at(lcm(self.den, other.den))
        return all(lattice_contains(target, row) for row in mine.rows)

    def generators(self) -> tuple[PhaseVector, ...]:
        """Canonical generating set: the Hermite basis rows as phases."""
        return tuple(PhaseVector.of(row, self.den) for row in self.basis.rows)

    def elements(self, limit: int = DEFAULT_ENUMERATION_LIMIT) -> list[PhaseVector]:
        """All elements, for small groups; deterministic order."""
        if self.order > limit:
            raise EnumerationLimitError(
                f"group of order {self.order} exceeds enumeration limit {limit}")
        ranges = [range(self.den // self.basis.rows[i][i]) for i in range(self.dim)]
        out = []
        for coeffs in itertools.product(*ranges):
            nums = [0] * self.dim
            for c, row in zip(coeffs, self.basis.rows):
                if c:
                    nums = [x + c * e for x, e in zip(nums, row)]
            out.append(PhaseVector.of(nums, self.den))
        return out

    def project(self, indices: Sequence[int]) -> "PhaseGroup":
        """Image under the projection onto a subset of coordinates."""
        rows = [[row[i] for i in indices] for row in self.basis.rows]
        return PhaseGroup.span(len(indices), self.den, rows)


@dataclass(frozen=True)
class OrbifoldDescriptor:
    """A potential together with an admissible symmetry group J <= G <= SL."""

    potential: InvertiblePotential
    group: PhaseGroup
    quotient_order: int

    @property
    def j(self) -> PhaseGroup:
        return j_group(self.potential)


def aut_group(p: InvertiblePotential) -> PhaseGroup:
    """Full diagonal symmetry group, generated by the columns of B over d."""
    cols = p.b.transpose().rows
    return PhaseGroup.span(p.nvars, p.d, cols)


def j_group(p: InvertiblePotential) -> PhaseGroup:
    """Cyclic group generated by the weight phases q/d (ambient scalings)."""
    return PhaseGroup.span(p.nvars, p.d, [p.weights])


def sl_group(p: InvertiblePotential) -> PhaseGroup:
    """Symmetries whose coordinate phases sum to an integer."""
    rows = [list(row) for row in p.a.rows]
    rows.append([1] * p.nvars)
    basis = solve_congruences(rows, p.d, dim=p.nvars)
    return PhaseGroup.span(p.nvars, p.d, basis.rows)


def atomic_generators(piece: AtomicPiece) -> list[PhaseVector]:
    """Explicit cyclic generator of the symmetry group of one atomic summand.

    Local coordinates, in the order of piece.variables.  Cross-checks the
    lattice construction: the span must equal the restriction of the full
    group to the piece.
    """
    exps = piece.exponents
    m = len(exps)
    if piece.kind == "fermat":
        return [PhaseVector.of((1,), exps[0])]
    if piece.kind == "loop":
        den = piece.symmetry_order
        if den == 0:
            raise ValueError("degenerate loop")
        nums = [(-1) ** m]
        for i in range(2, m + 1):
            prefix = 1
            for a in exps[: i - 1]:
                prefix *= a
            nums.append((-1) ** (m + 1 - i) * prefix)
        return [PhaseVector.of(nums, den)]
    if piece.kind == "chain":
        den = piece.symmetry_order
        nums = []
        for i in range(1, m + 1):
            prefix = 1
            for a in exps[: i - 1]:
                prefix *= a
            nums.append((-1) ** (m + i) * prefix)
        return [PhaseVector.of(nums, den)]
    raise ValueError(f"unknown piece kind {piece.kind!r}")


def monomial_character(group_elt: PhaseVector, exponents: Sequence[int]) -> Fraction:
    """Phase picked up by a monomial under a group element, in [0, 1)."""
    if len(exponents) != group_elt.dim:
        raise ValueError("dimension mismatch")
    dot = sum(e * n for e, n in zip(exponents, group_elt.nums))
    return Fraction(dot, group_elt.den) % 1


def is_automorphism(p: InvertiblePotential, ph: PhaseVector) -> bool:
    """Does the phase vector leave every monomial of the potential invariant?"""
    if ph.dim != p.nvars:
        raise ValueError("dimension mismatch")
    return all(v % ph.den == 0 for v in p.a.mul_vec(ph.nums))


def make_orbifold(p: InvertiblePotential, group: PhaseGroup,
                  require_sl: bool = True) -> OrbifoldDescriptor:
    """Wrap a group that already satisfies J <= G <= SL, verifying the chain.

    ``require_sl=False`` skips the SL check; the dual construction itself only
    needs J <= G <= Aut, which lets non-Calabi-Yau desk examples through.
    """
    j = j_group(p)
    if not j.is_subgroup_of(group):
        raise NotSpecialLinearError("group does not contain the ambient scalings J")
    for ph in group.generators():
        if not is_automorphism(p, ph):
            raise NotAnAutomorphismError(f"{ph.nums}/{ph.den} does not preserve the potential")
        if require_sl and sum(ph.nums) % ph.den:
            raise NotSpecialLinearError(
                f"SL violation: {ph.nums}/{ph.den} has nonintegral determinant phase")
    quotient, rem = divmod(group.order, j.order)
    if rem:
        raise NotSpecialLinearError("group order not divisible by |J|")
    return OrbifoldDescriptor(p, group, quotient)


def build_orbifold(p: InvertiblePotential, gens: Iterable[PhaseVector],
                   require_sl: bool = True) -> OrbifoldDescriptor:
    """Orbifold for the group spanned by the given phases together with J."""
    gens = list(gens)
    for ph in gens:
        if not is_automorphism(p, ph):
            raise NotAnAutomorphismError(f"{ph.nums}/{ph.den} does not preserve the potential")
    j_gen = PhaseVector.of(p.weights, p.d)
    group = PhaseGroup.from_phases(p.nvars, gens + [j_gen])
    return make_orbifold(p, group, require_sl=require_sl)


def dual_group(orb: OrbifoldDescriptor) -> PhaseGroup:
    """Dual symmetry group on the transposed potential.

    The exponent vectors s of G-invariant monomials form a lattice; pushing
    it through B^T over d gives the dual group.  It always sits between J
    and SL of the transposed potential.
    """
    p = orb.potential
    g = orb.group
    invariant = solve_congruences(g.basis.rows, g.den, dim=g.dim)
    bt = p.b.transpose()
    return PhaseGroup.span(p.nvars, p.d, [bt.mul_vec(s) for s in invariant.rows])


def mirror_orbifold(orb: OrbifoldDescriptor) -> OrbifoldDescriptor:
    """The transposed potential with the dual group."""
    return make_orbifold(transpose_potential(orb.potential), dual_group(orb))
