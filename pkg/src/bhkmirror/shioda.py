"""Monomial maps from Fermat hypersurfaces and group transport along them.

The rows of the scaled inverse B define a rational map from a Fermat
hypersurface of degree d onto the potential's hypersurface; transposing B
gives the map onto the transposed side.  Pushing symmetry groups forward,
pulling them back, and taking orthogonal complements under the pairing
s^T B h turns mirror statements into exact lattice computations: two
orbifolds with the same symmetry group have mirrors whose Fermat quotient
models literally coincide, which is the birationality certificate this
module produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .errors import NotAnAutomorphismError
from .exact import (IntMatrix, lattice_contains, membership_congruences,
                    solve_congruences)
from .potential import InvertiblePotential, transpose_potential
from .symmetry import OrbifoldDescriptor, PhaseGroup, PhaseVector


@dataclass(frozen=True)
class MonomialMap:
    """Coordinate-wise monomial map: target_j = prod_k source_k^M[j][k]."""

    exponents: IntMatrix
    source_degree: int
    target: InvertiblePotential


@dataclass(frozen=True)
class BirationalModel:
    """A Fermat hypersurface degree and a quotient group containing J.

    The effective quotient is by group/J; two orbifolds sharing a model are
    birational.  Models at different scales are compared through reduce().
    """

    fermat_degree: int
    quotient_group: PhaseGroup

    def __post_init__(self):
        ones = PhaseVector.of((1,) * self.quotient_group.dim, self.fermat_degree)
        if not self.quotient_group.contains(ones):
            raise ValueError("quotient group must contain the Fermat scalings J")
        if self.fermat_degree % self.quotient_group.den:
            raise ValueError("group does not live on the stated Fermat cover")

    def reduce(self) -> "BirationalModel":
        """Equivalent model at the smallest Fermat degree.

        Rescaling the Fermat cover leaves the group lattice untouched, so the
        minimal presentation keeps the lattice and shrinks the degree to the
        smallest one at which all coordinate scalings it needs are present.
        """
        lattice = self.quotient_group.lattice_at(self.fermat_degree)
        dim = self.quotient_group.dim
        degree = 1
        for i in range(dim):
            unit = [0] * dim
            for t in _divisors(self.fermat_degree):
                unit[i] = t
                if lattice_contains(lattice, unit):
                    degree = lcm(degree, t)
                    break
        group = PhaseGroup.span(dim, degree, lattice.rows)
        return BirationalModel(degree, group)


def _divisors(n: int) -> list[int]:
    out = [t for t in range(1, n + 1) if n % t == 0]
    return out


def shioda_map(p: InvertiblePotential, transposed: bool = False,
               scale: int = 1) -> MonomialMap:
    """Monomial map of exponent matrix scale*B (or scale*B^T) from degree scale*d."""
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    matrix = (p.b.transpose() if transposed else p.b).scaled(scale)
    target = transpose_potential(p) if transposed else p
    return MonomialMap(matrix, scale * p.d, target)


def pushforward(mp: MonomialMap, g: PhaseVector) -> PhaseVector:
    """Image of a source phase vector under the monomial map."""
    if mp.source_degree % g.den:
        raise ValueError("phase does not live on the source Fermat hypersurface")
    return PhaseVector.of(mp.exponents.mul_vec(g.nums), g.den)


def pushforward_group(mp: MonomialMap, h: PhaseGroup) -> PhaseGroup:
    """Image group: spanned by the images of the lattice generators."""
    rows = [mp.exponents.mul_vec(v) for v in h.basis.rows]
    return PhaseGroup.span(h.dim, h.den, rows)


def preimage_group(mp: MonomialMap, g: PhaseGroup) -> PhaseGroup:
    """All source phases mapping into g, as a group on the source cover."""
    target = mp.target
    for ph in g.generators():
        if any(v % ph.den for v in target.a.mul_vec(ph.nums)):
            raise NotAnAutomorphismError("group is not made of target symmetries")
    deg = mp.source_degree
    common = lcm(deg, g.den)
    member_rows, member_mod = membership_congruences(g.lattice_at(common))
    k = common // deg
    system = (member_rows @ mp.exponents).scaled(k)
    basis = solve_congruences(system.rows, member_mod, dim=g.dim)
    return PhaseGroup.span(g.dim, deg, basis.rows)


def pairing(s: Sequence[int], h: Sequence[int], b: IntMatrix) -> int:
    """Integer bilinear pairing s^T B h."""
    bh = b.mul_vec(h)
    if len(s) != len(bh):
        raise ValueError("dimension mismatch")
    return sum(x * y for x, y in zip(s, bh))


def perp_group(h: PhaseGroup, b: IntMatrix, modulus: int) -> PhaseGroup:
    """Phases s with s^T B h divisible by the source degree for all h.

    ``modulus`` is the degree of the Fermat cover carrying h; the congruence
    only needs to be imposed on lattice generators.
    """
    lattice = h.lattice_at(modulus)
    rows = [b.mul_vec(v) for v in lattice.rows]
    basis = solve_congruences(rows, modulus, dim=h.dim)
    return PhaseGroup.span(h.dim, modulus, basis.rows)


def birational_model(orb: OrbifoldDescriptor, side: str = "direct",
                     scale: int = 1) -> BirationalModel:
    """Fermat quotient model of the orbifold or of its mirror.

    The direct side is the preimage of the group under the Shioda map; the
    mirror side is its orthogonal complement under the pairing, both on the
    degree scale*d Fermat cover.
    """
    if side not in ("direct", "mirror"):
        raise ValueError("side must be 'direct' or 'mirror'")
    mp = shioda_map(orb.potential, transposed=False, scale=scale)
    h = preimage_group(mp, orb.group)
    if side == "direct":
        return BirationalModel(mp.source_degree, h)
    return BirationalModel(mp.source_degree,
                           perp_group(h, mp.exponents, mp.source_degree))


@dataclass(frozen=True)
class ComparisonReport:
    """Outcome of comparing the mirrors of two orbifolds."""

    groups_equal: bool
    common_degree: int
    mirror_model_first: BirationalModel
    mirror_model_second: BirationalModel
    models_equal: bool
    certificate: BirationalModel | None


def compare_mirrors(orb_a: OrbifoldDescriptor,
                    orb_b: OrbifoldDescriptor) -> ComparisonReport:
    """Compare the mirror models of two orbifolds on a common Fermat cover.

    When the symmetry groups agree the two mirror-side quotient groups must
    coincide at the common degree d*d'; the reduced common model is returned
    as a birationality certificate.  When the groups differ both models are
    still reported, together with whether they happen to coincide.
    """
    if orb_a.potential.nvars != orb_b.potential.nvars:
        raise ValueError("orbifolds live in different numbers of variables")
    groups_equal = orb_a.group == orb_b.group
    model_a = birational_model(orb_a, "mirror", scale=orb_b.potential.d)
    model_b = birational_model(orb_b, "mirror", scale=orb_a.potential.d)
    models_equal = model_a == model_b
    if groups_equal and not models_equal:
        raise AssertionError("equal groups must give equal mirror models")
    certificate = model_a.reduce() if models_equal else None
    return ComparisonReport(
        groups_equal=groups_equal,
        common_degree=model_a.fermat_degree,
        mirror_model_first=model_a,
        mirror_model_second=model_b,
        models_equal=models_equal,
        certificate=certificate,
    )


def evaluate_map_numeric(mp: MonomialMap, point: Sequence[complex]) -> tuple[complex, ...]:
    """Apply the monomial map to a complex point (floating arithmetic)."""
    if len(point) != mp.exponents.ncols:
        raise ValueError("point has the wrong number of coordinates")
    out = []
    for row in mp.exponents.rows:
        value = 1 + 0j
        for e, z in zip(row, point):
            if e == 0:
                continue
            z = complex(z)
            if z == 0 and e < 0:
                raise ZeroDivisionError(
                    "zero coordinate raised to a negative exponent; "
                    "the point is outside the domain of the rational map")
            value *= z ** e
        out.append(value)
    return tuple(out)
