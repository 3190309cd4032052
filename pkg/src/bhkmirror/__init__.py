"""Exact tools for transposition mirrors of invertible potentials.

Build a potential from its exponent matrix, attach an admissible symmetry
group, and this package computes the dual (mirror) orbifold, transports the
groups to a common Fermat quotient model certifying birationality of
multiple mirrors, and evaluates invariant and Chen-Ruan Hodge diamonds.
"""

from .exact import (IntMatrix, determinant, hermite_form, rational_rank,
                    scaled_inverse, solve_congruences)
from .potential import (AtomicPiece, InvertiblePotential, build_potential,
                        decompose_atomic, evaluate_numeric, fermat_potential,
                        transpose_potential)
from .symmetry import (OrbifoldDescriptor, PhaseGroup, PhaseVector, aut_group,
                       atomic_generators, build_orbifold, dual_group, j_group,
                       make_orbifold, mirror_orbifold, monomial_character,
                       sl_group)
from .shioda import (BirationalModel, ComparisonReport, MonomialMap,
                     birational_model, compare_mirrors, evaluate_map_numeric,
                     pairing, perp_group, preimage_group, pushforward,
                     pushforward_group, shioda_map)
from .hodge import (CharacterConstraint, HodgeDiamond, MirrorCheckReport,
                    Restriction, Sector, age, cr_diamond, enumerate_sectors,
                    graded_jacobian_dim, invariant_hypersurface_diamond,
                    mirror_check, restrict_potential)

__version__ = "0.1.0"

__all__ = [
    "IntMatrix", "determinant", "scaled_inverse", "hermite_form",
    "rational_rank", "solve_congruences",
    "AtomicPiece", "InvertiblePotential", "build_potential",
    "decompose_atomic", "transpose_potential", "fermat_potential",
    "evaluate_numeric",
    "PhaseVector", "PhaseGroup", "OrbifoldDescriptor", "aut_group", "j_group",
    "sl_group", "atomic_generators", "monomial_character", "build_orbifold",
    "make_orbifold", "dual_group", "mirror_orbifold",
    "MonomialMap", "BirationalModel", "ComparisonReport", "shioda_map",
    "pushforward", "pushforward_group", "preimage_group", "pairing",
    "perp_group", "birational_model", "compare_mirrors",
    "evaluate_map_numeric",
    "Restriction", "Sector", "CharacterConstraint", "HodgeDiamond",
    "MirrorCheckReport", "age", "restrict_potential", "enumerate_sectors",
    "graded_jacobian_dim", "invariant_hypersurface_diamond", "cr_diamond",
    "mirror_check",
]
