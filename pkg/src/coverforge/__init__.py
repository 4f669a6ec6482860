"""Exact invariants of finite Galois branched covers of curves."""

from .cyclotomic import Cyclotomic, format_cyclotomic, parse_cyclotomic, root_of_unity
from .characters import CharacterTable, MatrixRep, character_table, irreducible_matrices
from .datum import (BranchDatum, collide_points, fiber_structure, make_datum, quotient_datum,
                    riemann_hurwitz_genus, validate_datum)
from .localsystem import (chevalley_weil_multiplicity, decompose_direct_image, eigenspace_type,
                          local_system_support, monodromy_blocks, monodromy_matrix,
                          path_basis_report, quotient_monodromy)
from .dihedral import (DihedralBranchProfile, classify_branch_inertia, dihedral_multiplicity_mu_h,
                       infinity_ramification_check)
from .hurwitz import (HurwitzTuple, braid_move, dehn_twist_spectrum, hurwitz_orbit,
                      infinite_monodromy_predicate)
from .io import parse_datum_file, serialize_datum
from .cli import run_command
# after the submodule imports, so that "dihedral" names the group constructor
from .groups import (FiniteGroup, conjugacy_classes, cyclic, dihedral, dihedral_subgroups,
                     make_group, permutation_group, quotient_group, subgroup_generated)

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic", "format_cyclotomic", "parse_cyclotomic", "root_of_unity",
    "FiniteGroup", "conjugacy_classes", "cyclic", "dihedral", "dihedral_subgroups", "make_group",
    "permutation_group", "quotient_group", "subgroup_generated",
    "CharacterTable", "MatrixRep", "character_table", "irreducible_matrices",
    "BranchDatum", "collide_points", "fiber_structure", "make_datum", "quotient_datum",
    "riemann_hurwitz_genus", "validate_datum",
    "chevalley_weil_multiplicity", "decompose_direct_image", "eigenspace_type",
    "local_system_support", "monodromy_blocks", "monodromy_matrix", "path_basis_report",
    "quotient_monodromy",
    "DihedralBranchProfile", "classify_branch_inertia", "dihedral_multiplicity_mu_h",
    "infinity_ramification_check",
    "HurwitzTuple", "braid_move", "dehn_twist_spectrum", "hurwitz_orbit",
    "infinite_monodromy_predicate",
    "parse_datum_file", "serialize_datum", "run_command",
]
