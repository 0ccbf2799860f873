"""Finite permutation groups, del Pezzo line configurations and Jordan constants."""

__version__ = "0.1.0"

from .perms import (GroupHom, PermGroup, Permutation, alternating_group, are_conjugate, centralizer,
                    conjugacy_classes, cyclic_group, dihedral_group, direct_product, element_order,
                    generate, normal_subgroups, normalizer, semidirect_product, subgroups,
                    swap_wreath, symmetric_group)
from .extensions import TableGroup, enumerate_extensions, regular_representation
from .picard import (LineConfig, LineGraph, PicClass, blowup_config, graph_automorphisms,
                     hexagon_structure_check, intersection)
from .weyl import SignedPerm, fixed_lines, full_group, line_action, rho
from .jordan import JordanResult, commuting_subgroup_pairs, isaacs_bound_check, jordan_constant, nu
