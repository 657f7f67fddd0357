"""Constructive pivot Gray codes and their building blocks."""

from .construct import (GrayPath, gray_code_clique_support, load_gray_path, parse_delta_text,
                        spanning_tree_pivot_gray_code, steps_from_arc_lists)
from .lifting import (ContractedInstance, contracted_instance, lift_arborescence,
                      lift_contraction_path, lift_duplication_path, project_arborescence)
from .primitives import (LEFT, RIGHT, gray_path_from_int, hypercube_ham_cycle_through_edge,
                         hypercube_ham_path_from, ladder_cycle_from, ladder_ham_path,
                         ladder_path_to_partner)
from .structure import (FlipCliqueStructure, Ladder, TypePartition, choose_pivot_pair,
                        detect_flip_clique_structure, partition_types)

__all__ = [
    "GrayPath", "gray_code_clique_support", "load_gray_path", "parse_delta_text",
    "spanning_tree_pivot_gray_code", "steps_from_arc_lists",
    "ContractedInstance", "contracted_instance", "lift_arborescence", "lift_contraction_path",
    "lift_duplication_path", "project_arborescence",
    "LEFT", "RIGHT", "gray_path_from_int", "hypercube_ham_cycle_through_edge",
    "hypercube_ham_path_from", "ladder_cycle_from", "ladder_ham_path", "ladder_path_to_partner",
    "FlipCliqueStructure", "Ladder", "TypePartition", "choose_pivot_pair",
    "detect_flip_clique_structure", "partition_types",
]
