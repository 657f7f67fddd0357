"""Arborescences of rooted digraphs, their flip graphs, and pivot Gray codes."""

from .arborescence import Arborescence, Flip, apply_flip, is_arborescence, legal_flips
from .digraph import Arc, DiGraph, format_digraph, parse_digraph
from .errors import (ArbograyError, BudgetExceeded, GraphError, IllegalFlipError,
                     InternalInconsistency, NoCompletionError, ParseError, PreconditionError)
from .graycode import GrayPath, gray_code_clique_support, spanning_tree_pivot_gray_code
from .oracle import (build_flip_graph, count_arborescences_matrix_tree, enumerate_arborescences,
                     verify_gray_code)

__version__ = "0.1.0"
