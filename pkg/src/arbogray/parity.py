"""Sign analysis of flip graphs when every vertex has indegree at most two.

Each arc gets a weight in {+1, -1} so that the two arcs entering a vertex have
opposite signs.  The product of the weights along an arborescence flips sign
at every flip, which 2-colours the flip graph; the signed reduced Laplacian
has determinant equal to the signed count and is always 0 or +-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .arborescence import Arborescence, legal_flips
from .digraph import DiGraph, delete_arc, is_built_on
from .errors import InternalInconsistency, PreconditionError
from .oracle import ENUM_BUDGET, enumerate_arborescences, reduced_laplacian


@dataclass(frozen=True)
class ArcWeighting:
    weight: Mapping[int, int]

    def __getitem__(self, arc_id):
        return self.weight[arc_id]


def check_indegree_two(g: DiGraph):
    for v in range(g.n):
        if v == g.root:
            continue
        if len(g.in_arcs[v]) > 2:
            raise PreconditionError(f"vertex {v} has indegree {len(g.in_arcs[v])} > 2")


def assign_arc_weights(g: DiGraph) -> ArcWeighting:
    """Lower arc id gets +1 at each vertex with two incoming arcs; arcs into the root get +1."""
    check_indegree_two(g)
    w = {}
    for v in range(g.n):
        ins = sorted(a.id for a in g.in_arcs[v])
        if v == g.root:
            w.update(dict.fromkeys(ins, 1))
            continue
        for sign, aid in zip((1, -1), ins):
            w[aid] = sign
    return ArcWeighting(w)


def validate_weighting(g: DiGraph, w: ArcWeighting):
    for v in range(g.n):
        if v == g.root:
            continue
        signs = [w[a.id] for a in g.in_arcs[v]]
        if any(s not in (1, -1) for s in signs):
            raise PreconditionError(f"weights into {v} must be +1 or -1")
        if len(signs) == 1 and signs[0] != 1:
            raise PreconditionError(f"the single arc into {v} must weigh +1")
        if len(signs) == 2 and signs[0] == signs[1]:
            raise PreconditionError(f"the two arcs into {v} must have opposite weights")


def tree_weight(arb: Arborescence, w: ArcWeighting) -> int:
    sign = 1
    for aid in arb.parents:
        if aid is None:
            continue
        try:
            sign *= w[aid]
        except KeyError:
            raise PreconditionError(f"no weight for arc {aid}") from None
    return sign


def bipartition_classes(g: DiGraph, w: ArcWeighting | None = None,
                        budget: int = ENUM_BUDGET) -> tuple[int, int]:
    """Sizes of the positive and negative classes of the flip graph."""
    w = w or assign_arc_weights(g)
    pos = neg = 0
    for arb in enumerate_arborescences(g, budget):
        if tree_weight(arb, w) > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg


def signed_laplacian(g: DiGraph, w: ArcWeighting | None = None) -> list[list[int]]:
    """Reduced weighted Laplacian, rows and columns in vertex order without the root.

    Off-diagonal ``L[i][j] = -w(i->j)``; diagonals zero the column sums.
    """
    check_indegree_two(g)
    w = w or assign_arc_weights(g)
    validate_weighting(g, w)
    return reduced_laplacian(g, w.weight)


def _check_columns(m):
    for j in range(len(m)):
        col = [m[i][j] for i in range(len(m)) if m[i][j] != 0]
        if any(x not in (1, -1) for x in col):
            raise PreconditionError(f"column {j} has an entry outside {{-1, 0, 1}}")
        if len(col) > 2:
            raise PreconditionError(f"column {j} has {len(col)} nonzeros")
        if len(col) == 2 and col[0] == col[1]:
            raise PreconditionError(f"column {j} has two nonzeros of the same sign")


def determinant_by_expansion(matrix) -> int:
    """Determinant of a matrix with entries in {-1,0,1}, at most two nonzeros per
    column and opposite signs when two, by repeated single-entry column expansion.

    Expanding column ``j`` at its only nonzero ``(i, j)`` removes row ``i``: in
    graph terms every arc out of ``i`` disappears.  The process ends at an empty
    matrix, a zero column, or a matrix whose columns each hold +1 and -1 (rows
    sum to zero).
    """
    m = [list(row) for row in matrix]
    if any(len(row) != len(m) for row in m):
        raise PreconditionError("matrix must be square")
    sign = 1
    while True:
        _check_columns(m)
        size = len(m)
        if size == 0:
            return sign
        pivot = None
        for j in range(size):
            rows = [i for i in range(size) if m[i][j] != 0]
            if not rows:
                return 0
            if len(rows) == 1 and pivot is None:
                pivot = (rows[0], j)
        if pivot is None:
            return 0
        i, j = pivot
        sign *= m[i][j] * (-1 if (i + j) % 2 else 1)
        m = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]


@dataclass
class ParityReport:
    positive: int
    negative: int
    determinant: int
    weights: dict[int, int]

    @property
    def total(self):
        return self.positive + self.negative

    @property
    def cycle_impossible(self) -> bool:
        # a bipartite graph with unequal classes has no Hamiltonian cycle
        return self.positive != self.negative or self.total < 3


def parity_report(g: DiGraph, budget: int = ENUM_BUDGET) -> ParityReport:
    w = assign_arc_weights(g)
    pos, neg = bipartition_classes(g, w, budget)
    det = determinant_by_expansion(signed_laplacian(g, w))
    return ParityReport(pos, neg, det, dict(w.weight))


def check_degree_one(g: DiGraph, arb: Arborescence) -> int | None:
    """The unique flippable arc of a degree-one arborescence, else None.

    Certifies that the graph minus that arc is built on the arborescence.
    """
    flips = legal_flips(g, arb)
    if len(flips) != 1:
        return None
    uv = flips[0].added
    tree = g.with_arcs([g.arc(a) for a in arb.arc_ids()], lineage=None)
    if not is_built_on(delete_arc(g, uv), tree):
        raise InternalInconsistency(
            f"degree-one arborescence {arb} but the graph minus arc {uv} is not built on it")
    return uv
