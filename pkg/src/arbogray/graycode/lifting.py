"""Lift Gray paths back through root-arc contraction and arc duplication."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..arborescence import Arborescence, Flip, apply_flip, flip_between
from ..digraph import DiGraph, contract_root_arc, simplify
from ..errors import IllegalFlipError, InternalInconsistency, PreconditionError
from .primitives import gray_path_from_int


@dataclass
class ContractedInstance:
    """``g`` with root arc ``arc`` contracted and parallel images merged.

    Each arc of ``graph`` stands for a class of arcs of ``g``; a class has two
    members exactly when both the root and the contracted vertex point to the
    same vertex.
    """

    parent: DiGraph
    arc: int
    graph: DiGraph
    vertex_map: dict[int, int]
    classes: dict[int, list[int]] = field(repr=False)

    @cached_property
    def vertex_preimage(self) -> dict[int, int]:
        return {new: old for old, new in self.vertex_map.items() if new != 0}

    @property
    def merged(self) -> tuple[int, int]:
        a = self.parent.arc(self.arc)
        return a.tail, a.head


def contracted_instance(g: DiGraph, arc: int) -> ContractedInstance:
    if len(simplify(g)[0].arcs) != len(g.arcs):
        raise PreconditionError("contraction lifting needs a graph without parallel arcs")
    c = contract_root_arc(g, arc)
    h, rep = simplify(c.graph)
    classes: dict[int, list[int]] = {}
    for aid, r in sorted(rep.items()):
        classes.setdefault(r, []).append(aid)
    return ContractedInstance(g, arc, h, dict(c.vertex_map), classes)


def _fiber_coords(ci: ContractedInstance, t: Arborescence) -> list[int]:
    # contracted vertices whose parent arc has two preimages, sorted by original id
    coords = []
    for z_new, aid in enumerate(t.parents):
        if aid is not None and len(ci.classes[aid]) == 2:
            coords.append(ci.vertex_preimage[z_new])
    return sorted(coords)


def _side_arcs(ci: ContractedInstance, t: Arborescence, z: int) -> tuple[int, int]:
    """(root-side arc, contracted-vertex-side arc) for a fibre coordinate ``z``."""
    r, x = ci.merged
    members = ci.classes[t.parents[ci.vertex_map[z]]]
    tails = {ci.parent.arc(a).tail: a for a in members}
    return tails[r], tails[x]


def lift_arborescence(ci: ContractedInstance, t: Arborescence, choice=None) -> Arborescence:
    """Preimage of ``t`` containing the contracted arc.

    ``choice`` maps fibre coordinates to 1 when the arc should come from the
    contracted vertex; missing coordinates take the root-side arc.
    """
    choice = choice or {}
    g = ci.parent
    r, x = ci.merged
    parents: list[int | None] = [None] * g.n
    parents[x] = ci.arc
    for z in range(g.n):
        if z in (r, x):
            continue
        aid = t.parents[ci.vertex_map[z]]
        members = ci.classes[aid]
        if len(members) == 1:
            parents[z] = members[0]
        else:
            rs, xs = _side_arcs(ci, t, z)
            parents[z] = xs if choice.get(z) else rs
    return Arborescence(tuple(parents))


def project_arborescence(ci: ContractedInstance, arb: Arborescence) -> Arborescence:
    rep = {a: r for r, members in ci.classes.items() for a in members}
    parents: list[int | None] = [None] * ci.graph.n
    r, x = ci.merged
    for z, aid in enumerate(arb.parents):
        if z in (r, x):
            continue
        parents[ci.vertex_map[z]] = rep[aid]
    return Arborescence(tuple(parents))


def _bits(ci, t, arb, coords) -> int:
    x = ci.merged[1]
    s = 0
    for k, z in enumerate(coords):
        if ci.parent.arc(arb.parents[z]).tail == x:
            s |= 1 << k
    return s


def lift_contraction_path(g: DiGraph, arc: int, contracted_path: list[Arborescence],
                          start: Arborescence | None = None, trace: list | None = None
                          ) -> list[Arborescence]:
    """Gray path through every arborescence of ``g`` containing the root arc ``arc``.

    ``contracted_path`` is a Gray path of ``contracted_instance(g, arc).graph``.
    Each of its elements is expanded into its fibre, a hypercube over the
    vertices both merged endpoints point to, walked by a translated reflected
    Gray code; the next fibre is entered by realising the contracted flip with
    an arc whose tail is one of the merged vertices.  ``start`` defaults to the
    root-side preimage of the first element.
    """
    ci = contracted_instance(g, arc)
    if not contracted_path:
        return []
    first = contracted_path[0]
    if start is None:
        cur = lift_arborescence(ci, first)
    else:
        if start.parents[ci.merged[1]] != arc or project_arborescence(ci, start) != first:
            raise PreconditionError("start is not in the fibre of the first contracted arborescence")
        cur = start
    out: list[Arborescence] = []
    for idx, t in enumerate(contracted_path):
        coords = _fiber_coords(ci, t)
        if coords and trace is not None:
            trace.append({"event": "fiber", "dimension": len(coords)})
        s = _bits(ci, t, cur, coords)
        for code in gray_path_from_int(len(coords), s):
            choice = {z: (code >> k) & 1 for k, z in enumerate(coords)}
            out.append(lift_arborescence(ci, t, choice))
        if idx + 1 == len(contracted_path):
            break
        nxt = contracted_path[idx + 1]
        step = flip_between(ci.graph, t, nxt)
        if step is None:
            raise PreconditionError(f"contracted path is not a Gray path at step {idx}")
        last = out[-1]
        b = ci.vertex_preimage[step.pivot]
        cur = None
        for cand in ci.classes[step.added]:
            try:
                cur = apply_flip(g, last, Flip(last.parents[b], cand, b))
                break
            except IllegalFlipError:
                continue
        if cur is None:
            raise InternalInconsistency(
                f"contracted flip {step} has no realisation in the original graph", trace)
    return out


def lift_duplication_path(g2: DiGraph, e: int, e2: int, base_path: list[Arborescence]
                          ) -> list[Arborescence]:
    """Gray path of ``g2`` from one of ``g2`` minus the parallel copy ``e2`` of ``e``.

    Every base arborescence containing ``e`` is followed or preceded by its twin
    using ``e2``; the twin visited last decides which twin of the next
    arborescence comes first, so consecutive pairs use the four-cycle edges and
    a lone neighbour uses the triangle.
    """
    a, b = g2.arc(e), g2.arc(e2)
    if (a.tail, a.head) != (b.tail, b.head) or e == e2:
        raise PreconditionError(f"arc {e2} is not a parallel copy of arc {e}")
    v = a.head
    out: list[Arborescence] = []
    twin_last = False
    for arb in base_path:
        if arb.parents[v] != e:
            out.append(arb)
            twin_last = False
            continue
        twin = arb.replace(v, e2)
        if twin_last:
            out += [twin, arb]
            twin_last = False
        else:
            out += [arb, twin]
            twin_last = True
    return out
