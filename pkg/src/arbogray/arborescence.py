"""Arborescences as parent-arc maps, legal flips, and subtree completion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .digraph import DiGraph
from .errors import GraphError, IllegalFlipError, NoCompletionError


class Flip(NamedTuple):
    removed: int
    added: int
    pivot: int


@dataclass(frozen=True, order=False)
class Arborescence:
    """``parents[v]`` is the id of the arc entering ``v``; ``None`` at the root."""

    parents: tuple[int | None, ...]

    @classmethod
    def from_map(cls, n: int, mapping: Mapping[int, int]) -> "Arborescence":
        return cls(tuple(mapping.get(v) for v in range(n)))

    def as_map(self) -> dict[int, int]:
        return {v: a for v, a in enumerate(self.parents) if a is not None}

    def arc_ids(self) -> tuple[int, ...]:
        return tuple(sorted(a for a in self.parents if a is not None))

    def sort_key(self) -> tuple[int, ...]:
        return self.arc_ids()

    def __contains__(self, arc_id: int) -> bool:
        return arc_id in self.parents

    def replace(self, v: int, arc_id: int | None) -> "Arborescence":
        p = list(self.parents)
        p[v] = arc_id
        return Arborescence(tuple(p))

    def __len__(self):
        return len(self.parents)

    def __str__(self):
        return " ".join(str(a) for a in self.arc_ids())


def is_arborescence(g: DiGraph, cand) -> bool:
    if isinstance(cand, Arborescence):
        if len(cand) != g.n:
            return False
        mapping = cand.as_map()
    else:
        mapping = dict(cand)
    if g.root in mapping or set(mapping) != set(range(g.n)) - {g.root}:
        return False
    children: dict[int, list[int]] = {}
    for v, aid in mapping.items():
        if not g.has_arc(aid):
            return False
        a = g.arc(aid)
        if a.head != v:
            return False
        children.setdefault(a.tail, []).append(v)
    seen = {g.root}
    todo = [g.root]
    while todo:
        x = todo.pop()
        for y in children.get(x, ()):
            if y in seen:
                return False
            seen.add(y)
            todo.append(y)
    return len(seen) == g.n


def children_map(g: DiGraph, arb: Arborescence) -> dict[int, list[int]]:
    kids: dict[int, list[int]] = {}
    for v, aid in enumerate(arb.parents):
        if aid is not None:
            kids.setdefault(g.arc(aid).tail, []).append(v)
    return kids


def descendants(g: DiGraph, u: int, arb: Arborescence | None = None) -> set[int]:
    """Descendants of ``u``: in ``arb`` when given (its subtree), else in ``g``."""
    if arb is None:
        from .digraph import graph_descendants

        return graph_descendants(g, u)
    kids = children_map(g, arb)
    out = {u}
    todo = [u]
    while todo:
        x = todo.pop()
        for y in kids.get(x, ()):
            out.add(y)
            todo.append(y)
    return out


def _depth_ancestry(g: DiGraph, arb: Arborescence):
    # pre/post order stamps give O(1) ancestor tests
    kids = children_map(g, arb)
    pre = [0] * g.n
    post = [0] * g.n
    clock = 0
    stack = [(g.root, False)]
    while stack:
        x, done = stack.pop()
        if done:
            post[x] = clock
            clock += 1
            continue
        pre[x] = clock
        clock += 1
        stack.append((x, True))
        for y in kids.get(x, ()):
            stack.append((y, False))
    return pre, post


def legal_flips(g: DiGraph, arb: Arborescence) -> list[Flip]:
    pre, post = _depth_ancestry(g, arb)
    flips = []
    for a in g.arcs:
        v = a.head
        if v == g.root or arb.parents[v] == a.id:
            continue
        u = a.tail
        # u is a descendant of v iff v's interval contains u's
        if pre[v] <= pre[u] and post[u] <= post[v]:
            continue
        flips.append(Flip(arb.parents[v], a.id, v))
    return flips


def apply_flip(g: DiGraph, arb: Arborescence, flip: Flip) -> Arborescence:
    if flip.removed == flip.added:
        raise IllegalFlipError("a flip must change the parent arc")
    added = g.arc(flip.added)
    if added.head != flip.pivot or flip.pivot == g.root:
        raise IllegalFlipError(f"arc {flip.added} does not enter pivot {flip.pivot}")
    if arb.parents[flip.pivot] != flip.removed:
        raise IllegalFlipError(f"arc {flip.removed} is not the parent arc of {flip.pivot}")
    if added.tail in descendants(g, flip.pivot, arb):
        raise IllegalFlipError(
            f"tail {added.tail} of arc {flip.added} is a descendant of pivot {flip.pivot}")
    return arb.replace(flip.pivot, flip.added)


def flip_between(g: DiGraph, a: Arborescence, b: Arborescence) -> Flip | None:
    """The flip turning ``a`` into ``b``, or None when they differ elsewhere than one vertex."""
    diff = [v for v in range(g.n) if a.parents[v] != b.parents[v]]
    if len(diff) != 1:
        return None
    v = diff[0]
    return Flip(a.parents[v], b.parents[v], v)


def complete_subtree(g: DiGraph, partial: Mapping[int, int]) -> Arborescence:
    """Extend a partial parent map to an arborescence containing all its arcs.

    The map may be a forest; the component of the root is grown by repeatedly
    taking the last arc of a shortest path from the covered set to an
    unattached vertex, i.e. the smallest-id arc leaving the covered set.
    Attaching a vertex brings its whole fixed component along.
    """
    parents = dict(partial)
    if g.root in parents:
        raise NoCompletionError("the root cannot have a parent arc")
    kids: dict[int, list[int]] = {}
    for v, aid in parents.items():
        a = g.arc(aid)
        if a.head != v:
            raise NoCompletionError(f"arc {aid} does not enter {v}")
        kids.setdefault(a.tail, []).append(v)
    for v in parents:
        seen = set()
        x = v
        while x in parents:
            if x in seen:
                raise NoCompletionError(f"partial map contains a cycle through {v}")
            seen.add(x)
            x = g.arc(parents[x]).tail

    covered: set[int] = set()

    def absorb(x):
        todo = [x]
        while todo:
            y = todo.pop()
            covered.add(y)
            todo.extend(kids.get(y, ()))

    absorb(g.root)
    while len(covered) < g.n:
        best = None
        for x in covered:
            for a in g.out_arcs[x]:
                if a.head not in covered and a.head not in parents:
                    if best is None or a.id < best.id:
                        best = a
        if best is None:
            raise NoCompletionError("the graph has no arborescence containing the partial map")
        parents[best.head] = best.id
        kids.setdefault(best.tail, []).append(best.head)
        absorb(best.head)
    return Arborescence.from_map(g.n, parents)


def format_arborescences(arbs) -> str:
    """One sorted arc-id list per line."""
    return "".join(str(a) + "\n" for a in arbs)


def parse_arborescences(g: DiGraph, text: str) -> list[Arborescence]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parents: list[int | None] = [None] * g.n
        for tok in line.split():
            aid = int(tok)
            if not g.has_arc(aid):
                raise GraphError(f"line {lineno}: unknown arc id {aid}")
            parents[g.arc(aid).head] = aid
        out.append(Arborescence(tuple(parents)))
    return out
