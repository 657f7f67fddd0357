"""Rooted directed multigraphs with stable arc identities.

Arcs are kept as an ordered list of ``Arc(id, tail, head)``; endpoint pairs are
never used as keys, so parallel arcs and bigons are distinct objects.  Every
operation returns a new graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .errors import GraphError, ParseError


class Arc(NamedTuple):
    id: int
    tail: int
    head: int


@dataclass(frozen=True, eq=False)
class DiGraph:
    n: int
    root: int
    arcs: tuple[Arc, ...]
    next_id: int = -1
    lineage: Mapping[int, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a rooted graph needs at least one vertex")
        if not 0 <= self.root < self.n:
            raise GraphError(f"root {self.root} out of range for n={self.n}")
        arcs = tuple(Arc(*a) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        seen = set()
        for a in arcs:
            if a.id in seen:
                raise GraphError(f"duplicate arc id {a.id}")
            seen.add(a.id)
            if not (0 <= a.tail < self.n and 0 <= a.head < self.n):
                raise GraphError(f"arc {a.id} has an endpoint out of range")
            if a.tail == a.head:
                raise GraphError(f"arc {a.id} is a self-loop at {a.tail}")
        floor = max(seen) + 1 if seen else 0
        if self.next_id < floor:
            object.__setattr__(self, "next_id", floor)

    @classmethod
    def from_pairs(cls, n: int, root: int, pairs: Iterable[tuple[int, int]]) -> "DiGraph":
        return cls(n, root, tuple(Arc(i, t, h) for i, (t, h) in enumerate(pairs)))

    # structural equality: same vertex count, root and arc list (ids included)
    def __eq__(self, other):
        if not isinstance(other, DiGraph):
            return NotImplemented
        return (self.n, self.root, self.arcs) == (other.n, other.root, other.arcs)

    def __hash__(self):
        return hash((self.n, self.root, self.arcs))

    def __repr__(self):
        body = ", ".join(f"{a.id}:{a.tail}->{a.head}" for a in self.arcs)
        return f"DiGraph(n={self.n}, root={self.root}, arcs=[{body}])"

    @cached_property
    def arc_by_id(self) -> dict[int, Arc]:
        return {a.id: a for a in self.arcs}

    @cached_property
    def in_arcs(self) -> tuple[tuple[Arc, ...], ...]:
        buckets: list[list[Arc]] = [[] for _ in range(self.n)]
        for a in self.arcs:
            buckets[a.head].append(a)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def out_arcs(self) -> tuple[tuple[Arc, ...], ...]:
        buckets: list[list[Arc]] = [[] for _ in range(self.n)]
        for a in self.arcs:
            buckets[a.tail].append(a)
        return tuple(tuple(b) for b in buckets)

    def arc(self, arc_id: int) -> Arc:
        try:
            return self.arc_by_id[arc_id]
        except KeyError:
            raise GraphError(f"unknown arc id {arc_id}") from None

    def has_arc(self, arc_id: int) -> bool:
        return arc_id in self.arc_by_id

    def out_neighbours(self, v: int) -> set[int]:
        return {a.head for a in self.out_arcs[v]}

    def in_neighbours(self, v: int) -> set[int]:
        return {a.tail for a in self.in_arcs[v]}

    def arcs_between(self, tail: int, head: int) -> list[Arc]:
        return [a for a in self.out_arcs[tail] if a.head == head]

    def reachable(self, start: int | None = None, avoid: int | None = None) -> set[int]:
        start = self.root if start is None else start
        if start == avoid:
            return set()
        seen = {start}
        todo = deque([start])
        while todo:
            x = todo.popleft()
            for a in self.out_arcs[x]:
                if a.head not in seen and a.head != avoid:
                    seen.add(a.head)
                    todo.append(a.head)
        return seen

    def with_arcs(self, arcs: Iterable[Arc], n: int | None = None, root: int | None = None,
                  lineage=None) -> "DiGraph":
        return DiGraph(self.n if n is None else n, self.root if root is None else root,
                       tuple(arcs), self.next_id, lineage)


# ---------------------------------------------------------------------------
# text format


def parse_digraph(text: str) -> DiGraph:
    """Parse ``n m root`` followed by ``m`` lines ``tail head``; ``#`` starts a comment line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ParseError("empty graph file", 1)
    lineno, header = rows[0]
    try:
        n, m, root = (int(tok) for tok in header.split())
    except ValueError:
        raise ParseError(f"expected 'n m root', got {header!r}", lineno) from None
    if n < 1:
        raise ParseError("n must be at least 1", lineno)
    if not 0 <= root < n:
        raise ParseError(f"root {root} is not a vertex index < {n}", lineno)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"header announces {m} arcs, found {len(body)}", where)
    arcs = []
    for i, (lineno, line) in enumerate(body):
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected 'tail head', got {line!r}", lineno)
        try:
            t, h = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        for x in (t, h):
            if not 0 <= x < n:
                raise ParseError(f"vertex index {x} out of range (n={n})", lineno)
        if t == h:
            raise ParseError(f"self-loop at vertex {t}", lineno)
        arcs.append(Arc(i, t, h))
    return DiGraph(n, root, tuple(arcs))


def format_digraph(g: DiGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {len(g.arcs)} {g.root}")
    lines.extend(f"{a.tail} {a.head}" for a in g.arcs)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# support


def support(g: DiGraph) -> set[frozenset[int]]:
    return {frozenset((a.tail, a.head)) for a in g.arcs}


def is_clique_support_minus_root(g: DiGraph) -> bool:
    pairs = {p for p in support(g) if g.root not in p}
    others = [x for x in range(g.n) if x != g.root]
    return all(frozenset((x, y)) in pairs
               for i, x in enumerate(others) for y in others[i + 1:])


def graph_descendants(g: DiGraph, u: int) -> set[int]:
    """Vertices every root path to which passes through ``u`` (``u`` included).

    Only vertices reachable from the root are considered.
    """
    if u == g.root:
        return g.reachable()
    reach = g.reachable()
    if u not in reach:
        return set()
    return {u} | (reach - g.reachable(avoid=u))


# ---------------------------------------------------------------------------
# reductions


def delete_arc(g: DiGraph, a: int) -> DiGraph:
    g.arc(a)
    return delete_arcs(g, [a])


def delete_arcs(g: DiGraph, ids: Iterable[int]) -> DiGraph:
    drop = set(ids)
    lineage = None
    if g.lineage is not None:
        lineage = {k: v for k, v in g.lineage.items() if k not in drop}
    return g.with_arcs((x for x in g.arcs if x.id not in drop), lineage=lineage)


def strip_root_in_arcs(g: DiGraph) -> DiGraph:
    return delete_arcs(g, [a.id for a in g.in_arcs[g.root]])


@dataclass(frozen=True)
class Contraction:
    """Result of merging the root with one of its outneighbours.

    ``arc_map`` sends every surviving arc id of the parent to its id in
    ``graph`` (ids are kept), ``vertex_map`` sends parent vertices to new ones.
    """

    graph: DiGraph
    arc: int
    arc_map: Mapping[int, int]
    vertex_map: Mapping[int, int]

    @cached_property
    def vertex_preimage(self) -> dict[int, int]:
        # the new root has two preimages; only the others are listed
        return {new: old for old, new in self.vertex_map.items() if new != 0}


def contract_root_arc(g: DiGraph, a: int) -> Contraction:
    arc = g.arc(a)
    if arc.tail != g.root:
        raise GraphError(f"arc {a} ({arc.tail}->{arc.head}) does not leave the root {g.root}")
    r, x = arc.tail, arc.head
    vertex_map = {r: 0, x: 0}
    nxt = 1
    for z in range(g.n):
        if z not in vertex_map:
            vertex_map[z] = nxt
            nxt += 1
    arcs = []
    for b in g.arcs:
        if b.id == a:
            continue
        t, h = vertex_map[b.tail], vertex_map[b.head]
        if t == h:
            # r->x parallels and x->r arcs collapse onto the new root
            continue
        arcs.append(Arc(b.id, t, h))
    arc_map = {b.id: b.id for b in arcs}
    graph = DiGraph(g.n - 1, 0, tuple(arcs), g.next_id, dict(arc_map))
    return Contraction(graph, a, arc_map, vertex_map)


def simplify(g: DiGraph) -> tuple[DiGraph, dict[int, int]]:
    """Merge parallel arcs, keeping the smallest id of each class.

    Returns the simple graph and a map from every arc id of ``g`` to the id of
    its class representative.
    """
    rep: dict[tuple[int, int], int] = {}
    to_rep = {}
    kept = []
    for b in sorted(g.arcs, key=lambda b: b.id):
        key = (b.tail, b.head)
        if key not in rep:
            rep[key] = b.id
            kept.append(b)
        to_rep[b.id] = rep[key]
    order = {b.id: i for i, b in enumerate(g.arcs)}
    kept.sort(key=lambda b: order[b.id])
    return g.with_arcs(kept, lineage=None), to_rep


def subdivide_arc(g: DiGraph, a: int) -> DiGraph:
    """Replace ``u->w`` by ``u->v->w`` with a fresh vertex ``v = n``.

    The first half keeps the id of ``a``; the second half gets a fresh id.
    """
    arc = g.arc(a)
    v = g.n
    fresh = g.next_id
    arcs = []
    for b in g.arcs:
        if b.id == a:
            arcs.append(Arc(a, arc.tail, v))
            arcs.append(Arc(fresh, v, arc.head))
        else:
            arcs.append(b)
    return DiGraph(g.n + 1, g.root, tuple(arcs), fresh + 1)


def duplicate_arc(g: DiGraph, a: int) -> tuple[DiGraph, int]:
    arc = g.arc(a)
    fresh = g.next_id
    return DiGraph(g.n, g.root, g.arcs + (Arc(fresh, arc.tail, arc.head),), fresh + 1), fresh


def is_built_on(h: DiGraph, g: DiGraph) -> bool:
    """True when ``h`` only adds backedges (arcs ``u->v`` with ``u`` a descendant of ``v``) to ``g``."""
    if h.n != g.n or h.root != g.root:
        raise GraphError("built-on comparison needs the same vertex set and root")
    h_ids = h.arc_by_id
    for b in g.arcs:
        if h_ids.get(b.id) != b:
            return False
    desc_cache: dict[int, set[int]] = {}
    for b in h.arcs:
        if b.id in g.arc_by_id:
            continue
        if b.head not in desc_cache:
            desc_cache[b.head] = graph_descendants(g, b.head)
        if b.tail not in desc_cache[b.head]:
            return False
    return True
