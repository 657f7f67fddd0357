"""Pivot pair choice, the four arborescence types, ladders, and the rigid
structures arising when every arborescence flips the same way."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..arborescence import Arborescence, Flip, flip_between
from ..digraph import DiGraph, delete_arcs, is_built_on
from ..errors import PreconditionError
from ..oracle import enumerate_arborescences
from .primitives import LEFT, RIGHT


def choose_pivot_pair(g: DiGraph) -> tuple[int, int]:
    """Among root outneighbours ``u, v`` with an arc ``u -> v``, maximise ``|N+(u)|``.

    Ties go to the smallest ``u``, then the smallest ``v``.
    """
    outs = sorted(g.out_neighbours(g.root))
    if len(outs) < 2:
        raise PreconditionError("the root needs at least two outneighbours")
    best = None
    for u in outs:
        size = len(g.out_neighbours(u) - {g.root})
        for v in outs:
            if v != u and g.arcs_between(u, v):
                key = (-size, u, v)
                if best is None or key < best:
                    best = key
    if best is None:
        raise PreconditionError("no arc joins two outneighbours of the root")
    return best[1], best[2]


@dataclass
class TypePartition:
    e: int
    f: int
    g: int
    t_minus_e: list[Arborescence] = field(default_factory=list)
    t_ef: list[Arborescence] = field(default_factory=list)
    t_eg: list[Arborescence] = field(default_factory=list)
    t_fg: list[Arborescence] = field(default_factory=list)

    def sizes(self) -> tuple[int, int, int, int]:
        return len(self.t_minus_e), len(self.t_ef), len(self.t_eg), len(self.t_fg)


def partition_types(graph: DiGraph, arbs, e: int, f: int, g_arc: int) -> TypePartition:
    """Split arborescences by containment of ``e = r->u``, ``f = r->v``, ``g = u->v``.

    ``t_fg`` holds those containing ``e`` but neither ``f`` nor ``g``.
    """
    ea, fa, ga = graph.arc(e), graph.arc(f), graph.arc(g_arc)
    r = graph.root
    if not (ea.tail == r and fa.tail == r and ga.tail == ea.head and ga.head == fa.head
            and ea.head != fa.head):
        raise PreconditionError("arcs do not form the pattern r->u, r->v, u->v")
    u, v = ea.head, fa.head
    part = TypePartition(e, f, g_arc)
    for a in arbs:
        if a.parents[u] != e:
            part.t_minus_e.append(a)
        elif a.parents[v] == f:
            part.t_ef.append(a)
        elif a.parents[v] == g_arc:
            part.t_eg.append(a)
        else:
            part.t_fg.append(a)
    return part


@dataclass
class Ladder:
    """Two parallel Gray paths joined level by level by the rung flip ``f <-> g``."""

    levels: list[tuple[Arborescence, Arborescence]]
    rung: Flip

    @classmethod
    def from_column(cls, column: list[Arborescence], v: int, f: int, g_arc: int) -> "Ladder":
        return cls([(a, a.replace(v, g_arc)) for a in column], Flip(f, g_arc, v))

    def __len__(self):
        return len(self.levels)

    @property
    def left(self):
        return [l for l, _ in self.levels]

    @property
    def right(self):
        return [r for _, r in self.levels]

    def node(self, level: int, side: str) -> Arborescence:
        pair = self.levels[level - 1]
        return pair[0] if side == LEFT else pair[1]

    def locate(self) -> dict[Arborescence, tuple[int, str]]:
        where = {}
        for i, (l, r) in enumerate(self.levels, start=1):
            where[l] = (i, LEFT)
            where[r] = (i, RIGHT)
        return where

    def walk(self, nodes) -> list[Arborescence]:
        return [self.node(i, s) for i, s in nodes]

    def is_valid(self, g: DiGraph) -> bool:
        for i, (l, r) in enumerate(self.levels):
            if flip_between(g, l, r) != self.rung:
                return False
            if i:
                pl, pr = self.levels[i - 1]
                if flip_between(g, pl, l) is None or flip_between(g, pr, r) is None:
                    return False
        return True


# ---------------------------------------------------------------------------
# flip-clique structures


@dataclass
class FlipCliqueStructure:
    kind: str | None  # "L", "M", or None when not applicable
    k: int | None = None
    n: int | None = None
    path: list[int] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def applicable(self) -> bool:
        return self.kind is not None

    def label(self) -> str:
        return f"{self.kind}({self.k},{self.n})" if self.kind else "not-applicable"


def _count_paths(h: DiGraph, src: int, cap: int = 2) -> list[int]:
    # simple paths from src to every vertex, counted up to ``cap``
    counts = [0] * h.n
    on = [False] * h.n

    def dfs(x):
        counts[x] = min(cap, counts[x] + 1)
        on[x] = True
        for a in h.out_arcs[x]:
            y = a.head
            if not on[y] and counts[y] < cap:
                dfs(y)
        on[x] = False

    dfs(src)
    return counts


def _bfs_depth(h: DiGraph, src: int) -> list[int | None]:
    depth: list[int | None] = [None] * h.n
    depth[src] = 0
    todo = deque([src])
    while todo:
        x = todo.popleft()
        for a in h.out_arcs[x]:
            if depth[a.head] is None:
                depth[a.head] = depth[x] + 1
                todo.append(a.head)
    return depth


def detect_flip_clique_structure(g: DiGraph, w: int, v: int) -> FlipCliqueStructure:
    """Classify ``g`` rooted at ``w`` when flipping ``w -> v`` into any
    arborescence avoiding it always gives the same arborescence.

    ``L(k, n)``: the graph minus ``wv`` is built on a path ``w, v_1..v_n`` with
    ``v = v_k``.  ``M(k, n)``: built on that path plus a vertex ``v`` entered
    from every ``v_i`` with ``i >= k - 1``.
    """
    na = FlipCliqueStructure(None)
    if w != g.root:
        g = DiGraph(g.n, w, g.arcs, g.next_id)
    wv = g.arcs_between(w, v)
    if len(wv) != 1 or v == w:
        return na
    h = delete_arcs(g, [wv[0].id])
    arbs = enumerate_arborescences(h)
    if not arbs:
        return na
    flipped = {a.replace(v, wv[0].id) for a in arbs}
    if len(flipped) != 1:
        return na

    checks = {}
    checks["clique"] = all(flip_between(h, a, b) is not None
                           for i, a in enumerate(arbs) for b in arbs[i + 1:])
    counts = _count_paths(h, w)
    checks["unique_paths"] = all(counts[x] == 1 for x in range(h.n) if x not in (w, v))
    depth = _bfs_depth(h, w)
    checks["v_depth_at_least_2"] = depth[v] is not None and depth[v] >= 2

    order = sorted((x for x in range(h.n) if x not in (w, v)), key=lambda x: (depth[x], x))
    k = depth[v]
    if len(arbs) == 1:
        kind = "L"
        path = sorted((x for x in range(h.n) if x != w), key=lambda x: (depth[x], x))
        layers_ok = [depth[x] for x in path] == list(range(1, len(path) + 1))
        skeleton_pairs = list(zip([w] + path[:-1], path))
        extra = []
    else:
        kind = "M"
        path = order
        layers_ok = [depth[x] for x in path] == list(range(1, len(path) + 1))
        skeleton_pairs = list(zip([w] + path[:-1], path))
        extra = [(path[i - 1], v) for i in range(max(k - 1, 1), len(path) + 1)] if k else []
    checks["layers"] = layers_ok
    skeleton = []
    found_all = True
    for t, hd in skeleton_pairs + extra:
        arcs = h.arcs_between(t, hd)
        if not arcs:
            found_all = False
            break
        skeleton.append(arcs[0])
    checks["built_on"] = found_all and is_built_on(h, h.with_arcs(skeleton, lineage=None))
    n = len(path)
    return FlipCliqueStructure(kind, k, n, path, checks)
