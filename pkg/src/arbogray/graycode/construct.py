"""Pivot Gray codes for rooted digraphs whose support minus the root is a clique.

The recursion strips arcs into the root and parallel arcs, contracts a lone
root arc, and otherwise picks a pivot pair ``(u, v)`` with ``e = r->u``,
``f = r->v``, ``g = u->v``.  Arborescences split into four types:

* ``T-e``     avoid ``e``                      -- a Gray path of ``G - e``
* ``T/e/f``   contain ``e`` and ``f``          -- one column of a ladder
* ``T/e/g``   contain ``e`` and ``g``          -- the mirrored column
* ``T-f-g/e`` contain ``e`` but not ``f``, ``g`` -- lifted from ``(G-f-g)/e``

and the pieces are glued according to where the endpoints of the two paths
land when ``f`` (resp. ``e``) is flipped in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..arborescence import Arborescence, Flip, flip_between
from ..digraph import (DiGraph, delete_arc, delete_arcs, is_clique_support_minus_root,
                       simplify, strip_root_in_arcs)
from ..errors import InternalInconsistency, PreconditionError
from ..oracle import (build_flip_graph, find_hamiltonian_path_bruteforce, verify_gray_code)
from .lifting import contracted_instance, lift_contraction_path, lift_duplication_path
from .primitives import (LEFT, ladder_cycle_from, ladder_ham_path, ladder_path_to_partner)
from .structure import Ladder, choose_pivot_pair, detect_flip_clique_structure


@dataclass
class GrayPath:
    steps: list[Arborescence]
    flips: list[Flip]
    provenance: list = field(default_factory=list)

    @classmethod
    def from_steps(cls, g: DiGraph, steps, provenance=None) -> "GrayPath":
        flips = []
        for a, b in zip(steps, steps[1:]):
            f = flip_between(g, a, b)
            if f is None:
                raise InternalInconsistency("consecutive arborescences are not one flip apart",
                                            provenance)
            flips.append(f)
        return cls(list(steps), flips, list(provenance or []))

    def __len__(self):
        return len(self.steps)

    def to_json(self) -> dict:
        return {
            "n_steps": len(self.steps),
            "steps": [list(a.arc_ids()) for a in self.steps],
            "flips": [{"removed": f.removed, "added": f.added, "pivot": f.pivot}
                      for f in self.flips],
            "provenance": self.provenance,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    def to_delta_text(self) -> str:
        if not self.steps:
            return ""
        lines = [" ".join(map(str, self.steps[0].arc_ids()))]
        lines += [f"-{f.removed} +{f.added}" for f in self.flips]
        return "\n".join(lines) + "\n"


def steps_from_arc_lists(g: DiGraph, lists) -> list[Arborescence]:
    """Rebuild arborescences from serialized arc-id lists."""
    out = []
    for ids in lists:
        parents: list[int | None] = [None] * g.n
        for aid in ids:
            if not g.has_arc(aid):
                raise PreconditionError(f"unknown arc id {aid}")
            head = g.arc(aid).head
            if parents[head] is not None:
                raise PreconditionError(f"arcs {parents[head]} and {aid} both enter {head}")
            parents[head] = aid
        out.append(Arborescence(tuple(parents)))
    return out


def load_gray_path(g: DiGraph, data: dict) -> list[Arborescence]:
    return steps_from_arc_lists(g, data["steps"])


def parse_delta_text(g: DiGraph, text: str) -> list[Arborescence]:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        return []
    cur = steps_from_arc_lists(g, [[int(t) for t in lines[0]]])[0]
    out = [cur]
    for toks in lines[1:]:
        if len(toks) != 2 or not toks[0].startswith("-") or not toks[1].startswith("+"):
            raise PreconditionError(f"bad delta line {' '.join(toks)!r}")
        removed, added = int(toks[0][1:]), int(toks[1][1:])
        v = g.arc(added).head
        if cur.parents[v] != removed:
            raise PreconditionError(f"arc {removed} is not in the current arborescence")
        cur = cur.replace(v, added)
        out.append(cur)
    return out


# ---------------------------------------------------------------------------


class _Context:
    def __init__(self, fallback: bool):
        self.fallback = fallback
        self.trace: list = []
        self.bundles: list[dict] = []

    def note(self, depth, **info):
        self.trace.append({"depth": depth, **info})

    def fail(self, msg):
        raise InternalInconsistency(msg, self.trace)


def _check_walk(g: DiGraph, steps, ctx: _Context, what: str):
    for a, b in zip(steps, steps[1:]):
        if flip_between(g, a, b) is None:
            ctx.fail(f"{what}: consecutive arborescences are not one flip apart")


def _solve(g: DiGraph, ctx: _Context, depth: int) -> list[Arborescence]:
    g = strip_root_in_arcs(g)
    simple, rep = simplify(g)
    if len(simple.arcs) == len(g.arcs):
        return _solve_simple(g, ctx, depth)
    ctx.note(depth, case="deduplicate", removed=len(g.arcs) - len(simple.arcs))
    steps = _solve_simple(simple, ctx, depth)
    cur = simple
    for aid in sorted(a for a in rep if rep[a] != a):
        cur = cur.with_arcs(cur.arcs + (g.arc(aid),), lineage=None)
        steps = lift_duplication_path(cur, rep[aid], aid, steps)
    return steps


def _solve_simple(g: DiGraph, ctx: _Context, depth: int) -> list[Arborescence]:
    try:
        return _construct(g, ctx, depth)
    except InternalInconsistency as exc:
        if not ctx.fallback:
            raise
        from ..digraph import format_digraph

        ctx.bundles.append({"graph": format_digraph(g), "error": str(exc),
                            "provenance": list(exc.provenance)})
        fg = build_flip_graph(g)
        order = find_hamiltonian_path_bruteforce(fg)
        ctx.note(depth, case="fallback-bruteforce", found=order is not None)
        if order is None:
            raise
        return [fg.nodes[i] for i in order]


def _construct(g: DiGraph, ctx: _Context, depth: int) -> list[Arborescence]:
    r = g.root
    if g.n == 1:
        ctx.note(depth, case="single-vertex")
        return [Arborescence((None,))]
    outs = sorted(g.out_neighbours(r))
    if not outs:
        ctx.note(depth, case="empty", n=g.n)
        return []
    if len(outs) == 1:
        e = g.out_arcs[r][0].id
        ctx.note(depth, case="contract-lone-root-arc", n=g.n, arc=e)
        ci = contracted_instance(g, e)
        sub = _solve(ci.graph, ctx, depth + 1)
        return lift_contraction_path(g, e, sub, trace=ctx.trace) if sub else []

    u, v = choose_pivot_pair(g)
    e = g.arcs_between(r, u)[0].id
    f = g.arcs_between(r, v)[0].id
    ga = g.arcs_between(u, v)[0].id
    ctx.note(depth, case="pivot-pair", n=g.n, pair=[u, v], e=e, f=f, g=ga)

    # T-e
    x_path = _solve(delete_arc(g, e), ctx, depth + 1)
    _check_walk(g, x_path, ctx, "T-e")

    # T-f-g/e
    k1 = delete_arcs(g, [f, ga])
    y_sub = _solve(contracted_instance(k1, e).graph, ctx, depth + 1)
    y_path = lift_contraction_path(k1, e, y_sub, trace=ctx.trace) if y_sub else []
    _check_walk(g, y_path, ctx, "T-f-g/e")

    # T/e/f: only e may enter u and only f may enter v
    k2 = delete_arcs(g, [a.id for a in g.in_arcs[u] if a.id != e]
                     + [a.id for a in g.in_arcs[v] if a.id != f])
    c1 = contracted_instance(k2, e)
    c2 = contracted_instance(c1.graph, f)
    z_sub = _solve(c2.graph, ctx, depth + 1)
    column = []
    if z_sub:
        column = lift_contraction_path(k2, e, lift_contraction_path(c1.graph, f, z_sub,
                                                                     trace=ctx.trace),
                                       trace=ctx.trace)
    if not column:
        if x_path or y_path:
            ctx.fail("T/e/f is empty although the graph has arborescences")
        return []
    ladder = Ladder.from_column(column, v, f, ga)
    if not ladder.is_valid(g):
        ctx.fail("ladder columns are not Gray paths joined by the rung flip")

    return _assemble(g, ctx, depth, u, v, e, f, ga, x_path, y_path, ladder)


def _assemble(g, ctx, depth, u, v, e, f, ga, x_path, y_path, ladder: Ladder):
    m = len(ladder)
    where = ladder.locate()
    y_set = set(y_path)

    def prime(a):
        return a.replace(v, f)

    def tilde(b):
        return b.replace(u, e)

    def done(case, steps):
        ctx.note(depth, case=case, sizes=[len(x_path), 2 * m, len(y_path)])
        _check_walk(g, steps, ctx, case)
        return steps

    if not x_path and not y_path:
        return done("ladder-only", ladder.walk(ladder_cycle_from(m, 1, LEFT)))
    if x_path and not y_path:
        t = tilde(x_path[-1])
        if t not in where:
            ctx.fail("flipping e into T-e left the ladder although T-f-g/e is empty")
        return done("no-T-f-g/e", x_path + ladder.walk(ladder_cycle_from(m, *where[t])))
    if y_path and not x_path:
        t = prime(y_path[-1])
        return done("no-T-e", y_path + ladder.walk(ladder_cycle_from(m, *where[t])))

    def easy(yp):
        a1, a2 = prime(yp[0]), prime(yp[-1])
        if a1 == a2:
            return None
        (i, _), (j, _) = where[a1], where[a2]
        cyc = ladder.walk(ladder_ham_path(m, i, LEFT, j)) + yp[::-1]
        t = tilde(x_path[-1])
        k = cyc.index(t)
        return x_path + cyc[k:] + cyc[:k]

    res = easy(y_path)
    if res is not None:
        return done("easy", res)
    y_cycle = _reopen(g, y_path, prime, ctx, "T-f-g/e")
    if y_cycle is not None:
        res = easy(y_cycle)
        if res is None:
            ctx.fail("reopened T-f-g/e path still has equal endpoint images")
        return done("easy-after-retry", res)

    # every arborescence of T-f-g/e flips f in to the same one
    a_star1, a_star2 = prime(y_path[0]), y_path[0].replace(v, ga)
    cg = contracted_instance(g, e)
    struct = detect_flip_clique_structure(cg.graph, cg.graph.root, cg.vertex_map[v])
    ctx.note(depth, event="flip-clique G/e", structure=struct.label())
    if not struct.applicable:
        ctx.fail("T-f-g/e flips f in uniformly but G/e has no flip-clique structure")

    xp = x_path
    for attempt in range(2):
        t1, t2 = tilde(xp[0]), tilde(xp[-1])
        for path, t in ((xp[::-1], t1), (xp, t2)):
            if t in y_set:
                k = y_path.index(t)
                y_rot = y_path[k:] + y_path[:k]
                end = where[prime(y_rot[-1])]
                return done("case-tilde-in-T-f-g/e",
                            path + y_rot + ladder.walk(ladder_cycle_from(m, *end)))
        for path, t in ((xp[::-1], t1), (xp, t2)):
            if t in where and t not in (a_star1, a_star2):
                i, side = where[t]
                j = where[a_star1][0]
                return done("case-tilde-in-ladder",
                            path + ladder.walk(ladder_ham_path(m, i, side, j)) + y_path)
        if t1 != t2:
            ctx.fail("T-e endpoints flip e in to the two distinct rung ends A' and A''")
        if attempt == 0:
            reopened = _reopen(g, xp, tilde, ctx, "T-e")
            if reopened is None:
                break
            xp = reopened

    # every arborescence of T-e flips e in to the same one
    struct = detect_flip_clique_structure(g, g.root, u)
    ctx.note(depth, event="flip-clique G", structure=struct.label())
    if not struct.applicable:
        ctx.fail("T-e flips e in uniformly but G has no flip-clique structure")
    t = tilde(xp[-1])
    walk = ladder_path_to_partner(m, *where[t])
    if walk is None:
        ctx.fail(f"ladder of length {m} cannot be traversed from its landing rung to the partner")
    return done("terminal-direct", xp + ladder.walk(walk) + y_path)


def _reopen(g, path, key, ctx, what):
    """Open the cycle closed by ``path`` between two consecutive elements with different keys."""
    if len(path) < 2:
        return None
    if key(path[0]) != key(path[-1]):
        ctx.fail(f"{what}: reopening needs endpoints with equal images")
    if len(path) > 2 and flip_between(g, path[0], path[-1]) is None:
        ctx.fail(f"{what}: endpoints with equal images are not adjacent")
    for i in range(len(path) - 1):
        if key(path[i]) != key(path[i + 1]):
            return path[i + 1:] + path[:i + 1]
    return None


def gray_code_clique_support(g: DiGraph, fallback_bruteforce: bool = False,
                             bundles: list | None = None) -> GrayPath:
    """Gray path through all arborescences of ``g``; empty when there are none.

    With ``fallback_bruteforce`` an internal inconsistency on a subinstance is
    replaced by an exhaustive search there, and the failing subinstance is
    appended to ``bundles``.
    """
    if not is_clique_support_minus_root(g):
        raise PreconditionError("the support of the graph minus its root is not a clique")
    ctx = _Context(fallback_bruteforce)
    steps = _solve(g, ctx, 0)
    if bundles is not None:
        bundles.extend(ctx.bundles)
    path = GrayPath.from_steps(g, steps, ctx.trace)
    report = verify_gray_code(g, steps)
    if not report.ok:
        raise InternalInconsistency("constructed sequence fails verification:\n"
                                    + report.summary(), ctx.trace)
    return path


def spanning_tree_pivot_gray_code(n: int) -> list[frozenset[frozenset[int]]]:
    """Spanning trees of ``K_n`` in pivot Gray code order.

    Uses the bidirected complete graph rooted at 0 and forgets orientations.
    """
    from ..generators import bidirected_complete

    if n < 1:
        raise PreconditionError("n must be at least 1")
    g = bidirected_complete(n)
    path = gray_code_clique_support(g)
    trees = []
    for a in path.steps:
        trees.append(frozenset(frozenset((g.arc(x).tail, g.arc(x).head)) for x in a.arc_ids()))
    return trees
