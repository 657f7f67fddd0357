"""Ground truth by exhaustion.

Everything here is deliberately independent of the constructive code in
:mod:`arbogray.graycode`: arborescences are enumerated directly, counted with
the matrix-tree theorem, and Hamiltonian paths are found by backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arborescence import Arborescence, Flip, apply_flip, is_arborescence, legal_flips
from .digraph import DiGraph
from .errors import BudgetExceeded

ENUM_BUDGET = 20_000
HAM_BUDGET = 5_000


def enumerate_arborescences(g: DiGraph, budget: int = ENUM_BUDGET) -> list[Arborescence]:
    """All arborescences of ``g`` in canonical order (sorted arc-id lists).

    Grows the covered set one vertex at a time: the smallest uncovered vertex
    hit by an arc from the covered set either takes one of those arcs as its
    parent, or is attached later through an uncovered vertex (all current
    candidate arcs excluded).  Branches that can no longer span are cut, so
    every leaf of the search is an arborescence.
    """
    n, root = g.n, g.root
    found: list[Arborescence] = []
    parents: list[int | None] = [None] * n
    covered = [False] * n
    covered[root] = True
    excluded: set[int] = set()

    def spans() -> bool:
        seen = [False] * n
        seen[root] = True
        todo = [root]
        count = 1
        while todo:
            x = todo.pop()
            for a in g.out_arcs[x]:
                if a.id in excluded or seen[a.head]:
                    continue
                if covered[a.head] and parents[a.head] != a.id:
                    continue
                seen[a.head] = True
                count += 1
                todo.append(a.head)
        return count == n

    def rec(n_covered: int):
        if n_covered == n:
            found.append(Arborescence(tuple(parents)))
            if len(found) > budget:
                raise BudgetExceeded(f"more than {budget} arborescences")
            return
        target = None
        cands = []
        for x in range(n):
            if covered[x]:
                continue
            arcs = [a for a in g.in_arcs[x] if covered[a.tail] and a.id not in excluded]
            if arcs:
                target, cands = x, arcs
                break
        if target is None:
            return
        for a in cands:
            parents[target] = a.id
            covered[target] = True
            rec(n_covered + 1)
            covered[target] = False
            parents[target] = None
        for a in cands:
            excluded.add(a.id)
        if spans():
            rec(n_covered)
        for a in cands:
            excluded.discard(a.id)

    if spans():
        rec(1)
    found.sort(key=Arborescence.sort_key)
    return found


@dataclass
class FlipGraph:
    nodes: list[Arborescence]
    adj: list[list[int]]
    labels: dict[tuple[int, int], Flip] = field(default_factory=dict)

    def __len__(self):
        return len(self.nodes)

    def degree(self, i: int) -> int:
        return len(self.adj[i])

    def edges(self):
        for i, nbrs in enumerate(self.adj):
            for j in nbrs:
                if i < j:
                    yield i, j

    def index(self) -> dict[Arborescence, int]:
        return {a: i for i, a in enumerate(self.nodes)}


def build_flip_graph(g: DiGraph, budget: int = ENUM_BUDGET) -> FlipGraph:
    nodes = enumerate_arborescences(g, budget)
    where = {a: i for i, a in enumerate(nodes)}
    adj: list[list[int]] = [[] for _ in nodes]
    labels = {}
    for i, a in enumerate(nodes):
        for f in legal_flips(g, a):
            j = where[apply_flip(g, a, f)]
            adj[i].append(j)
            labels[(i, j)] = f
    for nbrs in adj:
        nbrs.sort()
    return FlipGraph(nodes, adj, labels)


# ---------------------------------------------------------------------------
# matrix-tree theorem


def bareiss_determinant(matrix) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def reduced_laplacian(g: DiGraph, weight=None) -> list[list[int]]:
    """In-degree Laplacian with the root row and column removed.

    ``L[i][j] = -w(i->j)`` summed over parallel arcs, diagonal entries make
    the column sums vanish.  Rows/columns follow vertex order without the root.
    """
    keep = [x for x in range(g.n) if x != g.root]
    full = [[0] * g.n for _ in range(g.n)]
    for a in g.arcs:
        w = 1 if weight is None else weight[a.id]
        full[a.tail][a.head] -= w
        full[a.head][a.head] += w
    return [[full[x][y] for y in keep] for x in keep]


def count_arborescences_matrix_tree(g: DiGraph) -> int:
    return bareiss_determinant(reduced_laplacian(g))


# ---------------------------------------------------------------------------
# Hamiltonian search


def _ham_search(adj: list[list[int]], cycle: bool, budget: int):
    n = len(adj)
    if n > budget:
        raise BudgetExceeded(f"{n} nodes exceed the Hamiltonian search budget of {budget}")
    if n == 0:
        return None
    if n == 1:
        return None if cycle else [0]
    if cycle and n < 3:
        return None
    degs = [len(a) for a in adj]
    if min(degs) == 0:
        return None
    ones = [i for i in range(n) if degs[i] == 1]
    if cycle and ones:
        return None
    if len(ones) > 2:
        return None
    starts = [0] if cycle else (ones[:1] if ones else list(range(n)))

    visited = [False] * n
    path: list[int] = []

    def dead_end_free(cur):
        # an unvisited vertex with a single free slot must end the path
        enders = 0
        for x in range(n):
            if visited[x]:
                continue
            free = 0
            for y in adj[x]:
                if not visited[y] or y == cur or (cycle and y == path[0]):
                    free += 1
            if free == 0:
                return False
            if free == 1:
                enders += 1
                if cycle or enders > 1:
                    return False
        return True

    def rec(cur):
        if len(path) == n:
            return not cycle or path[0] in adj[cur]
        nxt = [y for y in adj[cur] if not visited[y]]
        nxt.sort(key=lambda y: sum(1 for z in adj[y] if not visited[z]))
        for y in nxt:
            visited[y] = True
            path.append(y)
            if dead_end_free(y) and rec(y):
                return True
            path.pop()
            visited[y] = False
        return False

    for s in starts:
        visited[s] = True
        path.append(s)
        if rec(s):
            return list(path)
        path.pop()
        visited[s] = False
    return None


def find_hamiltonian_path_bruteforce(fg: FlipGraph, budget: int = HAM_BUDGET):
    return _ham_search(fg.adj, False, budget)


def find_hamiltonian_cycle_bruteforce(fg: FlipGraph, budget: int = HAM_BUDGET):
    """A Hamiltonian cycle as a node list (closing edge implied); None below 3 nodes."""
    return _ham_search(fg.adj, True, budget)


# ---------------------------------------------------------------------------
# verification


CHECKS = ("valid", "distinct", "complete", "one_arc", "pivot")


@dataclass
class GrayCodeReport:
    checks: dict[str, bool]
    messages: list[str]
    length: int
    expected: int

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def summary(self) -> str:
        lines = [f"{name}: {'pass' if self.checks[name] else 'FAIL'}" for name in CHECKS]
        lines.append(f"length {self.length}, matrix-tree count {self.expected}")
        return "\n".join(lines + self.messages)


def verify_gray_code(g: DiGraph, seq: list[Arborescence]) -> GrayCodeReport:
    msgs = []
    checks = dict.fromkeys(CHECKS, True)
    expected = count_arborescences_matrix_tree(g)
    for i, a in enumerate(seq):
        if not is_arborescence(g, a):
            checks["valid"] = False
            msgs.append(f"element {i} is not an arborescence")
            break
    if len(set(seq)) != len(seq):
        checks["distinct"] = False
        msgs.append("sequence repeats an arborescence")
    if len(set(seq)) != expected or not checks["valid"]:
        checks["complete"] = False
        msgs.append(f"covers {len(set(seq))} of {expected} arborescences")
    for i in range(len(seq) - 1):
        a, b = seq[i], seq[i + 1]
        if len(a) != g.n or len(b) != g.n:
            checks["one_arc"] = checks["pivot"] = False
            break
        diff = [v for v in range(g.n) if a.parents[v] != b.parents[v]]
        if len(diff) != 1:
            checks["one_arc"] = False
            msgs.append(f"steps {i}->{i + 1} differ in {len(diff)} parent arcs")
            continue
        v = diff[0]
        removed, added = a.parents[v], b.parents[v]
        if not (g.has_arc(removed) and g.has_arc(added)
                and g.arc(removed).head == g.arc(added).head == v):
            checks["pivot"] = False
            msgs.append(f"step {i}->{i + 1}: arcs {removed},{added} do not share head {v}")
    return GrayCodeReport(checks, msgs, len(seq), expected)


def flip_graph_dot(g: DiGraph, fg: FlipGraph, width: int = 40) -> tuple[str, str]:
    """DOT text plus a legend mapping node names to full arborescences.

    Node labels use the delta serialization relative to the first node,
    truncated to ``width`` characters; edges are labelled with the pivot.
    """
    base = fg.nodes[0] if fg.nodes else None
    lines = ["graph flipgraph {", "  node [shape=box, fontsize=10];"]
    legend = []
    for i, a in enumerate(fg.nodes):
        full = " ".join(map(str, a.arc_ids()))
        if i == 0:
            label = full
        else:
            moves = [f"-{base.parents[v]} +{a.parents[v]}"
                     for v in range(g.n) if a.parents[v] != base.parents[v]]
            label = " ".join(moves)
        if len(label) > width:
            label = label[: width - 3] + "..."
        lines.append(f'  a{i} [label="a{i}: {label}"];')
        legend.append(f"a{i}\t{full}")
    for i, j in fg.edges():
        lines.append(f'  a{i} -- a{j} [label="{fg.labels[(i, j)].pivot}"];')
    lines.append("}")
    return "\n".join(lines) + "\n", "\n".join(legend) + "\n"
