"""Built-in instances: the figures' graphs and parametrised families.

Figure arc lists are transcribed by hand; tests compare each against a golden
file.  Vertex names used in the drawings are listed next to each instance.
"""

from __future__ import annotations

import random
import re
from itertools import combinations

from .digraph import DiGraph
from .errors import GraphError

# r=0 x=1 y=2 z=3
FIG_CONTRACTION = [(0, 1), (0, 2), (1, 3), (2, 3)]

# r=0 u=1 v=2
INTRO_3VERTEX = [(0, 1), (1, 2), (0, 2)]

# drawn labels 1..5 become 0..4, root is label 1
FIG_GRAPH13 = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4), (2, 4), (4, 1)]

# r=0 u=1 v=2 x=3
FIG_BIPARTITE7 = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]

# r=0, drawn vertices 0..3 become 1..4
FIG_FLIP_G1 = [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4), (3, 1), (4, 2), (1, 4)]

# w=0 v1..v4 = 1..4, v = v3; path, the forced long backedges, then the arc wv
FIG_LKN = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (4, 1), (3, 1), (0, 3)]

# w=0 v1..v4 = 1..4, extra vertex v = 5; black arcs, then the arc wv
FIG_MKN = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (4, 1), (3, 1),
           (2, 5), (3, 5), (4, 5), (5, 1), (0, 5)]

FIGURES = {
    "fig-contraction": (4, FIG_CONTRACTION),
    "intro-3vertex": (3, INTRO_3VERTEX),
    "fig-graph13": (5, FIG_GRAPH13),
    "fig-bipartite7": (4, FIG_BIPARTITE7),
    "fig-flipG1": (5, FIG_FLIP_G1),
    "fig-lkn": (5, FIG_LKN),
    "fig-mkn": (6, FIG_MKN),
}


def bidirected_cycle(n: int) -> DiGraph:
    if n < 1:
        raise GraphError("bidirected-cycle needs n >= 1")
    if n == 1:
        return DiGraph(1, 0, ())
    if n == 2:
        return DiGraph.from_pairs(2, 0, [(0, 1), (1, 0)])
    pairs = []
    for i in range(n):
        j = (i + 1) % n
        pairs += [(i, j), (j, i)]
    return DiGraph.from_pairs(n, 0, pairs)


def bidirected_complete(n: int) -> DiGraph:
    if n < 1:
        raise GraphError("bidirected-complete needs n >= 1")
    pairs = []
    for i, j in combinations(range(n), 2):
        pairs += [(i, j), (j, i)]
    return DiGraph.from_pairs(n, 0, pairs)


def random_tournament(n: int, seed: int, root: int = 0) -> DiGraph:
    if n < 1:
        raise GraphError("random-tournament needs n >= 1")
    rng = random.Random(seed)
    pairs = [(i, j) if rng.random() < 0.5 else (j, i) for i, j in combinations(range(n), 2)]
    return DiGraph.from_pairs(n, root, pairs)


def tournament_from_bits(n: int, bits: int, root: int = 0) -> DiGraph:
    """Tournament whose k-th pair (in ``combinations`` order) points forward iff bit k is set."""
    pairs = [(i, j) if bits >> k & 1 else (j, i)
             for k, (i, j) in enumerate(combinations(range(n), 2))]
    return DiGraph.from_pairs(n, root, pairs)


def figure(name: str) -> DiGraph:
    n, pairs = FIGURES[name]
    return DiGraph.from_pairs(n, 0, pairs)


_PARAM = re.compile(r"^(bidirected-cycle|bidirected-complete|random-tournament)"
                    r"\((\d+)(?:\s*,\s*(?:seed\s*=\s*)?(-?\d+))?\)$")


def generate(spec: str) -> DiGraph:
    """Build an instance from its name, e.g. ``fig-graph13`` or ``random-tournament(6, seed=42)``."""
    spec = spec.strip()
    if spec in FIGURES:
        return figure(spec)
    m = _PARAM.match(spec)
    if not m:
        raise GraphError(f"unknown instance {spec!r}")
    kind, n, seed = m.group(1), int(m.group(2)), m.group(3)
    if kind == "bidirected-cycle":
        return bidirected_cycle(n)
    if kind == "bidirected-complete":
        return bidirected_complete(n)
    if seed is None:
        raise GraphError("random-tournament needs a seed: random-tournament(n, seed)")
    return random_tournament(n, int(seed))


def instance_names() -> list[str]:
    return sorted(FIGURES) + ["bidirected-cycle(n)", "bidirected-complete(n)",
                              "random-tournament(n, seed)"]
