from pathlib import Path

import pytest

from arbogray.arborescence import format_arborescences
from arbogray.digraph import format_digraph, is_clique_support_minus_root
from arbogray.errors import GraphError
from arbogray.generators import bidirected_cycle, generate, instance_names, random_tournament
from arbogray.oracle import build_flip_graph, enumerate_arborescences

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_FILES = {
    "fig-contraction": "fig-contraction.txt",
    "intro-3vertex": "intro-3vertex.txt",
    "fig-graph13": "fig-graph13.txt",
    "fig-bipartite7": "fig-bipartite7.txt",
    "fig-flipG1": "fig-flipG1.txt",
    "fig-lkn": "fig-lkn.txt",
    "fig-mkn": "fig-mkn.txt",
    "bidirected-cycle(5)": "bidirected-cycle_5.txt",
    "bidirected-complete(4)": "bidirected-complete_4.txt",
    "random-tournament(6, seed=42)": "random-tournament_6_seed42.txt",
}


@pytest.mark.parametrize("name", sorted(GOLDEN_FILES))
def test_golden_bytes(name):
    expected = (GOLDEN / GOLDEN_FILES[name]).read_bytes()
    assert format_digraph(generate(name)).encode() == expected


def test_every_figure_has_a_golden_file():
    figures = [n for n in instance_names() if "(" not in n]
    assert set(figures) <= set(GOLDEN_FILES)


def test_graph13_arborescences_golden():
    got = "count 13\n" + format_arborescences(enumerate_arborescences(generate("fig-graph13")))
    assert got.encode() == (GOLDEN / "fig-graph13.arborescences.txt").read_bytes()


def test_graph13_drawn_arcs():
    # drawn with labels 1..5 and root 1
    drawn = [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4), (4, 5), (3, 5), (5, 2)]
    g = generate("fig-graph13")
    assert [(a.tail + 1, a.head + 1) for a in g.arcs] == drawn and g.root == 0


def test_flip_g1_transcription():
    fg = build_flip_graph(generate("fig-flipG1"))
    assert len(fg) == 6
    assert sum(fg.degree(i) == 1 for i in range(6)) == 1
    triangles = [(a, b, c) for a in range(6) for b in fg.adj[a] for c in fg.adj[b]
                 if a < b < c and a in fg.adj[c]]
    assert triangles


def test_bidirected_cycle_sizes():
    g = generate("bidirected-cycle(5)")
    assert (g.n, len(g.arcs)) == (5, 10)
    assert len(bidirected_cycle(2).arcs) == 2 and bidirected_cycle(1).arcs == ()


def test_random_tournament_is_deterministic():
    a = generate("random-tournament(6, seed=42)")
    assert a == generate("random-tournament(6,42)") == random_tournament(6, 42)
    assert is_clique_support_minus_root(a)
    assert random_tournament(6, 43) != a


@pytest.mark.parametrize("spec", ["nope", "random-tournament(5)", "bidirected-cycle(0)",
                                  "bidirected-complete(0)"])
def test_bad_specs(spec):
    with pytest.raises(GraphError):
        generate(spec)
