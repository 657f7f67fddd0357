from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from arbogray.graycode.primitives import (LEFT, RIGHT, gray_path_from_int,
                                          hypercube_ham_cycle_through_edge,
                                          hypercube_ham_path_from, ladder_cycle_from,
                                          ladder_end_side, ladder_ham_path,
                                          ladder_path_to_partner, other_side)


def ladder_adjacent(p, q):
    (i, s), (j, t) = p, q
    return (i == j and s != t) or (abs(i - j) == 1 and s == t)


def is_ladder_ham_path(n, walk):
    nodes = {(lvl, s) for lvl in range(1, n + 1) for s in (LEFT, RIGHT)}
    return (len(walk) == 2 * n and set(walk) == nodes
            and all(ladder_adjacent(p, q) for p, q in zip(walk, walk[1:])))


def hamming1(a, b):
    return sum(x != y for x, y in zip(a, b)) == 1


def test_ladder_figure_panel():
    # nine levels, start on the left at level 3, target level 7
    assert ladder_ham_path(9, 3, LEFT, 7) == [
        (3, LEFT), (2, LEFT), (1, LEFT), (1, RIGHT), (2, RIGHT), (3, RIGHT), (4, RIGHT),
        (4, LEFT), (5, LEFT), (5, RIGHT), (6, RIGHT), (6, LEFT), (7, LEFT), (8, LEFT),
        (9, LEFT), (9, RIGHT), (8, RIGHT), (7, RIGHT)]


def test_ladder_two_levels():
    assert ladder_ham_path(2, 1, LEFT, 2) == [(1, LEFT), (1, RIGHT), (2, RIGHT), (2, LEFT)]


@pytest.mark.parametrize("n", range(2, 9))
def test_ladder_exhaustive(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for side in (LEFT, RIGHT):
                walk = ladder_ham_path(n, i, side, j)
                assert is_ladder_ham_path(n, walk)
                assert walk[0] == (i, side)
                assert walk[-1] == (j, ladder_end_side(i, side, j))
                # bipartite colouring: position parity matches level+side parity
                for pos, (lvl, s) in enumerate(walk):
                    colour = (lvl + (s == RIGHT)) % 2
                    assert colour == (i + (side == RIGHT) + pos) % 2


def test_ladder_errors():
    with pytest.raises(ValueError):
        ladder_ham_path(3, 2, LEFT, 2)
    with pytest.raises(ValueError):
        ladder_ham_path(3, 0, LEFT, 2)
    with pytest.raises(ValueError):
        ladder_ham_path(3, 1, "up", 2)
    with pytest.raises(ValueError):
        other_side("down")


@pytest.mark.parametrize("n", range(1, 7))
def test_ladder_cycles_and_partner_paths(n):
    for i in range(1, n + 1):
        for side in (LEFT, RIGHT):
            cyc = ladder_cycle_from(n, i, side)
            assert is_ladder_ham_path(n, cyc) and cyc[0] == (i, side)
            assert ladder_adjacent(cyc[-1], cyc[0])
            p = ladder_path_to_partner(n, i, side)
            if n == 1 or i in (1, n):
                assert is_ladder_ham_path(n, p)
                assert p[0] == (i, side) and p[-1] == (i, other_side(side))
            else:
                assert p is None


def test_hypercube_path_examples():
    assert hypercube_ham_path_from(0, "") == [""]
    assert hypercube_ham_path_from(1, "1") == ["1", "0"]
    assert hypercube_ham_path_from(2, "11") == ["11", "10", "00", "01"]
    with pytest.raises(ValueError):
        hypercube_ham_path_from(2, "1")


@pytest.mark.parametrize("d", range(0, 6))
def test_hypercube_paths_all_starts(d):
    for s in range(1 << d):
        start = format(s, f"0{d}b") if d else ""
        walk = hypercube_ham_path_from(d, start)
        assert walk[0] == start and len(set(walk)) == 1 << d
        assert all(hamming1(a, b) for a, b in zip(walk, walk[1:]))
        assert gray_path_from_int(d, s) == [int(w, 2) if d else 0 for w in walk]


def test_hypercube_cycle_example():
    assert hypercube_ham_cycle_through_edge(2, "00", "01") == ["00", "01", "11", "10"]


@pytest.mark.parametrize("d", [2, 3, 4])
def test_hypercube_cycles_every_edge(d):
    verts = [format(x, f"0{d}b") for x in range(1 << d)]
    edges = [(u, v) for u, v in combinations(verts, 2) if hamming1(u, v)]
    assert len(edges) == d << (d - 1)
    for u, v in edges:
        for a, b in ((u, v), (v, u)):
            cyc = hypercube_ham_cycle_through_edge(d, a, b)
            assert len(set(cyc)) == 1 << d
            assert all(hamming1(x, y) for x, y in zip(cyc, cyc[1:] + cyc[:1]))
            assert cyc[:2] == [a, b]


def test_hypercube_cycle_errors():
    with pytest.raises(ValueError):
        hypercube_ham_cycle_through_edge(1, "0", "1")
    with pytest.raises(ValueError):
        hypercube_ham_cycle_through_edge(3, "000", "011")
    with pytest.raises(ValueError):
        hypercube_ham_cycle_through_edge(3, "000", "000")


@given(st.integers(2, 9), st.data())
def test_ladder_random_endpoints(n, data):
    i = data.draw(st.integers(1, n))
    j = data.draw(st.integers(1, n).filter(lambda x: x != i))
    side = data.draw(st.sampled_from([LEFT, RIGHT]))
    walk = ladder_ham_path(n, i, side, j)
    assert is_ladder_ham_path(n, walk) and walk[-1][0] == j
