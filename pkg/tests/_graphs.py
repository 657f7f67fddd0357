"""Seeded random instances shared by the test modules."""

import itertools
import random

from arbogray.digraph import DiGraph


def random_digraph(seed, n_max=6, p=0.45, parallel=True):
    rng = random.Random(seed)
    n = rng.randint(1, n_max)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p]
    if parallel and pairs and rng.random() < 0.3:
        pairs.append(rng.choice(pairs))
    rng.shuffle(pairs)
    return DiGraph.from_pairs(n, rng.randrange(n), pairs)


def random_indegree_two(seed, n_max=6):
    """Random digraph where every vertex has at most two incoming arcs."""
    rng = random.Random(seed)
    n = rng.randint(1, n_max)
    pairs = []
    for v in range(n):
        others = [u for u in range(n) if u != v]
        k = min(len(others), rng.choice((1, 2, 2)))
        tails = [rng.choice(others) for _ in range(k)]
        pairs += [(t, v) for t in tails]
    rng.shuffle(pairs)
    return DiGraph.from_pairs(n, rng.randrange(n), pairs)


def random_clique_support(seed, n_max=6):
    """Each pair one-way, the other way, or both; a few parallel arcs; random root."""
    rng = random.Random(seed)
    n = rng.randint(1, n_max)
    pairs = []
    for i, j in itertools.combinations(range(n), 2):
        c = rng.random()
        if c < 0.35:
            pairs.append((i, j))
        elif c < 0.7:
            pairs.append((j, i))
        else:
            pairs += [(i, j), (j, i)]
    for _ in range(rng.randrange(3)):
        if pairs:
            pairs.append(rng.choice(pairs))
    rng.shuffle(pairs)
    return DiGraph.from_pairs(n, rng.randrange(n), pairs)
