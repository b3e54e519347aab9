import random

import pytest

from kpath_nfa.graph import WeightedDigraph, random_graph


@pytest.fixture
def triangle():
    """Directed 3-cycle 1->2->3->1 with unit weights."""
    return WeightedDigraph.from_edges(3, [(1, 2, 1), (2, 3, 1), (3, 1, 1)])


def small_instances(count, max_n, max_k, seed, wmin=-10, wmax=10):
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(1, max_n)
        m = rng.randint(0, n * (n - 1) // 2)
        yield random_graph(n, m, wmin, wmax, seed * 1000 + i), rng.randint(1, max_k), rng
