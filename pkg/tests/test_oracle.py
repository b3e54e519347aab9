import math
from itertools import permutations

from kpath_nfa import oracle
from kpath_nfa.graph import WeightedDigraph
from kpath_nfa.lkn import build_lkn
from kpath_nfa.nfa import Nfa
from kpath_nfa.nxa import BitMatrix, ryser_union


def complete(n):
    return WeightedDigraph.from_edges(n, [(u, v, 1) for u in range(1, n + 1)
                                          for v in range(1, n + 1) if u != v])


def test_triangle(triangle):
    assert oracle.brute_min_wt_simple_kpath(triangle, 3, 1, 3) == (2, (1, 2, 3))
    assert oracle.brute_min_wt_simple_kpath(triangle, 4) is None


def test_single_vertex():
    assert oracle.brute_min_wt_simple_kpath(WeightedDigraph.from_edges(1, []), 1) == (0, (1,))


def test_hamiltonian_count():
    for n in range(1, 7):
        assert oracle.count_simple_paths(complete(n), n) == math.factorial(n)


def test_lexicographic_tie_break():
    G = WeightedDigraph.from_edges(3, [(1, 2, 0), (2, 3, 0), (3, 1, 0)])
    assert oracle.brute_min_wt_simple_kpath(G, 2) == (0, (1, 2))


def test_language_examples():
    assert set(oracle.enumerate_language(build_lkn(3, 2)[0], 3, 2).accepted) == {
        (1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)}
    assert len(oracle.enumerate_language(Nfa(1, 0, [], []), 3, 2)) == 0
    assert set(oracle.enumerate_language(ryser_union(BitMatrix.identity(2)), 2, 2).accepted) == {
        (1, 2), (2, 1)}


def test_reference_cardinality():
    assert len(oracle.lkn_reference(4, 2)) == 12
    assert len(oracle.lkn_reference(3, 3)) == 6
    assert len(oracle.lkn_reference(2, 3)) == 0
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert len(oracle.lkn_reference(n, k)) == math.perm(n, k)


def test_validator_flags_problems(triangle):
    assert oracle.validate_witness(triangle, (1, 2, 3), 2, 3, 1, 3) == []
    assert oracle.validate_witness(triangle, (1, 2, 3), 5, 3)
    assert oracle.validate_witness(triangle, (1, 3), 1, 2)
    assert oracle.validate_witness(triangle, (1, 2, 3, 1), 3, 4)
    assert oracle.validate_witness(triangle, (2, 3), 1, 2, s=1)


def test_gaussian_det_on_permutation_matrices():
    for perm in permutations(range(3)):
        A = BitMatrix(3, 3, [1 << p for p in perm])
        assert oracle.gaussian_det(A, (1, 2, 3)) == 1 == oracle.ryser_sum(A, (1, 2, 3))
