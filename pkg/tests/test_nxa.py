import random
from itertools import product

import numpy as np
import pytest

from kpath_nfa import oracle
from kpath_nfa.errors import BudgetError, ParameterError, PreconditionError, StructureError
from kpath_nfa.graph import WeightedDigraph
from kpath_nfa.nfa import Nfa, accepts, path_automaton
from kpath_nfa.nxa import (BitMatrix, CoveringFamily, Nxa, count_accepting_paths_mod2,
                           covering_random, gf2_rank, nxa_intersect_dfa, phi_det, ryser_chain,
                           ryser_union, verify_covering, xor_empty, xor_empty_many, xor_witness)


def random_nxa(rng, states, alphabet=(1, 2, 3)):
    trans = {(rng.randrange(states), rng.randrange(states), rng.choice(alphabet))
             for _ in range(rng.randint(0, 3 * states))}
    acc = [q for q in range(states) if rng.random() < 0.4]
    return Nxa(states, rng.randrange(states), acc, [t + (0,) for t in sorted(trans)])


def test_identity_det():
    assert phi_det(BitMatrix.identity(2), (1, 2)) == 1
    assert phi_det(BitMatrix.identity(2), (2, 1)) == 1


def test_repeated_index_det_zero():
    A = BitMatrix.random(3, 5, np.random.default_rng(0))
    assert all(phi_det(A, (i, i, j)) == 0 for i in range(1, 6) for j in range(1, 6))


def test_det_matches_ryser_3x5():
    A = BitMatrix.random(3, 5, np.random.default_rng(1))
    for I in product(range(1, 6), repeat=3):
        assert phi_det(A, I) == oracle.ryser_sum(A, I) == oracle.gaussian_det(A, I)


def test_chain_identity():
    N = ryser_chain(BitMatrix.identity(2), {1})
    words = [w for w in product([1, 2], repeat=2) if count_accepting_paths_mod2(N, w)]
    assert words == [(1, 1)]
    assert N.num_states == 3 and len(N.transitions) == 2


def test_chain_empty_support_and_errors():
    A = BitMatrix.from_lists([[0, 0, 0], [1, 1, 0]])
    N = ryser_chain(A, {1})
    assert not N.transitions and xor_empty(N)
    with pytest.raises(ParameterError):
        ryser_chain(A, set())


def test_union_k1_and_identity():
    A = BitMatrix.from_lists([[1, 0, 1]])
    assert set(oracle.enumerate_language(ryser_union(A), 3, 1).accepted) == {(1,), (3,)}
    lang = oracle.enumerate_language(ryser_union(BitMatrix.identity(2)), 2, 2)
    assert set(lang.accepted) == {(1, 2), (2, 1)}


def test_union_matches_det_random():
    rng = np.random.default_rng(2)
    for _ in range(5):
        A = BitMatrix.random(3, 5, rng)
        lang = set(oracle.enumerate_language(ryser_union(A), 5, 3).accepted)
        assert lang == {I for I in product(range(1, 6), repeat=3) if phi_det(A, I)}


def test_union_cap():
    with pytest.raises(BudgetError):
        ryser_union(BitMatrix(21, 1, [1] * 21))


def test_parity_counting():
    N = Nxa(4, 0, [3], [(0, 1, 1, 0), (0, 2, 1, 0), (1, 3, 2, 0), (2, 3, 2, 0)])
    assert count_accepting_paths_mod2(N, [1, 2]) == 0
    rng = random.Random(3)
    for _ in range(100):
        N = random_nxa(rng, rng.randint(1, 6))
        for L in range(5):
            for w in product([1, 2, 3], repeat=L):
                assert count_accepting_paths_mod2(N, w) == oracle.naive_parity(N, w)


def test_nxa_structure_rules():
    with pytest.raises(StructureError):
        Nxa(2, 0, [1], [(0, 1, 1, 0), (0, 1, 1, 0)])
    with pytest.raises(StructureError):
        Nxa(2, 0, [1], [(0, 1, 0, 0)])


def test_covering_size_and_determinism():
    F = covering_random(8, 3, 4)
    assert len(F) == 18
    assert [A.rows for A in F.matrices] == [A.rows for A in covering_random(8, 3, 4).matrices]


def test_verify_covering_edges():
    assert not verify_covering(CoveringFamily(4, 2, [BitMatrix(2, 4, [0, 0])]))
    F = CoveringFamily(3, 3, [BitMatrix.identity(3)])
    assert verify_covering(F) and F.verified


def test_covering_dump_round_trip():
    F = covering_random(6, 3, 9)
    G = CoveringFamily.loads(F.dumps())
    assert [A.rows for A in G.matrices] == [A.rows for A in F.matrices]


def test_gf2_rank():
    assert gf2_rank([0b011, 0b101, 0b110]) == 2
    assert gf2_rank([1, 2, 4]) == 3


def sigma_star_dfa(n):
    return Nfa(1, 0, [0], [(0, 0, a, 0) for a in range(1, n + 1)])


def test_intersect_with_everything():
    rng = random.Random(4)
    for _ in range(40):
        N = random_nxa(rng, rng.randint(1, 5))
        P = nxa_intersect_dfa(N, sigma_star_dfa(3))
        for L in range(4):
            for w in product([1, 2, 3], repeat=L):
                assert count_accepting_paths_mod2(P, w) == count_accepting_paths_mod2(N, w)


def test_intersect_parity_multiplies():
    rng = random.Random(5)
    for _ in range(40):
        N = random_nxa(rng, rng.randint(1, 5))
        D = Nfa(3, 0, [rng.randrange(3)],
                [(q, rng.randrange(3), a, 0) for q in range(3) for a in (1, 2, 3) if rng.random() < .8])
        P = nxa_intersect_dfa(N, D)
        for L in range(5):
            for w in product([1, 2, 3], repeat=L):
                assert oracle.naive_parity(P, w) == (oracle.naive_parity(N, w) & accepts(D, w))


def test_intersect_requires_deterministic():
    N = ryser_union(BitMatrix.identity(2))
    with pytest.raises(PreconditionError):
        nxa_intersect_dfa(N, Nfa(2, 0, [1], [(0, 1, 1, 0), (0, 0, 1, 0)]))


def test_ryser_product_with_path_automaton():
    G = WeightedDigraph.from_edges(3, [(1, 2, 0), (2, 3, 0), (1, 3, 0), (3, 2, 0)])
    D = path_automaton(G, 1, 3)
    A = BitMatrix.identity(3)
    N = nxa_intersect_dfa(ryser_union(A), D)
    got = {w for w in product([1, 2, 3], repeat=3) if count_accepting_paths_mod2(N, w)}
    assert got == {(1, 2, 3)}


def test_xor_empty_examples():
    assert xor_empty(Nxa(2, 0, [], [(0, 1, 1, 0)]))
    chain = Nxa(3, 0, [2], [(0, 1, 1, 0), (1, 2, 2, 0)])
    assert not xor_empty(chain) and xor_witness(chain) == (1, 2)
    cancel = Nxa(4, 0, [3], [(0, 1, 1, 0), (0, 2, 1, 0), (1, 3, 2, 0), (2, 3, 2, 0)])
    assert xor_empty(cancel)


def test_xor_empty_many_threads():
    rng = random.Random(6)
    machines = [random_nxa(rng, 4) for _ in range(20)]
    assert xor_empty_many(machines, threads=4) == [xor_empty(N) for N in machines]


def test_hex_round_trip():
    A = BitMatrix.random(4, 7, np.random.default_rng(3))
    assert BitMatrix.from_hex(4, 7, A.to_hex()) == A
