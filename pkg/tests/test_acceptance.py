"""Acceptance criteria 1-10, one PASS/FAIL line each."""

import math
import random
import time
from itertools import product

import numpy as np
import pytest

from kpath_nfa import oracle
from kpath_nfa.cli import bench_rows
from kpath_nfa.graph import path_weight, random_graph
from kpath_nfa.lkn import build_lkn, ceil_chain, check_fooling_separation, fooling_pairs
from kpath_nfa.nfa import Nfa, reachable_trim
from kpath_nfa.nxa import (BitMatrix, Nxa, count_accepting_paths_mod2, covering_random,
                           covering_size, phi_det, ryser_union, verify_covering, xor_empty,
                           xor_witness)
from kpath_nfa.search import (shortest_accepting_bellman_ford, shortest_accepting_dag,
                              shortest_accepting_dijkstra, weighted_product)
from kpath_nfa.solvers import SolveConfig, min_wt_simple_st_kpath, simple_kpath_exists_nxa

LANGUAGE_CASES = [(n, k) for n in range(1, 6) for k in range(1, n + 1)] + [(6, 1), (6, 2), (6, 3)]


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def lkn_builds():
    return {(n, k): build_lkn(n, k) for n, k in LANGUAGE_CASES}


def test_criterion_01_language_equality(verdict, lkn_builds):
    t0 = time.perf_counter()
    bad = []
    for (n, k), (M, _) in lkn_builds.items():
        if oracle.enumerate_language(M, n, k) != oracle.lkn_reference(n, k):
            bad.append((n, k, "length k"))
        for length in (k - 1, k + 1):
            if length >= 0 and any(oracle.naive_accepts(M, w)
                                   for w in product(range(1, n + 1), repeat=length)):
                bad.append((n, k, f"length {length}"))
    elapsed = time.perf_counter() - t0
    verdict(1, not bad and elapsed < 30,
            f"{len(lkn_builds)} (n,k) cases, mismatches={bad}, {elapsed:.1f}s (limit 30s)")


def test_criterion_02_state_lower_bound(verdict, lkn_builds):
    bad = []
    for (n, k), (M, _) in lkn_builds.items():
        states = reachable_trim(M).num_states
        if states < 2**k or not check_fooling_separation(M, fooling_pairs(k, n)):
            bad.append((n, k, states))
    verdict(2, not bad, f"trimmed states >= 2^k and fooling separation on "
                        f"{len(lkn_builds)} cases, failures={bad}")


def test_criterion_03_recursion_accounting(verdict):
    bad = []
    for k in range(1, 17):
        chain = ceil_chain(k)
        if len(chain) > math.ceil(math.log2(k)) + 1 or sum(chain) > 2 * k + 2 * math.log2(k) + 2:
            bad.append(("chain", k, chain))
    # measured depth on real builds
    for k in range(1, 9):
        for n in (k, 2 * k) if k <= 5 else (k,):
            _, rep = build_lkn(n, k)
            if (rep.recursion_depth > math.ceil(math.log2(k)) + 1
                    or rep.recursion_depth != len(rep.sublengths)
                    or sum(rep.sublengths) > 2 * k + 2 * math.log2(k) + 2):
                bad.append(("build", n, k, rep.recursion_depth, rep.sublengths))
    verdict(3, not bad, f"depth <= ceil(log2 k)+1 and length sum <= 2k+2log2k+2 for k<=16, "
                        f"failures={bad}")


def _random_instance(rng, i, max_n, max_k):
    n = rng.randint(1, max_n)
    m = rng.randint(0, n * (n - 1) // 2)
    k = rng.randint(1, max_k)
    G = random_graph(n, m, -10, 10, 10_000 + i)
    return G, n, m, k


def test_criterion_04_solver_matches_oracle(verdict):
    rng = random.Random(4)
    t0 = time.perf_counter()
    mismatches, found = [], 0
    for i in range(200):
        G, n, m, k = _random_instance(rng, i, 8, 5)
        s, t = rng.randint(1, n), rng.randint(1, n)
        res = min_wt_simple_st_kpath(G, s, t, k, SolveConfig(seed=i))
        ref = oracle.brute_min_wt_simple_kpath(G, k, s, t)
        if res is None:
            ok = ref is None
        else:
            found += 1
            ok = (ref is not None and res.weight == ref[0]
                  and not oracle.validate_witness(G, res.vertices, res.weight, k, s, t))
        if not ok:
            mismatches.append((i, n, m, k, s, t))
    elapsed = time.perf_counter() - t0
    verdict(4, not mismatches and elapsed < 120,
            f"200 instances ({found} with a path), mismatches={mismatches}, "
            f"{elapsed:.1f}s (limit 120s)")


def _random_acyclic_nfa(rng, n):
    q = rng.randint(2, 8)
    trans = set()
    for _ in range(rng.randint(1, 3 * q)):
        a = rng.randrange(q - 1)
        b = rng.randint(a + 1, q - 1)
        trans.add((a, b, rng.choice([0] + list(range(1, n + 1))), 0))
    acc = rng.sample(range(q), rng.randint(1, 2))
    return Nfa(q, 0, acc, sorted(trans))


def test_criterion_05_regime_equivalence(verdict):
    rng = random.Random(5)
    bad, dijkstra_checked, nonempty = [], 0, 0
    for i in range(200):
        n = rng.randint(1, 6)
        nonneg = i % 2 == 0
        G = random_graph(n, rng.randint(0, n * (n - 1)), 0 if nonneg else -10, 10, 50_000 + i)
        if i % 4 == 3:
            M, _ = build_lkn(n, rng.randint(1, n))
        else:
            M = _random_acyclic_nfa(rng, n)
        P = weighted_product(M, G, rng.randint(1, n), rng.randint(1, n))
        dag = shortest_accepting_dag(P)
        bf = shortest_accepting_bellman_ford(P)
        weights = {None if r is None else r.weight for r in (dag, bf)}
        for r in (dag, bf):
            if r is not None and path_weight(G, r.vertices) != r.weight:
                bad.append((i, "witness weight"))
        if nonneg:
            dj = shortest_accepting_dijkstra(P)
            weights.add(None if dj is None else dj.weight)
            dijkstra_checked += 1
        nonempty += dag is not None
        if len(weights) != 1:
            bad.append((i, weights))
    verdict(5, not bad, f"200 products ({nonempty} nonempty, {dijkstra_checked} with Dijkstra), "
                        f"disagreements={bad}")


def test_criterion_06_ryser_determinant(verdict):
    rng = np.random.default_rng(6)
    bad, words = [], 0
    for trial in range(20):
        k = int(rng.integers(1, 5))
        n = int(rng.integers(k, 7))
        A = BitMatrix.random(k, n, rng)
        det_one = set()
        for I in product(range(1, n + 1), repeat=k):
            words += 1
            r, g, p = oracle.ryser_sum(A, I), oracle.gaussian_det(A, I), phi_det(A, I)
            if not r == g == p:
                bad.append((trial, I))
            if g:
                det_one.add(I)
        lang = oracle.enumerate_language(ryser_union(A), n, k, parity=True)
        if set(lang.accepted) != det_one:
            bad.append((trial, "union language"))
    verdict(6, not bad, f"20 matrices, {words} index words, failures={bad}")


def test_criterion_07_covering_families(verdict):
    n, k = 6, 3
    reference = set(oracle.lkn_reference(n, k).accepted)
    size_ok, verified, union_bad = True, 0, []
    for seed in range(100):
        F = covering_random(n, k, seed)
        size_ok &= len(F) == math.ceil(2 * k * math.log2(n)) == covering_size(n, k)
        if not verify_covering(F):
            continue
        verified += 1
        union = set()
        for A in F.matrices:
            union |= set(oracle.enumerate_language(ryser_union(A), n, k, parity=True).accepted)
        if union != reference:
            union_bad.append(seed)
    verdict(7, size_ok and verified >= 95 and not union_bad,
            f"size={math.ceil(2 * k * math.log2(n))} every seed={size_ok}, "
            f"verified {verified}/100 (need 95), union != L_3(6) for seeds {union_bad}")


def test_criterion_08_nxa_decision(verdict):
    rng = random.Random(8)
    errors, unverified_families = [], 0
    for i in range(100):
        G, n, m, k = _random_instance(rng, i, 7, 4)
        found, rep = simple_kpath_exists_nxa(G, k, SolveConfig(method="nxa", seed=i))
        truth = oracle.brute_min_wt_simple_kpath(G, k) is not None
        if not rep.family_verified or found != truth:
            errors.append(("verified", i, n, m, k))
    false_pos = []
    for i in range(500):
        G, n, m, k = _random_instance(rng, 1000 + i, 7, 4)
        cfg = SolveConfig(method="nxa", seed=7_000 + i, verify_gadgets=False)
        found, rep = simple_kpath_exists_nxa(G, k, cfg)
        unverified_families += not rep.family_verified
        if found and oracle.brute_min_wt_simple_kpath(G, k) is None:
            false_pos.append((i, n, m, k))
    verdict(8, not errors and not false_pos,
            f"100 verified-family instances errors={errors}; 500 unverified-family "
            f"instances ({unverified_families} unverified) false positives={false_pos}")


def _random_nxa(rng):
    q = rng.randint(1, 5)
    trans = {(rng.randrange(q), rng.randrange(q), rng.randint(1, 3))
             for _ in range(rng.randint(0, 3 * q))}
    acc = [s for s in range(q) if rng.random() < 0.4]
    return Nxa(q, rng.randrange(q), acc, sorted(t + (0,) for t in trans))


def test_criterion_09_xor_emptiness(verdict):
    rng = random.Random(9)
    bad, nonempty = [], 0
    for i in range(500):
        N = _random_nxa(rng)
        brute = oracle.brute_xor_nonempty(N, [1, 2, 3], 5)
        empty = xor_empty(N)
        if empty != (brute is None):
            bad.append((i, "verdict"))
        if not empty:
            nonempty += 1
            w = xor_witness(N)
            if w is None or oracle.naive_parity(N, w) != 1 or count_accepting_paths_mod2(N, w) != 1:
                bad.append((i, "witness"))
    verdict(9, not bad, f"500 machines ({nonempty} nonempty), failures={bad}")


def test_criterion_10_growth_report(verdict, tmp_path):
    rows = list(bench_rows(2, 8))
    sizes = [r["size"] for r in rows]
    ok = (all(r["size"] >= 2**r["k"] for r in rows)
          and all(a <= b for a, b in zip(sizes, sizes[1:])))
    table = ", ".join(f"k={r['k']}:{r['size']}" for r in rows)
    verdict(10, ok, f"size(L_k(2k)) {table}; >= 2^k and nondecreasing")
