"""
The distinct-symbols automaton and its size
============================================

The constraint automaton accepts length-k words over [n] with no repeated
symbol. It is built by splitting the alphabet with a universal family of
subsets and recursing on the two halves of the word. This script looks at
how big it gets and checks it against the fooling-set lower bound of 2^k
states.
"""

from kpath_nfa import build_lkn, check_fooling_separation, fooling_pairs, reachable_trim
from kpath_nfa import oracle, universal_greedy, verify_universal
from kpath_nfa.universal import GreedyProvider

# Universal families: every k positions see every 0/1 pattern.
U = universal_greedy(6, 3)
print(f"greedy (6,3)-universal family: {len(U)} strings, verified={verify_universal(U)}")
print("  first few:", U.as_strings()[:5])

# Build a small instance and compare with brute force.
M, rep = build_lkn(5, 3)
lang = oracle.enumerate_language(M, 5, 3)
print(f"L_3(5): {len(lang)} accepted words, reference has {len(oracle.lkn_reference(5, 3))}")

# The fooling set: x_S spells S, y_S spells its complement in [k].
for x, y in fooling_pairs(3, 5)[:4]:
    print(f"  x={x!s:10} y={y}")
print("separation holds:", check_fooling_separation(M, fooling_pairs(3, 5)))

# Shared sub-machines versus copying every branch.
print(f"\n{'n':>3} {'k':>3} {'states':>8} {'trimmed':>8} {'2^k':>6} {'size':>8} {'unshared':>10}")
for n, k in [(4, 2), (6, 3), (8, 4), (10, 5)]:
    M, rep = build_lkn(n, k, GreedyProvider(), with_unshared=True)
    trimmed = reachable_trim(M).num_states
    print(f"{n:>3} {k:>3} {rep.states:>8} {trimmed:>8} {2**k:>6} {rep.size:>8} {rep.unshared_size:>10}")
