"""
Shortest simple k-paths through an automaton product
=====================================================

A walk in a graph is easy to optimise; a *simple* path is not. Here the
"no repeated vertex" rule lives in a constraint automaton over the vertex
alphabet, the graph lives in its own path automaton, and the answer is a
shortest accepted word of their product.
"""

from kpath_nfa import WeightedDigraph, build_lkn, path_automaton, weighted_product
from kpath_nfa import min_wt_simple_kpath, min_wt_simple_st_kpath, shortest_accepting
from kpath_nfa.graph import random_graph

# A small graph with a tempting negative cycle 2 -> 3 -> 2.
G = WeightedDigraph.from_edges(5, [
    (1, 2, 4), (2, 3, -6), (3, 2, 1), (3, 4, 2), (2, 4, 3), (4, 5, 1), (1, 3, 9),
])
print(G)

# The graph on its own: words spell walks from s to t.
D = path_automaton(G, 1, 5)
print("path automaton:", D)

# The constraint: all length-4 words over [5] with distinct letters.
M, report = build_lkn(G.n, 4)
print(f"L_4(5) automaton: {report.states} states, {report.transitions} transitions")

# Their product is acyclic because M is, so negative weights are fine.
P = weighted_product(M, G, 1, 5)
res, regime = shortest_accepting(P)
print(f"product has {P.nfa.num_states} states; regime={regime}")
print(f"best simple 1->5 path on 4 vertices: {res.vertices}, weight {res.weight}")

# The same thing through the one-call API, plus the free-endpoint variant.
assert min_wt_simple_st_kpath(G, 1, 5, 4) == res
free = min_wt_simple_kpath(G, 3)
print(f"best simple path on 3 vertices anywhere: {free.vertices}, weight {free.weight}")

# A larger random instance.
H = random_graph(12, 50, -10, 10, seed=2024)
for k in range(2, 7):
    r = min_wt_simple_kpath(H, k)
    print(f"k={k}: {r.vertices if r else None} weight={r.weight if r else None}")
