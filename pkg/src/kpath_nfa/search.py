"""Minimum-weight accepting runs of a constraint NFA crossed with a graph.

The product of a constraint automaton with the graph's path automaton is
searched as a plain weighted digraph. Three regimes are available:
topological relaxation (acyclic products, any weights), Dijkstra with a
binary heap (non-negative weights) and Bellman-Ford (everything else).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import CycleError, NegativeCycleError, PreconditionError
from .graph import PathResult
from .nfa import EPS, Nfa, path_automaton, product_with_pairs, topological_order


@dataclass(frozen=True)
class WeightedProduct:
    nfa: Nfa
    right_projection: tuple  # product state -> graph vertex, or None for the fresh start
    left_acyclic: bool

    @property
    def accept(self) -> Optional[int]:
        return next(iter(self.nfa.accepting), None)


def weighted_product(M: Nfa, G, s: int, t: int) -> WeightedProduct:
    """Product of ``M`` with the path automaton of ``(G, s, t)``, with one accepting state.

    When several product states accept, a fresh sink is added and reached
    from each of them by a weight-0 epsilon move.
    """
    P, pairs = product_with_pairs(M, path_automaton(G, s, t))
    proj = [b if b != 0 else None for _, b in pairs]
    if len(P.accepting) > 1:
        sink = P.num_states
        trans = list(P.transitions) + [(q, sink, EPS, 0) for q in sorted(P.accepting)]
        P = Nfa(sink + 1, P.start, [sink], trans)
        proj.append(t)
    return WeightedProduct(P, tuple(proj), M.is_acyclic)


def project_to_graph_path(P: WeightedProduct, product_path: Sequence) -> tuple:
    """Vertex sequence spelled by a start-to-accept run given as transitions.

    Epsilon steps carry no symbol and are skipped; every other step enters
    the graph vertex it is labeled with.
    """
    return tuple(P.right_projection[dst] for _, dst, label, _ in product_path if label != EPS)


def _coreachable(M: Nfa, target: int) -> set:
    preds = [[] for _ in range(M.num_states)]
    for a, b, _, _ in M.transitions:
        preds[b].append(a)
    seen = {target}
    stack = [target]
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def _result(P: WeightedProduct, dist, pred, accept) -> Optional[PathResult]:
    if accept is None or dist[accept] is None:
        return None
    path = []
    q = accept
    while pred[q] is not None:
        path.append(pred[q])
        q = pred[q][0]
    path.reverse()
    trace = (P.nfa.start,) + tuple(tr[1] for tr in path)
    return PathResult(project_to_graph_path(P, path), dist[accept], trace)


def shortest_accepting_dag(P: WeightedProduct) -> Optional[PathResult]:
    M = P.nfa
    try:
        order = topological_order(M)
    except CycleError as exc:
        raise PreconditionError(f"DAG regime needs an acyclic product: {exc}") from None
    dist = [None] * M.num_states
    pred = [None] * M.num_states
    dist[M.start] = 0
    for q in order:
        d = dist[q]
        if d is None:
            continue
        for tr in M.out[q]:
            nd = d + tr[3]
            r = tr[1]
            if dist[r] is None or nd < dist[r]:
                dist[r] = nd
                pred[r] = tr
    return _result(P, dist, pred, P.accept)


def shortest_accepting_dijkstra(P: WeightedProduct) -> Optional[PathResult]:
    M = P.nfa
    for tr in M.transitions:
        if tr[3] < 0:
            raise PreconditionError(f"Dijkstra regime needs non-negative weights, found {tr[3]}")
    dist = [None] * M.num_states
    pred = [None] * M.num_states
    done = [False] * M.num_states
    dist[M.start] = 0
    heap = [(0, M.start)]
    while heap:
        d, q = heapq.heappop(heap)
        if done[q]:
            continue
        done[q] = True
        if q == P.accept:
            break
        for tr in M.out[q]:
            r = tr[1]
            nd = d + tr[3]
            if not done[r] and (dist[r] is None or nd < dist[r]):
                dist[r] = nd
                pred[r] = tr
                heapq.heappush(heap, (nd, r))
    return _result(P, dist, pred, P.accept)


def shortest_accepting_bellman_ford(P: WeightedProduct) -> Optional[PathResult]:
    """General regime. Negative cycles only matter if they can reach acceptance."""
    M = P.nfa
    accept = P.accept
    if accept is None:
        return None
    live = _coreachable(M, accept)
    edges = [tr for tr in M.transitions if tr[0] in live and tr[1] in live]
    dist = [None] * M.num_states
    pred = [None] * M.num_states
    dist[M.start] = 0
    for _ in range(max(len(live) - 1, 0)):
        changed = False
        for tr in edges:
            d = dist[tr[0]]
            if d is not None and (dist[tr[1]] is None or d + tr[3] < dist[tr[1]]):
                dist[tr[1]] = d + tr[3]
                pred[tr[1]] = tr
                changed = True
        if not changed:
            break
    else:
        for tr in edges:
            d = dist[tr[0]]
            if d is not None and (dist[tr[1]] is None or d + tr[3] < dist[tr[1]]):
                pred[tr[1]] = tr
                # walk predecessors back far enough to land on the cycle itself
                q = tr[1]
                for _ in range(len(live)):
                    q = pred[q][0]
                cycle = [q]
                r = pred[q][0]
                while r != q:
                    cycle.append(r)
                    r = pred[r][0]
                raise NegativeCycleError(
                    "negative cycle on a start-to-accept route", cycle[::-1])
    return _result(P, dist, pred, accept)


REGIMES = {
    "dag": shortest_accepting_dag,
    "dijkstra": shortest_accepting_dijkstra,
    "bellman_ford": shortest_accepting_bellman_ford,
}


def select_regime(P: WeightedProduct) -> str:
    if P.nfa.is_acyclic:
        return "dag"
    if all(tr[3] >= 0 for tr in P.nfa.transitions):
        return "dijkstra"
    return "bellman_ford"


def shortest_accepting(P: WeightedProduct, regime: str = "auto"):
    """Run the requested regime (cheapest applicable for ``"auto"``); returns ``(result, regime)``."""
    if regime == "auto":
        regime = select_regime(P)
    try:
        fn = REGIMES[regime]
    except KeyError:
        raise PreconditionError(f"unknown regime {regime!r}") from None
    return fn(P), regime
