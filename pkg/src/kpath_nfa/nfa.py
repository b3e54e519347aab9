"""Nondeterministic finite automata over the alphabet ``[n] = {1, ..., n}``.

A transition is a plain tuple ``(src, dst, label, weight)``. The label
``EPS`` (0) marks an epsilon move; ordinary symbols are positive integers.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import CycleError, PreconditionError, StructureError

EPS = 0


class Nfa:
    """Immutable labeled digraph with a start state and accepting states.

    ``size`` is states plus transitions. Acyclicity is always computed from
    the transitions (epsilon moves included), never supplied by the caller.
    """

    def __init__(self, num_states: int, start: int, accepting: Iterable[int],
                 transitions: Iterable[Sequence[int]]):
        self.num_states = int(num_states)
        self.start = int(start)
        self.accepting = frozenset(accepting)
        self.transitions = tuple(
            (t[0], t[1], t[2], t[3] if len(t) > 3 else 0) for t in transitions
        )
        if not 0 <= self.start < self.num_states:
            raise StructureError(f"start state {self.start} out of range")
        for q in self.accepting:
            if not 0 <= q < self.num_states:
                raise StructureError(f"accepting state {q} out of range")
        for src, dst, label, _ in self.transitions:
            if not (0 <= src < self.num_states and 0 <= dst < self.num_states):
                raise StructureError(f"transition {src}->{dst} has a state out of range")
            if label < 0:
                raise StructureError(f"negative label {label}")

    def __repr__(self):
        return (f"{type(self).__name__}(states={self.num_states}, "
                f"transitions={len(self.transitions)}, start={self.start}, "
                f"accepting={sorted(self.accepting)})")

    def __eq__(self, other):
        if not isinstance(other, Nfa):
            return NotImplemented
        return (self.num_states == other.num_states and self.start == other.start
                and self.accepting == other.accepting
                and sorted(self.transitions) == sorted(other.transitions))

    __hash__ = None

    @property
    def size(self) -> int:
        return self.num_states + len(self.transitions)

    @cached_property
    def out(self) -> tuple:
        """Outgoing transitions per state."""
        out = [[] for _ in range(self.num_states)]
        for tr in self.transitions:
            out[tr[0]].append(tr)
        return tuple(out)

    @cached_property
    def by_label(self) -> tuple:
        """Per state, a dict ``label -> [(dst, weight), ...]``."""
        table = [dict() for _ in range(self.num_states)]
        for src, dst, label, w in self.transitions:
            table[src].setdefault(label, []).append((dst, w))
        return tuple(table)

    @cached_property
    def has_epsilon(self) -> bool:
        return any(t[2] == EPS for t in self.transitions)

    @cached_property
    def alphabet(self) -> frozenset:
        return frozenset(t[2] for t in self.transitions if t[2] != EPS)

    @cached_property
    def is_deterministic(self) -> bool:
        if self.has_epsilon:
            return False
        return all(len(dsts) == 1 for row in self.by_label for dsts in row.values())

    @cached_property
    def _topo(self):
        indeg = [0] * self.num_states
        for _, dst, _, _ in self.transitions:
            indeg[dst] += 1
        queue = deque(q for q in range(self.num_states) if indeg[q] == 0)
        order = []
        while queue:
            q = queue.popleft()
            order.append(q)
            for tr in self.out[q]:
                indeg[tr[1]] -= 1
                if indeg[tr[1]] == 0:
                    queue.append(tr[1])
        return tuple(order) if len(order) == self.num_states else None

    @cached_property
    def is_acyclic(self) -> bool:
        return self._topo is not None


def is_acyclic(M: Nfa) -> bool:
    return M.is_acyclic


def _find_cycle(M: Nfa, eps_only=False) -> list:
    color = [0] * M.num_states
    parent = [-1] * M.num_states
    for root in range(M.num_states):
        if color[root]:
            continue
        stack = [(root, iter(M.out[root]))]
        color[root] = 1
        while stack:
            q, it = stack[-1]
            for tr in it:
                if eps_only and tr[2] != EPS:
                    continue
                r = tr[1]
                if color[r] == 0:
                    color[r] = 1
                    parent[r] = q
                    stack.append((r, iter(M.out[r])))
                    break
                if color[r] == 1:
                    cycle = [q]
                    while cycle[-1] != r:
                        cycle.append(parent[cycle[-1]])
                    return cycle[::-1]
            else:
                color[q] = 2
                stack.pop()
    return []


def topological_order(M: Nfa) -> tuple:
    """States in an order where every transition goes forward; raises CycleError otherwise."""
    if M._topo is None:
        cycle = _find_cycle(M)
        raise CycleError(f"automaton has a cycle through states {cycle}", cycle)
    return M._topo


def path_automaton(G, s: int, t: int) -> Nfa:
    """Deterministic automaton whose words spell the ``s``-to-``t`` walks of ``G``.

    State 0 is the fresh start; vertex ``v`` is state ``v``. Reading ``s``
    enters the graph, and an arc ``(u, v)`` is the transition ``u -> v``
    labeled ``v`` carrying the arc weight.
    """
    for x in (s, t):
        if not 1 <= x <= G.n:
            raise PreconditionError(f"vertex {x} out of range [1,{G.n}]")
    trans = [(0, s, s, 0)]
    trans += [(u, v, v, w) for u, v, w in G.edges]
    return Nfa(G.n + 1, 0, [t], trans)


def product_with_pairs(M1: Nfa, M2: Nfa):
    """Reachable part of ``M1 x M2`` and the component pair of every product state.

    Epsilon moves are allowed in ``M1`` only: they advance the left
    component while the right one stays put. Weights add.
    """
    if M2.has_epsilon:
        raise PreconditionError("epsilon transitions are only supported in the left operand")
    right_by_label = M2.by_label
    left_out = M1.out
    index = {(M1.start, M2.start): 0}
    pairs = [(M1.start, M2.start)]
    trans = []
    i = 0
    while i < len(pairs):
        q1, q2 = pairs[i]
        row2 = right_by_label[q2]
        for _, v1, label, w1 in left_out[q1]:
            if label == EPS:
                targets = ((q2, 0),)
            else:
                targets = row2.get(label)
                if not targets:
                    continue
            for v2, w2 in targets:
                key = (v1, v2)
                j = index.get(key)
                if j is None:
                    j = index[key] = len(pairs)
                    pairs.append(key)
                trans.append((i, j, label, w1 + w2))
        i += 1
    accepting = [j for j, (a, b) in enumerate(pairs) if a in M1.accepting and b in M2.accepting]
    return Nfa(len(pairs), 0, accepting, trans), tuple(pairs)


def intersect(M1: Nfa, M2: Nfa) -> Nfa:
    return product_with_pairs(M1, M2)[0]


def epsilon_closure(M: Nfa, states: Iterable[int]) -> set:
    seen = set(states)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for dst, _ in M.by_label[q].get(EPS, ()):
            if dst not in seen:
                seen.add(dst)
                stack.append(dst)
    return seen


def accepts(M: Nfa, word: Sequence[int]) -> bool:
    current = epsilon_closure(M, [M.start])
    for symbol in word:
        step = set()
        for q in current:
            for dst, _ in M.by_label[q].get(symbol, ()):
                step.add(dst)
        if not step:
            return False
        current = epsilon_closure(M, step)
    return not current.isdisjoint(M.accepting)


def _renumber(M: Nfa, keep: Sequence[int], cls=None) -> Nfa:
    new_id = {q: i for i, q in enumerate(keep)}
    trans = [(new_id[a], new_id[b], lab, w) for a, b, lab, w in M.transitions
             if a in new_id and b in new_id]
    acc = [new_id[q] for q in M.accepting if q in new_id]
    return (cls or type(M))(len(keep), new_id[M.start], acc, trans)


def reachable_trim(M: Nfa) -> Nfa:
    """Drop states that are unreachable from the start or cannot reach acceptance.

    The start state always survives (alone, if the language is empty).
    Surviving states keep their relative order.
    """
    fwd = {M.start}
    stack = [M.start]
    while stack:
        q = stack.pop()
        for tr in M.out[q]:
            if tr[1] not in fwd:
                fwd.add(tr[1])
                stack.append(tr[1])
    preds = [[] for _ in range(M.num_states)]
    for a, b, _, _ in M.transitions:
        preds[b].append(a)
    bwd = set(M.accepting)
    stack = list(bwd)
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if p not in bwd:
                bwd.add(p)
                stack.append(p)
    live = fwd & bwd
    keep = sorted(live | {M.start})
    if len(keep) == M.num_states and len(live) == M.num_states:
        return M
    if M.start not in live:
        return type(M)(1, 0, [], [])
    return _renumber(M, keep)


def eliminate_epsilon(M: Nfa) -> Nfa:
    """Equivalent epsilon-free automaton; epsilon-chain weights fold into the next symbol."""
    if not M.has_epsilon:
        return M
    cycle = _find_cycle(M, eps_only=True)
    if cycle:
        raise StructureError(f"epsilon cycle through states {cycle}")
    # min accumulated epsilon weight from each state to every state in its closure
    closure = []
    for q in range(M.num_states):
        dist = {q: 0}
        stack = [q]
        while stack:
            p = stack.pop()
            for dst, w in M.by_label[p].get(EPS, ()):
                d = dist[p] + w
                if dst not in dist or d < dist[dst]:
                    dist[dst] = d
                    stack.append(dst)
        closure.append(dist)
    best = {}
    for q in range(M.num_states):
        for p, d in closure[q].items():
            for _, dst, label, w in M.out[p]:
                if label == EPS:
                    continue
                key = (q, dst, label)
                if key not in best or d + w < best[key]:
                    best[key] = d + w
    accepting = [q for q in range(M.num_states) if not M.accepting.isdisjoint(closure[q])]
    trans = [(a, b, lab, w) for (a, b, lab), w in sorted(best.items())]
    return reachable_trim(Nfa(M.num_states, M.start, accepting, trans))


def dumps_nfa(M: Nfa) -> str:
    lines = [f"nfa {M.num_states} {len(M.transitions)} {M.start}"]
    lines += [f"f {q}" for q in sorted(M.accepting)]
    lines += [f"t {a} {b} {'eps' if lab == EPS else lab} {w}" for a, b, lab, w in M.transitions]
    return "\n".join(lines) + "\n"


def loads_nfa(text: str) -> Nfa:
    header: Optional[list] = None
    accepting, trans = [], []
    for raw in text.splitlines():
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "nfa":
            header = [int(x) for x in parts[1:4]]
        elif parts[0] == "f":
            accepting.append(int(parts[1]))
        elif parts[0] == "t":
            label = EPS if parts[3] == "eps" else int(parts[3])
            trans.append((int(parts[1]), int(parts[2]), label, int(parts[4])))
        else:
            raise StructureError(f"unknown record {raw!r}")
    if header is None:
        raise StructureError("missing 'nfa' header")
    if header[1] != len(trans):
        raise StructureError(f"header declares {header[1]} transitions, found {len(trans)}")
    return Nfa(header[0], header[2], accepting, trans)
