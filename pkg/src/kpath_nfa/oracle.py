"""Brute-force ground truth for paths, languages and parity counts.

Everything here is written naively on purpose and shares no helpers with
the algorithms it checks: membership is re-simulated from the raw
transition list, parity is counted by explicit run enumeration, and paths
are found by exhaustive DFS.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .errors import BudgetError

EPSILON = 0  # must agree with nfa.EPS; kept local so nothing is imported from the checked code

LANGUAGE_BUDGET = 10**7


@dataclass(frozen=True)
class LanguageSample:
    n: int
    k: int
    accepted: tuple  # words in [n]^k, sorted

    def __len__(self):
        return len(self.accepted)

    def __contains__(self, word):
        return tuple(word) in set(self.accepted)


def _check_path_budget(n, k):
    if n > 12 or k > 8:
        raise BudgetError(f"brute-force path search limited to n <= 12, k <= 8 (got n={n}, k={k})")


def brute_min_wt_simple_kpath(G, k: int, s: Optional[int] = None, t: Optional[int] = None):
    """``(weight, path)`` of the lightest simple path on ``k`` vertices, or ``None``.

    Ties go to the lexicographically smallest vertex sequence.
    """
    n = G.n
    _check_path_budget(n, k)
    if k < 1 or k > n:
        return None
    adj = {u: [] for u in range(1, n + 1)}
    for u, v, w in G.edges:
        if u != v:
            adj[u].append((v, w))
    best = None

    def dfs(path, weight):
        nonlocal best
        if len(path) == k:
            if t is None or path[-1] == t:
                cand = (weight, tuple(path))
                if best is None or cand < best:
                    best = cand
            return
        for v, w in adj[path[-1]]:
            if v not in path:
                path.append(v)
                dfs(path, weight + w)
                path.pop()

    for first in ([s] if s is not None else range(1, n + 1)):
        dfs([first], 0)
    return best


def count_simple_paths(G, k: int) -> int:
    """Number of simple paths on exactly ``k`` vertices."""
    _check_path_budget(G.n, k)
    adj = {u: [v for a, v, _ in G.edges if a == u and v != u] for u in range(1, G.n + 1)}

    def walk(path):
        if len(path) == k:
            return 1
        return sum(walk(path + [v]) for v in adj[path[-1]] if v not in path)

    return sum(walk([u]) for u in range(1, G.n + 1))


def validate_witness(G, vertices, weight, k: int, s=None, t=None) -> list:
    """Problems with a claimed witness; an empty list means it is valid."""
    problems = []
    vertices = list(vertices)
    if len(vertices) != k:
        problems.append(f"expected {k} vertices, got {len(vertices)}")
    if len(set(vertices)) != len(vertices):
        problems.append("path repeats a vertex")
    if s is not None and (not vertices or vertices[0] != s):
        problems.append(f"path does not start at {s}")
    if t is not None and (not vertices or vertices[-1] != t):
        problems.append(f"path does not end at {t}")
    lookup = {(u, v): w for u, v, w in G.edges}
    total = 0
    for u, v in zip(vertices, vertices[1:]):
        if (u, v) not in lookup:
            problems.append(f"({u},{v}) is not an edge")
        else:
            total += lookup[u, v]
    if not problems and total != weight:
        problems.append(f"claimed weight {weight} but edges sum to {total}")
    return problems


def naive_accepts(M, word) -> bool:
    """Power-set simulation straight from the transition list."""
    def close(states):
        states = set(states)
        grew = True
        while grew:
            grew = False
            for a, b, lab, _ in M.transitions:
                if lab == EPSILON and a in states and b not in states:
                    states.add(b)
                    grew = True
        return states

    current = close({M.start})
    for sym in word:
        current = close({b for a, b, lab, _ in M.transitions if lab == sym and a in current})
    return bool(current & set(M.accepting))


def naive_run_count(M, word) -> int:
    """Number of accepting runs on ``word`` (epsilon-free machines), by DFS."""
    out = {}
    for a, b, lab, _ in M.transitions:
        out.setdefault((a, lab), []).append(b)

    def runs(state, pos):
        if pos == len(word):
            return 1 if state in M.accepting else 0
        return sum(runs(nxt, pos + 1) for nxt in out.get((state, word[pos]), ()))

    return runs(M.start, 0)


def naive_parity(M, word) -> int:
    return naive_run_count(M, word) % 2


def _check_language_budget(n, k):
    if n**k > LANGUAGE_BUDGET:
        raise BudgetError(f"enumerating [{n}]^{k} means {n**k} words, budget is {LANGUAGE_BUDGET}", n**k)


def enumerate_language(M, n: int, k: int, parity: Optional[bool] = None) -> LanguageSample:
    """Accepted words of length ``k``; parity semantics for NXAs (auto-detected by default)."""
    _check_language_budget(n, k)
    if parity is None:
        parity = type(M).__name__ == "Nxa"
    test = (lambda w: naive_parity(M, w) == 1) if parity else (lambda w: naive_accepts(M, w))
    return LanguageSample(n, k, tuple(w for w in product(range(1, n + 1), repeat=k) if test(w)))


def lkn_reference(n: int, k: int) -> LanguageSample:
    _check_language_budget(n, k)
    return LanguageSample(n, k, tuple(
        w for w in product(range(1, n + 1), repeat=k) if len(set(w)) == k))


def ryser_sum(A, I) -> int:
    """Sum over nonempty row subsets S of prod_i sum_{j in S} A[j][I_i], mod 2."""
    k = A.k
    total = 0
    for smask in range(1, 2**k):
        term = 1
        for i in I:
            term *= sum(A.entry(j + 1, i) for j in range(k) if smask >> j & 1)
        total += term
    return total % 2


def gaussian_det(A, I) -> int:
    """Determinant mod 2 of the columns ``I`` of ``A`` by textbook row reduction on lists."""
    k = len(I)
    rows = [[A.entry(j, i) for i in I] for j in range(1, k + 1)]
    for col in range(k):
        piv = next((r for r in range(col, k) if rows[r][col]), None)
        if piv is None:
            return 0
        rows[col], rows[piv] = rows[piv], rows[col]
        for r in range(col + 1, k):
            if rows[r][col]:
                rows[r] = [(x + y) % 2 for x, y in zip(rows[r], rows[col])]
    return 1


def brute_xor_nonempty(M, alphabet, max_len: int):
    """First word (by length, then lexicographically) of length <= ``max_len`` with odd parity."""
    for length in range(max_len + 1):
        for w in product(alphabet, repeat=length):
            if naive_parity(M, w):
                return w
    return None
