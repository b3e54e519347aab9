"""Acyclic NFA for the distinct-symbols language L_k(n), and its fooling set.

``M(k, S)`` accepts the length-k words over ``S`` whose symbols are
pairwise distinct. For ``k > 1`` it branches by epsilon, one branch per
member ``T`` of a universal family, into "``M(ceil(k/2), S & T)`` then
``M(floor(k/2), S - T)``". Sub-machines are memoized on
``(k, S, continuation)``: a state's right language is then fixed, so sharing
can never splice one context's prefix onto another context's suffix.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import BudgetError, ParameterError
from .nfa import EPS, Nfa, accepts
from .universal import AutoProvider, UniversalFamily, family_size_random

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    env = os.environ.get("KPATH_BUDGET")
    return int(float(env)) if env else DEFAULT_BUDGET


@dataclass
class LknBuildReport:
    n: int
    k: int
    states: int
    transitions: int
    size: int
    recursion_depth: int
    sublengths: tuple            # k, ceil(k/2), ..., 1
    families_used: dict          # level -> sorted distinct family sizes
    family_provenance: dict      # level -> sorted distinct provenances
    all_families_verified: bool
    unshared_size: Optional[int] = None
    family_mode: str = "per_level"
    memo_hits: int = 0

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["sublengths"] = list(self.sublengths)
        d["families_used"] = {str(k): v for k, v in self.families_used.items()}
        d["family_provenance"] = {str(k): v for k, v in self.family_provenance.items()}
        return d


def ceil_chain(k: int) -> tuple:
    chain = [k]
    while chain[-1] > 1:
        chain.append((chain[-1] + 1) // 2)
    return tuple(chain)


def _elements(mask: int) -> list:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class _Builder:
    def __init__(self, n, provider, family_mode, budget):
        if family_mode not in ("per_level", "reuse"):
            raise ParameterError(f"unknown family mode {family_mode!r}")
        self.n = n
        self.provider = provider
        self.family_mode = family_mode
        self.budget = budget
        self.num_states = 0
        self.trans = []
        self.memo = {}
        self.memo_hits = 0
        self.family_cache = {}
        self.families_used = {}
        self.provenance = {}
        self.all_verified = True
        self.max_depth = 0
        self.top_family = None

    def new_state(self):
        self.num_states += 1
        if self.num_states + len(self.trans) > self.budget:
            raise BudgetError(
                f"L_k(n) automaton exceeds the size budget {self.budget:.3g}",
                self.num_states + len(self.trans), self.budget)
        return self.num_states - 1

    def _note_family(self, k, fam: UniversalFamily):
        self.families_used.setdefault(k, set()).add(len(fam))
        self.provenance.setdefault(k, set()).add(fam.provenance)
        self.all_verified &= fam.verified

    def family(self, k, mask):
        """Subsets (as masks within ``mask``) realising every split of every k-subset."""
        key = (k, mask)
        if key in self.family_cache:
            return self.family_cache[key]
        if self.family_mode == "reuse":
            fam = self.top_family
            self._note_family(k, fam)
            members = sorted({mask & T for T in fam.members})
        else:
            elems = _elements(mask)
            fam = self.provider(len(elems), k)
            self._note_family(k, fam)
            members = set()
            for T in fam.members:
                members.add(sum(1 << elems[i] for i in _elements(T)))
            members = sorted(members)
        self.family_cache[key] = members
        return members

    def machine(self, k, mask, cont, depth=1):
        """State whose right language is L_k(mask) followed by that of ``cont``."""
        if mask.bit_count() < k:
            return None
        key = (k, mask, cont)
        if key in self.memo:
            self.memo_hits += 1
            return self.memo[key]
        self.max_depth = max(self.max_depth, depth)
        if k == 1:
            q = self.new_state()
            for i in _elements(mask):
                self.trans.append((q, cont, i + 1, 0))
        else:
            hi, lo = (k + 1) // 2, k // 2
            heads = []
            for T in self.family(k, mask):
                first, second = mask & T, mask & ~T
                if first.bit_count() < hi or second.bit_count() < lo:
                    continue
                tail = self.machine(lo, second, cont, depth + 1)
                head = self.machine(hi, first, tail, depth + 1)
                heads.append(head)
            if not heads:
                self.memo[key] = None
                return None
            q = self.new_state()
            for h in dict.fromkeys(heads):
                self.trans.append((q, h, EPS, 0))
        self.memo[key] = q
        return q

    def finish(self, start, accept):
        # creation order runs sinks first; reverse it so the start is state 0
        last = self.num_states - 1
        trans = [(last - a, last - b, lab, w) for a, b, lab, w in self.trans]
        if start is None:
            return Nfa(1, 0, [], [])
        return Nfa(self.num_states, last - start, [last - accept], trans)


def _resolve(provider, seed=0):
    return provider if provider is not None else AutoProvider(seed)


def unshared_size(n: int, k: int, provider=None, family_mode="per_level") -> int:
    """Size the automaton would have if every sub-machine were a private copy."""
    b = _Builder(n, _resolve(provider), family_mode, float("inf"))
    if family_mode == "reuse":
        b.top_family = b.provider(n, k)
    memo = {}

    def tree(kk, mask):
        if mask.bit_count() < kk:
            return 0
        if (kk, mask) in memo:
            return memo[kk, mask]
        if kk == 1:
            size = 2 + mask.bit_count()
        else:
            hi, lo = (kk + 1) // 2, kk // 2
            size = 0
            for T in b.family(kk, mask):
                first, second = mask & T, mask & ~T
                if first.bit_count() < hi or second.bit_count() < lo:
                    continue
                size += tree(hi, first) + tree(lo, second) + 2
            size = size + 1 if size else 0
        memo[kk, mask] = size
        return size

    return tree(k, (1 << n) - 1)


def _estimate(n, k):
    if k == 1:
        return 2 + n
    hi, lo = (k + 1) // 2, k // 2
    return family_size_random(n, k) * (_estimate(n, hi) + _estimate(n, lo) + 2) + 1


def build_lkn(n: int, k: int, provider: Optional[Callable] = None,
              family_mode: str = "per_level", budget: Optional[int] = None,
              with_unshared: bool = False):
    """Build an acyclic NFA for L_k(n). Returns ``(nfa, LknBuildReport)``."""
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got n={n} k={k}")
    budget = default_budget() if budget is None else budget
    provider = _resolve(provider)
    b = _Builder(n, provider, family_mode, budget)
    if family_mode == "reuse":
        b.top_family = provider(n, k)
    try:
        accept = b.new_state()
        start = b.machine(k, (1 << n) - 1, accept)
    except BudgetError as exc:
        raise BudgetError(
            f"{exc} (copy-per-branch estimate for n={n}, k={k}: {_estimate(n, k):.3g})",
            _estimate(n, k), budget) from None
    M = b.finish(start, accept)
    report = LknBuildReport(
        n=n, k=k, states=M.num_states, transitions=len(M.transitions), size=M.size,
        recursion_depth=b.max_depth, sublengths=ceil_chain(k),
        families_used={lv: sorted(v) for lv, v in sorted(b.families_used.items())},
        family_provenance={lv: sorted(v) for lv, v in sorted(b.provenance.items())},
        all_families_verified=b.all_verified, family_mode=family_mode,
        memo_hits=b.memo_hits,
    )
    if with_unshared:
        report.unshared_size = unshared_size(n, k, provider, family_mode)
    return M, report


def _mask(S) -> int:
    return sum(1 << (i - 1) for i in S)


def build_restricted(n: int, k: int, S, provider=None, family_mode="per_level") -> Nfa:
    """NFA for the words of L_k(n) that use only symbols from ``S``."""
    b = _Builder(n, _resolve(provider), family_mode, default_budget())
    if family_mode == "reuse":
        b.top_family = b.provider(n, k)
    accept = b.new_state()
    return b.finish(b.machine(k, _mask(S), accept), accept)


def build_split(n: int, k: int, S1, S2, provider=None) -> Nfa:
    """The two-phase machine: ceil(k/2) distinct symbols from S1, then floor(k/2) from S2."""
    b = _Builder(n, _resolve(provider), "per_level", default_budget())
    accept = b.new_state()
    tail = b.machine(k // 2, _mask(S2), accept) if k // 2 else accept
    head = b.machine((k + 1) // 2, _mask(S1), tail) if tail is not None else None
    return b.finish(head, accept)


def fooling_pairs(k: int, n: int) -> list:
    """Pairs ``(x_S, y_S)`` for every ``S`` of ``[k]``, in bitmask order of ``S``.

    ``x_S`` spells ``S`` ascending and ``y_S`` spells the rest of ``[k]``.
    """
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got n={n} k={k}")
    pairs = []
    for mask in range(2**k):
        x = tuple(i + 1 for i in range(k) if mask >> i & 1)
        y = tuple(i + 1 for i in range(k) if not mask >> i & 1)
        pairs.append((x, y))
    return pairs


def check_fooling_separation(M: Nfa, pairs) -> bool:
    for i, (x, _) in enumerate(pairs):
        for j, (_, y) in enumerate(pairs):
            if accepts(M, x + y) != (i == j):
                return False
    return True
