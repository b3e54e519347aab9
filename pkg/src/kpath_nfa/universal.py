"""(n,k)-universal families of binary strings.

A member is stored as an ``int`` bitmask: bit ``i-1`` set means element
``i`` of ``[n]`` is in the subset (equivalently, position ``i`` of the
string is ``1``). A family is universal when every k-subset of positions
sees all ``2**k`` patterns among its members.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .errors import BudgetError, ParameterError

VERIFY_BUDGET = 10**8


@dataclass(frozen=True)
class UniversalFamily:
    n: int
    k: int
    members: tuple
    provenance: str  # "randomized", "greedy", "targeted" or "exhaustive"
    seed: Optional[int] = None
    verified: bool = False

    def __len__(self):
        return len(self.members)

    def as_strings(self) -> list:
        return [mask_to_string(x, self.n) for x in self.members]

    def as_sets(self) -> list:
        return [frozenset(i + 1 for i in range(self.n) if x >> i & 1) for x in self.members]


def mask_to_string(x: int, n: int) -> str:
    return "".join("1" if x >> i & 1 else "0" for i in range(n))


def string_to_mask(s: str) -> int:
    s = s.strip()
    if set(s) - {"0", "1"}:
        raise ParameterError(f"not a binary string: {s!r}")
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


def check_cost(n: int, k: int) -> int:
    return math.comb(n, k) * 2**k


def _check_budget(n, k, budget):
    cost = check_cost(n, k)
    if cost > budget:
        raise BudgetError(
            f"exhaustive check of ({n},{k})-universality needs {cost:.3g} "
            f"(subset, pattern) checks, budget is {budget:.3g}", cost, budget)
    return cost


def _bit_matrix(members, n) -> np.ndarray:
    bits = np.zeros((len(members), n), dtype=np.int64)
    for r, x in enumerate(members):
        for i in range(n):
            if x >> i & 1:
                bits[r, i] = 1
    return bits


def _subset_index(n, k) -> np.ndarray:
    return np.array(list(combinations(range(n), k)), dtype=np.int64).reshape(-1, k)


def verify_universal(U: UniversalFamily, budget: int = VERIFY_BUDGET) -> bool:
    n, k = U.n, U.k
    if not 0 <= k <= n:
        raise ParameterError(f"need 0 <= k <= n, got n={n} k={k}")
    _check_budget(n, k, budget)
    if any(x >> n for x in U.members):
        raise ParameterError("family member longer than n")
    if k == 0:
        return len(U.members) > 0
    if len(U.members) < 2**k:
        return False
    bits = _bit_matrix(U.members, n)
    weights = 1 << np.arange(k, dtype=np.int64)
    subsets = _subset_index(n, k)
    chunk = max(1, 4_000_000 // (len(U.members) * k))
    for lo in range(0, len(subsets), chunk):
        block = subsets[lo:lo + chunk]
        # patterns[m, c] = restriction of member m to the c-th subset
        patterns = bits[:, block] @ weights
        cells = patterns + (np.arange(len(block), dtype=np.int64) * 2**k)[None, :]
        seen = np.bincount(cells.ravel(), minlength=len(block) * 2**k)
        if not seen.all():
            return False
    return True


def family_size_random(n: int, k: int) -> int:
    """Sample count that makes a random family fail with probability at most e**-3."""
    return math.ceil(2**k * (k * math.log(n) + k * math.log(2) + 3))


def universal_random(n: int, k: int, seed: int) -> UniversalFamily:
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got n={n} k={k}")
    m = family_size_random(n, k)
    rng = np.random.default_rng(seed & (2**64 - 1))
    bits = rng.integers(0, 2, size=(m, n), dtype=np.int64)
    members = tuple(int(sum(1 << i for i in np.flatnonzero(row))) for row in bits)
    return UniversalFamily(n, k, members, "randomized", seed=seed)


def universal_random_verified(n: int, k: int, seed: int, attempts: int = 32,
                              budget: int = VERIFY_BUDGET) -> UniversalFamily:
    """Draw random families from consecutive seeds until one verifies.

    Falls back to the unverified first draw when exhaustive checking is
    over budget.
    """
    if check_cost(n, k) > budget:
        return universal_random(n, k, seed)
    for attempt in range(attempts):
        fam = universal_random(n, k, seed + attempt)
        if verify_universal(fam, budget):
            return UniversalFamily(n, k, fam.members, "randomized", fam.seed, True)
    raise BudgetError(f"no verified ({n},{k})-universal family in {attempts} random draws")


def universal_greedy(n: int, k: int, seed: int = 0,
                     budget: int = VERIFY_BUDGET) -> UniversalFamily:
    """Deterministic greedy set cover of all (subset, pattern) constraints.

    Gains only shrink as coverage grows, so candidates are re-scored lazily
    from a max-heap. Ties go to the smallest candidate index.
    """
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got n={n} k={k}")
    _check_budget(n, k, budget)
    if n <= 20:
        candidates = np.arange(2**n, dtype=np.int64)
        cand_bits = (candidates[:, None] >> np.arange(n, dtype=np.int64)) & 1
    else:
        rng = np.random.default_rng(seed & (2**64 - 1))
        cand_bits = rng.integers(0, 2, size=(64 * 2**k, n), dtype=np.int64)
    subsets = _subset_index(n, k)
    weights = 1 << np.arange(k, dtype=np.int64)
    rows = np.arange(len(subsets))
    covered = np.zeros((len(subsets), 2**k), dtype=bool)
    remaining = covered.size

    def gain(c):
        pats = cand_bits[c][subsets] @ weights
        return len(subsets) - int(covered[rows, pats].sum()), pats

    heap = [(-len(subsets), c) for c in range(len(cand_bits))]
    heapq.heapify(heap)
    chosen = []
    while remaining:
        _, c = heapq.heappop(heap)
        g, pats = gain(c)
        if g == 0:
            continue
        if heap and g < -heap[0][0]:
            heapq.heappush(heap, (-g, c))
            continue
        covered[rows, pats] = True
        remaining -= g
        chosen.append(c)
    members = tuple(int(sum(1 << i for i in np.flatnonzero(cand_bits[c]))) for c in chosen)
    fam = UniversalFamily(n, k, members, "greedy", seed=None if n <= 20 else seed)
    if not verify_universal(fam, budget):
        raise AssertionError("greedy family failed verification")
    return UniversalFamily(n, k, members, "greedy", fam.seed, True)


def universal_targeted(n: int, k: int, seed: int = 0, tries: int = 32,
                       budget: int = VERIFY_BUDGET) -> UniversalFamily:
    """Greedy cover for parameters where scanning every candidate is too slow.

    Each step takes the first uncovered (subset, pattern) cell, draws
    ``tries`` strings that realise the pattern on that subset (other bits
    random), and keeps the one covering the most uncovered cells.
    """
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got n={n} k={k}")
    _check_budget(n, k, budget)
    rng = np.random.default_rng(seed & (2**64 - 1))
    subsets = _subset_index(n, k)
    weights = 1 << np.arange(k, dtype=np.int64)
    rows = np.arange(len(subsets))
    covered = np.zeros((len(subsets), 2**k), dtype=bool)
    flat = covered.reshape(-1)
    cursor = 0
    members = []
    while True:
        while cursor < flat.size and flat[cursor]:
            cursor += 1
        if cursor == flat.size:
            break
        s_idx, pattern = divmod(cursor, 2**k)
        cand = rng.integers(0, 2, size=(tries, n), dtype=np.int64)
        cand[:, subsets[s_idx]] = (pattern >> np.arange(k)) & 1
        pats = cand[:, subsets] @ weights
        gains = (~covered[rows[None, :], pats]).sum(axis=1)
        best = int(np.argmax(gains))
        covered[rows, pats[best]] = True
        members.append(int(sum(1 << int(i) for i in np.flatnonzero(cand[best]))))
    fam = UniversalFamily(n, k, tuple(members), "targeted", seed=seed)
    if not verify_universal(fam, budget):
        raise AssertionError("targeted family failed verification")
    return UniversalFamily(n, k, fam.members, "targeted", seed, True)


def universal_exhaustive(n: int) -> UniversalFamily:
    """The full cube, universal for every k <= n."""
    return UniversalFamily(n, n, tuple(range(2**n)), "exhaustive", verified=True)


class GreedyProvider:
    """Family provider backed by ``universal_greedy``; results are cached."""

    def __init__(self, budget: int = VERIFY_BUDGET):
        self.budget = budget
        self._cache: dict = {}

    def __call__(self, n: int, k: int) -> UniversalFamily:
        if (n, k) not in self._cache:
            if k == n:
                fam = UniversalFamily(n, k, tuple(range(2**n)), "exhaustive", verified=True)
            else:
                fam = universal_greedy(n, k, budget=self.budget)
            self._cache[n, k] = fam
        return self._cache[n, k]


class RandomProvider:
    """Family provider backed by seeded random draws, verified when affordable."""

    def __init__(self, seed: int = 0, verify: bool = True, budget: int = VERIFY_BUDGET):
        self.seed = seed
        self.verify = verify
        self.budget = budget
        self._cache: dict = {}

    def __call__(self, n: int, k: int) -> UniversalFamily:
        if (n, k) not in self._cache:
            # distinct (n, k) draws get distinct but reproducible seeds
            seed = (self.seed * 1_000_003 + n * 1009 + k) & (2**63 - 1)
            if self.verify:
                fam = universal_random_verified(n, k, seed, budget=self.budget)
            else:
                fam = universal_random(n, k, seed)
            self._cache[n, k] = fam
        return self._cache[n, k]


class AutoProvider:
    """Exact greedy where scanning every candidate is cheap, targeted greedy elsewhere."""

    GREEDY_LIMIT = 4_000_000

    def __init__(self, seed: int = 0, budget: int = VERIFY_BUDGET):
        self.seed = seed
        self.budget = budget
        self.greedy = GreedyProvider(budget)
        self._cache: dict = {}

    def __call__(self, n: int, k: int) -> UniversalFamily:
        if n <= 20 and 2**n * math.comb(n, k) <= self.GREEDY_LIMIT:
            return self.greedy(n, k)
        if (n, k) not in self._cache:
            seed = (self.seed * 1_000_003 + n * 1009 + k) & (2**63 - 1)
            if check_cost(n, k) <= self.budget:
                fam = universal_targeted(n, k, seed, budget=self.budget)
            else:
                fam = universal_random(n, k, seed)
            self._cache[n, k] = fam
        return self._cache[n, k]
