"""Parity (XOR) automata over GF(2) and the determinant-based k-path test.

An NXA accepts a word when the number of its accepting runs is odd. For a
k x n matrix ``A`` over GF(2), the union of the 2**k - 1 "row-sum chains"
accepts exactly the column sequences ``I`` with ``det(A_I) = 1``, and a
covering family of matrices turns that into the language of length-k words
with distinct symbols.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .errors import BudgetError, ParameterError, PreconditionError, StructureError
from .nfa import EPS, Nfa, product_with_pairs, reachable_trim

MAX_RYSER_K = 20
MAX_ROWS = 64
COVERING_BUDGET = 10**6


class BitMatrix:
    """k x n matrix over GF(2). ``rows[r]`` holds row ``r`` with column ``j`` at bit ``j-1``."""

    def __init__(self, k: int, n: int, rows: Sequence[int]):
        if not (1 <= k <= MAX_ROWS and n >= 1):
            raise ParameterError(f"bad BitMatrix shape {k}x{n}")
        if len(rows) != k or any(r >> n for r in rows):
            raise ParameterError("row data does not match the declared shape")
        self.k, self.n = k, n
        self.rows = tuple(int(r) for r in rows)
        # column i (1-based) as a k-bit vector, entry j at bit j-1
        self.columns = (None,) + tuple(
            sum(((self.rows[r] >> i) & 1) << r for r in range(k)) for i in range(n))

    def __eq__(self, other):
        return isinstance(other, BitMatrix) and (self.k, self.n, self.rows) == (other.k, other.n, other.rows)

    def __hash__(self):
        return hash((self.k, self.n, self.rows))

    def __repr__(self):
        return f"BitMatrix({self.k}x{self.n}, {self.to_hex()!r})"

    def entry(self, j: int, i: int) -> int:
        """Entry in row ``j``, column ``i`` (both 1-based)."""
        return (self.rows[j - 1] >> (i - 1)) & 1

    @classmethod
    def from_lists(cls, data) -> "BitMatrix":
        data = [list(r) for r in data]
        return cls(len(data), len(data[0]), [sum(int(b) << i for i, b in enumerate(r)) for r in data])

    @classmethod
    def identity(cls, k: int) -> "BitMatrix":
        return cls(k, k, [1 << r for r in range(k)])

    @classmethod
    def random(cls, k: int, n: int, rng) -> "BitMatrix":
        bits = rng.integers(0, 2, size=(k, n))
        return cls(k, n, [int(sum(1 << int(i) for i in np.flatnonzero(row))) for row in bits])

    def to_hex(self) -> str:
        width = (self.n + 3) // 4
        return " ".join(format(r, f"0{width}x") for r in self.rows)

    @classmethod
    def from_hex(cls, k: int, n: int, text: str) -> "BitMatrix":
        return cls(k, n, [int(h, 16) for h in text.split()])


def gf2_rank(vectors: Sequence[int]) -> int:
    basis = {}
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            if h not in basis:
                basis[h] = v
                break
            v ^= basis[h]
    return len(basis)


def phi_det(A: BitMatrix, I: Sequence[int]) -> int:
    """det over GF(2) of the k x k matrix whose columns are ``A``'s columns ``I``."""
    if len(I) != A.k:
        raise ParameterError(f"need {A.k} column indices, got {len(I)}")
    for i in I:
        if not 1 <= i <= A.n:
            raise ParameterError(f"column {i} out of range [1,{A.n}]")
    return int(gf2_rank([A.columns[i] for i in I]) == A.k)


class Nxa(Nfa):
    """An epsilon-free NFA read with odd-number-of-accepting-runs semantics."""

    def __init__(self, num_states, start, accepting, transitions):
        super().__init__(num_states, start, accepting, transitions)
        seen = set()
        for src, dst, label, _ in self.transitions:
            if label == EPS:
                raise StructureError("parity automata cannot have epsilon transitions")
            if (src, dst, label) in seen:
                raise StructureError(
                    f"duplicate transition {src}->{dst} on {label} would cancel mod 2")
            seen.add((src, dst, label))

    @property
    def symbol_rows(self) -> dict:
        """Per label: the support mask and, per source state, the XOR-mask of targets."""
        cached = self.__dict__.get("_symbol_rows")
        if cached is None:
            by_label: dict = {}
            for src, dst, label, _ in self.transitions:
                rows = by_label.setdefault(label, {})
                rows[src] = rows.get(src, 0) ^ (1 << dst)
            cached = {a: (sum(1 << p for p in rows), rows) for a, rows in by_label.items()}
            self.__dict__["_symbol_rows"] = cached
        return cached

    @property
    def accept_mask(self) -> int:
        return sum(1 << q for q in self.accepting)


def _apply(vec: int, support: int, rows: dict) -> int:
    out = 0
    v = vec & support
    while v:
        low = v & -v
        out ^= rows[low.bit_length() - 1]
        v ^= low
    return out


def count_accepting_paths_mod2(N: Nxa, word: Sequence[int]) -> int:
    vec = 1 << N.start
    table = N.symbol_rows
    for a in word:
        if a not in table:
            return 0
        vec = _apply(vec, *table[a])
        if not vec:
            return 0
    return (vec & N.accept_mask).bit_count() & 1


def ryser_support(A: BitMatrix, S) -> list:
    """Columns whose entries over the rows in ``S`` sum to 1 mod 2."""
    smask = sum(1 << (j - 1) for j in S)
    return [i for i in range(1, A.n + 1) if (A.columns[i] & smask).bit_count() & 1]


def ryser_chain(A: BitMatrix, S) -> Nxa:
    """Deterministic chain ``q0 -> ... -> qk`` accepting the length-k words over the row-sum support."""
    S = sorted(set(S))
    if not S:
        raise ParameterError("row subset must be nonempty")
    if not all(1 <= j <= A.k for j in S):
        raise ParameterError(f"row subset {S} not within [1,{A.k}]")
    T = ryser_support(A, S)
    trans = [(j, j + 1, i, 0) for j in range(A.k) for i in T]
    return Nxa(A.k + 1, 0, [A.k], trans)


def ryser_union(A: BitMatrix) -> Nxa:
    """All chains glued at a shared start (state 0) and shared accept (state 1).

    Chains with empty support accept nothing and are left out.
    """
    k = A.k
    if k > MAX_RYSER_K:
        raise BudgetError(f"ryser_union needs 2**{k} - 1 chains; cap is k <= {MAX_RYSER_K}", 2**k - 1)
    trans = []
    num_states = 2
    for smask in range(1, 2**k):
        T = [i for i in range(1, A.n + 1) if (A.columns[i] & smask).bit_count() & 1]
        if not T:
            continue
        levels = [0] + list(range(num_states, num_states + k - 1)) + [1]
        num_states += k - 1
        for j in range(k):
            trans.extend((levels[j], levels[j + 1], i, 0) for i in T)
    return Nxa(num_states, 0, [1], trans)


def nxa_intersect_dfa(N: Nxa, D: Nfa) -> Nxa:
    """Product with a deterministic automaton; run counts multiply, so parity is kept on L(D)."""
    if D.has_epsilon or not D.is_deterministic:
        raise PreconditionError("right operand must be deterministic and epsilon-free")
    P, _ = product_with_pairs(N, D)
    P = reachable_trim(P)
    return Nxa(P.num_states, P.start, P.accepting, P.transitions)


def xor_witness(N: Nxa) -> Optional[tuple]:
    """A word with an odd number of accepting runs, or ``None`` if there is none.

    Breadth-first over words, keeping only those whose configuration vector
    is independent of the ones already kept. The kept vectors span every
    reachable configuration, and the parity test is linear, so if any word
    has odd parity then one of the kept words does.
    """
    acc = N.accept_mask
    if not acc:
        return None
    table = N.symbol_rows
    symbols = sorted(table)
    pivots = {}
    queue = [((), 1 << N.start)]
    head = 0
    while head < len(queue):
        word, vec = queue[head]
        head += 1
        v = vec
        while v:
            h = v.bit_length() - 1
            if h not in pivots:
                break
            v ^= pivots[h]
        if not v:
            continue
        pivots[v.bit_length() - 1] = v
        if (vec & acc).bit_count() & 1:
            return word
        for a in symbols:
            img = _apply(vec, *table[a])
            if img:
                queue.append((word + (a,), img))
    return None


def xor_empty(N: Nxa) -> bool:
    return xor_witness(N) is None


@dataclass
class CoveringFamily:
    n: int
    k: int
    matrices: list
    verified: bool = False
    seed: Optional[int] = None

    def __len__(self):
        return len(self.matrices)

    def dumps(self) -> str:
        lines = [f"covering {self.n} {self.k} {len(self.matrices)}"]
        lines += [A.to_hex() for A in self.matrices]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "CoveringFamily":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        tag, n, k, count = lines[0].split()
        if tag != "covering":
            raise ParameterError("missing 'covering' header")
        n, k, count = int(n), int(k), int(count)
        mats = [BitMatrix.from_hex(k, n, ln) for ln in lines[1:]]
        if len(mats) != count:
            raise ParameterError(f"header declares {count} matrices, found {len(mats)}")
        return cls(n, k, mats)


def covering_size(n: int, k: int) -> int:
    return max(1, math.ceil(2 * k * math.log2(n)))


def covering_random(n: int, k: int, seed: int) -> CoveringFamily:
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got n={n} k={k}")
    rng = np.random.default_rng(seed & (2**64 - 1))
    mats = [BitMatrix.random(k, n, rng) for _ in range(covering_size(n, k))]
    return CoveringFamily(n, k, mats, seed=seed)


def verify_covering(F: CoveringFamily, budget: int = COVERING_BUDGET) -> bool:
    """Exhaustively check that every k columns are independent in some member; sets ``F.verified``."""
    cost = math.comb(F.n, F.k)
    if cost > budget:
        raise BudgetError(f"covering check needs {cost} column subsets, budget is {budget}", cost, budget)
    ok = True
    for I in combinations(range(1, F.n + 1), F.k):
        if not any(gf2_rank([A.columns[i] for i in I]) == F.k for A in F.matrices):
            ok = False
            break
    F.verified = ok
    return ok


def xor_empty_many(machines, threads: int = 1) -> list:
    """Emptiness of each machine; independent checks fan out over ``threads`` workers."""
    if threads <= 1:
        return [xor_empty(N) for N in machines]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(xor_empty, machines))
