"""Top-level k-path problems.

``min_wt_simple_st_kpath`` intersects the L_k(n) automaton with the
graph's path automaton and searches the product. ``min_wt_simple_kpath``
reduces the free-endpoint problem to it with two zero-weight terminals.
``simple_kpath_exists_nxa`` is the randomized parity-automaton decision:
a ``True`` answer is always right, a ``False`` answer is right whenever
the matrix family is covering.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import oracle
from .errors import BudgetError, ParameterError, PreconditionError, ValidationError
from .graph import PathResult, WeightedDigraph, add_super_terminals
from .lkn import build_lkn, default_budget
from .nfa import path_automaton
from .nxa import (COVERING_BUDGET, MAX_RYSER_K, covering_random, nxa_intersect_dfa,
                  ryser_union, verify_covering, xor_witness)
from .search import shortest_accepting, weighted_product
from .universal import AutoProvider, GreedyProvider, RandomProvider

METHODS = ("nfa", "nxa", "oracle")


@dataclass
class SolveConfig:
    method: str = "nfa"
    seed: int = 0
    universal_mode: str = "auto"        # "randomized", "greedy" or "auto"
    family_mode: str = "per_level"      # "per_level" or "reuse"
    size_budget: Optional[int] = None   # None -> KPATH_BUDGET or 10**8
    covering_budget: int = COVERING_BUDGET
    verify_gadgets: bool = True
    covering_attempts: int = 16
    threads: int = 1
    regime: str = "auto"

    def __post_init__(self):
        if self.method not in METHODS:
            raise ParameterError(f"unknown method {self.method!r}")
        if self.universal_mode not in ("randomized", "greedy", "auto"):
            raise ParameterError(f"unknown universal mode {self.universal_mode!r}")
        if self.size_budget is not None and self.size_budget <= 0:
            raise ParameterError("budgets must be positive")
        if self.covering_budget <= 0 or self.threads < 1:
            raise ParameterError("budgets and thread counts must be positive")

    def provider(self):
        if self.universal_mode == "greedy":
            return GreedyProvider()
        if self.universal_mode == "randomized":
            return RandomProvider(self.seed, verify=self.verify_gadgets)
        return AutoProvider(self.seed)

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class SolveStats:
    """Sizes, timings and gadget provenance collected during one solve."""

    method: str
    k_internal: int
    automaton: dict = field(default_factory=dict)
    product_states: int = 0
    product_transitions: int = 0
    regime: Optional[str] = None
    build_ms: float = 0.0
    search_ms: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)


def _check_vertex(G, x, name):
    if not 1 <= x <= G.n:
        raise PreconditionError(f"{name} vertex {x} out of range [1,{G.n}]")


def _validate(G, res: PathResult, k, s, t):
    problems = oracle.validate_witness(G, res.vertices, res.weight, k, s, t)
    if problems:
        raise ValidationError("witness failed validation: " + "; ".join(problems))


def solve_st_kpath(G: WeightedDigraph, s: int, t: int, k: int, cfg: Optional[SolveConfig] = None):
    """Like ``min_wt_simple_st_kpath`` but also returns a ``SolveStats``."""
    cfg = cfg or SolveConfig()
    if k < 1:
        raise ParameterError(f"k must be positive, got {k}")
    _check_vertex(G, s, "source")
    _check_vertex(G, t, "target")
    stats = SolveStats(cfg.method, k)
    if cfg.method == "oracle":
        best = oracle.brute_min_wt_simple_kpath(G, k, s, t)
        return (PathResult(best[1], best[0]) if best else None), stats
    if cfg.method != "nfa":
        raise PreconditionError("min-weight search needs method 'nfa' or 'oracle'")
    if k > G.n:
        return None, stats
    G = G.without_self_loops()
    t0 = time.perf_counter()
    M, report = build_lkn(G.n, k, cfg.provider(), cfg.family_mode,
                          budget=cfg.size_budget or default_budget())
    P = weighted_product(M, G, s, t)
    t1 = time.perf_counter()
    res, regime = shortest_accepting(P, cfg.regime)
    t2 = time.perf_counter()
    stats.automaton = report.as_dict()
    stats.product_states = P.nfa.num_states
    stats.product_transitions = len(P.nfa.transitions)
    stats.regime = regime
    stats.build_ms = (t1 - t0) * 1000
    stats.search_ms = (t2 - t1) * 1000
    if res is not None:
        _validate(G, res, k, s, t)
    return res, stats


def min_wt_simple_st_kpath(G, s, t, k, cfg=None) -> Optional[PathResult]:
    return solve_st_kpath(G, s, t, k, cfg)[0]


def solve_kpath(G: WeightedDigraph, k: int, cfg: Optional[SolveConfig] = None):
    """Free-endpoint version via super terminals; returns ``(result, stats)``."""
    cfg = cfg or SolveConfig()
    if k < 1:
        raise ParameterError(f"k must be positive, got {k}")
    if cfg.method == "oracle":
        best = oracle.brute_min_wt_simple_kpath(G, k)
        return (PathResult(best[1], best[0]) if best else None), SolveStats("oracle", k)
    if k > G.n:
        return None, SolveStats(cfg.method, k + 2)
    H, s, t = add_super_terminals(G.without_self_loops())
    res, stats = solve_st_kpath(H, s, t, k + 2, cfg)
    if res is None:
        return None, stats
    inner = PathResult(res.vertices[1:-1], res.weight, res.product_trace)
    _validate(G, inner, k, None, None)
    return inner, stats


def min_wt_simple_kpath(G, k, cfg=None) -> Optional[PathResult]:
    return solve_kpath(G, k, cfg)[0]


@dataclass
class NxaReport:
    found: bool
    family_seed: int
    family_size: int
    family_verified: bool
    verification_attempts: int
    member_empty: list            # per matrix: True / False, None if not evaluated
    witness: Optional[tuple] = None   # raw odd-parity word of the product, terminals included
    k_internal: int = 0
    product_states: list = field(default_factory=list)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["witness"] = list(self.witness) if self.witness else None
        return d


def _covering_family(n, k, cfg: SolveConfig):
    """A covering family for the solver, redrawn from later seeds until it verifies when checking is on."""
    attempts = 0
    fam = None
    for attempt in range(cfg.covering_attempts if cfg.verify_gadgets else 1):
        attempts += 1
        fam = covering_random(n, k, cfg.seed + attempt)
        if not cfg.verify_gadgets:
            break
        try:
            if verify_covering(fam, cfg.covering_budget):
                break
        except BudgetError:
            break
    return fam, attempts


def simple_kpath_exists_nxa(G: WeightedDigraph, k: int, cfg: Optional[SolveConfig] = None,
                            early_exit: bool = True):
    """Randomized parity-automaton decision. Returns ``(answer, NxaReport)``."""
    cfg = cfg or SolveConfig(method="nxa")
    if k < 1:
        raise ParameterError(f"k must be positive, got {k}")
    if k + 2 > MAX_RYSER_K:
        raise BudgetError(f"k + 2 = {k + 2} exceeds the parity-automaton cap {MAX_RYSER_K}")
    if k > G.n:
        return False, NxaReport(False, cfg.seed, 0, True, 0, [], k_internal=k + 2)
    H, s, t = add_super_terminals(G.without_self_loops())
    D = path_automaton(H, s, t)
    fam, attempts = _covering_family(H.n, k + 2, cfg)
    report = NxaReport(False, fam.seed, len(fam), fam.verified, attempts,
                       [None] * len(fam), k_internal=k + 2)

    def check(A):
        N = nxa_intersect_dfa(ryser_union(A), D)
        return N.num_states, xor_witness(N)

    if cfg.threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            outcomes = list(pool.map(check, fam.matrices))
    else:
        outcomes = []
        for A in fam.matrices:
            outcomes.append(check(A))
            if early_exit and outcomes[-1][1] is not None:
                break
    for i, (states, witness) in enumerate(outcomes):
        report.product_states.append(states)
        report.member_empty[i] = witness is None
        if witness is not None and report.witness is None:
            report.found = True
            report.witness = witness
    return report.found, report
