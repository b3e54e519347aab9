"""Weighted directed graphs: the problem instances.

Vertices are ``1..n``. Edge weights are integers bounded by ``2**40`` in
absolute value, so any k-path weight stays well inside 64 bits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import ParameterError, ParseError

MAX_ABS_WEIGHT = 2**40


@dataclass(frozen=True)
class WeightedDigraph:
    n: int
    edges: tuple  # canonical: sorted (u, v, w) with unique (u, v)

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"vertex count must be positive, got {self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "WeightedDigraph":
        """Build a graph, collapsing duplicate ordered pairs to their minimum weight."""
        if n < 1:
            raise ParameterError(f"vertex count must be positive, got {n}")
        best: dict = {}
        for u, v, w in edges:
            u, v, w = int(u), int(v), int(w)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParameterError(f"vertex {x} out of range [1,{n}]")
            if abs(w) > MAX_ABS_WEIGHT:
                raise ParameterError(f"weight {w} exceeds the 2**40 bound")
            if (u, v) not in best or w < best[(u, v)]:
                best[(u, v)] = w
        return cls(n, tuple((u, v, w) for (u, v), w in sorted(best.items())))

    @cached_property
    def _weights(self) -> dict:
        return {(u, v): w for u, v, w in self.edges}

    @cached_property
    def _succ(self) -> tuple:
        succ = [[] for _ in range(self.n + 1)]
        for u, v, w in self.edges:
            succ[u].append((v, w))
        return tuple(tuple(s) for s in succ)

    def weight(self, u: int, v: int) -> Optional[int]:
        return self._weights.get((u, v))

    def successors(self, u: int) -> tuple:
        """Pairs ``(v, w)`` for every edge leaving ``u``, in ascending ``v``."""
        return self._succ[u]

    @property
    def m(self) -> int:
        return len(self.edges)

    def without_self_loops(self) -> "WeightedDigraph":
        if all(u != v for u, v, _ in self.edges):
            return self
        return WeightedDigraph(self.n, tuple(e for e in self.edges if e[0] != e[1]))


@dataclass(frozen=True)
class PathResult:
    """A witness path together with the product-automaton run it came from."""

    vertices: tuple
    weight: int
    product_trace: tuple = field(default=(), compare=False)

    def __len__(self):
        return len(self.vertices)


def path_weight(G: WeightedDigraph, vertices: Sequence[int]) -> int:
    total = 0
    for u, v in zip(vertices, vertices[1:]):
        w = G.weight(u, v)
        if w is None:
            raise ParameterError(f"({u},{v}) is not an edge")
        total += w
    return total


def parse_graph(text) -> WeightedDigraph:
    """Parse the line-oriented ``p n m`` / ``e u v w`` format.

    ``text`` may be a string or any iterable of lines (an open file works).
    """
    lines = text.splitlines() if isinstance(text, str) else text
    n = m = None
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if n is None:
            if tag != "p" or len(parts) != 3:
                raise ParseError("expected header 'p <n> <m>'", lineno)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if n < 1 or m < 0:
                raise ParseError(f"invalid header values n={n} m={m}", lineno)
            continue
        if tag == "p":
            raise ParseError("duplicate header", lineno)
        if tag != "e" or len(parts) != 4:
            raise ParseError(f"malformed line {line!r}", lineno)
        try:
            u, v, w = (int(x) for x in parts[1:])
        except ValueError:
            raise ParseError(f"malformed edge {line!r}", lineno) from None
        for x in (u, v):
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} out of range [1,{n}]", lineno)
        if abs(w) > MAX_ABS_WEIGHT:
            raise ParseError(f"weight {w} exceeds the 2**40 bound", lineno)
        edges.append((u, v, w))
    if n is None:
        raise ParseError("missing header 'p <n> <m>'")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were given")
    return WeightedDigraph.from_edges(n, edges)


def read_graph(path) -> WeightedDigraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def serialize_graph(G: WeightedDigraph) -> str:
    out = [f"p {G.n} {G.m}"]
    out += [f"e {u} {v} {w}" for u, v, w in G.edges]
    return "\n".join(out) + "\n"


def write_graph(G: WeightedDigraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_graph(G))


def random_graph(n: int, m: int, wmin: int, wmax: int, seed: int) -> WeightedDigraph:
    """Sample ``m`` distinct non-loop arcs uniformly, with uniform integer weights."""
    if n < 1:
        raise ParameterError(f"vertex count must be positive, got {n}")
    if not 0 <= m <= n * (n - 1):
        raise ParameterError(f"cannot place {m} arcs on {n} vertices (max {n * (n - 1)})")
    if wmin > wmax:
        raise ParameterError(f"wmin={wmin} > wmax={wmax}")
    rng = np.random.default_rng(seed & (2**64 - 1))
    picks = rng.choice(n * (n - 1), size=m, replace=False) if m else []
    weights = rng.integers(wmin, wmax + 1, size=m) if m else []
    edges = []
    for idx, w in zip(picks, weights):
        # index -> ordered pair (u, v) with v != u
        u, r = divmod(int(idx), n - 1)
        v = r if r < u else r + 1
        edges.append((u + 1, v + 1, int(w)))
    return WeightedDigraph.from_edges(n, edges)


def add_super_terminals(G: WeightedDigraph):
    """Return ``(G', s, t)`` where ``s = n+1`` feeds every vertex and every vertex feeds ``t = n+2``."""
    s, t = G.n + 1, G.n + 2
    extra = [(s, v, 0) for v in range(1, G.n + 1)] + [(v, t, 0) for v in range(1, G.n + 1)]
    return WeightedDigraph.from_edges(G.n + 2, list(G.edges) + extra), s, t
