"""Simple graphs, vertex orderings, and the min-sum edge cost.

An ordering assigns positions 1..n to the vertices; an edge pays the
position of its earlier endpoint, and the cost of the ordering is the sum
of these payments over all edges.  Vertex ids are 0-based everywhere,
positions are 1-based (keeping the two apart avoids a classic off-by-one).

All types here are immutable after construction and safe to share.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Rejects self-loops and duplicate edges at construction.  Adjacency is
    kept both as frozensets (`adj`) and as per-vertex bitmasks
    (`adj_bits`) for the search-heavy callers.
    """

    __slots__ = ("n", "edges", "adj", "adj_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [set() for _ in range(n)]
        pairs = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            pairs.append((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(pairs))
        self.adj = tuple(frozenset(a) for a in adj)
        self.adj_bits = tuple(sum(1 << w for w in a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Ordering:
    """Bijection between the n vertices and positions 1..n.

    `seq[i]` is the vertex at position i+1; `pos[v]` is the 1-based
    position of vertex v.  The two views are kept consistent.
    """

    __slots__ = ("seq", "pos")

    def __init__(self, seq: Sequence[int]):
        seq = tuple(seq)
        n = len(seq)
        pos = [0] * n
        seen = 0
        for i, v in enumerate(seq):
            if not (0 <= v < n) or pos[v]:
                raise ValueError("ordering must be a permutation of 0..n-1")
            pos[v] = i + 1
            seen += 1
        if seen != n:
            raise ValueError("ordering must be a permutation of 0..n-1")
        self.seq = seq
        self.pos = tuple(pos)

    @property
    def n(self) -> int:
        return len(self.seq)

    def position(self, v: int) -> int:
        """1-based position of vertex v."""
        return self.pos[v]

    def vertex_at(self, rank: int) -> int:
        """Vertex at 1-based position `rank`."""
        if not (1 <= rank <= len(self.seq)):
            raise ValueError(f"position {rank} out of range 1..{len(self.seq)}")
        return self.seq[rank - 1]

    def position_vector(self) -> tuple[int, ...]:
        """Positions indexed by vertex id (the tie-breaking key)."""
        return self.pos

    def __len__(self):
        return len(self.seq)

    def __eq__(self, other):
        if not isinstance(other, Ordering):
            return NotImplemented
        return self.seq == other.seq

    def __hash__(self):
        return hash(self.seq)

    def __repr__(self):
        return f"Ordering({list(self.seq)})"


@dataclass(frozen=True)
class ClassPartition:
    """Vertices outside `separator` grouped by their neighborhood inside it.

    `classes[i]` and `signatures[i]` line up; classes are ordered by
    signature bitmask, then smallest member, so downstream solvers are
    reproducible.
    """

    separator: frozenset
    classes: tuple
    signatures: tuple

    def class_of(self, v: int) -> int:
        for i, members in enumerate(self.classes):
            if v in members:
                return i
        raise ValueError(f"vertex {v} is not outside the separator")


def _check_dims(g: Graph, ordering: Ordering) -> None:
    if ordering.n != g.n:
        raise ValueError(
            f"ordering covers {ordering.n} vertices but graph has {g.n}")


def evaluate_cost(g: Graph, ordering: Ordering) -> int:
    """Sum over edges of the earlier endpoint's position."""
    _check_dims(g, ordering)
    pos = ordering.pos
    total = 0
    for u, v in g.edges:
        pu, pv = pos[u], pos[v]
        total += pu if pu < pv else pv
    return total


def right_degree(g: Graph, ordering: Ordering, v: int) -> int:
    """Number of neighbors of v placed strictly after v."""
    _check_dims(g, ordering)
    if not (0 <= v < g.n):
        raise ValueError(f"unknown vertex {v}")
    pos = ordering.pos
    pv = pos[v]
    return sum(1 for u in g.adj[v] if pos[u] > pv)


def cost_from_right_degrees(g: Graph, ordering: Ordering) -> int:
    """Cost via the identity: each vertex contributes position * right degree.

    Equals evaluate_cost on every input; kept as an independent route for
    cross-checking.
    """
    _check_dims(g, ordering)
    pos = ordering.pos
    total = 0
    for v in range(g.n):
        pv = pos[v]
        rd = sum(1 for u in g.adj[v] if pos[u] > pv)
        total += pv * rd
    return total


def partition_by_separator(g: Graph, separator: Iterable[int]) -> ClassPartition:
    """Group the vertices outside `separator` by equal neighborhood in it."""
    sep = frozenset(separator)
    for v in sep:
        if not (0 <= v < g.n):
            raise ValueError(f"separator vertex {v} out of range")
    groups: dict[frozenset, list[int]] = {}
    for v in range(g.n):
        if v in sep:
            continue
        groups.setdefault(g.adj[v] & sep, []).append(v)

    def sig_mask(sig):
        return sum(1 << u for u in sig)

    order = sorted(groups, key=lambda sig: (sig_mask(sig), min(groups[sig])))
    classes = tuple(tuple(sorted(groups[sig])) for sig in order)
    return ClassPartition(separator=sep, classes=classes, signatures=tuple(order))


def swap_equal_rd_nonadjacent(g: Graph, ordering: Ordering, i: int) -> Ordering:
    """Swap the vertices at positions i and i+1.

    Only legal when they are non-adjacent and have equal right degree, in
    which case the cost is provably unchanged.  The caller must check; a
    violated precondition raises ValueError.
    """
    _check_dims(g, ordering)
    if not (1 <= i < g.n):
        raise ValueError(f"position {i} has no successor in 1..{g.n}")
    u = ordering.seq[i - 1]
    v = ordering.seq[i]
    if g.has_edge(u, v):
        raise ValueError(f"vertices at positions {i}, {i + 1} are adjacent")
    if right_degree(g, ordering, u) != right_degree(g, ordering, v):
        raise ValueError(
            f"vertices at positions {i}, {i + 1} have different right degrees")
    seq = list(ordering.seq)
    seq[i - 1], seq[i] = seq[i], seq[i - 1]
    return Ordering(seq)


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
             if v not in g.adj[u]]
    return Graph(g.n, edges)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1  # bitmask, start from vertex 0
    stack = [0]
    adj_bits = g.adj_bits
    while stack:
        v = stack.pop()
        new = adj_bits[v] & ~seen
        seen |= new
        while new:
            b = new & -new
            stack.append(b.bit_length() - 1)
            new ^= b
    return seen == (1 << g.n) - 1


def random_graph(n: int, p: float, seed=None) -> Graph:
    """Erdos-Renyi G(n, p); `seed` may be an int or a random.Random."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
