"""Exact solver parameterized by vertex cover size.

Strategy: take a minimum vertex cover S (|S| = k); the rest of the graph
is an independent set whose vertices only distinguish themselves by their
neighborhood inside S.  Some optimal ordering keeps each such class
together inside one of the k+1 blocks delimited by the cover vertices, so
it suffices to enumerate the k! relative orders of S and the (k+1)^q ways
to assign classes to blocks, sorting classes inside each block by
non-increasing right degree.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import BudgetExceeded, ParameterExceeded
from .graphs import ClassPartition, Graph, Ordering, partition_by_separator

DEFAULT_CONFIG_BUDGET = 10 ** 8


def min_vertex_cover(g: Graph, k_max: int | None = None):
    """Minimum vertex cover as a frozenset, or None if it exceeds k_max.

    Bounded search tree: branch on an uncovered edge, including either
    endpoint.  Deterministic (edges scanned in sorted order); any cover of
    size <= the running bound appears at some leaf, so the smallest one
    found is a true minimum.
    """
    cap = g.n if k_max is None else min(k_max, g.n)
    if cap < 0:
        return None
    edges = g.edges
    best: set | None = None
    chosen: set = set()

    def rec():
        nonlocal best
        allowed = cap if best is None else min(cap, len(best) - 1)
        if len(chosen) > allowed:
            return
        uncovered = None
        for u, v in edges:
            if u not in chosen and v not in chosen:
                uncovered = (u, v)
                break
        if uncovered is None:
            best = set(chosen)  # strictly smaller than any previous best
            return
        if len(chosen) == allowed:
            return
        u, v = uncovered
        for w in (u, v):
            chosen.add(w)
            rec()
            chosen.remove(w)

    rec()
    return frozenset(best) if best is not None else None


@dataclass(frozen=True)
class VcInstance:
    """A graph together with a vertex cover and the induced class partition."""

    graph: Graph
    cover: tuple
    partition: ClassPartition

    @property
    def k(self) -> int:
        return len(self.cover)


def make_vc_instance(g: Graph, cover) -> VcInstance:
    cover = tuple(sorted(cover))
    cover_set = set(cover)
    for u, v in g.edges:
        if u not in cover_set and v not in cover_set:
            raise ValueError(f"edge ({u}, {v}) is not covered")
    return VcInstance(g, cover, partition_by_separator(g, cover))


@dataclass(frozen=True)
class Configuration:
    """A relative order of the cover plus a class-to-block assignment.

    `sigma[j-1]` is the cover vertex closing block j; `assignment[i]` is
    the block (1..k+1) holding class i.
    """

    sigma: tuple
    assignment: tuple


def _class_right_degrees(inst: VcInstance, sigma) -> list[list[int]]:
    """rd[i][j] = cover neighbors of class i ranked >= j under sigma, for
    blocks j = 1..k+1 (index 0 unused)."""
    k = len(sigma)
    rank = {v: idx + 1 for idx, v in enumerate(sigma)}
    out = []
    for sig in inst.partition.signatures:
        ranks = sorted(rank[v] for v in sig)
        row = [0] * (k + 2)
        for j in range(1, k + 2):
            row[j] = sum(1 for r in ranks if r >= j)
        out.append(row)
    return out


def realize_configuration(inst: VcInstance, cfg: Configuration) -> Ordering:
    """Lay the configuration out as a full ordering.

    Block by block: the classes assigned there, sorted by non-increasing
    right degree (ties: class index), members in id order, then the cover
    vertex that closes the block.
    """
    k = len(cfg.sigma)
    rd = _class_right_degrees(inst, cfg.sigma)
    seq: list[int] = []
    for j in range(1, k + 2):
        here = [i for i, b in enumerate(cfg.assignment) if b == j]
        here.sort(key=lambda i: (-rd[i][j], i))
        for i in here:
            seq.extend(inst.partition.classes[i])
        if j <= k:
            seq.append(cfg.sigma[j - 1])
    return Ordering(seq)


def solve_vc_fpt(g: Graph, k_max: int | None = None,
                 budget: int = DEFAULT_CONFIG_BUDGET,
                 cover=None, stats: dict | None = None) -> tuple[Ordering, int]:
    """Exact optimum via the cover-permutation x class-assignment search.

    Raises ParameterExceeded when the minimum vertex cover is above k_max,
    BudgetExceeded when k! * (k+1)^q overflows `budget`.  Ties between
    configurations break toward the lexicographically smallest position
    vector.
    """
    if cover is None:
        cover = min_vertex_cover(g, k_max)
        if cover is None:
            raise ParameterExceeded(
                f"minimum vertex cover exceeds k_max={k_max}")
    inst = make_vc_instance(g, cover)
    k = inst.k
    q = len(inst.partition.classes)
    n_configs = math.factorial(k) * (k + 1) ** q
    if n_configs > budget:
        raise BudgetExceeded(
            f"{n_configs} configurations exceed the budget of {budget}")

    n = g.n
    adj_bits = g.adj_bits
    classes = inst.partition.classes
    full = (1 << n) - 1
    best_cost = None
    best_vec = None
    best_seq = None
    tried = 0

    for sigma in itertools.permutations(inst.cover):
        rd = _class_right_degrees(inst, sigma)
        # block contents depend on the assignment, but the priority of the
        # classes inside any given block does not
        block_priority = [None] + [
            sorted(range(q), key=lambda i, j=j: (-rd[i][j], i))
            for j in range(1, k + 2)
        ]
        for assignment in itertools.product(range(1, k + 2), repeat=q):
            tried += 1
            seq = []
            for j in range(1, k + 2):
                for i in block_priority[j]:
                    if assignment[i] == j:
                        seq.extend(classes[i])
                if j <= k:
                    seq.append(sigma[j - 1])
            remaining = full
            cost = 0
            for p, v in enumerate(seq, start=1):
                remaining ^= 1 << v
                cost += p * (adj_bits[v] & remaining).bit_count()
            if best_cost is None or cost < best_cost:
                best_cost = cost
                best_seq = seq
                best_vec = None
            elif cost == best_cost:
                if best_vec is None:
                    best_vec = [0] * n
                    for p, v in enumerate(best_seq, start=1):
                        best_vec[v] = p
                vec = [0] * n
                for p, v in enumerate(seq, start=1):
                    vec[v] = p
                if vec < best_vec:
                    best_vec = vec
                    best_seq = seq

    if stats is not None:
        stats["k"] = k
        stats["classes"] = q
        stats["configurations"] = tried
    return Ordering(best_seq), best_cost