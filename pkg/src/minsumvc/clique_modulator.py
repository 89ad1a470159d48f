"""Exact solver parameterized by clique modulator size.

A clique modulator M is a vertex set whose removal leaves a clique; it is
the vertex-cover of the complement graph, which is how we find a minimum
one.  The clique part costs the same under any of its internal orders, so
only (a) the relative order sigma_M of M and (b) how many vertices of each
modulator-neighborhood class land between consecutive modulator vertices
matter.  For each sigma_M we encode (b) as a bounded integer quadratic
program, solve it exactly, and rebuild the cheapest ordering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ParameterExceeded
from .graphs import (ClassPartition, Graph, Ordering, complement,
                     evaluate_cost, partition_by_separator)
from .iqp import DEFAULT_NODE_BUDGET, IqpInstance, IqpSolution, solve_iqp
from .vertex_cover import min_vertex_cover


def find_clique_modulator(g: Graph, k_max: int | None = None):
    """Minimum clique modulator as a frozenset, or None above k_max."""
    return min_vertex_cover(complement(g), k_max)


def clique_base_cost(size: int) -> int:
    """Cost of the edges inside a clique of the given size, which is the
    same for every internal order: sum of i*(size-i) for i = 1..size-1."""
    return sum(i * (size - i) for i in range(1, size))


@dataclass(frozen=True)
class CmInstance:
    """A graph, a clique modulator, and the modulator-neighborhood classes
    of the clique vertices."""

    graph: Graph
    modulator: tuple
    partition: ClassPartition
    base_cost: int

    @property
    def k(self) -> int:
        return len(self.modulator)


def make_cm_instance(g: Graph, modulator) -> CmInstance:
    modulator = tuple(sorted(modulator))
    mod_set = frozenset(modulator)
    clique = [v for v in range(g.n) if v not in mod_set]
    for a_idx, u in enumerate(clique):
        for v in clique[a_idx + 1:]:
            if not g.has_edge(u, v):
                raise ValueError(
                    f"vertices {u}, {v} outside the modulator are not adjacent")
    return CmInstance(
        graph=g,
        modulator=modulator,
        partition=partition_by_separator(g, mod_set),
        base_cost=clique_base_cost(g.n - len(modulator)),
    )


def right_modulator_degree(inst: CmInstance, sigma_m, class_i: int,
                           block_j: int) -> int:
    """Modulator neighbors of class `class_i` whose rank under sigma_m is
    at least `block_j` (blocks are 1..k+1; block k+1 always yields 0)."""
    k = len(sigma_m)
    if not 1 <= block_j <= k + 1:
        raise ValueError(f"block {block_j} out of range 1..{k + 1}")
    rank = {v: idx + 1 for idx, v in enumerate(sigma_m)}
    sig = inst.partition.signatures[class_i]
    return sum(1 for v in sig if rank[v] >= block_j)


@dataclass(frozen=True)
class CmEncoding:
    """The IQP for one modulator permutation, plus everything needed to
    interpret its solutions.

    Variables, in branching order: x[i][j] (vertices of class i placed in
    block j; largest classes first), then n_p, y_p, d_p (clique vertices
    after modulator vertex p, its position, its right degree), then
    y[i][j] (position of the last vertex before class i's run in block j).
    The objective is doubled so the half-integer pair counts stay integer;
    `msvc_increase` divides back.
    """

    sigma_m: tuple
    rm: tuple          # rm[p-1]: modulator neighbors of v_p ranked after p
    r: tuple           # r[i][j]: right modulator degree of class i, block j
    i_sets: tuple      # i_sets[p-1]: classes adjacent to modulator vertex p
    j_sets: tuple      # j_sets[i][j]: classes preceding class i in block j
    g_orders: tuple    # g_orders[j]: class indices of block j, sorted
    x_index: tuple
    np_index: tuple
    yp_index: tuple
    dp_index: tuple
    yij_index: tuple
    iqp: IqpInstance

    def msvc_increase(self, sol: IqpSolution) -> int:
        assert sol.objective % 2 == 0, "doubled objective must be even"
        return sol.objective // 2


def build_encoding(inst: CmInstance, sigma_m) -> CmEncoding:
    """Encode the optimal-placement problem for a fixed modulator order."""
    sigma_m = tuple(sigma_m)
    if sorted(sigma_m) != list(inst.modulator):
        raise ValueError("sigma_m must permute the modulator")
    g = inst.graph
    n = g.n
    k = len(sigma_m)
    classes = inst.partition.classes
    signatures = inst.partition.signatures
    ell = len(classes)
    rank = {v: idx + 1 for idx, v in enumerate(sigma_m)}

    rm = tuple(
        sum(1 for u in g.adj[sigma_m[p - 1]] if rank.get(u, 0) > p)
        for p in range(1, k + 1))
    i_sets = tuple(
        frozenset(i for i in range(ell) if sigma_m[p - 1] in signatures[i])
        for p in range(1, k + 1))
    r = tuple(
        tuple(0 if j == 0 else sum(1 for v in signatures[i] if rank[v] >= j)
              for j in range(k + 2))
        for i in range(ell))
    g_orders = tuple(
        () if j == 0 else tuple(sorted(range(ell), key=lambda i: (-r[i][j], i)))
        for j in range(k + 2))
    j_sets = tuple(
        tuple(frozenset() if j == 0 else
              frozenset(g_orders[j][:g_orders[j].index(i)])
              for j in range(k + 2))
        for i in range(ell))

    # variable layout: x blocks for the largest classes first
    class_order = sorted(range(ell), key=lambda i: (-len(classes[i]), i))
    bounds = []
    x_index = [[None] * (k + 2) for _ in range(ell)]
    for i in class_order:
        for j in range(1, k + 2):
            x_index[i][j] = len(bounds)
            bounds.append((0, len(classes[i])))
    np_index = []
    for _ in range(k):
        np_index.append(len(bounds))
        bounds.append((0, n - k))
    yp_index = []
    for _ in range(k):
        yp_index.append(len(bounds))
        bounds.append((1, n))
    dp_index = []
    for _ in range(k):
        dp_index.append(len(bounds))
        bounds.append((0, n))
    yij_index = [[None] * (k + 2) for _ in range(ell)]
    for i in class_order:
        for j in range(1, k + 2):
            yij_index[i][j] = len(bounds)
            bounds.append((0, n))

    quad: dict[tuple[int, int], int] = {}
    linear: dict[int, int] = {}

    def add_quad(a, b, coeff):
        key = (a, b) if a <= b else (b, a)
        quad[key] = quad.get(key, 0) + coeff

    # doubled objective:
    #   2*d_p*y_p + (n_p^2 - n_p) + r_ij*(2*x_ij*y_ij + x_ij^2 + x_ij)
    for p in range(1, k + 1):
        add_quad(dp_index[p - 1], yp_index[p - 1], 2)
        add_quad(np_index[p - 1], np_index[p - 1], 1)
        linear[np_index[p - 1]] = linear.get(np_index[p - 1], 0) - 1
    for i in range(ell):
        for j in range(1, k + 2):
            rij = r[i][j]
            if rij:
                xv = x_index[i][j]
                add_quad(xv, yij_index[i][j], 2 * rij)
                add_quad(xv, xv, rij)
                linear[xv] = linear.get(xv, 0) + rij

    eqs = []
    for p in range(1, k + 1):
        row = {np_index[p - 1]: 1}
        for j in range(p + 1, k + 2):
            for i in range(ell):
                row[x_index[i][j]] = -1
        eqs.append((row, 0))
    for i in range(ell):
        eqs.append(({x_index[i][j]: 1 for j in range(1, k + 2)},
                    len(classes[i])))
    for p in range(1, k + 1):
        eqs.append(({yp_index[p - 1]: 1, np_index[p - 1]: 1}, n - k + p))
    for p in range(1, k + 1):
        row = {dp_index[p - 1]: 1}
        for j in range(p + 1, k + 2):
            for i in i_sets[p - 1]:
                row[x_index[i][j]] = -1
        eqs.append((row, rm[p - 1]))
    for i in range(ell):
        for j in range(1, k + 2):
            row = {yij_index[i][j]: 1}
            if j >= 2:
                row[yp_index[j - 2]] = -1
            for q in j_sets[i][j]:
                row[x_index[q][j]] = -1
            eqs.append((row, 0))

    iqp = IqpInstance(bounds=bounds, quad=quad, linear=linear, eqs=eqs)
    return CmEncoding(
        sigma_m=sigma_m, rm=rm, r=r, i_sets=i_sets, j_sets=j_sets,
        g_orders=g_orders,
        x_index=tuple(tuple(row) for row in x_index),
        np_index=tuple(np_index), yp_index=tuple(yp_index),
        dp_index=tuple(dp_index),
        yij_index=tuple(tuple(row) for row in yij_index),
        iqp=iqp)


def reconstruct_ordering(inst: CmInstance, enc: CmEncoding,
                         sol: IqpSolution) -> Ordering:
    """Lay a feasible encoding solution out as a full vertex ordering.

    Block by block: each class contributes its x[i][j] next members (in id
    order) following the block's class order, then the modulator vertex
    closing the block.
    """
    k = len(enc.sigma_m)
    classes = inst.partition.classes
    taken = [0] * len(classes)
    seq = []
    for j in range(1, k + 2):
        for i in enc.g_orders[j]:
            cnt = sol.assignment[enc.x_index[i][j]]
            members = classes[i][taken[i]:taken[i] + cnt]
            assert len(members) == cnt, "class exhausted during reconstruction"
            taken[i] += cnt
            seq.extend(members)
        if j <= k:
            seq.append(enc.sigma_m[j - 1])
    assert all(taken[i] == len(classes[i]) for i in range(len(classes)))
    return Ordering(seq)


def nice_resort(inst: CmInstance, ordering: Ordering) -> Ordering:
    """Re-sort the clique vertices inside every block so that classes run
    in non-increasing right-modulator-degree order.  Never costs more."""
    g = inst.graph
    if ordering.n != g.n:
        raise ValueError("ordering does not match the instance graph")
    mod_set = set(inst.modulator)
    sigma_m = [v for v in ordering.seq if v in mod_set]
    k = len(sigma_m)
    rank = {v: idx + 1 for idx, v in enumerate(sigma_m)}
    signatures = inst.partition.signatures
    ell = len(signatures)
    class_of = {}
    for i, members in enumerate(inst.partition.classes):
        for v in members:
            class_of[v] = i

    blocks = [[] for _ in range(k + 2)]
    j = 1
    for v in ordering.seq:
        if v in mod_set:
            j += 1
        else:
            blocks[j].append(v)

    seq = []
    for j in range(1, k + 2):
        rj = [sum(1 for u in signatures[i] if rank[u] >= j)
              for i in range(ell)]
        priority = {i: idx for idx, i in
                    enumerate(sorted(range(ell), key=lambda i: (-rj[i], i)))}
        blocks[j].sort(key=lambda v: (priority[class_of[v]], v))
        seq.extend(blocks[j])
        if j <= k:
            seq.append(sigma_m[j - 1])
    return Ordering(seq)


def solve_cm_fpt(g: Graph, k_max: int | None = None,
                 iqp_budget: int = DEFAULT_NODE_BUDGET,
                 stats: dict | None = None) -> tuple[Ordering, int]:
    """Exact optimum: one IQP per modulator permutation, best result wins.

    Raises ParameterExceeded when the minimum clique modulator is above
    k_max; BudgetExceeded propagates from the IQP search.  Equal-cost
    permutations resolve toward the lexicographically smallest sigma_m.
    """
    modulator = find_clique_modulator(g, k_max)
    if modulator is None:
        raise ParameterExceeded(
            f"minimum clique modulator exceeds k_max={k_max}")
    inst = make_cm_instance(g, modulator)
    best_total = None
    best_enc = None
    best_sol = None
    permutations = 0
    iqp_nodes = 0
    for sigma_m in itertools.permutations(inst.modulator):
        permutations += 1
        enc = build_encoding(inst, sigma_m)
        sub_stats: dict = {}
        sol = solve_iqp(enc.iqp, node_budget=iqp_budget, stats=sub_stats)
        iqp_nodes += sub_stats.get("nodes", 0)
        assert sol is not None, "placement program is always feasible"
        total = inst.base_cost + enc.msvc_increase(sol)
        if best_total is None or total < best_total:
            best_total = total
            best_enc = enc
            best_sol = sol
    ordering = reconstruct_ordering(inst, best_enc, best_sol)
    assert evaluate_cost(g, ordering) == best_total
    if stats is not None:
        stats["k"] = inst.k
        stats["classes"] = len(inst.partition.classes)
        stats["permutations"] = permutations
        stats["iqp_nodes"] = iqp_nodes
    return ordering, best_total