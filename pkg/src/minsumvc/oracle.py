"""Ground-truth exact solver and the greedy baseline.

The exact route runs a dynamic program over vertex subsets (the optimal
completion cost of a prefix depends only on the set of placed vertices),
then walks only cost-optimal branches to pick the tie-breaking ordering.
Everything else in the package is validated against it.
"""

from __future__ import annotations

from .graphs import Graph, Ordering, evaluate_cost, right_degree

DEFAULT_BRUTE_LIMIT = 10


def _completion_costs(g: Graph) -> list[int]:
    """f[mask] = minimum cost of placing exactly the vertices in `mask` last.

    When `mask` is the set of still-unplaced vertices, the next position is
    n - popcount(mask) + 1, and placing v there pays that position once per
    neighbor of v inside mask.
    """
    n = g.n
    adj_bits = g.adj_bits
    f = [0] * (1 << n)
    for mask in range(1, 1 << n):
        p = n - mask.bit_count() + 1
        best = None
        rest = mask
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            sub = mask ^ b
            cost = p * (adj_bits[v] & sub).bit_count() + f[sub]
            if best is None or cost < best:
                best = cost
        f[mask] = best
    return f


def _iter_optimal_sequences(g: Graph, f: list[int]):
    """Yield every ordering (as a vertex list) achieving the optimal cost."""
    n = g.n
    adj_bits = g.adj_bits
    full = (1 << n) - 1
    seq = [0] * n

    def rec(mask: int, depth: int):
        if not mask:
            yield seq
            return
        p = depth + 1
        target = f[mask]
        rest = mask
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            sub = mask ^ b
            if p * (adj_bits[v] & sub).bit_count() + f[sub] == target:
                seq[depth] = v
                yield from rec(sub, depth + 1)

    yield from rec(full, 0)


def brute_force_msvc(g: Graph, limit_n: int = DEFAULT_BRUTE_LIMIT,
                     stats: dict | None = None) -> tuple[Ordering, int]:
    """Exact optimum by exhaustive search over all orderings.

    Ties are broken by the lexicographically smallest position vector.
    Refuses graphs larger than `limit_n` vertices.
    """
    if g.n > limit_n:
        raise ValueError(
            f"graph has {g.n} vertices, above the exhaustive-search limit {limit_n}")
    n = g.n
    if n == 0:
        return Ordering(()), 0
    f = _completion_costs(g)
    adj_bits = g.adj_bits
    pos = [0] * n  # 1-based position of each placed vertex, 0 = unplaced
    best_vec = None
    state = {"nodes": 0}

    def can_beat(depth: int) -> bool:
        # Cheapest conceivable completion hands positions depth+1.. to the
        # unplaced vertices in id order; if even that fails to beat the
        # incumbent position vector, this branch cannot win a tie.
        nxt = depth + 1
        for v in range(n):
            pv = pos[v]
            if not pv:
                pv = nxt
                nxt += 1
            if pv != best_vec[v]:
                return pv < best_vec[v]
        return False

    def rec(mask: int, depth: int):
        nonlocal best_vec
        state["nodes"] += 1
        if not mask:
            best_vec = tuple(pos)
            return
        p = depth + 1
        target = f[mask]
        rest = mask
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            sub = mask ^ b
            if p * (adj_bits[v] & sub).bit_count() + f[sub] == target:
                pos[v] = p
                if best_vec is None or can_beat(depth + 1):
                    rec(sub, depth + 1)
                pos[v] = 0

    rec((1 << n) - 1, 0)
    if stats is not None:
        stats["dp_states"] = 1 << n
        stats["nodes"] = state["nodes"]
    seq = [0] * n
    for v, p in enumerate(best_vec):
        seq[p - 1] = v
    return Ordering(seq), f[(1 << n) - 1]


def greedy_msvc(g: Graph) -> tuple[Ordering, int]:
    """Place a maximum-residual-degree vertex (ties: smallest id) until no
    edge is uncovered, then append the rest in id order."""
    residual = [set(a) for a in g.adj]
    deg = [len(a) for a in residual]
    placed = []
    in_prefix = [False] * g.n
    while True:
        best_v = -1
        best_d = 0
        for v in range(g.n):
            if not in_prefix[v] and deg[v] > best_d:
                best_v, best_d = v, deg[v]
        if best_v < 0:
            break
        placed.append(best_v)
        in_prefix[best_v] = True
        for u in residual[best_v]:
            residual[u].discard(best_v)
            deg[u] -= 1
        residual[best_v].clear()
        deg[best_v] = 0
    placed.extend(v for v in range(g.n) if not in_prefix[v])
    ordering = Ordering(placed)
    return ordering, evaluate_cost(g, ordering)


def verify_optimal_right_degree_monotone(
        g: Graph, limit_n: int = DEFAULT_BRUTE_LIMIT) -> bool:
    """True iff some minimum-cost ordering has non-increasing right degrees."""
    if g.n > limit_n:
        raise ValueError(
            f"graph has {g.n} vertices, above the exhaustive-search limit {limit_n}")
    if g.n == 0:
        return True
    f = _completion_costs(g)
    for seq in _iter_optimal_sequences(g, f):
        ordering = Ordering(seq)
        rds = [right_degree(g, ordering, v) for v in seq]
        if all(rds[i] >= rds[i + 1] for i in range(len(rds) - 1)):
            return True
    return False
