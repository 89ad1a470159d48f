"""Shared test helpers: tiny independent oracles and instance generators."""

import itertools

from minsumvc import Graph, Ordering, evaluate_cost


def exhaustive_min_cost(g):
    """Minimum cost by scanning every permutation (the dumbest oracle)."""
    return min(evaluate_cost(g, Ordering(p))
               for p in itertools.permutations(range(g.n)))


def random_ordering(rng, n):
    seq = list(range(n))
    rng.shuffle(seq)
    return Ordering(seq)


def random_modulator_graph(rng, n, k, p_attach=0.5):
    """Clique on vertices 0..n-k-1 plus k extra vertices wired randomly, so
    the minimum clique modulator has size at most k."""
    edges = {(u, v) for u in range(n - k) for v in range(u + 1, n - k)}
    for u in range(n - k, n):
        for v in range(n):
            if v != u and rng.random() < p_attach:
                edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def complete_encoding_assignment(enc, n, k, ell, xvals):
    """Extend per-block class counts to a full encoding assignment using the
    defining equalities (counts after each modulator vertex, its position and
    right degree, and each class run's predecessor position)."""
    assignment = [0] * enc.iqp.num_vars
    for i in range(ell):
        for j in range(1, k + 2):
            assignment[enc.x_index[i][j]] = xvals[i][j]
    for p in range(1, k + 1):
        n_p = sum(xvals[i][j] for j in range(p + 1, k + 2) for i in range(ell))
        assignment[enc.np_index[p - 1]] = n_p
        assignment[enc.yp_index[p - 1]] = n - (n_p + k - p)
        assignment[enc.dp_index[p - 1]] = enc.rm[p - 1] + sum(
            xvals[i][j] for j in range(p + 1, k + 2) for i in enc.i_sets[p - 1])
    for i in range(ell):
        for j in range(1, k + 2):
            prev = 0 if j == 1 else assignment[enc.yp_index[j - 2]]
            assignment[enc.yij_index[i][j]] = prev + sum(
                xvals[q][j] for q in enc.j_sets[i][j])
    return assignment


def random_block_counts(rng, sizes, k):
    """Random composition of each class size into k+1 block counts."""
    xvals = []
    for size in sizes:
        cuts = sorted(rng.randint(0, size) for _ in range(k))
        counts = [0] * (k + 2)
        prev = 0
        for j, cut in enumerate(cuts, start=1):
            counts[j] = cut - prev
            prev = cut
        counts[k + 1] = size - prev
        xvals.append(counts)
    return xvals
