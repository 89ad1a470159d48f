"""Exact solver for small bounded integer quadratic programs.

minimize   x^T Q x + c^T x + offset
subject to A_eq x = b_eq,  A_le x <= b_le,  lo <= x <= hi  (all integer)

Every variable must carry finite bounds.  The search is depth-first over
the variables in index order; after each assignment the constraint rows
tighten the remaining boxes by interval arithmetic, and a branch is cut
when an interval lower bound on the objective cannot beat the incumbent.
All arithmetic is on Python ints, so feasibility checks and objective
values are exact at any magnitude.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded

DEFAULT_NODE_BUDGET = 10 ** 9


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


class IqpInstance:
    """Immutable bounded IQP.

    quad maps (i, j) to the coefficient of x_i * x_j; pairs are merged into
    the upper triangle on construction (the Q + Q^T symmetrization, with the
    halving folded into evaluation).  Constraint rows may be given as
    {var: coeff} dicts or dense sequences.
    """

    __slots__ = ("num_vars", "bounds", "quad", "linear", "offset", "eqs", "les")

    def __init__(self, bounds, quad=None, linear=None, offset=0,
                 eqs=(), les=()):
        bounds = tuple((int(lo), int(hi)) for lo, hi in bounds)
        t = len(bounds)
        for i, (lo, hi) in enumerate(bounds):
            if lo > hi:
                raise ValueError(f"variable {i} has empty bounds [{lo}, {hi}]")
        merged: dict[tuple[int, int], int] = {}
        if quad:
            items = quad.items() if isinstance(quad, dict) else (
                ((i, j), coeff)
                for i, row in enumerate(quad)
                for j, coeff in enumerate(row))
            for (i, j), coeff in items:
                if not (0 <= i < t and 0 <= j < t):
                    raise ValueError(f"quadratic term ({i}, {j}) out of range")
                if coeff:
                    key = (i, j) if i <= j else (j, i)
                    merged[key] = merged.get(key, 0) + int(coeff)
        lin = [0] * t
        if linear:
            items = linear.items() if isinstance(linear, dict) else enumerate(linear)
            for i, coeff in items:
                if not 0 <= i < t:
                    raise ValueError(f"linear term {i} out of range")
                lin[i] += int(coeff)
        self.num_vars = t
        self.bounds = bounds
        self.quad = {k: v for k, v in sorted(merged.items()) if v}
        self.linear = tuple(lin)
        self.offset = int(offset)
        self.eqs = tuple(self._norm_row(row, rhs, t) for row, rhs in eqs)
        self.les = tuple(self._norm_row(row, rhs, t) for row, rhs in les)

    @staticmethod
    def _norm_row(row, rhs, t):
        acc: dict[int, int] = {}
        items = row.items() if isinstance(row, dict) else enumerate(row)
        for i, coeff in items:
            if not 0 <= i < t:
                raise ValueError(f"constraint index {i} out of range")
            if coeff:
                acc[i] = acc.get(i, 0) + int(coeff)
        acc = {i: a for i, a in acc.items() if a}
        keys = tuple(sorted(acc))
        return keys, tuple(acc[i] for i in keys), int(rhs)

    @property
    def alpha(self) -> int:
        """Largest absolute coefficient in the objective's quadratic part
        and the constraint rows."""
        vals = [abs(v) for v in self.quad.values()]
        for _, coeffs, _ in self.eqs + self.les:
            vals.extend(abs(a) for a in coeffs)
        return max(vals, default=0)

    def objective_value(self, x) -> int:
        total = self.offset
        for (i, j), coeff in self.quad.items():
            total += coeff * x[i] * x[j]
        for i, coeff in enumerate(self.linear):
            if coeff:
                total += coeff * x[i]
        return total

    def is_feasible(self, x) -> bool:
        if len(x) != self.num_vars:
            return False
        for v, (lo, hi) in zip(x, self.bounds):
            if not lo <= v <= hi:
                return False
        for keys, coeffs, rhs in self.eqs:
            if sum(a * x[i] for i, a in zip(keys, coeffs)) != rhs:
                return False
        for keys, coeffs, rhs in self.les:
            if sum(a * x[i] for i, a in zip(keys, coeffs)) > rhs:
                return False
        return True

    def __repr__(self):
        return (f"IqpInstance(vars={self.num_vars}, quad={len(self.quad)}, "
                f"eqs={len(self.eqs)}, les={len(self.les)})")


@dataclass(frozen=True)
class IqpSolution:
    assignment: tuple
    objective: int


def dump_instance(inst: IqpInstance) -> str:
    """Plain-text dump for debugging (not a stable format)."""
    t = inst.num_vars
    lines = ["min"]
    for (i, j), coeff in inst.quad.items():
        lines.append(f"q {i} {j} {coeff}")
    for i, coeff in enumerate(inst.linear):
        if coeff:
            lines.append(f"c {i} {coeff}")
    if inst.offset:
        lines.append(f"offset {inst.offset}")
    for kind, rows in (("eq", inst.eqs), ("le", inst.les)):
        for keys, coeffs, rhs in rows:
            dense = [0] * t
            for i, a in zip(keys, coeffs):
                dense[i] = a
            lines.append(f"{kind} {' '.join(map(str, dense))} {rhs}")
    for i, (lo, hi) in enumerate(inst.bounds):
        lines.append(f"bound {i} {lo} {hi}")
    return "\n".join(lines)


def solve_iqp(inst: IqpInstance, node_budget: int = DEFAULT_NODE_BUDGET,
              stats: dict | None = None) -> IqpSolution | None:
    """Minimize the instance exactly; None when infeasible.

    Ties break toward the lexicographically smallest assignment.  Raises
    BudgetExceeded after `node_budget` search nodes.
    """
    t = inst.num_vars
    lo = [b[0] for b in inst.bounds]
    hi = [b[1] for b in inst.bounds]

    # constraint rows: equality rows bound the sum on both sides
    row_vars, row_coeffs, row_lb, row_ub = [], [], [], []
    for keys, coeffs, rhs in inst.eqs:
        row_vars.append(keys)
        row_coeffs.append(coeffs)
        row_lb.append(rhs)
        row_ub.append(rhs)
    for keys, coeffs, rhs in inst.les:
        row_vars.append(keys)
        row_coeffs.append(coeffs)
        row_lb.append(None)
        row_ub.append(rhs)
    n_rows = len(row_vars)
    var_rows: list[list[tuple[int, int]]] = [[] for _ in range(t)]
    for r in range(n_rows):
        for v, a in zip(row_vars[r], row_coeffs[r]):
            var_rows[v].append((r, a))

    qterms = [(i, j, coeff) for (i, j), coeff in inst.quad.items()]
    var_terms: list[list[int]] = [[] for _ in range(t)]
    for tid, (i, j, _) in enumerate(qterms):
        var_terms[i].append(tid)
        if j != i:
            var_terms[j].append(tid)
    lin = inst.linear

    def term_lower(tid: int) -> int:
        i, j, coeff = qterms[tid]
        if i == j:
            l, h = lo[i], hi[i]
            sq_min = 0 if l <= 0 <= h else min(l * l, h * h)
            sq_max = max(l * l, h * h)
            return coeff * sq_min if coeff >= 0 else coeff * sq_max
        p1 = lo[i] * lo[j]
        p2 = lo[i] * hi[j]
        p3 = hi[i] * lo[j]
        p4 = hi[i] * hi[j]
        if coeff >= 0:
            return coeff * min(p1, p2, p3, p4)
        return coeff * max(p1, p2, p3, p4)

    def lin_lower(v: int) -> int:
        c = lin[v]
        if c == 0:
            return 0
        return c * lo[v] if c > 0 else c * hi[v]

    term_min = [term_lower(tid) for tid in range(len(qterms))]
    lin_min = [lin_lower(v) for v in range(t)]
    row_smin = [0] * n_rows
    row_smax = [0] * n_rows
    for r in range(n_rows):
        smin = smax = 0
        for v, a in zip(row_vars[r], row_coeffs[r]):
            if a > 0:
                smin += a * lo[v]
                smax += a * hi[v]
            else:
                smin += a * hi[v]
                smax += a * lo[v]
        row_smin[r] = smin
        row_smax[r] = smax

    obj_lb = sum(term_min) + sum(lin_min) + inst.offset
    trail: list[tuple] = []
    dirty: set[int] = set()

    def set_bound(v: int, nlo: int, nhi: int) -> bool:
        nonlocal obj_lb
        olo, ohi = lo[v], hi[v]
        if nlo < olo:
            nlo = olo
        if nhi > ohi:
            nhi = ohi
        if nlo > nhi:
            return False
        if nlo == olo and nhi == ohi:
            return True
        trail.append(("b", v, olo, ohi))
        lo[v] = nlo
        hi[v] = nhi
        for r, a in var_rows[v]:
            trail.append(("r", r, row_smin[r], row_smax[r]))
            if a > 0:
                row_smin[r] += a * (nlo - olo)
                row_smax[r] += a * (nhi - ohi)
            else:
                row_smin[r] += a * (nhi - ohi)
                row_smax[r] += a * (nlo - olo)
            dirty.add(r)
        for tid in var_terms[v]:
            new = term_lower(tid)
            old = term_min[tid]
            if new != old:
                trail.append(("t", tid, old))
                term_min[tid] = new
                obj_lb += new - old
        new = lin_lower(v)
        old = lin_min[v]
        if new != old:
            trail.append(("l", v, old))
            lin_min[v] = new
            obj_lb += new - old
        return True

    def propagate() -> bool:
        while dirty:
            r = dirty.pop()
            smin, smax = row_smin[r], row_smax[r]
            ub = row_ub[r]
            lb = row_lb[r]
            if smin > ub or (lb is not None and smax < lb):
                dirty.clear()
                return False
            for v, a in zip(row_vars[r], row_coeffs[r]):
                if lo[v] == hi[v]:
                    continue
                if a > 0:
                    cmin = a * lo[v]
                    cmax = a * hi[v]
                else:
                    cmin = a * hi[v]
                    cmax = a * lo[v]
                rest_min = smin - cmin
                rest_max = smax - cmax
                # rest stays within its interval, so a*x is boxed by
                # [lb - rest_max, ub - rest_min]
                ax_hi = ub - rest_min
                ax_lo = None if lb is None else lb - rest_max
                if a > 0:
                    nhi = ax_hi // a
                    nlo = lo[v] if ax_lo is None else _ceil_div(ax_lo, a)
                else:
                    nlo = _ceil_div(ax_hi, a)
                    nhi = hi[v] if ax_lo is None else ax_lo // a
                if nlo > lo[v] or nhi < hi[v]:
                    if not set_bound(v, nlo, nhi):
                        dirty.clear()
                        return False
                    smin, smax = row_smin[r], row_smax[r]
        return True

    def undo(mark: int):
        nonlocal obj_lb
        while len(trail) > mark:
            entry = trail.pop()
            tag = entry[0]
            if tag == "b":
                _, v, olo, ohi = entry
                lo[v] = olo
                hi[v] = ohi
            elif tag == "r":
                _, r, smin, smax = entry
                row_smin[r] = smin
                row_smax[r] = smax
            elif tag == "t":
                _, tid, old = entry
                obj_lb += old - term_min[tid]
                term_min[tid] = old
            else:
                _, v, old = entry
                obj_lb += old - lin_min[v]
                lin_min[v] = old

    best_obj = None
    best_x = None
    nodes = 0

    def dfs():
        nonlocal best_obj, best_x, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"IQP search exceeded {node_budget} nodes")
        if best_obj is not None and obj_lb >= best_obj:
            return
        branch = -1
        for v in range(t):
            if lo[v] < hi[v]:
                branch = v
                break
        if branch < 0:
            # all fixed: interval bounds are degenerate, so obj_lb is exact
            if best_obj is None or obj_lb < best_obj:
                best_obj = obj_lb
                best_x = tuple(lo)
            return
        for val in range(lo[branch], hi[branch] + 1):
            mark = len(trail)
            if set_bound(branch, val, val) and propagate():
                dfs()
            undo(mark)

    dirty.update(range(n_rows))
    if not propagate():
        if stats is not None:
            stats["nodes"] = 0
        return None
    dfs()
    if stats is not None:
        stats["nodes"] = nodes
    if best_obj is None:
        return None
    assert inst.is_feasible(best_x)
    assert inst.objective_value(best_x) == best_obj
    return IqpSolution(assignment=best_x, objective=best_obj)