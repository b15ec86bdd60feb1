"""Exact solvers for balanced transportation problems with integer costs.

Masses are rationals summing to one; costs are graph distances.  The primal
is solved exactly: masses are scaled by their common denominator to integers
and the resulting instance is solved as an integer minimum-cost flow by
successive shortest augmenting paths.  Dual prices are recovered from
shortest-path node prices on the plan's residual constraint graph, so primal
and dual certificates match to the last digit.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence


class UnbalancedInstanceError(ValueError):
    """Supplies and demands do not both sum to one."""


class SuboptimalPlanError(RuntimeError):
    """A plan handed to the dual constructor is not optimal."""


def _as_unit_masses(values: Sequence) -> tuple[Fraction, ...]:
    masses = tuple(Fraction(v) for v in values)
    if any(m < 0 for m in masses):
        raise ValueError("masses must be nonnegative")
    if sum(masses) != 1:
        raise UnbalancedInstanceError("masses must sum to 1 exactly")
    return masses


@dataclass(frozen=True)
class TransportationInstance:
    """Balanced instance: exact rational supplies/demands, integer costs."""

    supplies: tuple[Fraction, ...]
    demands: tuple[Fraction, ...]
    cost: tuple[tuple[int, ...], ...]

    def __init__(self, supplies, demands, cost):
        object.__setattr__(self, "supplies", _as_unit_masses(supplies))
        object.__setattr__(self, "demands", _as_unit_masses(demands))
        rows = tuple(tuple(int(c) for c in row) for row in cost)
        if len(rows) != len(self.supplies) or any(
            len(r) != len(self.demands) for r in rows
        ):
            raise ValueError("cost matrix shape must be |supplies| x |demands|")
        if any(c < 0 for row in rows for c in row):
            raise ValueError("costs must be nonnegative")
        object.__setattr__(self, "cost", rows)

    @property
    def scale(self) -> int:
        """Common denominator turning all masses into integers."""
        denom = 1
        for q in (*self.supplies, *self.demands):
            denom = lcm(denom, q.denominator)
        return denom


@dataclass(frozen=True)
class TransportSolution:
    value: Fraction
    plan: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class DualPotential:
    """Dual prices, one per support point (supply side, then demand side).

    ``x_values[i] - y_values[j] <= cost[i][j]`` holds on every support pair,
    with equality wherever the plan moves mass, and the pairing
    ``sum(s_i * x_i) - sum(t_j * y_j)`` equals the primal optimum exactly.
    """

    x_values: tuple[int, ...]
    y_values: tuple[int, ...]

    @property
    def stacked(self) -> tuple[int, ...]:
        """Values in the stacked sign convention (supply side, negated demand side)."""
        return self.x_values + tuple(-y for y in self.y_values)

    def pairing(self, inst: TransportationInstance) -> Fraction:
        return sum(
            (s * x for s, x in zip(inst.supplies, self.x_values)), Fraction(0)
        ) - sum((t * y for t, y in zip(inst.demands, self.y_values)), Fraction(0))

    def is_feasible(self, inst: TransportationInstance) -> bool:
        return all(
            self.x_values[i] - self.y_values[j] <= inst.cost[i][j]
            for i in range(len(inst.supplies))
            for j in range(len(inst.demands))
        )


def solve_transportation(inst: TransportationInstance) -> TransportSolution:
    """Exact optimal plan and value by integer min-cost flow.

    Node layout: source, one node per supply point, one per demand point,
    sink.  Successive shortest augmenting paths with Dijkstra on reduced
    costs; all arithmetic is on integers, so marginals and the objective are
    exact.  Deterministic tie-breaking (nodes in index order) makes the plan
    reproducible; for identical supply/demand lists with a zero-cost diagonal
    it returns the identity plan.
    """
    ns, nd = len(inst.supplies), len(inst.demands)
    scale = inst.scale
    sup = [int(s * scale) for s in inst.supplies]
    dem = [int(t * scale) for t in inst.demands]

    # arc storage: to, capacity, cost, paired reverse index
    n_nodes = ns + nd + 2
    source, sink = 0, n_nodes - 1
    graph: list[list[int]] = [[] for _ in range(n_nodes)]
    arc_to: list[int] = []
    arc_cap: list[int] = []
    arc_cost: list[int] = []

    def add_arc(u: int, v: int, cap: int, cost: int) -> None:
        graph[u].append(len(arc_to))
        arc_to.append(v)
        arc_cap.append(cap)
        arc_cost.append(cost)
        graph[v].append(len(arc_to))
        arc_to.append(u)
        arc_cap.append(0)
        arc_cost.append(-cost)

    for i in range(ns):
        add_arc(source, 1 + i, sup[i], 0)
    pair_arc = [[0] * nd for _ in range(ns)]
    for i in range(ns):
        for j in range(nd):
            pair_arc[i][j] = len(arc_to)
            add_arc(1 + i, 1 + ns + j, scale, inst.cost[i][j])
    for j in range(nd):
        add_arc(1 + ns + j, sink, dem[j], 0)

    potential = [0] * n_nodes
    shipped = 0
    big = 1 + sum(max(row) for row in inst.cost) * scale
    while shipped < scale:
        dist = [None] * n_nodes
        parent_arc = [-1] * n_nodes
        dist[source] = 0
        heap = [(0, source)]
        while heap:
            d, u = heapq.heappop(heap)
            if dist[u] is not None and d > dist[u]:
                continue
            for a in graph[u]:
                if arc_cap[a] <= 0:
                    continue
                v = arc_to[a]
                nd_ = d + arc_cost[a] + potential[u] - potential[v]
                if dist[v] is None or nd_ < dist[v]:
                    dist[v] = nd_
                    parent_arc[v] = a
                    heapq.heappush(heap, (nd_, v))
        if dist[sink] is None:
            raise ArithmeticError("transportation instance is infeasible")
        for v in range(n_nodes):
            potential[v] += dist[v] if dist[v] is not None else dist[sink]
        # bottleneck along the path
        push = scale - shipped
        v = sink
        while v != source:
            a = parent_arc[v]
            push = min(push, arc_cap[a])
            v = arc_to[a ^ 1]
        v = sink
        while v != source:
            a = parent_arc[v]
            arc_cap[a] -= push
            arc_cap[a ^ 1] += push
            v = arc_to[a ^ 1]
        shipped += push

    total = 0
    plan_rows = []
    for i in range(ns):
        row = []
        for j in range(nd):
            a = pair_arc[i][j]
            flow = arc_cap[a ^ 1]  # reverse capacity equals flow
            total += flow * inst.cost[i][j]
            row.append(Fraction(flow, scale))
        plan_rows.append(tuple(row))
    assert big > total >= 0
    return TransportSolution(Fraction(total, scale), tuple(plan_rows))


def dual_potential(
    inst: TransportationInstance, plan: Sequence[Sequence[Fraction]]
) -> DualPotential:
    """Dual prices certified by the plan, via shortest-path node prices.

    The constraint graph has an arc per support pair (price difference at
    most the cost) and a reverse arc wherever the plan moves mass (price
    difference at least the cost).  Bellman-Ford node prices satisfy every
    constraint; a negative cycle means the plan was not optimal.
    """
    ns, nd = len(inst.supplies), len(inst.demands)
    # nodes: 0..ns-1 supply, ns..ns+nd-1 demand
    arcs: list[tuple[int, int, int]] = []
    for i in range(ns):
        for j in range(nd):
            # x_i - y_j <= c_ij:  arc y_j -> x_i of weight c_ij
            arcs.append((ns + j, i, inst.cost[i][j]))
            if plan[i][j] > 0:
                # y_j - x_i <= -c_ij:  arc x_i -> y_j of weight -c_ij
                arcs.append((i, ns + j, -inst.cost[i][j]))
    n = ns + nd
    dist = [0] * n
    for _ in range(n):
        changed = False
        for u, v, w in arcs:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            break
    else:
        raise SuboptimalPlanError(
            "complementary-slackness constraints admit no prices; plan is not optimal"
        )
    return DualPotential(
        x_values=tuple(dist[:ns]), y_values=tuple(dist[ns:])
    )


@dataclass(frozen=True)
class LPStandardForm:
    """The dual linear program in stacked standard form: sup m.phi s.t. A phi <= c.

    ``m`` stacks the two mass vectors; ``phi`` is understood in the stacked
    sign convention (demand-side values negated); ``a`` has one row per
    support pair (i, j) with +1 in columns i and |supplies|+j, so each row
    reads ``phi_x(i) - phi_y(j) <= cost[i][j]``.  Retained as a validation
    path at small sizes; the production solver works on the primal.
    """

    m: tuple[Fraction, ...]
    c: tuple[int, ...]
    a: tuple[tuple[int, ...], ...]


def lp_standard_form(inst: TransportationInstance) -> LPStandardForm:
    ns, nd = len(inst.supplies), len(inst.demands)
    m = inst.supplies + inst.demands
    c = tuple(inst.cost[i][j] for i in range(ns) for j in range(nd))
    rows = []
    for i in range(ns):
        for j in range(nd):
            row = [0] * (ns + nd)
            row[i] = 1
            row[ns + j] = 1
            rows.append(tuple(row))
    return LPStandardForm(m=m, c=c, a=tuple(rows))
