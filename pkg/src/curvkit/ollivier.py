"""Ollivier-Ricci curvature on graph edges via exact optimal transport.

A random-walk measure places idleness mass at its base vertex and spreads
the rest uniformly over the neighbours; the curvature of an edge is one
minus the transport distance between the two endpoint measures.  Values are
exact rationals, and every solve carries primal and dual certificates that
are re-verified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import Graph, distances_from
from .transport import (
    TransportationInstance,
    dual_potential,
    solve_transportation,
)

__all__ = [
    "Distribution",
    "EdgeCurvatureResult",
    "Potential",
    "TransportPlan",
    "WassersteinResult",
    "kappa",
    "kappa_lly",
    "lly_idleness",
    "measure",
    "wasserstein",
]


@dataclass(frozen=True)
class Distribution:
    """Finitely supported probability measure with exact rational masses.

    Only strictly positive masses are stored.  ``origin`` records the
    (vertex, idleness) pair when built as a random-walk measure.
    """

    support: tuple[int, ...]
    masses: tuple[Fraction, ...]
    origin: tuple[int, Fraction] | None = None

    def __post_init__(self):
        if len(self.support) != len(self.masses):
            raise ValueError("support and masses must have equal length")
        if any(m <= 0 for m in self.masses):
            raise ValueError("stored masses must be strictly positive")
        if sum(self.masses, Fraction(0)) != 1:
            raise ValueError("masses must sum to 1 exactly")

    def mass_at(self, v: int) -> Fraction:
        try:
            return self.masses[self.support.index(v)]
        except ValueError:
            return Fraction(0)


def measure(g: Graph, x: int, p) -> Distribution:
    """Random-walk measure at ``x``: idleness mass ``p`` there, the rest
    split evenly over the neighbours."""
    g.check_vertex(x)
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError("idleness must lie in [0, 1]")
    d = g.degree(x)
    if d == 0 and p != 1:
        raise ValueError(f"vertex {x} is isolated; only idleness 1 is meaningful")
    support: list[int] = []
    masses: list[Fraction] = []
    if p > 0:
        support.append(x)
        masses.append(p)
    if p < 1:
        share = (1 - p) / d
        for y in g.neighbors(x):
            support.append(y)
            masses.append(share)
    pairs = sorted(zip(support, masses))
    return Distribution(
        support=tuple(v for v, _ in pairs),
        masses=tuple(m for _, m in pairs),
        origin=(x, p),
    )


@dataclass(frozen=True)
class TransportPlan:
    """Mass moved between two supports; rows sum to the source masses and
    columns to the target masses, exactly."""

    sources: tuple[int, ...]
    targets: tuple[int, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def cost_against(self, cost: Sequence[Sequence[int]]) -> Fraction:
        return sum(
            (
                self.matrix[i][j] * cost[i][j]
                for i in range(len(self.sources))
                for j in range(len(self.targets))
            ),
            Fraction(0),
        )


@dataclass(frozen=True)
class Potential:
    """Single-valued dual certificate on the union of the two supports.

    1-Lipschitz across support pairs; its pairing against the difference of
    the measures equals the transport distance exactly.
    """

    vertices: tuple[int, ...]
    values: tuple[Fraction, ...]

    def value_at(self, v: int) -> Fraction:
        return self.values[self.vertices.index(v)]

    def pairing(self, mu1: Distribution, mu2: Distribution) -> Fraction:
        return sum(
            (
                value * (mu1.mass_at(v) - mu2.mass_at(v))
                for v, value in zip(self.vertices, self.values)
            ),
            Fraction(0),
        )


@dataclass(frozen=True)
class WassersteinResult:
    distance: Fraction | None  # None when the supports span components
    plan: TransportPlan | None
    potential: Potential | None

    @property
    def infinite(self) -> bool:
        return self.distance is None


def wasserstein(g: Graph, mu1: Distribution, mu2: Distribution) -> WassersteinResult:
    """Exact transport distance with verified primal and dual certificates.

    Supports in different components yield the distinct infinite outcome
    rather than an error.
    """
    dist_rows = {v: distances_from(g, v) for v in mu1.support}
    cost = []
    for u in mu1.support:
        row = []
        for v in mu2.support:
            d = dist_rows[u][v]
            if d is None:
                return WassersteinResult(None, None, None)
            row.append(d)
        cost.append(row)

    inst = TransportationInstance(mu1.masses, mu2.masses, cost)
    sol = solve_transportation(inst)
    duals = dual_potential(inst, sol.plan)

    # single-valued potential on the union: inf-convolution of the
    # demand-side prices against graph distance
    union = sorted(set(mu1.support) | set(mu2.support))
    target_dist = {v: distances_from(g, v) for v in mu2.support}
    values = []
    for v in union:
        candidates = [
            target_dist[t][v] + duals.y_values[j]
            for j, t in enumerate(mu2.support)
            if target_dist[t][v] is not None
        ]
        values.append(min(candidates))
    potential = Potential(vertices=tuple(union), values=tuple(values))

    _verify(mu1, mu2, cost, sol.value, sol.plan, potential, g)
    plan = TransportPlan(sources=mu1.support, targets=mu2.support, matrix=sol.plan)
    return WassersteinResult(distance=sol.value, plan=plan, potential=potential)


def _verify(mu1, mu2, cost, value, plan, potential, g):
    # exact marginals
    for i, s in enumerate(mu1.masses):
        if sum(plan[i], Fraction(0)) != s:
            raise RuntimeError("internal: plan row marginal mismatch")
    for j, t in enumerate(mu2.masses):
        if sum((row[j] for row in plan), Fraction(0)) != t:
            raise RuntimeError("internal: plan column marginal mismatch")
    # dual feasibility across support pairs, tightness on moved mass
    for i, u in enumerate(mu1.support):
        pu = potential.value_at(u)
        for j, v in enumerate(mu2.support):
            gap = pu - potential.value_at(v)
            if gap > cost[i][j]:
                raise RuntimeError("internal: potential violates a pair constraint")
            if plan[i][j] > 0 and gap != cost[i][j]:
                raise RuntimeError("internal: potential slack on a support pair")
    # zero duality gap
    if potential.pairing(mu1, mu2) != value:
        raise RuntimeError("internal: duality gap is nonzero")


@dataclass(frozen=True)
class EdgeCurvatureResult:
    """Per-edge curvature with its optimal-transport certificates."""

    edge: tuple[int, int]
    idleness: Fraction
    kappa: Fraction
    transport_distance: Fraction
    plan: TransportPlan
    potential: Potential
    lly: Fraction | None = None


def kappa(g: Graph, x: int, y: int, p=Fraction(0)) -> EdgeCurvatureResult:
    """Edge curvature 1 - W(mu_x, mu_y) at idleness ``p``, exact."""
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge; edge curvature needs adjacency")
    mu_x = measure(g, x, p)
    mu_y = measure(g, y, p)
    res = wasserstein(g, mu_x, mu_y)
    assert res.distance is not None  # endpoints share a component
    return EdgeCurvatureResult(
        edge=(x, y),
        idleness=Fraction(p),
        kappa=1 - res.distance,
        transport_distance=res.distance,
        plan=res.plan,
        potential=res.potential,
    )


def lly_idleness(g: Graph, x: int, y: int) -> Fraction:
    return Fraction(1, max(g.degree(x), g.degree(y)) + 1)


def kappa_lly(g: Graph, x: int, y: int) -> Fraction:
    """Lin-Lu-Yau curvature: the idleness-rescaled value
    ((D+1)/D) * kappa at idleness 1/(D+1), with D the larger endpoint degree."""
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge; edge curvature needs adjacency")
    dmax = max(g.degree(x), g.degree(y))
    base = kappa(g, x, y, Fraction(1, dmax + 1))
    return Fraction(dmax + 1, dmax) * base.kappa
