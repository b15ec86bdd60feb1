"""Classification of non-negatively curved cubic graphs.

Three independent pillars, machine-checked against each other:

* a girth-based sign prediction for the idleness-zero edge curvature
  (triangle: at least 1/3; square: exactly 0; neither: at most -1/3),
* a census of all cubic 2-ball shapes with the curvature of their centres,
* structural recognition of the two non-negatively curved families (prisms
  and Moebius ladders) by isomorphism against generated templates.

``verify_equivalence`` sweeps every connected cubic isomorphism class up to
a vertex budget and confirms that non-negative vertex curvature everywhere,
non-negative edge curvature everywhere, and family membership coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations

from .bakry_emery import (
    INFINITE_DIMENSION,
    ZERO_BAND,
    CurvatureQuery,
    be_curvature,
    curvature_sign,
)
from .graphs import (
    Graph,
    are_isomorphic,
    ball_decomposition,
    distances_from,
    enumerate_cubic,
    girth_through_edge,
    mobius,
    prism,
)
from .ollivier import kappa, measure

__all__ = [
    "ClassificationVerdict",
    "EquivalenceReport",
    "NotCubicError",
    "PredictedSign",
    "TwoBallClass",
    "classify_cubic",
    "enumerate_cubic_two_balls",
    "predicted_sign",
    "two_ball_shape",
    "verify_equivalence",
]


class NotCubicError(ValueError):
    """Operation requires a connected 3-regular graph."""


class PredictedSign(Enum):
    """Interval for the idleness-zero curvature of an edge, from the girth
    of the smallest cycle supporting it."""

    AT_LEAST_THIRD = ">=1/3"
    ZERO = "=0"
    AT_MOST_MINUS_THIRD = "<=-1/3"

    def contains(self, value: Fraction) -> bool:
        if self is PredictedSign.AT_LEAST_THIRD:
            return value >= Fraction(1, 3)
        if self is PredictedSign.ZERO:
            return value == 0
        return value <= Fraction(-1, 3)


def predicted_sign(g: Graph, edge: tuple[int, int]) -> PredictedSign:
    """Sign interval for an edge of a cubic graph from its supporting girth."""
    if not g.is_regular(3):
        raise NotCubicError("sign prediction is stated for 3-regular graphs")
    girth = girth_through_edge(g, edge)
    if girth == 3:
        return PredictedSign.AT_LEAST_THIRD
    if girth == 4:
        return PredictedSign.ZERO
    return PredictedSign.AT_MOST_MINUS_THIRD  # girth >= 5 or bridge


# -- the 2-ball census ---------------------------------------------------------


@dataclass(frozen=True)
class TwoBallClass:
    """One isomorphism class (centre fixed) of a cubic 2-ball.

    ``structure`` is the ball itself as a graph: centre 0, neighbours 1..3,
    distance-two shell 4.., with neighbour-neighbour and neighbour-shell
    edges only.  Edges inside the distance-two shell are deliberately not
    part of the class; the centre curvature cannot see them.
    """

    label: str
    structure: Graph
    triangles: int  # edges among the centre's neighbours
    shell_profile: tuple[tuple[int, ...], ...]  # sorted neighbour sets of shell vertices
    curvature: float
    sign: str

    @property
    def is_complete_cubic(self) -> bool:
        return self.structure.is_regular(3)


def _shape_key(s1_edges: frozenset, shell_sets: tuple[frozenset, ...]) -> tuple:
    """Canonical key of a 2-ball shape under relabelling of the neighbours."""
    best = None
    for perm in permutations(range(3)):
        edges = tuple(
            sorted(tuple(sorted((perm[a], perm[b]))) for a, b in s1_edges)
        )
        sets = tuple(sorted(tuple(sorted(perm[v] for v in t)) for t in shell_sets))
        key = (edges, sets)
        if best is None or key < best:
            best = key
    return best


def two_ball_shape(g: Graph, x: int) -> tuple:
    """Canonical shape key of the 2-ball of a degree-3 vertex."""
    if g.degree(x) != 3:
        raise NotCubicError("two-ball shapes are defined for degree-3 centres")
    ball = ball_decomposition(g, x)
    pos = {v: i for i, v in enumerate(ball.s1)}
    s1_edges = frozenset(
        frozenset((pos[a], pos[b]))
        for i, a in enumerate(ball.s1)
        for b in ball.s1[i + 1 :]
        if g.has_edge(a, b)
    )
    shell_sets = tuple(
        frozenset(pos[y] for y in ball.s1 if g.has_edge(y, z)) for z in ball.s2
    )
    return _shape_key(
        frozenset(tuple(e) for e in s1_edges), shell_sets
    )


def _structure_graph(s1_edges, shell_sets) -> Graph:
    edges = [(0, 1), (0, 2), (0, 3)]
    edges += [(1 + a, 1 + b) for a, b in s1_edges]
    for k, t in enumerate(shell_sets):
        for y in t:
            edges.append((1 + y, 4 + k))
    return Graph(4 + len(shell_sets), edges)


def _shell_multisets(out_degrees: tuple[int, int, int]):
    """All multisets of nonempty neighbour subsets with prescribed column sums."""
    subsets = [
        (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2),
    ]
    results = []

    def rec(idx: int, remaining: tuple[int, int, int], chosen: list):
        if all(r == 0 for r in remaining):
            results.append(tuple(chosen))
            return
        if idx == len(subsets):
            return
        t = subsets[idx]
        limit = min(remaining[v] for v in t)
        for count in range(limit + 1):
            rec(
                idx + 1,
                tuple(
                    r - count if v in t else r for v, r in enumerate(remaining)
                ),
                chosen + [t] * count,
            )

    rec(0, out_degrees, [])
    return results


def enumerate_cubic_two_balls() -> list[TwoBallClass]:
    """Every realizable cubic 2-ball shape, with its centre curvature.

    Shapes are produced constructively: choose the edges among the three
    neighbours (which fixes each neighbour's outward degree), then every
    multiset of nonempty neighbour subsets realising those outward degrees
    as the distance-two shell, deduplicated under neighbour relabelling.
    Realizability of each shape inside an actual cubic graph is exercised by
    the test suite, which also cross-checks this census against the shells
    observed across all enumerated cubic graphs.

    Classes are grouped by the number of triangles at the centre (3, 2, 1,
    0) and labelled T<t>-<index> within each group; curvature of the centre
    is computed from the structure graph alone, which is legal because the
    centre's forms never read anything outside it.
    """
    groups: dict[int, list[tuple]] = {3: [], 2: [], 1: [], 0: []}
    edge_patterns = {
        3: [frozenset({(0, 1), (0, 2), (1, 2)})],
        2: [frozenset({(0, 1), (0, 2)})],
        1: [frozenset({(0, 1)})],
        0: [frozenset()],
    }
    for triangles, patterns in edge_patterns.items():
        for s1_edges in patterns:
            spherical = [0, 0, 0]
            for a, b in s1_edges:
                spherical[a] += 1
                spherical[b] += 1
            out_deg = tuple(2 - s for s in spherical)
            seen: set[tuple] = set()
            for shell_sets in _shell_multisets(out_deg):
                key = _shape_key(s1_edges, tuple(frozenset(t) for t in shell_sets))
                if key in seen:
                    continue
                seen.add(key)
                groups[triangles].append(key)
    classes: list[TwoBallClass] = []
    for triangles in (3, 2, 1, 0):
        for idx, (edges, sets) in enumerate(sorted(groups[triangles]), start=1):
            structure = _structure_graph(edges, sets)
            res = be_curvature(structure, CurvatureQuery(0, INFINITE_DIMENSION))
            classes.append(
                TwoBallClass(
                    label=f"T{triangles}-{idx}",
                    structure=structure,
                    triangles=triangles,
                    shell_profile=sets,
                    curvature=res.curvature,
                    sign=res.sign,
                )
            )
    return classes


# -- family recognition --------------------------------------------------------


@dataclass(frozen=True)
class ClassificationVerdict:
    """Family membership, or a recomputed negative-curvature witness."""

    kind: str  # "prism" | "mobius" | "not_nonnegatively_curved"
    n: int | None = None
    witness_edge: tuple[int, int] | None = None
    witness_edge_kappa: Fraction | None = None
    witness_vertex: int | None = None
    witness_vertex_curvature: float | None = None

    @property
    def nonnegative(self) -> bool:
        return self.kind in ("prism", "mobius")

    def family_name(self) -> str | None:
        if self.kind == "mobius":
            return f"M{self.n}"
        if self.kind == "prism":
            return f"Y{self.n}"
        return None


def classify_cubic(g: Graph) -> ClassificationVerdict:
    """Recognize a connected cubic graph as a prism or Moebius ladder, or
    return witnesses of negative curvature.

    Recognition is purely structural (isomorphism against the generated
    family member of the right size), so the equivalence sweep checks it
    against two genuinely independent curvature computations.  Where both
    identities apply (the two smallest ladders) the Moebius name wins.
    """
    if not g.is_regular(3):
        raise NotCubicError("classification is defined for 3-regular graphs")
    if not g.is_connected():
        raise NotCubicError("classification is defined for connected graphs")
    half = g.n // 2
    if half >= 2 and are_isomorphic(g, mobius(half)):
        return ClassificationVerdict(kind="mobius", n=half)
    if half >= 3 and are_isomorphic(g, prism(half)):
        return ClassificationVerdict(kind="prism", n=half)
    witness_edge = None
    witness_kappa = None
    for x, y in g.edges:
        k = kappa(g, x, y).kappa
        if k < 0:
            witness_edge, witness_kappa = (x, y), k
            break
    witness_vertex = None
    witness_curv = None
    for v in range(g.n):
        res = be_curvature(g, CurvatureQuery(v, INFINITE_DIMENSION))
        if res.sign == "negative":
            witness_vertex, witness_curv = v, res.curvature
            break
    if witness_edge is None or witness_vertex is None:
        raise RuntimeError(
            "internal: graph is neither recognized nor negatively curved"
        )
    return ClassificationVerdict(
        kind="not_nonnegatively_curved",
        witness_edge=witness_edge,
        witness_edge_kappa=witness_kappa,
        witness_vertex=witness_vertex,
        witness_vertex_curvature=witness_curv,
    )


# -- the equivalence sweep -----------------------------------------------------


@dataclass(frozen=True)
class ClassRow:
    """Verdicts for one isomorphism class in the sweep."""

    n: int
    index: int
    graph: Graph
    cd_nonnegative: bool
    ollivier_nonnegative: bool
    recognized: ClassificationVerdict
    girth_lemma_ok: bool
    min_vertex_curvature: float
    min_edge_kappa: Fraction

    @property
    def agreement(self) -> bool:
        return (
            self.cd_nonnegative
            == self.ollivier_nonnegative
            == self.recognized.nonnegative
        )


@dataclass(frozen=True)
class EquivalenceReport:
    n_max: int
    rows: tuple[ClassRow, ...]
    max_pencil_gap: float
    certificates_checked: int

    @property
    def class_count(self) -> int:
        return len(self.rows)

    @property
    def agreement(self) -> bool:
        return all(row.agreement for row in self.rows)

    @property
    def girth_lemma_ok(self) -> bool:
        return all(row.girth_lemma_ok for row in self.rows)

    @property
    def positive_names(self) -> tuple[str, ...]:
        names = [
            (row.n, row.recognized.family_name())
            for row in self.rows
            if row.recognized.nonnegative
        ]
        return tuple(name for _, name in sorted(names))

    def summary(self) -> str:
        verdict = "equivalence holds" if self.agreement else "EQUIVALENCE FAILS"
        positives = " ".join(self.positive_names)
        return (
            f"{self.class_count} classes checked, {verdict}, "
            f"positive set: {positives}"
        )


def _certified_kappa(g: Graph, x: int, y: int) -> Fraction:
    """Idleness-zero curvature, with its certificates re-verified here.

    The transport layer already checks marginals, feasibility, tightness and
    the zero duality gap; this repeats the checks at the sweep level so the
    report's certificate count attests to them explicitly.
    """
    res = kappa(g, x, y)
    mu_x, mu_y = measure(g, x, Fraction(0)), measure(g, y, Fraction(0))
    cost = [[distances_from(g, u)[v] for v in mu_y.support] for u in mu_x.support]
    if res.plan.cost_against(cost) != res.transport_distance:
        raise RuntimeError("internal: plan cost mismatch")
    if res.potential.pairing(mu_x, mu_y) != res.transport_distance:
        raise RuntimeError("internal: duality gap in sweep")
    for i, u in enumerate(mu_x.support):
        for j, v in enumerate(mu_y.support):
            gap = res.potential.value_at(u) - res.potential.value_at(v)
            if gap > cost[i][j]:
                raise RuntimeError("internal: potential infeasible in sweep")
            if res.plan.matrix[i][j] > 0 and gap != cost[i][j]:
                raise RuntimeError("internal: plan/potential slack in sweep")
    return res.kappa


def verify_equivalence(n_max: int) -> EquivalenceReport:
    """Check the three-way equivalence on every connected cubic class with
    at most ``n_max`` vertices.

    For each class: vertex curvature everywhere non-negative (with the
    Schur and bisection routes compared), edge curvature everywhere
    non-negative (exact rationals with verified certificates), and family
    recognition.  The report records every per-class verdict, the largest
    gap between the two pencil routes, and the number of transport
    certificates checked.
    """
    if n_max % 2 != 0 or n_max < 4:
        raise ValueError("the sweep needs an even vertex budget of at least 4")
    if n_max > 12:
        raise ValueError("sweep budget is capped at 12 vertices")
    rows: list[ClassRow] = []
    max_gap = 0.0
    certificates = 0
    for n in range(4, n_max + 1, 2):
        for index, g in enumerate(enumerate_cubic(n)):
            min_curv = None
            for v in range(g.n):
                schur = be_curvature(g, CurvatureQuery(v, INFINITE_DIMENSION))
                oracle = be_curvature(
                    g, CurvatureQuery(v, INFINITE_DIMENSION), method="bisection"
                )
                max_gap = max(max_gap, abs(schur.curvature - oracle.curvature))
                if min_curv is None or schur.curvature < min_curv:
                    min_curv = schur.curvature
            cd_ok = min_curv >= -ZERO_BAND
            min_kappa = None
            lemma_ok = True
            for x, y in g.edges:
                k = _certified_kappa(g, x, y)
                certificates += 1
                if not predicted_sign(g, (x, y)).contains(k):
                    lemma_ok = False
                if min_kappa is None or k < min_kappa:
                    min_kappa = k
            oll_ok = min_kappa >= 0
            verdict = classify_cubic(g)
            rows.append(
                ClassRow(
                    n=n,
                    index=index,
                    graph=g,
                    cd_nonnegative=cd_ok,
                    ollivier_nonnegative=oll_ok,
                    recognized=verdict,
                    girth_lemma_ok=lemma_ok,
                    min_vertex_curvature=min_curv,
                    min_edge_kappa=min_kappa,
                )
            )
    return EquivalenceReport(
        n_max=n_max,
        rows=tuple(rows),
        max_pencil_gap=max_gap,
        certificates_checked=certificates,
    )
