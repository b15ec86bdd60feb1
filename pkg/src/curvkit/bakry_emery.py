"""Bakry-Emery curvature of graph vertices.

The curvature at a vertex is the best constant K in the local inequality
relating the iterated and plain carre-du-champ forms, optionally with a
finite dimension term.  Both forms are assembled exactly from closed-form
block formulas over the 2-ball (the centre row, the neighbour block, the
distance-two block), then handed to the pencil solver.  An operator-level
evaluation of the same forms is provided as an independent route for
verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .graphs import BallDecomposition, Graph, ball_decomposition
from .linalg import (
    DEFAULT_PENCIL_TOL,
    PencilProblem,
    SymmetricMatrix,
    max_k_pencil,
    max_k_pencil_bisection,
)

INFINITE_DIMENSION = math.inf
ZERO_BAND = 1e-7  # |K| below this is reported as sign "zero"

__all__ = [
    "INFINITE_DIMENSION",
    "ZERO_BAND",
    "CdCheck",
    "CurvatureQuery",
    "GammaPair",
    "VertexCurvatureResult",
    "be_curvature",
    "build_gamma_pair",
    "curvature_sign",
    "evaluate_gamma_forms",
    "satisfies_cd",
]


@dataclass(frozen=True)
class GammaPair:
    """The two local forms and the Laplacian row at a vertex, exact.

    ``vertices`` lists the 2-ball in the fixed order centre, sorted
    neighbours, sorted distance-two shell; ``gamma`` is indexed by the first
    ``b1_size`` entries, ``gamma2`` by all of them.  Entries are Fractions
    (denominators 2 and 4), so quadratic forms on integer vectors are exact.
    """

    vertices: tuple[int, ...]
    b1_size: int
    gamma: SymmetricMatrix
    gamma2: SymmetricMatrix
    laplacian_row: tuple[int, ...]

    def index_of(self, vertex: int) -> int:
        return self.vertices.index(vertex)

    def two_gamma_int(self) -> list[list[int]]:
        return [[int(2 * x) for x in row] for row in self.gamma.rows]

    def four_gamma2_int(self) -> list[list[int]]:
        return [[int(4 * x) for x in row] for row in self.gamma2.rows]


def build_gamma_pair(g: Graph, x: int) -> GammaPair:
    """Assemble the forms at ``x`` from their closed-form blocks."""
    ball = ball_decomposition(g, x)
    s1, s2 = ball.s1, ball.s2
    d_x = len(s1)
    order = (x, *s1, *s2)
    b1 = 1 + d_x
    m = len(order)

    two_gamma = [[0] * b1 for _ in range(b1)]
    two_gamma[0][0] = d_x
    for i in range(1, b1):
        two_gamma[0][i] = two_gamma[i][0] = -1
        two_gamma[i][i] = 1

    four_gamma2 = [[0] * m for _ in range(m)]
    four_gamma2[0][0] = 3 * d_x + d_x * d_x
    out = {v: ball.directed_degrees[v][0] for v in order}
    sph = {v: ball.directed_degrees[v][1] for v in order}
    inn = {v: ball.directed_degrees[v][2] for v in order}
    for i, y in enumerate(s1, start=1):
        four_gamma2[0][i] = four_gamma2[i][0] = -3 - d_x - out[y]
        four_gamma2[i][i] = 5 - d_x + 3 * out[y] + 4 * sph[y]
    for i, yi in enumerate(s1, start=1):
        for j, yj in enumerate(s1, start=1):
            if i < j:
                w = 1 if g.has_edge(yi, yj) else 0
                four_gamma2[i][j] = four_gamma2[j][i] = 2 - 4 * w
    for k, z in enumerate(s2, start=b1):
        four_gamma2[0][k] = four_gamma2[k][0] = inn[z]
        four_gamma2[k][k] = inn[z]
        for i, y in enumerate(s1, start=1):
            w = 1 if g.has_edge(y, z) else 0
            four_gamma2[i][k] = four_gamma2[k][i] = -2 * w

    gamma = SymmetricMatrix.from_rows(
        [[Fraction(v, 2) for v in row] for row in two_gamma], mode="exact"
    )
    gamma2 = SymmetricMatrix.from_rows(
        [[Fraction(v, 4) for v in row] for row in four_gamma2], mode="exact"
    )
    laplacian_row = (-d_x,) + (1,) * d_x
    return GammaPair(
        vertices=order,
        b1_size=b1,
        gamma=gamma,
        gamma2=gamma2,
        laplacian_row=laplacian_row,
    )


def _laplacian(g: Graph, f: Mapping[int, object], v: int):
    fv = f.get(v, 0)
    return sum(f.get(u, 0) - fv for u in g.neighbors(v))


def _gamma_op(g: Graph, f: Mapping[int, object], h: Mapping[int, object], v: int):
    # 2*Gamma(f,h) = Laplacian(f*h) - f*Laplacian(h) - h*Laplacian(f)
    fv, hv = f.get(v, 0), h.get(v, 0)
    acc = 0
    for u in g.neighbors(v):
        acc += (f.get(u, 0) - fv) * (h.get(u, 0) - hv)
    return Fraction(acc, 2) if isinstance(acc, int) else acc / 2


def evaluate_gamma_forms(g: Graph, f: Mapping[int, object], x: int):
    """(Gamma(f)(x), Gamma2(f)(x)) straight from the operator definitions.

    ``f`` maps vertices to values and is extended by zero; values outside the
    2-ball of ``x`` cannot affect the result.  With int or Fraction values
    the output is exact, which is what the matrix-form identity checks rely
    on.
    """
    g.check_vertex(x)
    gamma_x = _gamma_op(g, f, f, x)
    lap_f = {v: _laplacian(g, f, v) for v in (x, *g.neighbors(x))}
    # 2*Gamma2(f) = Laplacian(Gamma(f)) - 2*Gamma(f, Laplacian(f))
    gamma_f = {v: _gamma_op(g, f, f, v) for v in (x, *g.neighbors(x))}
    lap_gamma = sum(gamma_f[u] - gamma_f[x] for u in g.neighbors(x))
    cross = _gamma_op(g, f, lap_f, x)
    gamma2_x = (lap_gamma - 2 * cross) / 2
    return gamma_x, gamma2_x


@dataclass(frozen=True)
class CurvatureQuery:
    """Vertex plus dimension parameter (a positive rational or infinity)."""

    vertex: int
    dimension: object = INFINITE_DIMENSION

    def dimension_fraction(self) -> Fraction | None:
        if self.dimension == INFINITE_DIMENSION:
            return None
        nd = Fraction(self.dimension)
        if nd <= 0:
            raise ValueError("dimension must be positive")
        return nd


@dataclass(frozen=True)
class VertexCurvatureResult:
    vertex: int
    dimension: object
    curvature: float
    sign: str  # "negative" | "zero" | "positive"
    method: str  # "schur" | "bisection"


def curvature_sign(value: float, zero_band: float = ZERO_BAND) -> str:
    if value > zero_band:
        return "positive"
    if value < -zero_band:
        return "negative"
    return "zero"


def curvature_pencil(g: Graph, query: CurvatureQuery) -> PencilProblem:
    """Pencil whose best constant is the curvature at the queried vertex."""
    pair = build_gamma_pair(g, query.vertex)
    m = len(pair.vertices)
    q = pair.gamma2.as_array()
    nd = query.dimension_fraction()
    if nd is not None:
        lap = np.zeros(m)
        lap[: pair.b1_size] = pair.laplacian_row
        q = q - np.outer(lap, lap) / float(nd)
    gmat = np.zeros((m, m))
    gmat[: pair.b1_size, : pair.b1_size] = pair.gamma.as_array()
    return PencilProblem(q=q, g=gmat, b1_size=pair.b1_size)


def be_curvature(
    g: Graph,
    query: CurvatureQuery,
    *,
    method: str = "schur",
    tol: float = DEFAULT_PENCIL_TOL,
) -> VertexCurvatureResult:
    """Curvature function value at one vertex for the queried dimension.

    ``method`` selects the production Schur path or the bisection oracle.
    Isolated vertices carry curvature 0 by convention (every local form is
    empty).
    """
    g.check_vertex(query.vertex)
    query.dimension_fraction()  # validates positivity
    if method not in ("schur", "bisection"):
        raise ValueError("method must be 'schur' or 'bisection'")
    if g.degree(query.vertex) == 0:
        return VertexCurvatureResult(query.vertex, query.dimension, 0.0, "zero", method)
    pencil = curvature_pencil(g, query)
    solver = max_k_pencil if method == "schur" else max_k_pencil_bisection
    value = solver(pencil, tol)
    return VertexCurvatureResult(
        query.vertex, query.dimension, value, curvature_sign(value), method
    )


@dataclass(frozen=True)
class CdCheck:
    holds: bool
    witness: int | None  # first failing vertex when the bound fails


def satisfies_cd(g: Graph, bound: float, dimension: object = INFINITE_DIMENSION) -> CdCheck:
    """Does every vertex carry curvature at least ``bound`` (up to the zero band)?"""
    for v in range(g.n):
        res = be_curvature(g, CurvatureQuery(v, dimension))
        if res.curvature < bound - ZERO_BAND:
            return CdCheck(holds=False, witness=v)
    return CdCheck(holds=True, witness=None)
