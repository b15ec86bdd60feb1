"""Dense symmetric eigenvalues and the curvature pencil solver.

The eigensolver is cyclic Jacobi: rotations sweep the upper triangle until
the off-diagonal Frobenius norm drops below the tolerance, which bounds each
eigenvalue's error by that tolerance.  The pencil solver finds the largest K
with Q - K*G positive semidefinite, where both matrices kill the constant
vector, G vanishes outside a leading block, and the trailing block of Q is
positive diagonal.  Production path: Schur-complement the trailing block
away, project out the constants with an explicit Householder basis, and
solve the reduced symmetric-definite generalized eigenvalue problem.
Oracle path: bisection on K against the smallest eigenvalue of the full
pencil.  numpy supplies array storage and elementwise arithmetic only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

DEFAULT_EIG_TOL = 1e-12
DEFAULT_PENCIL_TOL = 1e-9


@dataclass(frozen=True)
class SymmetricMatrix:
    """Symmetric matrix with a declared arithmetic mode.

    ``exact`` rows hold ints/Fractions (used for the curvature forms, where
    quadratic-form identities are checked with zero error); ``float`` rows
    hold binary floats.  Symmetry is validated on construction.
    """

    rows: tuple[tuple, ...]
    mode: str  # "exact" | "float"

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], mode: str = "exact") -> "SymmetricMatrix":
        if mode not in ("exact", "float"):
            raise ValueError("mode must be 'exact' or 'float'")
        frozen = tuple(tuple(row) for row in rows)
        n = len(frozen)
        if any(len(r) != n for r in frozen):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i):
                if frozen[i][j] != frozen[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")
        return cls(rows=frozen, mode=mode)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.rows], dtype=float)

    def quadratic_form(self, vector: Sequence):
        """f^T M f in the matrix's own arithmetic (exact stays exact)."""
        v = list(vector)
        return sum(
            self.rows[i][j] * v[i] * v[j]
            for i in range(self.dimension)
            for j in range(self.dimension)
        )


def _as_symmetric_array(matrix, tol: float = 1e-12) -> np.ndarray:
    if isinstance(matrix, SymmetricMatrix):
        return matrix.as_array()
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    scale = max(1.0, float(np.max(np.abs(a))) if a.size else 1.0)
    if a.size and float(np.max(np.abs(a - a.T))) > tol * scale:
        raise ValueError("matrix is not symmetric")
    return (a + a.T) / 2.0


def _offdiagonal_norm(a: np.ndarray) -> float:
    # sum off-diagonal squares directly; subtracting the diagonal from the
    # total Frobenius norm cancels catastrophically near convergence
    b = a.copy()
    np.fill_diagonal(b, 0.0)
    return float(np.sqrt(np.sum(b * b)))


def _jacobi_eigenvalues(a: np.ndarray, tol: float, max_sweeps: int = 100) -> list[float]:
    n = a.shape[0]
    if n < 2:
        return [float(a[i, i]) for i in range(n)]
    a = a.copy()
    skip = tol / max(4 * n * n, 1)
    for _ in range(max_sweeps):
        if _offdiagonal_norm(a) <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                app, aqq = a[p, p], a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return sorted(float(a[i, i]) for i in range(n))


def symmetric_eigenvalues(matrix, tol: float = DEFAULT_EIG_TOL) -> list[float]:
    """All eigenvalues of a symmetric matrix, sorted, each within ``tol``."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return _jacobi_eigenvalues(_as_symmetric_array(matrix), tol)


def constant_complement_basis(k: int) -> np.ndarray:
    """Orthonormal basis (k x (k-1)) of the complement of the all-ones vector.

    Columns come from the Householder reflection sending e_0 to 1/sqrt(k),
    which keeps the projection numerically transparent.
    """
    if k < 1:
        raise ValueError("dimension must be positive")
    if k == 1:
        return np.zeros((1, 0))
    w = np.full(k, 1.0 / np.sqrt(k))
    v = w.copy()
    v[0] -= 1.0
    v /= np.linalg.norm(v)
    h = np.eye(k) - 2.0 * np.outer(v, v)
    return h[:, 1:]


def _cholesky_lower(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    l = np.zeros_like(a)
    floor = 1e-12 * max(1.0, float(np.max(np.abs(np.diag(a)))) if n else 1.0)
    for i in range(n):
        for j in range(i + 1):
            acc = a[i, j] - np.dot(l[i, :j], l[j, :j])
            if i == j:
                if acc <= floor:
                    raise ArithmeticError("matrix is not positive definite")
                l[i, i] = np.sqrt(acc)
            else:
                l[i, j] = acc / l[j, j]
    return l


def _solve_lower(l: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = l.shape[0]
    x = np.zeros_like(b, dtype=float)
    for i in range(n):
        x[i] = (b[i] - l[i, :i] @ x[:i]) / l[i, i]
    return x


@dataclass(frozen=True)
class PencilProblem:
    """Data for maximising K subject to Q - K*G >= 0 (PSD).

    ``q`` acts on the full index set; ``g`` is zero outside the leading
    ``b1_size`` block.  Both must annihilate the constant vector, and the
    trailing block of ``q`` must be positive diagonal (it is eliminated by a
    Schur complement, legal because ``g`` does not touch it).
    """

    q: np.ndarray
    g: np.ndarray
    b1_size: int

    def validate(self, tol: float = 1e-9) -> None:
        q, g, b = self.q, self.g, self.b1_size
        m = q.shape[0]
        if q.shape != (m, m) or g.shape != (m, m):
            raise ValueError("pencil matrices must be square and equal-sized")
        if not 1 <= b <= m:
            raise ValueError("leading block size out of range")
        scale = max(1.0, float(np.max(np.abs(q))), float(np.max(np.abs(g))))
        ones = np.ones(m)
        if float(np.max(np.abs(q @ ones))) > tol * scale:
            raise ValueError("Q does not annihilate the constant vector")
        if float(np.max(np.abs(g @ ones))) > tol * scale:
            raise ValueError("G does not annihilate the constant vector")
        if g[b:, :].size and (
            float(np.max(np.abs(g[b:, :]))) > 0 or float(np.max(np.abs(g[:, b:]))) > 0
        ):
            raise ValueError("G must vanish outside the leading block")
        tail = q[b:, b:]
        if tail.size:
            if float(np.max(np.abs(tail - np.diag(np.diag(tail))))) > 0:
                raise ValueError("trailing block of Q must be diagonal")
            if float(np.min(np.diag(tail))) <= 0:
                raise ValueError("trailing block of Q must be positive diagonal")


def _reduced_pencil(p: PencilProblem) -> tuple[np.ndarray, np.ndarray]:
    """Schur-complement the trailing block, then project out constants."""
    b, m = p.b1_size, p.q.shape[0]
    if m > b:
        d = np.diag(p.q[b:, b:])
        bs = p.q[:b, b:]
        q_b = p.q[:b, :b] - (bs / d) @ bs.T
    else:
        q_b = p.q[:b, :b].copy()
    g_b = p.g[:b, :b]
    u = constant_complement_basis(b)
    qt = u.T @ q_b @ u
    gt = u.T @ g_b @ u
    return (qt + qt.T) / 2.0, (gt + gt.T) / 2.0


def max_k_pencil(p: PencilProblem, tol: float = DEFAULT_PENCIL_TOL) -> float:
    """Largest K with Q - K*G PSD, by the Schur-complement reduction.

    Raises ArithmeticError when G is not positive definite on the complement
    of the constants (Cholesky breakdown).
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    p.validate()
    if p.b1_size == 1:
        raise ValueError("pencil needs at least two leading indices")
    qt, gt = _reduced_pencil(p)
    try:
        l = _cholesky_lower(gt)
    except ArithmeticError as exc:
        raise ArithmeticError(
            "G is not positive definite on the complement of the constants"
        ) from exc
    x = _solve_lower(l, qt)
    m = _solve_lower(l, x.T).T
    eigs = _jacobi_eigenvalues((m + m.T) / 2.0, min(tol, DEFAULT_EIG_TOL))
    return eigs[0]


def max_k_pencil_bisection(
    p: PencilProblem,
    tol: float = DEFAULT_PENCIL_TOL,
    eig_tol: float = DEFAULT_EIG_TOL,
) -> float:
    """Oracle for max_k_pencil: bisection on K against the full pencil.

    Feasibility of K is min-eigenvalue(Q - K*G) >= -tol; the bracket starts
    at 4x the largest entry magnitude and widens if it does not straddle.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    p.validate()
    q, g = p.q, p.g

    def feasible(k: float) -> bool:
        return _jacobi_eigenvalues(q - k * g, eig_tol)[0] >= -tol

    bound = 4.0 * max(float(np.max(np.abs(q))), float(np.max(np.abs(g))), 1e-9)
    lo, hi = -bound, bound
    for _ in range(8):
        if feasible(lo):
            break
        lo *= 2.0
    else:
        raise ArithmeticError("bisection could not find a feasible lower bound")
    for _ in range(8):
        if not feasible(hi):
            break
        hi *= 2.0
    else:
        raise ArithmeticError("pencil is feasible for arbitrarily large K")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def max_k_pencil_checked(p: PencilProblem, tol: float = DEFAULT_PENCIL_TOL) -> float:
    """Schur-path answer, cross-checked against the bisection oracle.

    The two routes must agree within 10*tol; disagreement raises, since it
    would mean one of the reductions is wrong for this input.
    """
    schur = max_k_pencil(p, tol)
    bisect = max_k_pencil_bisection(p, tol)
    if abs(schur - bisect) > 10 * tol:
        raise ArithmeticError(
            f"pencil methods disagree: schur={schur!r} bisection={bisect!r}"
        )
    return schur
