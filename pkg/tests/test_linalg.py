import random

import numpy as np
import pytest

from curvkit.linalg import (
    PencilProblem,
    SymmetricMatrix,
    constant_complement_basis,
    max_k_pencil,
    max_k_pencil_bisection,
    max_k_pencil_checked,
    symmetric_eigenvalues,
)


def test_diagonal_matrix():
    assert symmetric_eigenvalues([[5, 0, 0], [0, 1, 0], [0, 0, 3]]) == [1, 3, 5]


def test_analytic_2x2():
    eigs = symmetric_eigenvalues([[2, 1], [1, 2]])
    assert abs(eigs[0] - 1) < 1e-12 and abs(eigs[1] - 3) < 1e-12


def test_k4_laplacian_spectrum():
    lap = [
        [3, -1, -1, -1],
        [-1, 3, -1, -1],
        [-1, -1, 3, -1],
        [-1, -1, -1, 3],
    ]
    eigs = symmetric_eigenvalues(lap)
    assert np.allclose(eigs, [0, 4, 4, 4], atol=1e-10)


def test_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        symmetric_eigenvalues([[0, 1], [2, 0]])


def test_trace_and_determinant_on_random_matrices():
    rng = np.random.default_rng(3)
    for _ in range(20):
        a = rng.normal(size=(8, 8))
        a = (a + a.T) / 2
        eigs = symmetric_eigenvalues(a, 1e-12)
        assert abs(sum(eigs) - np.trace(a)) < 1e-9
        det = np.linalg.det(a)
        prod = float(np.prod(eigs))
        assert abs(prod - det) < 1e-6 * max(1.0, abs(det))


def test_agrees_with_numpy_eigvalsh():
    rng = np.random.default_rng(17)
    for n in (2, 3, 5, 9, 12):
        a = rng.normal(size=(n, n))
        a = (a + a.T) / 2
        mine = symmetric_eigenvalues(a)
        ref = np.linalg.eigvalsh(a)
        assert np.allclose(mine, ref, atol=1e-9)


def test_symmetric_matrix_wrapper():
    m = SymmetricMatrix.from_rows([[2, 1], [1, 2]], mode="exact")
    assert m.dimension == 2
    assert m.quadratic_form([1, 1]) == 6
    with pytest.raises(ValueError):
        SymmetricMatrix.from_rows([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        SymmetricMatrix.from_rows([[0, 1]])


def test_constant_complement_basis_properties():
    for k in (2, 3, 7):
        u = constant_complement_basis(k)
        assert u.shape == (k, k - 1)
        assert np.allclose(u.T @ u, np.eye(k - 1), atol=1e-12)
        assert np.allclose(u.T @ np.ones(k), 0, atol=1e-12)


def _pencil(q, g, b1):
    return PencilProblem(q=np.array(q, dtype=float), g=np.array(g, dtype=float), b1_size=b1)


def _star_gamma(d):
    # one-ball form of a degree-d vertex: diag(d,1,..,1)/2 with -1/2 couplings
    g = np.zeros((d + 1, d + 1))
    g[0, 0] = d / 2
    for i in range(1, d + 1):
        g[0, i] = g[i, 0] = -0.5
        g[i, i] = 0.5
    return g


def test_identical_pencil_gives_one():
    g = _star_gamma(3)
    p = _pencil(g, g, 4)
    assert abs(max_k_pencil(p) - 1.0) < 1e-9
    assert abs(max_k_pencil_bisection(p) - 1.0) < 1e-8


def test_zero_q_gives_zero():
    g = _star_gamma(2)
    p = _pencil(np.zeros((3, 3)), g, 3)
    assert abs(max_k_pencil(p)) < 1e-9
    assert abs(max_k_pencil_bisection(p)) < 1e-8


def test_scaled_pencil():
    g = _star_gamma(3)
    p = _pencil(2.5 * g, g, 4)
    assert abs(max_k_pencil(p) - 2.5) < 1e-9


def test_pencil_with_trailing_block():
    # Q has an extra positive-diagonal trailing index coupled to the block;
    # eliminating it must match the bisection oracle.
    g4 = _star_gamma(3)
    q = np.zeros((5, 5))
    q[:4, :4] = 4 * g4
    q[4, 4] = 2.0
    # couple trailing index to vertices 1 and 2, keeping row sums zero
    q[4, 1] = q[1, 4] = -1.0
    q[4, 2] = q[2, 4] = -1.0
    q[1, 1] += 0.5
    q[2, 2] += 0.5
    q[1, 2] = q[2, 1] = q[1, 2]
    # fix constant-vector annihilation: adjust diagonal
    ones = np.ones(5)
    r = q @ ones
    for i in range(5):
        q[i, i] -= r[i]
    g = np.zeros((5, 5))
    g[:4, :4] = g4
    p = _pencil(q, g, 4)
    a = max_k_pencil(p)
    b = max_k_pencil_bisection(p)
    assert abs(a - b) < 1e-6
    assert abs(max_k_pencil_checked(p) - a) < 1e-12


def test_pencil_validation_errors():
    g = _star_gamma(2)
    with pytest.raises(ValueError):
        _pencil(np.eye(3), g, 3).validate()  # Q 1 != 0
    q = np.zeros((4, 4))
    q[3, 3] = 0.0  # trailing block not positive
    q[0, 0] = 1.0
    q[0, 1] = q[1, 0] = -1.0
    q[1, 1] = 1.0
    with pytest.raises(ValueError):
        p = PencilProblem(q=q, g=np.zeros((4, 4)), b1_size=3)
        p.validate()


def test_pencil_monotone_in_subtracted_psd_term():
    # subtracting a PSD rank-one term from Q can only shrink the best K
    g = _star_gamma(3)
    lap_row = np.array([-3.0, 1.0, 1.0, 1.0])
    q0 = 4 * g
    results = []
    for w in (0.0, 0.5, 1.0):
        q = q0 - w * np.outer(lap_row, lap_row)
        results.append(max_k_pencil(_pencil(q, g, 4)))
    assert results[0] >= results[1] - 1e-9 >= results[2] - 2e-9


def test_bisection_matches_schur_on_random_pencils():
    rng = random.Random(8)
    nprng = np.random.default_rng(8)
    for _ in range(10):
        b = rng.randint(2, 5)
        m = b + rng.randint(0, 3)
        g_b = np.zeros((b, b))
        # random PSD with kernel exactly the constants: Laplacian of a random
        # connected graph on b vertices
        edges = {(i, i + 1) for i in range(b - 1)}
        for _ in range(b):
            i, j = sorted(rng.sample(range(b), 2)) if b > 1 else (0, 0)
            if i != j:
                edges.add((i, j))
        for i, j in edges:
            g_b[i, j] = g_b[j, i] = -1.0
        for i in range(b):
            g_b[i, i] = -np.sum(g_b[i, :]) - g_b[i, i]
        g = np.zeros((m, m))
        g[:b, :b] = g_b
        # Q: random symmetric annihilating constants, positive diagonal tail
        q = nprng.normal(size=(m, m))
        q = (q + q.T) / 2
        q[b:, :] = 0.0
        q[:, b:] = 0.0
        for t in range(b, m):
            q[t, t] = rng.uniform(0.5, 2.0)
            for i in range(b):
                w = rng.uniform(0.0, 1.0)
                q[t, i] = q[i, t] = -w
        ones = np.ones(m)
        r = q @ ones
        for i in range(m):
            q[i, i] -= r[i]
        tail = np.diag(q[b:, b:]).copy() if m > b else None
        p = _pencil(q, g, b)
        try:
            p.validate()
        except ValueError:
            continue  # tail diagonal went nonpositive; skip this draw
        a = max_k_pencil(p)
        o = max_k_pencil_bisection(p)
        assert abs(a - o) < 1e-6
