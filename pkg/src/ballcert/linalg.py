"""Dense linear algebra for desk-scale systems (n <= 50).

LU with partial pivoting and a power-iteration operator norm are written
out explicitly so the singularity rule (pivot below 1e-13 times the
original row norm) and the norm algorithm are pinned down rather than
inherited from a backend.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularMatrixError

__all__ = ["LUFactorization", "lu_factor", "solve_linear", "operator_norm",
           "operator_norm_batch"]

PIVOT_RTOL = 1e-13


@dataclass(frozen=True)
class LUFactorization:
    """Combined L\\U storage with the row permutation already applied."""

    lu: np.ndarray
    perm: np.ndarray

    def solve(self, b: np.ndarray) -> np.ndarray:
        lu, perm = self.lu, self.perm
        n = lu.shape[0]
        x = np.asarray(b, dtype=float)[perm].copy()
        for k in range(1, n):            # forward substitution, unit lower
            x[k] -= lu[k, :k] @ x[:k]
        for k in range(n - 1, -1, -1):   # back substitution
            x[k] = (x[k] - lu[k, k + 1:] @ x[k + 1:]) / lu[k, k]
        return x

    def solve_matrix(self, B: np.ndarray) -> np.ndarray:
        return np.column_stack([self.solve(B[:, j]) for j in range(B.shape[1])])


def lu_factor(a: np.ndarray) -> LUFactorization:
    """Factor ``a`` as P a = L U with partial pivoting.

    Raises SingularMatrixError when the selected pivot is smaller than
    1e-13 times the infinity norm of the original row it came from.
    """
    lu = np.array(a, dtype=float)
    if lu.ndim != 2 or lu.shape[0] != lu.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(lu)):
        raise ValueError("matrix entries must be finite")
    n = lu.shape[0]
    row_scale = np.max(np.abs(lu), axis=1)
    if np.any(row_scale == 0.0):
        raise SingularMatrixError("matrix has a zero row")
    perm = np.arange(n)
    for k in range(n - 1 if n > 1 else 1):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if abs(lu[p, k]) < PIVOT_RTOL * row_scale[p]:
            raise SingularMatrixError(
                f"pivot {lu[p, k]:.3e} below threshold at column {k}"
            )
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            row_scale[[k, p]] = row_scale[[p, k]]
            perm[[k, p]] = perm[[p, k]]
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    if abs(lu[n - 1, n - 1]) < PIVOT_RTOL * row_scale[n - 1]:
        raise SingularMatrixError(f"pivot below threshold at column {n - 1}")
    return LUFactorization(lu=lu, perm=perm)


def solve_linear(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve a x = b by LU with partial pivoting."""
    return lu_factor(a).solve(b)


def _start_vector(n: int) -> np.ndarray:
    # Deterministic and never orthogonal to a coordinate-aligned top
    # eigenvector for small n.
    v = 1.0 + 0.123 * np.arange(n)
    return v / np.linalg.norm(v)


def operator_norm(g: np.ndarray, rel_tol: float = 1e-10, max_iter: int = 500) -> float:
    """Euclidean operator norm via power iteration on G^T G."""
    g = np.asarray(g, dtype=float)
    if g.size == 1:
        return abs(float(g.reshape(())))
    b = g.T @ g
    v = _start_vector(b.shape[0])
    sigma = 0.0
    for _ in range(max_iter):
        w = b @ v
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
        new = float(np.sqrt(v @ (b @ v)))
        if abs(new - sigma) <= rel_tol * max(new, 1e-300):
            return new
        sigma = new
    return sigma


def operator_norm_batch(gs: np.ndarray, rel_tol: float = 1e-10,
                        max_iter: int = 500) -> np.ndarray:
    """Power-iteration operator norm over a stack of matrices (m, n, n)."""
    gs = np.asarray(gs, dtype=float)
    m, n = gs.shape[0], gs.shape[1]
    if n == 1:
        return np.abs(gs[:, 0, 0])
    b = np.einsum("mji,mjk->mik", gs, gs)
    v = np.broadcast_to(_start_vector(n), (m, n)).copy()
    sigma = np.zeros(m)
    active = np.ones(m, dtype=bool)
    for _ in range(max_iter):
        w = np.einsum("mik,mk->mi", b[active], v[active])
        nw = np.linalg.norm(w, axis=1)
        zero = nw == 0.0
        nw[zero] = 1.0
        v_act = w / nw[:, None]
        new = np.sqrt(np.einsum("mi,mik,mk->m", v_act, b[active], v_act))
        new[zero] = 0.0
        idx = np.flatnonzero(active)
        conv = np.abs(new - sigma[idx]) <= rel_tol * np.maximum(new, 1e-300)
        v[idx] = v_act
        sigma[idx] = new
        active[idx[conv | zero]] = False
        if not active.any():
            break
    return sigma
