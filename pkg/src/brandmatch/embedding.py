"""2-D embedding of the profile space: classical MDS refined by SMACOF.

Classical (Torgerson) scaling double-centers the squared distances,
``B = -1/2 * J * D^2 * J`` with ``J = I - (1/m) * 1 * 1^T``, and reads
coordinates off the top two eigenpairs of B. SMACOF then iterates the
Guttman transform ``X <- (1/m) * B(X) * X``, which never increases the raw
stress ``sigma = sum_{i<j} (dhat_ij - delta_ij)^2``.

Everything here is deterministic: a cyclic Jacobi eigensolver with a fixed
sweep order, a fixed column sign convention, and no randomness, so identical
inputs give bit-identical embeddings.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .errors import (
    AsymmetricInputError,
    DegenerateEmbeddingWarning,
    DimensionMismatchError,
    NonzeroDiagonalError,
)

DEFAULT_MAX_ITER = 300
DEFAULT_TOL = 1e-6
_JACOBI_SWEEP_CAP = 100
_JACOBI_REL_THRESHOLD = 1e-12


@dataclass(frozen=True)
class Embedding2D:
    coordinates: np.ndarray
    row_labels: tuple[str, ...]
    categories: Optional[tuple[Optional[str], ...]]
    stress: float


def _check_distance_matrix(distances: np.ndarray) -> np.ndarray:
    d = np.asarray(distances, dtype=np.float64)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise DimensionMismatchError(f"distance matrix must be square, got {d.shape}")
    if not np.array_equal(d, d.T):
        raise AsymmetricInputError("distance matrix is not symmetric")
    if np.any(np.diag(d) != 0.0):
        raise NonzeroDiagonalError("distance matrix has a nonzero diagonal")
    return d


def _embedded_distances(coordinates: np.ndarray) -> np.ndarray:
    diff = coordinates[:, np.newaxis, :] - coordinates[np.newaxis, :, :]
    return np.sqrt((diff * diff).sum(axis=2))


def stress(distances: np.ndarray, coordinates: np.ndarray) -> float:
    """Raw stress: sum over i<j of squared (embedded minus input) distances."""
    d = np.asarray(distances, dtype=np.float64)
    x = np.asarray(coordinates, dtype=np.float64)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise DimensionMismatchError(f"distance matrix must be square, got {d.shape}")
    if x.ndim != 2 or x.shape[0] != d.shape[0]:
        raise DimensionMismatchError(
            f"coordinates {x.shape} inconsistent with distances {d.shape}")
    residual = _embedded_distances(x) - d
    i_upper, j_upper = np.triu_indices(d.shape[0], k=1)
    return float((residual[i_upper, j_upper] ** 2).sum())


def jacobi_eigh(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns (eigenvalues, eigenvectors) sorted by descending eigenvalue;
    column j of the eigenvector matrix pairs with eigenvalue j. Sweeps run in
    fixed row-major order over the upper triangle until the off-diagonal
    Frobenius norm drops below 1e-12 times the matrix norm (hard cap 100
    sweeps), so the decomposition is deterministic.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise DimensionMismatchError(f"matrix must be square, got {a.shape}")
    v = np.eye(n)
    frobenius = float(np.linalg.norm(a))
    if n > 1 and frobenius > 0.0:
        threshold = _JACOBI_REL_THRESHOLD * frobenius
        upper = np.triu_indices(n, k=1)
        for _ in range(_JACOBI_SWEEP_CAP):
            # summed directly, not as ||A||^2 - ||diag||^2: that difference
            # cancels catastrophically once the off-diagonal part is small
            off_sq = 2.0 * float((a[upper] ** 2).sum())
            if np.sqrt(off_sq) < threshold:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                    sign = 1.0 if tau >= 0.0 else -1.0
                    t = sign / (abs(tau) + np.sqrt(1.0 + tau * tau))
                    c = 1.0 / np.sqrt(1.0 + t * t)
                    s = t * c
                    col_p, col_q = a[:, p].copy(), a[:, q].copy()
                    a[:, p] = c * col_p - s * col_q
                    a[:, q] = s * col_p + c * col_q
                    row_p, row_q = a[p, :].copy(), a[q, :].copy()
                    a[p, :] = c * row_p - s * row_q
                    a[q, :] = s * row_p + c * row_q
                    a[p, q] = a[q, p] = 0.0
                    vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                    v[:, p] = c * vec_p - s * vec_q
                    v[:, q] = s * vec_p + c * vec_q
    eigenvalues = np.diag(a).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    return eigenvalues[order], v[:, order]


def _fix_column_signs(coordinates: np.ndarray) -> np.ndarray:
    # flip each column so its largest-magnitude entry is positive;
    # argmax picks the earliest row on ties
    for j in range(coordinates.shape[1]):
        column = coordinates[:, j]
        lead = int(np.argmax(np.abs(column)))
        if column[lead] < 0.0:
            coordinates[:, j] = -column
    return coordinates


def classical_mds(distances: np.ndarray,
                  row_labels: Optional[Sequence[str]] = None,
                  categories: Optional[Sequence[Optional[str]]] = None) -> Embedding2D:
    """Torgerson scaling of a distance matrix to 2 coordinates.

    Negative leading eigenvalues (non-Euclidean input) clamp to zero and yield
    a zero coordinate column; if both leading eigenvalues are non-positive the
    embedding is all-zero and a DegenerateEmbeddingWarning is issued.
    """
    d = _check_distance_matrix(distances)
    m = d.shape[0]
    if m < 2:
        raise DimensionMismatchError("need at least two points to embed")
    centering = np.eye(m) - np.full((m, m), 1.0 / m)
    b = -0.5 * centering @ (d * d) @ centering
    eigenvalues, eigenvectors = jacobi_eigh(b)
    top_values = eigenvalues[:2]
    top_vectors = eigenvectors[:, :2]
    if np.all(top_values <= 0.0):
        warnings.warn("both leading eigenvalues non-positive; embedding collapsed to zero",
                      DegenerateEmbeddingWarning, stacklevel=2)
    coordinates = top_vectors * np.sqrt(np.clip(top_values, 0.0, None))
    coordinates = _fix_column_signs(coordinates)
    labels = tuple(row_labels) if row_labels is not None else tuple(str(i) for i in range(m))
    cats = tuple(categories) if categories is not None else None
    return Embedding2D(coordinates=coordinates, row_labels=labels, categories=cats,
                       stress=stress(d, coordinates))


def smacof_refine(distances: np.ndarray, initial: Embedding2D,
                  max_iter: int = DEFAULT_MAX_ITER, tol: float = DEFAULT_TOL,
                  return_history: bool = False):
    """Stress majorization from an initial configuration via the Guttman transform.

    Off-diagonal ``b_ij = -delta_ij / dhat_ij`` (0 for coincident points),
    ``b_ii = -sum_{j != i} b_ij``, update ``X <- (1/m) B(X) X``. Stops when the
    relative stress decrease falls below ``tol`` or after ``max_iter``
    iterations; the returned configuration is re-centered. With
    ``return_history`` the per-iteration stress sequence (starting at the
    initial configuration's stress) is returned alongside.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be a positive integer")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    d = _check_distance_matrix(distances)
    m = d.shape[0]
    x = np.array(initial.coordinates, dtype=np.float64, copy=True)
    if x.ndim != 2 or x.shape[0] != m or x.shape[1] != 2:
        raise DimensionMismatchError(
            f"initial configuration {x.shape} inconsistent with {m} x {m} distances")

    previous = stress(d, x)
    history = [previous]
    current = previous
    for _ in range(max_iter):
        embedded = _embedded_distances(x)
        with np.errstate(divide="ignore", invalid="ignore"):
            b = np.where(embedded > 0.0, -d / embedded, 0.0)
        np.fill_diagonal(b, 0.0)
        np.fill_diagonal(b, -b.sum(axis=1))
        x = (b @ x) / m
        current = stress(d, x)
        history.append(current)
        if (previous - current) / max(previous, 1e-12) < tol:
            break
        previous = current

    x = x - x.mean(axis=0)
    refined = replace(initial, coordinates=x, stress=current)
    if return_history:
        return refined, history
    return refined
