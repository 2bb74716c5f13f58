"""Dense complex matrix substrate: Hermitian eigendecompositions, functional
calculus, absolute values, SVD-based polar decompositions and operator norms.

All functions take and return plain ``numpy`` arrays (square, complex128).
Eigenvector phases are never canonicalized; every guarantee is phrased through
reconstructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NotHermitian, NumericalFailure
from .tolerance import DEFAULT_TOL, ToleranceConfig

__all__ = [
    "HermitianEig",
    "PolarDecomposition",
    "as_square_matrix",
    "herm_eig",
    "apply_function",
    "abs_value",
    "polar",
    "op_norm",
    "range_projection",
]


@dataclass(frozen=True)
class HermitianEig:
    """Eigenvalues (real, ascending) and unitary eigenvector matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class PolarDecomposition:
    """a = partial_isometry @ absolute_value, with the rank used for the cut."""

    partial_isometry: np.ndarray
    absolute_value: np.ndarray
    rank: int


def as_square_matrix(a: np.ndarray) -> np.ndarray:
    """Validate and coerce to a finite square complex128 array."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise ValueError("matrix entries must be finite")
    return a


def op_norm(a: np.ndarray) -> float:
    """Largest singular value."""
    a = as_square_matrix(a)
    try:
        return float(np.linalg.norm(a, 2))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NumericalFailure("SVD did not converge in op_norm") from exc


def _herm_gap(a: np.ndarray) -> float:
    return op_norm(a - a.conj().T)


def herm_eig(a: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises NotHermitian when |a - a*| exceeds tol.herm * max(1, |a|).
    """
    a = as_square_matrix(a)
    scale = max(1.0, op_norm(a))
    if _herm_gap(a) > tol.herm * scale:
        raise NotHermitian(f"matrix is not Hermitian within {tol.herm:g}")
    try:
        w, v = np.linalg.eigh((a + a.conj().T) / 2.0)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure("eigensolver did not converge") from exc
    return HermitianEig(w, v)


def apply_function(
    a: np.ndarray,
    f: Callable[[np.ndarray], np.ndarray],
    tol: ToleranceConfig = DEFAULT_TOL,
) -> np.ndarray:
    """Functional calculus f(a) = V diag(f(lambda)) V* for Hermitian a.

    ``f`` is applied to the real eigenvalue vector (vectorized callables are
    fine); the result is re-Hermitized to kill roundoff asymmetry.
    """
    eig = herm_eig(a, tol)
    fw = np.asarray(f(eig.eigenvalues), dtype=np.float64)
    out = (eig.eigenvectors * fw) @ eig.eigenvectors.conj().T
    return (out + out.conj().T) / 2.0


def abs_value(a: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """|a| = (a* a)^(1/2), positive semidefinite.

    Computed through the Hermitian eigendecomposition of a*a. Eigenvalues are
    clamped to 0 from below, and eigenvalues under a relative noise floor
    (64 n eps lambda_max) are zeroed outright: squaring turns O(eps) roundoff
    into O(sqrt(eps)) errors after the square root otherwise.
    """
    a = as_square_matrix(a)
    gram = a.conj().T @ a
    try:
        w, v = np.linalg.eigh((gram + gram.conj().T) / 2.0)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure("eigensolver did not converge in abs_value") from exc
    floor = 64.0 * a.shape[0] * np.finfo(np.float64).eps * max(float(w[-1]), 0.0)
    w = np.where(w > floor, w, 0.0)
    out = (v * np.sqrt(w)) @ v.conj().T
    return (out + out.conj().T) / 2.0


def polar(
    a: np.ndarray,
    rank_tol: float | None = None,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> PolarDecomposition:
    """Polar decomposition a = u |a| with an SVD-based rank cut.

    Singular values below rank_tol * sigma_max are treated as zero; u is the
    sum of the surviving rank-one terms (left vec)(right vec)*, so u u* u = u
    and u* u is the range projection of |a|.
    """
    a = as_square_matrix(a)
    if rank_tol is None:
        rank_tol = tol.rank
    if rank_tol <= 0:
        raise ValueError("rank_tol must be positive")
    try:
        left, sigma, right_h = np.linalg.svd(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure("SVD did not converge in polar") from exc
    cut = rank_tol * (sigma[0] if sigma.size else 0.0)
    keep = sigma > cut
    rank = int(np.count_nonzero(keep))
    u = left[:, keep] @ right_h[keep, :]
    absval = (right_h.conj().T * sigma) @ right_h
    absval = (absval + absval.conj().T) / 2.0
    return PolarDecomposition(u, absval, rank)


def range_projection(
    a: np.ndarray,
    rank_tol: float | None = None,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> np.ndarray:
    """Smallest projection r with r a = a: the projection onto the column
    space of a, at the same rank cut as ``polar``."""
    a = as_square_matrix(a)
    if rank_tol is None:
        rank_tol = tol.rank
    try:
        left, sigma, _ = np.linalg.svd(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure("SVD did not converge in range_projection") from exc
    cut = rank_tol * (sigma[0] if sigma.size else 0.0)
    cols = left[:, sigma > cut]
    r = cols @ cols.conj().T
    return (r + r.conj().T) / 2.0
