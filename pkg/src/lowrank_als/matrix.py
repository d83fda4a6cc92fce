"""Dense matrix kernels: QR, small SVD, least-squares solves, projectors, sampling.

All routines operate on plain numpy arrays (row-major, float64 or complex128).
The adjoint of a matrix is its conjugate transpose throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

# Largest entry count accepted by small_svd (dense decompositions only).
DENSE_SVD_BUDGET = 4096**2

_EPS = float(np.finfo(np.float64).eps)


class RankDeficientError(ValueError):
    """Raised for a rank-deficient least-squares operand when no fallback was requested."""


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Validate ``a`` as a finite 2-d float64/complex128 array and return it C-ordered."""
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {a.shape}")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise ValueError(f"{name} must have positive dimensions, got shape {a.shape}")
    dtype = np.complex128 if np.iscomplexobj(a) else np.float64
    a = np.ascontiguousarray(a, dtype=dtype)
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite entries")
    return a


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def frobenius_norm(a) -> float:
    """Frobenius norm (Euclidean norm for vectors) with compensated block summation.

    Squares of magnitudes are summed pairwise within fixed-size blocks and the
    block partials are combined with Kahan compensation, so the result stays
    accurate for the largest matrices handled here without a Python-level loop
    over every entry.
    """
    flat = np.asarray(a).reshape(-1)
    total = 0.0
    comp = 0.0
    block = 1 << 16
    for start in range(0, flat.size, block):
        chunk = flat[start : start + block]
        if np.iscomplexobj(chunk):
            part = float(np.add.reduce(chunk.real * chunk.real))
            part += float(np.add.reduce(chunk.imag * chunk.imag))
        else:
            part = float(np.add.reduce(chunk * chunk))
        y = part - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return math.sqrt(total)


def gaussian_matrix(rows: int, cols: int, seed: int, field: str = "real") -> np.ndarray:
    """Seeded i.i.d. standard-normal matrix.

    Uses numpy's PCG64 generator with the ziggurat normal transform; identical
    (rows, cols, seed, field) arguments reproduce the output bit for bit.  For
    ``field="complex"`` the real and imaginary parts are each N(0, 1/2) so each
    complex entry has unit variance.
    """
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    if field == "real":
        return rng.standard_normal((rows, cols))
    if field == "complex":
        z = rng.standard_normal((rows, cols, 2))
        return (z[..., 0] + 1j * z[..., 1]) / np.sqrt(2.0)
    raise ValueError(f"field must be 'real' or 'complex', got {field!r}")


@dataclass(frozen=True)
class QrResult:
    """Thin QR factorization: q (m-by-k, orthonormal columns), r (k-by-k, upper
    triangular), and the count of non-negligible diagonal entries of r."""

    q: np.ndarray
    r: np.ndarray
    rank_estimate: int


def _diag_rank(r: np.ndarray, shape: tuple[int, int]) -> int:
    diag = np.abs(np.diagonal(r))
    dmax = diag.max(initial=0.0)
    tol = max(shape) * _EPS * dmax
    return int(np.count_nonzero(diag > tol))


def householder_qr(a) -> QrResult:
    """Thin QR via Householder reflections; requires rows >= cols.

    Rank deficiency is reported through ``rank_estimate`` (diagonal entries of
    r below max(rows, cols) * eps * max|r_ii| count as zero), never raised.
    """
    a = as_matrix(a)
    m, n = a.shape
    if m < n:
        raise ValueError(f"householder_qr needs rows >= cols, got {a.shape}")
    q, r = np.linalg.qr(a, mode="reduced")
    return QrResult(q, r, _diag_rank(r, a.shape))


def _pinv_solve(s: np.ndarray, a: np.ndarray) -> np.ndarray:
    # SVD pseudoinverse with cutoff sigma < max(p, q) * eps * sigma_max.
    u, sig, vh = np.linalg.svd(s, full_matrices=False)
    cutoff = max(s.shape) * _EPS * (float(sig[0]) if sig.size else 0.0)
    inv = np.zeros_like(sig)
    keep = sig > cutoff
    inv[keep] = 1.0 / sig[keep]
    return adjoint(vh) @ (inv[:, None] * (adjoint(u) @ a))


def lstsq_solve(s, a, rank_deficient_ok: bool = False) -> np.ndarray:
    """Return the T minimizing ||S T - A|| in both the spectral and Frobenius norms.

    Computed through the QR factorization of s (back-substitution against R),
    never by forming S*S.  A rank-deficient s raises RankDeficientError unless
    ``rank_deficient_ok`` is set, in which case an SVD-based pseudoinverse with
    the standard cutoff is used instead.
    """
    s = as_matrix(s, "s")
    a = as_matrix(a, "a")
    if s.shape[0] != a.shape[0]:
        raise ValueError(f"incompatible shapes {s.shape} and {a.shape}")
    qr = householder_qr(s)
    if qr.rank_estimate < s.shape[1]:
        if not rank_deficient_ok:
            raise RankDeficientError("rank-deficient least-squares operand")
        return _pinv_solve(s, a)
    rhs = adjoint(qr.q) @ a
    return scipy.linalg.solve_triangular(qr.r, rhs)


def lstsq_solve_right(t, a, rank_deficient_ok: bool = False) -> np.ndarray:
    """Return the S minimizing ||S T - A||; the adjoint problem of lstsq_solve."""
    t = as_matrix(t, "t")
    a = as_matrix(a, "a")
    if t.shape[1] != a.shape[1]:
        raise ValueError(f"incompatible shapes {t.shape} and {a.shape}")
    return adjoint(lstsq_solve(adjoint(t), adjoint(a), rank_deficient_ok))


@dataclass(frozen=True)
class SvdTriplet:
    """Singular value decomposition: u, v with orthonormal columns and sigma
    nonnegative in descending order; the decomposed matrix is u @ diag(sigma) @ v*."""

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray


def small_svd(a, budget: int = DENSE_SVD_BUDGET) -> SvdTriplet:
    """Dense SVD with min(p, q) triplets; refuses inputs above the entry budget."""
    a = as_matrix(a)
    if a.size > budget:
        raise ValueError(f"matrix with {a.size} entries exceeds dense SVD budget {budget}")
    u, sig, vh = np.linalg.svd(a, full_matrices=False)
    return SvdTriplet(u, sig, adjoint(vh))


def spectral_norm(a) -> float:
    """Largest singular value, computed densely (subject to the SVD budget)."""
    return float(small_svd(a).sigma[0])


def numerical_rank(a) -> int:
    """Rank estimate via SVD with cutoff max(p, q) * eps * sigma_max."""
    a = as_matrix(a)
    sig = np.linalg.svd(a, compute_uv=False)
    cutoff = max(a.shape) * _EPS * (float(sig[0]) if sig.size else 0.0)
    if sig.size == 0 or sig[0] == 0.0:
        return 0
    return int(np.count_nonzero(sig > cutoff))


def orthonormal_basis(a) -> np.ndarray:
    """Orthonormal basis of col(a) from rank-revealing (column-pivoted) QR.

    Returns an m-by-r matrix where r is the estimated rank; the zero matrix
    yields an m-by-0 result.
    """
    a = as_matrix(a)
    q, r, _ = scipy.linalg.qr(a, mode="economic", pivoting=True)
    rank = _diag_rank(r, a.shape)
    return q[:, :rank]


def projector(a) -> np.ndarray:
    """Orthogonal projector onto col(a): Q Q* with Q from orthonormal_basis.

    Idempotent and self-adjoint; the zero matrix maps to the zero projector.
    """
    a = as_matrix(a)
    q = orthonormal_basis(a)
    if q.shape[1] == 0:
        return np.zeros((a.shape[0], a.shape[0]), dtype=a.dtype)
    return q @ adjoint(q)
