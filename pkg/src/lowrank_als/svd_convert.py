"""Conversion of a rank-k factorization S T into singular value decomposition form."""

from __future__ import annotations

import json
import os

import numpy as np

from . import io
from .matrix import SvdTriplet, adjoint, as_matrix, householder_qr, small_svd


def factorization_to_svd(s, t) -> SvdTriplet:
    """SVD of the product S T without ever forming an m-by-n matrix.

    QR of s gives (Q, R); the small SVD of R t gives (U~, sigma, V); the result
    is (Q U~, sigma, V).  Cost is O((m + n) k^2 + k^3).  A rank-deficient s is
    fine: the trailing singular values come out (numerically) zero.

    Singular vectors are phase-canonicalized: the largest-magnitude entry of
    each column of U is made real and positive, with the matching phase applied
    to V so the product is unchanged.
    """
    s = as_matrix(s, "s")
    t = as_matrix(t, "t")
    if s.shape[1] != t.shape[0]:
        raise ValueError(f"incompatible shapes {s.shape} and {t.shape}")
    k = s.shape[1]
    if k > min(s.shape[0], t.shape[1]):
        raise ValueError("inner dimension k must not exceed min(m, n)")
    qr = householder_qr(s)
    inner = small_svd(qr.r @ t)
    u = qr.q @ inner.u
    v = inner.v
    u, v = _canonicalize_phases(u, v)
    return SvdTriplet(u, inner.sigma, v)


def _canonicalize_phases(u: np.ndarray, v: np.ndarray):
    u = u.copy()
    v = v.copy()
    for col in range(u.shape[1]):
        idx = int(np.argmax(np.abs(u[:, col])))
        pivot = u[idx, col]
        mag = abs(pivot)
        if mag == 0.0:
            continue
        # u sigma v* is invariant under (u, v) -> (u / phase, v / phase).
        phase = pivot / mag
        u[:, col] = u[:, col] / phase
        v[:, col] = v[:, col] / phase
    return u, v


def save_svd_triplet(directory, triplet: SvdTriplet) -> None:
    """Write U, sigma, V as binary matrices plus a JSON sidecar with sigma."""
    os.makedirs(directory, exist_ok=True)
    io.save_matrix(os.path.join(directory, "u.alsm"), triplet.u)
    io.save_matrix(os.path.join(directory, "sigma.alsm"), np.asarray(triplet.sigma)[:, None])
    io.save_matrix(os.path.join(directory, "v.alsm"), triplet.v)
    with open(os.path.join(directory, "svd.json"), "w") as f:
        json.dump({"sigma": [float(x) for x in triplet.sigma]}, f, indent=2)


def load_svd_triplet(directory) -> SvdTriplet:
    u = io.load_matrix(os.path.join(directory, "u.alsm"))
    sigma = io.load_matrix(os.path.join(directory, "sigma.alsm"))[:, 0]
    v = io.load_matrix(os.path.join(directory, "v.alsm"))
    return SvdTriplet(u, np.real(sigma), v)
