"""Synthetic benchmark matrices with a prescribed singular spectrum.

A = F Sigma G where F and G are unitary (discrete Fourier transforms by
default, seeded real orthogonal matrices as a real-arithmetic alternative) and
Sigma is rectangular diagonal.  The spectrum has a geometric "head" decaying
from 1 down to delta over the first k values (two values per exponent step)
and a linear "tail" decaying from delta down to 0, so the best achievable
rank-k spectral error is exactly delta and the spectral norm of A is 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .matrix import gaussian_matrix

# Default cap on the working set of build_test_matrix, in bytes.
MEMORY_BUDGET = 4 << 30


class MemoryBudgetError(ValueError):
    def __init__(self, required: int, budget: int):
        self.required_bytes = required
        self.budget_bytes = budget
        super().__init__(
            f"test matrix needs ~{required} bytes, over the budget of {budget} bytes"
        )


@dataclass(frozen=True)
class TestMatrixSpec:
    __test__ = False  # not a pytest class, despite the name

    m: int
    n: int
    k: int
    delta: float
    transform: str = "dft"
    seed: int = 0  # used only by the real_orthogonal transform

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")
        if self.k < 2 or self.k % 2 != 0:
            raise ValueError(f"k must be even and >= 2, got {self.k}")
        # The tail formula divides by min(m, n) - k - 1.
        if self.k >= min(self.m, self.n) - 1:
            raise ValueError(f"k={self.k} must be < min(m, n) - 1 = {min(self.m, self.n) - 1}")
        if not 0.0 < self.delta < 1.0:
            raise ValueError(f"delta must lie in (0, 1), got {self.delta}")
        if self.transform not in ("dft", "real_orthogonal"):
            raise ValueError(f"unknown transform {self.transform!r}")

    def to_json(self) -> str:
        return json.dumps(
            {
                "m": self.m,
                "n": self.n,
                "k": self.k,
                "delta": self.delta,
                "transform": self.transform,
                "seed": self.seed,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "TestMatrixSpec":
        return cls(**json.loads(text))


def sigma_spectrum(spec: TestMatrixSpec) -> np.ndarray:
    """The min(m, n) prescribed singular values, 1-based index convention.

    Head (i = 1..k): delta ** (floor(i/2) / (k/2)), so sigma_1 = 1 and
    sigma_k = delta.  Tail (i = k+1..min(m, n)):
    delta * (min(m, n) - i) / (min(m, n) - k - 1), so sigma_{k+1} = delta and
    the last value is 0.
    """
    r = min(spec.m, spec.n)
    i = np.arange(1, r + 1)
    head = spec.delta ** ((i[: spec.k] // 2) / (spec.k / 2))
    tail = spec.delta * (r - i[spec.k :]) / (r - spec.k - 1)
    return np.concatenate([head, tail])


def _dft_block(n: int, rows: np.ndarray) -> np.ndarray:
    # Rows of the unitary n-point DFT (minus-sign exponent convention).
    q = np.arange(n)
    return np.exp((-2j * np.pi / n) * np.outer(rows, q)) / np.sqrt(n)


def dft_matrix(n: int) -> np.ndarray:
    """Unitary discrete Fourier transform: entry (p, q) = exp(-2 pi i p q / n) / sqrt(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _dft_block(n, np.arange(n))


def real_orthogonal_matrix(n: int, seed: int) -> np.ndarray:
    """Orthogonal matrix from the QR factorization of a seeded Gaussian."""
    if n < 1:
        raise ValueError("n must be >= 1")
    q, _ = np.linalg.qr(gaussian_matrix(n, n, seed, "real"))
    return q


def build_test_matrix(spec: TestMatrixSpec, memory_budget: int = MEMORY_BUDGET) -> np.ndarray:
    """Materialize A = F Sigma G densely (no FFT shortcuts).

    Only the first min(m, n) columns of F and rows of G contribute, so just
    those blocks are formed.  Singular values of the result equal
    sigma_spectrum(spec) by unitary invariance.
    """
    m, n = spec.m, spec.n
    r = min(m, n)
    itemsize = 16 if spec.transform == "dft" else 8
    required = (m * r + 2 * r * n + m * n) * itemsize
    if required > memory_budget:
        raise MemoryBudgetError(required, memory_budget)
    sig = sigma_spectrum(spec)
    if spec.transform == "dft":
        # The DFT is symmetric, so its first r columns are the transpose of
        # its first r rows.
        f_cols = _dft_block(m, np.arange(r)).T
        g_rows = _dft_block(n, np.arange(r))
    else:
        f_cols = real_orthogonal_matrix(m, spec.seed)[:, :r]
        g_rows = real_orthogonal_matrix(n, spec.seed + 1)[:r, :]
    return f_cols @ (sig[:, None] * g_rows)
