"""Alternating least squares from a random start.

The iteration alternates two optimal half-steps: with S fixed, T is the least-
squares minimizer of ||S T - A||; with T fixed, S is the minimizer of the same
residual.  A handful of such sweeps from a Gaussian S_0 already yields a nearly
optimal rank-k approximation; no convergence test is performed anywhere.

Two modes are provided.  The default, "stabilized", re-orthonormalizes S after
every S-update; this preserves the column space (which is all the final
approximation depends on) while keeping iterates well conditioned.  "raw"
follows the textbook updates verbatim and exists to exercise the unrolled
recurrence at small iteration counts, where the implicit powers of A A* are
still representable.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

import numpy as np

from . import io
from .matrix import (
    as_matrix,
    frobenius_norm,
    gaussian_matrix,
    lstsq_solve,
    lstsq_solve_right,
    orthonormal_basis,
    small_svd,
    DENSE_SVD_BUDGET,
)
from .spectral import DEFAULT_POWER_SEED, power_method_norm, residual_operator

RAW_ITERATION_CAP = 4


@dataclass(frozen=True)
class AlsConfig:
    rank_k: int
    iterations_j: int
    seed: int
    mode: str = "stabilized"
    track_errors: bool = False
    raw_iteration_cap: int = RAW_ITERATION_CAP
    acknowledge_raw_risk: bool = False
    allow_rank_deficient: bool = False


@dataclass(frozen=True)
class Factorization:
    """Rank-k approximation A ~ s @ t, with the iteration count and seed that
    produced it and, optionally, one Frobenius residual per half-step."""

    s: np.ndarray
    t: np.ndarray
    iterations_j: int
    seed: int
    mode: str = "stabilized"
    frobenius_error_trace: list[float] | None = None


@dataclass
class AlsState:
    a: np.ndarray
    config: AlsConfig
    s: np.ndarray
    t: np.ndarray | None = None
    error_trace: list[float] = field(default_factory=list)


def _validate(config: AlsConfig, shape) -> None:
    m, n = shape
    if not 1 <= config.rank_k <= min(m, n):
        raise ValueError(f"rank_k={config.rank_k} must lie in [1, {min(m, n)}] for shape {shape}")
    if config.iterations_j < 0:
        raise ValueError("iterations_j must be nonnegative")
    if config.mode not in ("stabilized", "raw"):
        raise ValueError(f"unknown mode {config.mode!r}")
    if (
        config.mode == "raw"
        and config.iterations_j > config.raw_iteration_cap
        and not config.acknowledge_raw_risk
    ):
        raise ValueError(
            f"raw mode with iterations_j={config.iterations_j} exceeds the cap "
            f"{config.raw_iteration_cap}; iterates contain high powers of A A* and may "
            "overflow (set acknowledge_raw_risk to proceed)"
        )


def als_init(a, config: AlsConfig) -> AlsState:
    """Draw the random start S_0 (orthonormalized in stabilized mode).

    S_0 = A @ Omega with Omega an i.i.d. standard-normal n-by-k matrix: the
    classical randomized range sketch.  An ambient Gaussian S_0 (not passed
    through A) would make the zero-iteration baseline approximation useless,
    with error near ||A||; sketching through A gives the familiar
    random-projection baseline that the iteration then refines.  Everything
    downstream depends on S_0 only through its column space.
    """
    a = as_matrix(a)
    _validate(config, a.shape)
    fld = "complex" if np.iscomplexobj(a) else "real"
    s0 = a @ gaussian_matrix(a.shape[1], config.rank_k, config.seed, fld)
    if config.mode == "stabilized":
        s0 = orthonormal_basis(s0)
    return AlsState(a=a, config=config, s=s0)


def als_update_t(state: AlsState) -> AlsState:
    """Half-step: T <- argmin ||S T - A||, S fixed."""
    cfg = state.config
    state.t = lstsq_solve(state.s, state.a, rank_deficient_ok=cfg.allow_rank_deficient)
    if cfg.track_errors:
        state.error_trace.append(frobenius_norm(state.s @ state.t - state.a))
    return state


def als_update_s(state: AlsState) -> AlsState:
    """Half-step: S <- argmin ||S T - A||, T fixed (re-orthonormalized when stabilized).

    The tracked residual uses the minimizing S before re-orthonormalization;
    the orthonormal replacement spans the same columns, so the subsequent
    T-update is unaffected.
    """
    cfg = state.config
    s_new = lstsq_solve_right(state.t, state.a, rank_deficient_ok=cfg.allow_rank_deficient)
    if cfg.track_errors:
        state.error_trace.append(frobenius_norm(s_new @ state.t - state.a))
    if cfg.mode == "stabilized":
        s_new = orthonormal_basis(s_new)
    state.s = s_new
    return state


def als_run(a, config: AlsConfig) -> Factorization:
    """Run exactly ``iterations_j`` S-updates and finish with a T-update.

    The output is (S_j, T_j): T is always optimal for the final S.  With
    iterations_j = 0 this is the pure random-projection baseline (S_0, T_0).
    """
    state = als_init(a, config)
    for _ in range(config.iterations_j):
        als_update_t(state)
        als_update_s(state)
    als_update_t(state)
    return Factorization(
        s=state.s,
        t=state.t,
        iterations_j=config.iterations_j,
        seed=config.seed,
        mode=config.mode,
        frobenius_error_trace=list(state.error_trace) if config.track_errors else None,
    )


def approximation_error(
    a,
    factorization: Factorization,
    norm: str = "spectral",
    method: str = "power",
    n_iters: int = 100,
    power_seed: int = DEFAULT_POWER_SEED,
) -> float:
    """Norm of A - S T.

    The spectral norm is measured by the power method (default 100 iterations)
    or, with method="exact", densely via SVD when the residual fits the dense
    budget.  The Frobenius norm is computed directly.
    """
    a = as_matrix(a)
    s, t = factorization.s, factorization.t
    if a.shape != (s.shape[0], t.shape[1]):
        raise ValueError(f"factorization shape {(s.shape[0], t.shape[1])} does not match {a.shape}")
    if norm == "frobenius":
        return frobenius_norm(a - s @ t)
    if norm != "spectral":
        raise ValueError(f"unknown norm {norm!r}")
    if method == "exact":
        if a.size > DENSE_SVD_BUDGET:
            raise ValueError("residual exceeds the dense SVD budget; use method='power'")
        return float(small_svd(a - s @ t).sigma[0])
    if method != "power":
        raise ValueError(f"unknown method {method!r}")
    return power_method_norm(residual_operator(a, s, t), n_iters=n_iters, seed=power_seed)


def save_factorization(directory, factorization: Factorization) -> None:
    """Write S and T in the binary matrix format plus a JSON sidecar."""
    os.makedirs(directory, exist_ok=True)
    io.save_matrix(os.path.join(directory, "s.alsm"), factorization.s)
    io.save_matrix(os.path.join(directory, "t.alsm"), factorization.t)
    meta = {
        "rank_k": int(factorization.s.shape[1]),
        "iterations_j": int(factorization.iterations_j),
        "seed": int(factorization.seed),
        "mode": factorization.mode,
        "error_trace": factorization.frobenius_error_trace,
    }
    with open(os.path.join(directory, "factorization.json"), "w") as f:
        json.dump(meta, f, indent=2)


def load_factorization(directory) -> Factorization:
    s = io.load_matrix(os.path.join(directory, "s.alsm"))
    t = io.load_matrix(os.path.join(directory, "t.alsm"))
    with open(os.path.join(directory, "factorization.json")) as f:
        meta = json.load(f)
    return Factorization(
        s=s,
        t=t,
        iterations_j=meta["iterations_j"],
        seed=meta["seed"],
        mode=meta.get("mode", "stabilized"),
        frobenius_error_trace=meta.get("error_trace"),
    )
