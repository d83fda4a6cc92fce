"""Numerical verification suites for the theory behind the ALS iteration.

Each check runs on small random instances and returns a VerificationResult;
run_all drives the full collection.  These back the --verify flag of the
benchmark CLI and the acceptance tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .als import AlsConfig, als_init, als_update_s, als_update_t
from .matrix import (
    adjoint,
    frobenius_norm,
    gaussian_matrix,
    lstsq_solve,
    lstsq_solve_right,
    numerical_rank,
    projector,
    small_svd,
)
from .spectral import dense_operator, power_method_norm
from .testmat import real_orthogonal_matrix


@dataclass(frozen=True)
class VerificationResult:
    name: str
    passed: bool
    detail: str


def check_column_space_theorem(instances: int = 20, max_power: int = 3, tol: float = 1e-8):
    """col(S_i) must match col((A A*)^i S_0), compared through orthogonal projectors.

    The power-iterate reference is rescaled to unit Frobenius norm after each
    application of A A* to dodge overflow/underflow.
    """
    worst = 0.0
    for idx in range(instances):
        a = gaussian_matrix(8, 6, seed=1000 + idx)
        cfg = AlsConfig(rank_k=2, iterations_j=max_power, seed=idx, mode="stabilized")
        state = als_init(a, cfg)
        reference = state.s.copy()
        aat = a @ adjoint(a)
        for _ in range(max_power):
            als_update_t(state)
            als_update_s(state)
            reference = aat @ reference
            reference = reference / frobenius_norm(reference)
            dist = frobenius_norm(projector(state.s) - projector(reference))
            worst = max(worst, dist)
    return VerificationResult(
        "column-space theorem",
        worst <= tol,
        f"max projector distance {worst:.3e} (tol {tol:.0e})",
    )


def _rank_chain(a: np.ndarray, k: int, seed: int) -> list[int]:
    s0 = gaussian_matrix(a.shape[0], k, seed)
    t0 = lstsq_solve(s0, a, rank_deficient_ok=True)
    s1 = lstsq_solve_right(t0, a, rank_deficient_ok=True)
    t1 = lstsq_solve(s1, a, rank_deficient_ok=True)
    s2 = lstsq_solve_right(t1, a, rank_deficient_ok=True)
    chain = [
        adjoint(s0) @ a,
        t0,
        a @ adjoint(t0),
        s1,
        adjoint(s1) @ a,
        t1,
        a @ adjoint(t1),
        s2,
    ]
    return [numerical_rank(x) for x in chain]


def check_rank_chain(random_instances: int = 20, deficient_instances: int = 5):
    """The ranks of S_0* A, T_0, A T_0*, S_1, S_1* A, T_1, A T_1*, S_2 all agree."""
    bad = []
    for idx in range(random_instances):
        a = gaussian_matrix(8, 6, seed=2000 + idx)
        ranks = _rank_chain(a, k=2, seed=idx)
        if len(set(ranks)) != 1 or ranks[0] != 2:
            bad.append((idx, ranks))
    for idx in range(deficient_instances):
        # rank(A) = k - 1: the chain settles at k - 1, via the pseudoinverse fallback.
        k = 3
        g = gaussian_matrix(8, k - 1, seed=3000 + idx)
        h = gaussian_matrix(k - 1, 6, seed=3100 + idx)
        ranks = _rank_chain(g @ h, k=k, seed=idx)
        if len(set(ranks)) != 1 or ranks[0] != k - 1:
            bad.append((("deficient", idx), ranks))
    return VerificationResult(
        "rank chain",
        not bad,
        "all chains equal" if not bad else f"mismatches: {bad}",
    )


def _conditioned_instance(m: int, n: int, seed: int, condition: float = 10.0) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(seed))
    r = min(m, n)
    d = np.sort(rng.uniform(1.0 / condition, 1.0, size=r))[::-1]
    d[0] = 1.0
    u = real_orthogonal_matrix(m, seed + 7)
    v = real_orthogonal_matrix(n, seed + 13)
    return u[:, :r] @ (d[:, None] * v[:r, :])


def check_unrolled_recurrence(instances: int = 20, max_power: int = 3, tol: float = 1e-8):
    """Raw iterates satisfy S_i = (A A*)^i S_0 B_0 ... B_{i-1} with
    B_i = (S_i* A A* S_i)^{-1} S_i* S_i, on condition-bounded instances."""
    worst = 0.0
    for idx in range(instances):
        a = _conditioned_instance(8, 6, seed=4000 + idx)
        aat = a @ adjoint(a)
        cfg = AlsConfig(rank_k=2, iterations_j=max_power, seed=idx, mode="raw")
        state = als_init(a, cfg)
        s_raw = [state.s.copy()]
        for _ in range(max_power):
            als_update_t(state)
            als_update_s(state)
            s_raw.append(state.s.copy())
        product = np.eye(2)
        power = s_raw[0]
        for i in range(1, max_power + 1):
            s_prev = s_raw[i - 1]
            b_prev = np.linalg.solve(adjoint(s_prev) @ aat @ s_prev, adjoint(s_prev) @ s_prev)
            product = product @ b_prev
            power = aat @ power
            rhs = power @ product
            rel = frobenius_norm(s_raw[i] - rhs) / frobenius_norm(s_raw[i])
            worst = max(worst, rel)
    return VerificationResult(
        "unrolled recurrence",
        worst <= tol,
        f"max relative deviation {worst:.3e} (tol {tol:.0e})",
    )


def check_minimizer_optimality(instances: int = 20, perturbations: int = 100):
    """lstsq_solve beats every perturbed T in both the Frobenius and spectral norms."""
    slack_hits = 0
    worst = -np.inf
    for idx in range(instances):
        s = gaussian_matrix(6, 2, seed=5000 + idx)
        a = gaussian_matrix(6, 5, seed=5100 + idx)
        t_opt = lstsq_solve(s, a)
        base_f = frobenius_norm(s @ t_opt - a)
        base_s = float(small_svd(s @ t_opt - a).sigma[0])
        norm_f = frobenius_norm(a)
        norm_s = float(small_svd(a).sigma[0])
        rng = np.random.Generator(np.random.PCG64(6000 + idx))
        for _ in range(perturbations):
            scale = 10.0 ** rng.uniform(-8, 2)
            t_pert = t_opt + scale * rng.standard_normal(t_opt.shape)
            resid = s @ t_pert - a
            loss_f = base_f - frobenius_norm(resid)
            loss_s = base_s - float(small_svd(resid).sigma[0])
            worst = max(worst, loss_f / norm_f, loss_s / norm_s)
            if loss_f > 1e-12 * norm_f or loss_s > 1e-12 * norm_s:
                slack_hits += 1
    return VerificationResult(
        "least-squares minimizer",
        slack_hits == 0,
        f"worst relative win by a perturbation {worst:.3e} (allowed 1e-12)",
    )


def check_power_method(n_operators: int = 50, n_iters: int = 100):
    """Power-method estimate is a lower bound on sigma_1 and converges when gapped."""
    bad = []
    rng = np.random.Generator(np.random.PCG64(7000))
    for idx in range(n_operators):
        p = int(rng.integers(2, 65))
        q = int(rng.integers(2, 65))
        if idx % 5 == 0:
            # Constructed gap: sigma_2 / sigma_1 <= 0.9 guaranteed.
            r = min(p, q)
            d = np.concatenate([[1.0], rng.uniform(0.0, 0.9, size=r - 1)])
            u = real_orthogonal_matrix(p, 7100 + idx)
            v = real_orthogonal_matrix(q, 7200 + idx)
            a = u[:, :r] @ (np.sort(d)[::-1][:, None] * v[:r, :])
        else:
            a = gaussian_matrix(p, q, seed=7300 + idx)
        sig = small_svd(a).sigma
        est = power_method_norm(dense_operator(a), n_iters=n_iters, seed=idx)
        if est > sig[0] * (1.0 + 1e-12):
            bad.append((idx, "upper", est, float(sig[0])))
        if sig.size > 1 and sig[0] > 0 and sig[1] <= 0.9 * sig[0]:
            if abs(est - sig[0]) > 1e-8 * sig[0]:
                bad.append((idx, "gap", est, float(sig[0])))
    return VerificationResult(
        "power-method contract",
        not bad,
        "all bounds held" if not bad else f"violations: {bad}",
    )


def run_all() -> list[VerificationResult]:
    return [
        check_column_space_theorem(),
        check_rank_chain(),
        check_unrolled_recurrence(),
        check_minimizer_optimality(),
        check_power_method(),
    ]
