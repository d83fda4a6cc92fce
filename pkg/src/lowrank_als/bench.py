"""Benchmark harness: accuracy/timing tables for ALS low-rank approximation.

Each record is one table row (j, k, delta, epsilon, t): epsilon is the
spectral-norm error of the computed approximation measured by 100 power-method
iterations, and t_seconds times the ALS run only (matrix generation and error
measurement excluded).
"""

from __future__ import annotations

import json
import statistics
import time
from dataclasses import dataclass

from .als import AlsConfig, als_run
from .spectral import DEFAULT_POWER_SEED, power_method_norm, residual_operator
from .testmat import TestMatrixSpec, build_test_matrix

POWER_ITERATIONS = 100

CSV_HEADER = "m,n,transform,k,delta,j,seed,epsilon,t_seconds"


@dataclass(frozen=True)
class ExperimentRecord:
    m: int
    n: int
    transform: str
    k: int
    delta: float
    j: int
    seed: int
    epsilon: float
    t_seconds: float

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "transform": self.transform,
            "k": self.k,
            "delta": self.delta,
            "j": self.j,
            "seed": self.seed,
            "epsilon": self.epsilon,
            "t_seconds": self.t_seconds,
        }


@dataclass(frozen=True)
class SuiteConfig:
    sizes: tuple = ((512, 1024),)
    rank_deltas: tuple = ((2, 1e-3), (10, 1e-3), (2, 1e-11), (10, 1e-11))
    iteration_counts: tuple = (0, 1, 2, 10)
    seeds: tuple = (0, 1, 2, 3, 4)
    transform: str = "dft"
    matrix_seed: int = 0
    out: str | None = None
    fmt: str = "csv"
    serial: bool = False


def run_cell(
    spec: TestMatrixSpec,
    j: int,
    seed: int,
    a=None,
    power_seed: int = DEFAULT_POWER_SEED,
) -> ExperimentRecord:
    """One table cell: build (or reuse) A, time the ALS run, measure epsilon."""
    if a is None:
        a = build_test_matrix(spec)
    config = AlsConfig(rank_k=spec.k, iterations_j=j, seed=seed)
    t0 = time.perf_counter()
    factorization = als_run(a, config)
    t_seconds = time.perf_counter() - t0
    epsilon = power_method_norm(
        residual_operator(a, factorization.s, factorization.t),
        n_iters=POWER_ITERATIONS,
        seed=power_seed,
    )
    return ExperimentRecord(
        m=spec.m,
        n=spec.n,
        transform=spec.transform,
        k=spec.k,
        delta=spec.delta,
        j=j,
        seed=seed,
        epsilon=epsilon,
        t_seconds=t_seconds,
    )


def _validate_suite(config: SuiteConfig) -> list[TestMatrixSpec]:
    if not config.sizes:
        raise ValueError("sizes must be nonempty")
    if not config.rank_deltas:
        raise ValueError("rank_deltas must be nonempty")
    if not config.iteration_counts:
        raise ValueError("iteration_counts must be nonempty")
    if not config.seeds:
        raise ValueError("seeds must be nonempty")
    if config.fmt not in ("csv", "json"):
        raise ValueError(f"unknown output format {config.fmt!r}")
    specs = []
    for m, n in config.sizes:
        for k, delta in config.rank_deltas:
            specs.append(
                TestMatrixSpec(m, n, k, delta, transform=config.transform, seed=config.matrix_seed)
            )
    return specs


def run_suite(config: SuiteConfig):
    """Run every (size, (k, delta), j, seed) cell; returns (records, summary).

    The test matrix for a spec is built once and reused across its cells.
    Per-cell failures are recorded in the summary and the suite continues.
    """
    _validate_suite(config)
    limiter = _thread_limiter(config.serial)
    records: list[ExperimentRecord] = []
    failures: list[dict] = []
    with limiter:
        for m, n in config.sizes:
            for k, delta in config.rank_deltas:
                spec = TestMatrixSpec(
                    m, n, k, delta, transform=config.transform, seed=config.matrix_seed
                )
                try:
                    a = build_test_matrix(spec)
                except Exception as exc:  # noqa: BLE001 - recorded, suite continues
                    failures.append({"spec": spec.to_json(), "error": str(exc)})
                    continue
                for j in config.iteration_counts:
                    for seed in config.seeds:
                        try:
                            records.append(run_cell(spec, j, seed, a=a))
                        except Exception as exc:  # noqa: BLE001
                            failures.append(
                                {"spec": spec.to_json(), "j": j, "seed": seed, "error": str(exc)}
                            )
                del a
    summary = summarize(records, failures)
    if config.out:
        if config.fmt == "csv":
            write_csv(config.out, records)
        else:
            write_json(config.out, records, summary)
    return records, summary


class _NullContext:
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


def _thread_limiter(serial: bool):
    if not serial:
        return _NullContext()
    try:
        from threadpoolctl import threadpool_limits

        return threadpool_limits(limits=1)
    except ImportError:
        return _NullContext()


def summarize(records: list[ExperimentRecord], failures: list[dict]) -> dict:
    """Max epsilon/delta ratio per iteration count plus a t-versus-(m n) scaling report."""
    ratios: dict[int, float] = {}
    for rec in records:
        ratio = rec.epsilon / rec.delta
        ratios[rec.j] = max(ratios.get(rec.j, 0.0), ratio)
    scaling: dict[str, list] = {}
    by_cell: dict[tuple, list[float]] = {}
    for rec in records:
        by_cell.setdefault((rec.k, rec.j, rec.m, rec.n), []).append(rec.t_seconds)
    for (k, j, m, n), times in sorted(by_cell.items()):
        scaling.setdefault(f"k={k},j={j}", []).append(
            {"m": m, "n": n, "entries": m * n, "median_t_seconds": statistics.median(times)}
        )
    return {
        "max_epsilon_over_delta_by_j": {str(j): ratios[j] for j in sorted(ratios)},
        "timing_scaling": scaling,
        "failures": failures,
        "n_records": len(records),
    }


def write_csv(path, records: list[ExperimentRecord]) -> None:
    with open(path, "w") as f:
        f.write(CSV_HEADER + "\n")
        for rec in records:
            f.write(
                f"{rec.m},{rec.n},{rec.transform},{rec.k},{rec.delta:.17g},"
                f"{rec.j},{rec.seed},{rec.epsilon:.17g},{rec.t_seconds:.6g}\n"
            )


def write_json(path, records: list[ExperimentRecord], summary: dict | None = None) -> None:
    payload = {"records": [rec.as_dict() for rec in records]}
    if summary is not None:
        payload["summary"] = summary
    with open(path, "w") as f:
        json.dump(payload, f, indent=2)
