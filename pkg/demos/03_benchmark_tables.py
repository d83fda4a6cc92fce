"""Regenerate a desk-scale accuracy table.

Synthetic 512 x 1024 matrices with a prescribed spectrum (spectral norm 1,
best rank-k error exactly delta) are approximated at several iteration counts;
epsilon is the spectral error measured by 100 power-method iterations.  The
same table at full size runs via the CLI:  als-bench --full --out table.csv
"""

from lowrank_als import SuiteConfig, run_suite

config = SuiteConfig(
    sizes=((512, 1024),),
    rank_deltas=((2, 1e-3), (10, 1e-3)),
    iteration_counts=(0, 1, 2, 10),
    seeds=(0,),
)
records, summary = run_suite(config)

print(f"{'j':>3} {'k':>3} {'delta':>8} {'epsilon':>10} {'eps/delta':>10} {'t (s)':>8}")
for rec in records:
    print(
        f"{rec.j:>3} {rec.k:>3} {rec.delta:>8.0e} {rec.epsilon:>10.1e} "
        f"{rec.epsilon / rec.delta:>10.2f} {rec.t_seconds:>8.3f}"
    )

print("\nworst epsilon/delta by iteration count:")
for j, ratio in summary["max_epsilon_over_delta_by_j"].items():
    print(f"  j={j}: {ratio:.2f}")
