"""Closed form vs converged quadrature: wall-time comparison.

The reason to want the closed form at all: a partial-wave code evaluating
these integrals per (n, m) per field point pays for adaptive oscillatory
quadrature on every call.  The closed form is two special-function
evaluations and a phase.
"""

from lbk.cli import bench_rows

rows = bench_rows(n_max=12, R_max=50.0, reps=10)

print(f"{'n':>3} {'R':>6} | {'closed us':>10} {'quad us':>10} {'speedup':>8}")
print("-" * 45)
for r in rows:
    print(f"{r['n']:>3} {r['R']:>6.1f} | {r['closed_us']:>10.1f} "
          f"{r['quad_us']:>10.1f} {r['speedup']:>8.1f}")

slowest = min(rows, key=lambda r: r["speedup"])
print(f"\nworst speedup: {slowest['speedup']:.1f}x "
      f"(n={slowest['n']}, R={slowest['R']})")
