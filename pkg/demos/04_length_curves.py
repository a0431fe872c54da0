#!/usr/bin/env python3
"""Normalized window-length curves ell_min/n as a function of d_plus/n.

Writes the CSV exactly as the `sweep` subcommand does and, when
matplotlib is available, renders the three standard curves.  Every curve
dips to 1/2 at d_plus/n = (1 + d/n)/2, which is where the fixed
half-order interval is recovered; to the left of that point the window
is wider because the square-root term flattens, to the right it grows
back toward sqrt(1 - d/n)."""

from degreeintervals.cli import sweep_rows, write_sweep_csv

DENSITIES = (0.25, 0.5, 0.81)
OUT = "length_curves.csv"

rows = []
for z0 in DENSITIES:
    curve = sweep_rows(z0, steps=200)
    rows.extend(curve)
    crossing = next(r for r in curve if abs(r.ell_min_over_n - 0.5) < 1e-9)
    print(f"d/n = {z0}: {len(curve)} samples, starts at d_plus/n = "
          f"{curve[0].d_plus_over_n}, crosses 1/2 at {crossing.d_plus_over_n}")

with open(OUT, "w") as fh:
    write_sweep_csv(rows, fh)
print(f"\nwrote {len(rows)} rows to {OUT}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the plot")
else:
    fig, axes = plt.subplots(1, len(DENSITIES), figsize=(12, 3.2), sharey=True)
    for ax, z0 in zip(axes, DENSITIES):
        xs = [r.d_plus_over_n for r in rows if r.d_over_n == z0]
        ys = [r.ell_min_over_n for r in rows if r.d_over_n == z0]
        ax.plot(xs, ys)
        ax.axhline(0.5, color="gray", lw=0.6, ls="--")
        ax.set_xlabel("d_plus / n")
        ax.set_title(f"d/n = {z0}")
        ax.set_ylim(0, 1)
    axes[0].set_ylabel("ell_min / n")
    fig.tight_layout()
    fig.savefig("length_curves.png", dpi=150)
    print("saved plot to length_curves.png")
