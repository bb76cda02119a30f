"""Bounds report rendering: aligned text, CSV, and a matplotlib figure."""

from __future__ import annotations

import csv
import os

from .bounds import BoundsRow

CSV_FIELDS = [
    "n", "q", "v", "r", "lower_alpha", "upper_psi", "chromatic_upper",
    "h", "c_n", "plane_exact",
]


def format_table(rows: list[BoundsRow]) -> str:
    header = f"{'n':>3} {'q':>3} {'v':>8} {'r':>7} {'alpha>=':>10} {'psi<=':>12} {'chi<=':>8}  note"
    out = [header, "-" * len(header)]
    for row in rows:
        lower = str(row.lower_alpha) if row.lower_alpha is not None else "-"
        note = ""
        if row.plane_exact is not None:
            note = f"plane: psi'=chi'={row.plane_exact} exactly"
        out.append(
            f"{row.n:>3} {row.q:>3} {row.v:>8} {row.r:>7} {lower:>10} "
            f"{row.upper_psi:>12} {row.chromatic_upper:>8}  {note}"
        )
    return "\n".join(out)


def write_csv(rows: list[BoundsRow], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: getattr(row, k) for k in CSV_FIELDS})


def write_figure(rows: list[BoundsRow], path: str) -> None:
    """Log-scale chart of the bounds against n, one panel trace set per q."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.5, 5))
    by_q: dict[int, list[BoundsRow]] = {}
    for row in rows:
        by_q.setdefault(row.q, []).append(row)
    colors = plt.cm.viridis([i / max(1, len(by_q) - 1) for i in range(len(by_q))])
    for color, (q, qrows) in zip(colors, sorted(by_q.items())):
        qrows = sorted(qrows, key=lambda r: r.n)
        ns = [r.n for r in qrows]
        ax.plot(ns, [r.upper_psi for r in qrows], "-o", color=color,
                label=f"q={q}: psi' upper", markersize=4)
        ax.plot(ns, [r.chromatic_upper for r in qrows], "--", color=color,
                label=f"q={q}: chi' upper (v)", alpha=0.6)
        alpha_pts = [(r.n, r.lower_alpha) for r in qrows if r.lower_alpha is not None]
        if alpha_pts:
            ax.plot(*zip(*alpha_pts), "^", color=color, markersize=9,
                    label=f"q={q}: alpha' lower")
    ax.set_yscale("log")
    ax.set_xlabel("projective dimension n")
    ax.set_ylabel("color count")
    ax.set_title("Achromatic / pseudoachromatic bounds for PG(n,q)")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(rows: list[BoundsRow], out_dir: str) -> dict[str, str]:
    """Write bounds.csv and bounds.png into the directory; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, "bounds.csv")
    fig_path = os.path.join(out_dir, "bounds.png")
    write_csv(rows, csv_path)
    write_figure(rows, fig_path)
    return {"csv": csv_path, "figure": fig_path}
