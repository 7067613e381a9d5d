"""Figure rendering for benchmark reports."""

from __future__ import annotations

from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.family": "serif",
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.titlesize": 11,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "svg.hashsalt": "piecewise",
}


def scaling_figure(results, path, title="Scaling"):
    """Log-log wall time against input size, one line per algorithm.

    A dashed unit-slope guide through each series' first point makes linear
    growth easy to eyeball.
    """
    series = defaultdict(list)
    for res in results:
        series[res.algorithm].append((res.input_size, res.wall_time))
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5.5, 3.6))
        for name, points in sorted(series.items()):
            points.sort()
            xs = [p[0] for p in points]
            ys = [max(p[1], 1e-9) for p in points]
            (line,) = ax.plot(xs, ys, marker="o", label=name)
            if len(xs) > 1:
                ax.plot(xs, [ys[0] * x / xs[0] for x in xs], ls="--", lw=0.8, color=line.get_color(), alpha=0.6)
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("input size")
        ax.set_ylabel("wall time [s]")
        ax.set_title(title)
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path, metadata={"Software": None} if str(path).endswith(".png") else None)
        plt.close(fig)
    return path
