"""Figure rendering for dumped reports.

Matrices over a finite field are drawn as discrete heatmaps: distinct
entries get consecutive color indices (in field-code order) and the
colorbar is labelled with the entry values.  Scan sweeps get a summary
scatter of group order against the (minimal, singular) classification.

Figures are rendered headlessly to files next to the delimited output.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .matrices import SquareMatrix

__all__ = ["save_matrix_heatmap", "save_scan_summary"]


def _entry_label(coeffs: tuple[int, ...]) -> str:
    if len(coeffs) == 1:
        return str(coeffs[0])
    return "(" + ",".join(str(c) for c in coeffs) + ")"


def save_matrix_heatmap(matrix: SquareMatrix, path: str, title: str = "") -> None:
    codes = sorted({v.code for row in matrix.rows for v in row})
    index = {c: i for i, c in enumerate(codes)}
    labels = {}
    grid = np.empty((matrix.n, matrix.n), dtype=int)
    for i, row in enumerate(matrix.rows):
        for j, v in enumerate(row):
            grid[i, j] = index[v.code]
            labels.setdefault(index[v.code], _entry_label(v.coeffs))
    fig, ax = plt.subplots(figsize=(6, 5))
    cmap = plt.get_cmap("viridis", max(len(codes), 2))
    im = ax.imshow(grid, cmap=cmap, vmin=-0.5, vmax=len(codes) - 0.5)
    if len(codes) <= 24:
        cbar = fig.colorbar(im, ax=ax, ticks=range(len(codes)))
        cbar.ax.set_yticklabels([labels[i] for i in range(len(codes))])
    else:
        fig.colorbar(im, ax=ax)
    ax.set_title(title or f"{matrix.n} x {matrix.n} matrix over GF({matrix.field.p}^{matrix.field.k})")
    ax.set_xlabel("column")
    ax.set_ylabel("row")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_scan_summary(reports, path: str) -> None:
    """Scatter of group order vs instance class for a scan sweep."""
    classes = {
        (True, False): ("minimal, det != 0", "tab:green", "o"),
        (False, True): ("nonminimal, det = 0", "tab:blue", "s"),
        (True, True): ("minimal, det = 0", "tab:red", "^"),
        (False, False): ("nonminimal, det != 0", "tab:orange", "v"),
    }
    fig, ax = plt.subplots(figsize=(7, 4.5))
    seen_per_class: dict[tuple, int] = {}
    for result in reports:
        rep = result.report
        key = (bool(rep.minimal), bool(rep.det_is_zero))
        label, color, marker = classes[key]
        count = seen_per_class.get(key, 0)
        seen_per_class[key] = count + 1
        ax.scatter(
            _group_order(rep),
            list(classes).index(key) + 0.03 * (count % 7),  # jitter stacked points
            color=color,
            marker=marker,
            s=24,
            label=label if count == 0 else None,
        )
    ax.set_yticks(range(len(classes)))
    ax.set_yticklabels([v[0] for v in classes.values()])
    ax.set_xlabel("group order")
    ax.set_title("scan classification: minimality vs singular decomposition matrix")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _group_order(report) -> int:
    if not report.group:
        return 1
    order = 1
    for part in report.group.split(" x "):
        order *= int(part.split("_")[1])
    return order
