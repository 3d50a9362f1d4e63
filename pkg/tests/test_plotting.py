"""Figure rendering: heatmaps and the scan summary."""

import random

from regdecomp import FinAbGroup, SquareMatrix, make_field
from regdecomp.plotting import save_matrix_heatmap, save_scan_summary
from regdecomp.scenarios import run_scan


def test_heatmap_with_few_distinct_entries(tmp_path, gf5):
    one, m1 = gf5.one(), gf5.from_int(-1)
    m = SquareMatrix(gf5, [[one, m1], [m1, one]])
    path = tmp_path / "small.png"
    save_matrix_heatmap(m, str(path), title="tiny")
    assert path.stat().st_size > 1000


def test_heatmap_with_many_distinct_entries(tmp_path, gf81):
    rng = random.Random(0)
    els = list(gf81.elements())
    m = SquareMatrix(gf81, [[rng.choice(els[1:]) for _ in range(10)] for _ in range(10)])
    path = tmp_path / "wide.png"
    save_matrix_heatmap(m, str(path))
    assert path.stat().st_size > 1000


def test_scan_summary(tmp_path):
    results = run_scan(8, 3, seed=0)
    path = tmp_path / "summary.png"
    save_scan_summary(results, str(path))
    assert path.stat().st_size > 1000
