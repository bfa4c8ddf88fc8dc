from glnn.experiments import ScanConfig, TableConfig, selfdual_basic_table, selfdual_derivative_scan
from glnn.weights import Weight


def test_table_layouts():
    assert TableConfig.published_layout(6) == TableConfig(6, min_sectors=2)
    assert TableConfig.published_layout(7).exact_sectors == 3
    rows = selfdual_basic_table(TableConfig(3))
    assert [(r["weight"], r["sdim"], r["group"]) for r in rows] == [
        ((1, 0, 0), 2, "SL(2)"), ((2, 1, 0), 6, "Sp(6)")]
    assert selfdual_basic_table(TableConfig(3, include_trivial=True))[0]["group"] == "Torus(1)"


def test_scan_counts():
    found = selfdual_derivative_scan(ScanConfig(max_n=6, max_entry=7))
    assert sum(map(len, found.values())) == 139
    assert any(w == Weight((5, 2, 1, 0)) for w, _ in found[4])
    assert selfdual_derivative_scan(ScanConfig(ranks=(1,)))[1] == []
