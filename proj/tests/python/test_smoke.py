"""Smoke tests for the python module; the C++ suites carry the deep checks."""

import os

import pytest

import mvd

DATA_DIR = os.environ.get("MVD_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))
CATALOG_DIR = os.environ.get(
    "MVD_CATALOG_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "catalog")
)


def test_graph_construction():
    g = mvd.Graph.from_edge_list(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert g.n == 3
    assert g.m == 2
    assert g.labels == ["a", "b", "c"]
    assert g.adjacent(0, 1)
    assert not g.adjacent(0, 2)
    with pytest.raises(ValueError):
        mvd.Graph.from_edge_list(["a"], [("a", "a")])


def test_generate_and_solve():
    c5 = mvd.generate("cycle", [5])
    report = mvd.mvd_exact(c5)
    assert report.value == 2
    assert mvd.is_mvd_coloring(c5, report.witness).ok

    petersen = mvd.generate("petersen")
    assert petersen.n == 10
    assert mvd.mvd_formula("petersen") == 2
    assert mvd.kappa_plus(petersen) == 3


def test_coloring_verification():
    c5 = mvd.generate("cycle", [5])
    good = mvd.parse_coloring(c5, "v1:1, v2:2, v3:1, v4:2, v5:1")
    assert mvd.is_mvd_coloring(c5, good).ok
    bad = mvd.parse_coloring(c5, "v1:1, v2:2, v3:3, v4:1, v5:2")
    check = mvd.is_mvd_coloring(c5, bad)
    assert not check.ok
    assert 0 <= check.fail_x < check.fail_y < 5


def test_worked_example_replay():
    g = mvd.load_graph_file(os.path.join(DATA_DIR, "two_blocks_17.mvdg"))
    assert g.n == 17
    d = mvd.decompose(g)
    assert d.r == 2
    assert [g.label(v) for v in d.cut_vertices] == ["H"]

    store = mvd.CatalogStore.load_directory(CATALOG_DIR)
    assert len(store) > 0
    report = mvd.mvd_compose(g, store)
    assert report.value == 3
    assert report.witness.color_count == 3
    assert mvd.is_mvd_coloring(g, report.witness).ok
    assert {line.source.split(":")[0] for line in report.per_block} == {"catalog"}


def test_formulas():
    assert mvd.f_v(6, 3) == 14
    assert mvd.emax(5, 2) == 7
    assert mvd.emax(4, 1) is None
    assert mvd.block_bound(9, 2, 1) == 5
    assert mvd.mvd_formula("wheel", [6]) == 1
    assert mvd.mvd_formula("theta", [2, 2]) is None
    with pytest.raises(ValueError):
        mvd.f_v(4, 5)


def test_solve_auto_reports_method():
    w6 = mvd.generate("wheel", [6])
    report = mvd.solve_auto(w6)
    assert report.value == 1
    assert report.method == "formula"

    tree = mvd.generate("path", [6])
    report = mvd.solve_auto(tree)
    assert report.value == 6


def test_capacity_error_type():
    big = mvd.generate("cycle", [12])
    with pytest.raises(mvd.CapacityError):
        mvd.mvd_exact(big)


def test_scan_small():
    result = mvd.scan_extremal(4)
    assert result.ok()
    assert result.connected_count == 38
    prop = mvd.scan_property(4, "bound")
    assert prop.ok()


def test_mvdg_round_trip():
    g = mvd.generate("theta", [2, 1, 1])
    text = mvd.format_mvdg(g)
    back = mvd.parse_mvdg(text)
    assert back.labels == g.labels
    assert back.edges() == g.edges()
