"""Classification table, case files, and case execution."""

from __future__ import annotations

from pathlib import Path

import pytest

from orbisym import (
    CatalogEntry,
    InvalidParameter,
    SurfaceType,
    TableRow,
    UnknownCase,
    WordSyntaxError,
    builtin_cases,
    builtin_table,
    find_case,
    run_case,
    verify_table,
)
from orbisym.catalog import (
    is_remaining_alpha,
    load_case_dir,
    parse_case_text,
    remaining_family_surfaces,
    square_family_surface,
)


def S(g, b):
    return SurfaceType(orientable=True, genus=g, boundary=b)


def N(g, b):
    return SurfaceType(orientable=False, genus=g, boundary=b)


def test_builtin_table_shape():
    rows = builtin_table()
    assert len(rows) == 23
    assert [r.kind for r in rows].count("fixed") == 21
    assert rows[-2].kind == "square"
    assert rows[-1].kind == "remaining"
    by_alpha = {r.alpha: r for r in rows if r.kind == "fixed"}
    assert by_alpha[11].surfaces == (S(0, 12), N(6, 6))
    assert by_alpha[11].m_value == 120
    assert by_alpha[21].surfaces == (S(5, 12),)
    assert by_alpha[29].surfaces == (S(0, 30), S(9, 12), S(14, 2))
    assert by_alpha[1681].m_value == 7200
    assert by_alpha[841].m_label == "4(sqrt(a)+1)^2"


def test_verify_table_all_pass():
    results = verify_table()
    assert len(results) > 1000
    failures = [r for r in results if not r.passed]
    assert failures == []


def test_verify_table_catches_corrupted_surfaces():
    # S_{1,3} has algebraic genus 4, so filing it under a = 3 must trip
    bad_row = TableRow("fixed", 3, "12(a-1)", 24, (S(1, 3),))
    results = verify_table(rows=(bad_row,))
    failures = [r for r in results if not r.passed]
    assert len(failures) == 1
    assert "S_{1,3}" in failures[0].name


def test_verify_table_catches_corrupted_m_value():
    bad_row = TableRow("fixed", 3, "12(a-1)", 25, (S(0, 4), N(1, 3)))
    failures = [r for r in verify_table(rows=(bad_row,)) if not r.passed]
    assert len(failures) == 1
    assert "m-formula" in failures[0].name


def test_verify_table_unknown_kind():
    failures = [r for r in verify_table(rows=(TableRow("nope", None, "", None, ()),))
                if not r.passed]
    assert len(failures) == 1


def test_family_helpers():
    assert square_family_surface(6) == S(15, 7)
    assert remaining_family_surfaces(29) == (S(0, 30), S(14, 2))
    assert remaining_family_surfaces(30) == (S(0, 31), S(15, 1))
    assert is_remaining_alpha(29)
    assert is_remaining_alpha(43)
    assert not is_remaining_alpha(36)   # square
    assert not is_remaining_alpha(9)    # exceptional
    assert not is_remaining_alpha(1681)


def test_builtin_cases_order():
    cases = builtin_cases()
    assert [c.id for c in cases] == ["orbifold-28-edge", "orbifold-28-dashed", "15E", "19"]
    assert [c.kind for c in cases] == ["edge", "dashed", "family", "family"]
    edge = cases[0]
    assert edge.expected_order == 120
    assert set(edge.expected_surfaces) == {S(0, 12), N(6, 6)}
    dashed = cases[1]
    assert set(dashed.expected_surfaces) == {S(5, 12)}


ARITHMETIC_CASE = """\
case: little-row
arithmetic_only: true
alpha: 29
m: 4(a+1) = 120
surfaces: S_{0,30} S_{9,12} S_{14,2}
"""

EDGE_CASE = """\
case: tiny-edge
generators: x y
relators: x^3 y^2 (x*y)^2
scenario edge alpha=2
pattern P1: subgroup = x, y ; orient = always
expect order=6 surfaces=S_{1,1}
"""


def test_parse_arithmetic_case():
    entry = parse_case_text(ARITHMETIC_CASE)
    assert entry.kind == "arithmetic"
    assert entry.arithmetic_only
    assert entry.alpha == 29
    assert entry.m_label == "4(a+1)"
    assert entry.m_value == 120
    assert entry.expected_surfaces == (S(0, 30), S(9, 12), S(14, 2))


def test_parse_edge_case():
    entry = parse_case_text(EDGE_CASE)
    assert entry.kind == "edge"
    assert entry.expected_order == 6
    assert entry.scenario.alpha == 2
    assert len(entry.scenario.patterns) == 1


def test_parse_case_errors():
    with pytest.raises(WordSyntaxError):
        parse_case_text("generators: x\nrelators: x^2\n")
    with pytest.raises(WordSyntaxError):
        parse_case_text("case: a\narithmetic_only: true\nalpha: 3\n")
    with pytest.raises(WordSyntaxError):
        parse_case_text("case: a\ngenerators: x\nrelators: x^2\n"
                        "scenario warp alpha=2\n")
    with pytest.raises(WordSyntaxError):
        parse_case_text("case: a\ngenerators: x\nrelators: x^2\n"
                        "scenario edge alpha=2\n")
    with pytest.raises(WordSyntaxError):
        parse_case_text(EDGE_CASE.replace("expect order=6 surfaces=S_{1,1}",
                                          "expect order=six"))
    with pytest.raises(WordSyntaxError):
        parse_case_text(EDGE_CASE.replace(
            "pattern P1: subgroup = x, y ; orient = always",
            "pattern P1: subgroup = x, y"))


def test_find_case_builtin_and_unknown():
    entry = find_case("orbifold-28-dashed")
    assert entry.kind == "dashed"
    with pytest.raises(UnknownCase) as exc:
        find_case("not-a-case")
    assert "orbifold-28-edge" in str(exc.value)
    assert "15E" in str(exc.value)


def test_find_case_file_overrides_builtin(tmp_path):
    text = ARITHMETIC_CASE.replace("case: little-row", "case: alpha-29")
    text = text.replace("m: 4(a+1) = 120", "m: 4(a+1) = 121")
    (tmp_path / "override.case").write_text(text)
    entry = find_case("alpha-29", search_dir=tmp_path)
    assert entry.m_value == 121
    builtin = find_case("alpha-29", search_dir=tmp_path / "missing")
    assert builtin.m_value == 120


def test_load_case_dir_missing(tmp_path):
    assert load_case_dir(tmp_path / "absent") == {}


def test_run_edge_case():
    report = run_case("orbifold-28-edge")
    assert report.matched
    assert report.status == "match"
    assert report.computed_order == 120
    assert report.computed_surfaces == (S(0, 12), N(6, 6))
    assert len(report.outcomes) == 4


def test_run_arithmetic_case():
    report = run_case("alpha-29")
    assert report.matched
    assert report.computed_order is None
    assert report.outcomes == ()


def test_run_family_case():
    report = run_case("15E", n=7)
    assert report.matched
    assert report.computed_order == 14
    assert report.computed_surfaces == (S(0, 7), S(3, 1))
    report = run_case("19", n=4)
    assert report.matched
    assert report.computed_order == 16
    assert report.computed_surfaces == (S(3, 4),)


def test_run_family_needs_n():
    with pytest.raises(InvalidParameter):
        run_case("15E")


def test_run_case_unknown():
    with pytest.raises(UnknownCase):
        run_case("missing-case")


REPO_ROOT = Path(__file__).resolve().parents[1]


def test_run_case_reports_mismatch(tmp_path):
    # corrupt the expected order in a file override and watch it flagged
    base = (REPO_ROOT / "src/orbisym/data/orbifold-28-edge.case").read_text()
    (tmp_path / "edge.case").write_text(base.replace("order=120", "order=121"))
    report = run_case("orbifold-28-edge", search_dir=tmp_path)
    assert not report.matched
    assert report.status == "mismatch"
    assert report.computed_order == 120
    assert any("121" in d for d in report.detail)


def test_run_arithmetic_mismatch(tmp_path):
    text = ARITHMETIC_CASE.replace("m: 4(a+1) = 120", "m: 4(a+1) = 124")
    (tmp_path / "row.case").write_text(text)
    report = run_case("little-row", search_dir=tmp_path)
    assert not report.matched
    assert any("124" in d for d in report.detail)


def test_repo_catalog_matches_package_data():
    # the repo-root catalog/ files must stay in sync with the built-in copies
    package_dir = REPO_ROOT / "src/orbisym/data"
    repo_dir = REPO_ROOT / "catalog"
    paths = sorted(repo_dir.glob("*.case"))
    assert len(paths) == 3
    for path in paths:
        assert (package_dir / path.name).read_text() == path.read_text()


def test_builtin_entry_ids_match_case_ids():
    for entry in builtin_cases():
        assert isinstance(entry, CatalogEntry)
        assert find_case(entry.id).id == entry.id
