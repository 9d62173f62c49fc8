"""The classification table and the runnable case catalog.

``builtin_table`` returns every row of the classification of maximally
symmetric bordered surfaces in the 3-sphere by algebraic genus: 21
fixed rows, the perfect-square family, and the generic remainder.
``verify_table`` recomputes each row's arithmetic (surface invariants
against the row's algebraic genus, maximal order against the formula
class) and reports one check result per fact.

``builtin_cases`` returns the four rows that come with printed
presentations and are therefore runnable end to end: the order-120
orbifold in both singular-set variants, and the two parametric
families.  Cases live in a human-readable file format (see data/); a
directory of ``*.case`` files (environment variable ORBISYM_CATALOG,
default ./catalog) overrides the compiled-in copies by id.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .coset import EnumerationLimits, group_order
from .errors import InvalidParameter, MismatchError, UnknownCase, WordSyntaxError
from .presentation import family_15e, family_19, load_presentation_with_aliases
from .scenario import (
    AlwaysOrientable,
    BoundaryPattern,
    DashedArcScenario,
    EdgeScenario,
    FAMILY_15E,
    FAMILY_19,
    PatternOutcome,
    Z2HomRule,
    evaluate_dashed_arc_scenario,
    evaluate_edge_scenario,
    evaluate_family,
)
from .surface import (
    EXCEPTIONAL_ALPHA_CLASSES,
    GENERIC_LABEL,
    SQUARE_RULE_EXCLUDED_ROOTS,
    SQUARE_RULE_LABEL,
    SurfaceType,
    algebraic_genus,
    m_alpha,
    surface_from_str,
)
from .words import Word, parse_word
from .z2hom import Z2Constraint

__all__ = [
    "TableRow",
    "builtin_table",
    "square_family_surface",
    "remaining_family_surfaces",
    "is_remaining_alpha",
    "CheckResult",
    "verify_table",
    "SQUARE_CHECK_ROOTS",
    "REMAINING_CHECK_RANGE",
    "CatalogEntry",
    "CaseReport",
    "parse_case_text",
    "load_case_dir",
    "catalog_search_dir",
    "builtin_cases",
    "find_case",
    "run_case",
    "CATALOG_ENV_VAR",
]

CATALOG_ENV_VAR = "ORBISYM_CATALOG"
DEFAULT_CATALOG_DIR = "catalog"

# Parametric ranges exercised by verify_table.
SQUARE_CHECK_ROOTS = range(2, 51)
REMAINING_CHECK_RANGE = range(2, 501)


@dataclass(frozen=True)
class TableRow:
    """One classification row: a fixed algebraic genus or a family."""

    kind: str  # "fixed" | "square" | "remaining"
    alpha: int | None
    m_label: str
    m_value: int | None
    surfaces: tuple[SurfaceType, ...]
    descriptor: str = ""


def _s(genus: int, boundary: int) -> SurfaceType:
    return SurfaceType(True, genus, boundary)


def _n(genus: int, boundary: int) -> SurfaceType:
    return SurfaceType(False, genus, boundary)


_FIXED_ROWS: tuple[tuple[int, str, int, tuple[SurfaceType, ...]], ...] = (
    (2, "12(a-1)", 12, (_s(0, 3), _s(1, 1))),
    (3, "12(a-1)", 24, (_s(0, 4), _n(1, 3))),
    (4, "12(a-1)", 36, (_s(1, 3),)),
    (5, "12(a-1)", 48, (_s(0, 6), _s(1, 4))),
    (9, "12(a-1)", 96, (_s(2, 6), _s(3, 4))),
    (11, "12(a-1)", 120, (_s(0, 12), _n(6, 6))),
    (25, "12(a-1)", 288, (_s(7, 12), _s(10, 6))),
    (97, "12(a-1)", 1152, (_s(37, 24),)),
    (121, "12(a-1)", 1440, (_s(43, 36), _s(55, 12))),
    (241, "12(a-1)", 2880, (_s(73, 96), _s(97, 48), _n(206, 36))),
    (7, "8(a-1)", 48, (_s(0, 8), _n(4, 4))),
    (49, "8(a-1)", 384, (_s(17, 16), _s(21, 8))),
    (16, "20(a-1)/3", 100, (_s(6, 5),)),
    (19, "20(a-1)/3", 120, (_s(0, 20), _n(14, 6))),
    (361, "20(a-1)/3", 2400, (_s(131, 100), _s(151, 60), _s(171, 20))),
    (21, "6(a-1)", 120, (_s(5, 12),)),
    (481, "6(a-1)", 2880, (_s(205, 72), _s(193, 96))),
    (41, "24(a-1)/5", 192, (_n(30, 12),)),
    (1681, "30(a-1)/7", 7200, (_n(1562, 120),)),
    (841, "4(sqrt(a)+1)^2", 3600, (_s(391, 60), _s(406, 30))),
    (29, "4(a+1)", 120, (_s(0, 30), _s(9, 12), _s(14, 2))),
)


def builtin_table() -> tuple[TableRow, ...]:
    """Every classification row, fixed rows first, then the two families."""
    rows = [TableRow("fixed", alpha, label, value, surfaces)
            for alpha, label, value, surfaces in _FIXED_ROWS]
    rows.append(TableRow("square", None, SQUARE_RULE_LABEL, None, (),
                         descriptor="a = k^2, k not in "
                                    f"{sorted(SQUARE_RULE_EXCLUDED_ROOTS)}"))
    rows.append(TableRow("remaining", None, GENERIC_LABEL, None, (),
                         descriptor="every other a >= 2"))
    return tuple(rows)


def square_family_surface(k: int) -> SurfaceType:
    """The surface the square family assigns to a = k^2."""
    return _s(k * (k - 1) // 2, k + 1)


def remaining_family_surfaces(alpha: int) -> tuple[SurfaceType, ...]:
    """The generic surface pair at algebraic genus a."""
    first = _s(0, alpha + 1)
    if alpha % 2 == 0:
        return (first, _s(alpha // 2, 1))
    return (first, _s((alpha - 1) // 2, 2))


def is_remaining_alpha(alpha: int) -> bool:
    """True when no exceptional class or square family covers alpha."""
    for _, _, _, members in EXCEPTIONAL_ALPHA_CLASSES:
        if alpha in members:
            return False
    root = math.isqrt(alpha)
    if root * root == alpha and root not in SQUARE_RULE_EXCLUDED_ROOTS:
        return False
    return True


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def verify_table(rows: tuple[TableRow, ...] | None = None) -> tuple[CheckResult, ...]:
    """Recompute every arithmetic fact the table asserts.

    Returns one CheckResult per fact; rows can be substituted to prove
    the checks actually bite.
    """
    if rows is None:
        rows = builtin_table()
    results: list[CheckResult] = []

    def check(name: str, passed: bool, detail: str = "") -> None:
        results.append(CheckResult(name, passed, detail))

    classes_seen: dict[int, str] = {}
    for label, _, _, members in EXCEPTIONAL_ALPHA_CLASSES:
        for alpha in members:
            if alpha in classes_seen:
                check("exceptional-classes-disjoint", False,
                      f"a={alpha} in both {classes_seen[alpha]} and {label}")
            classes_seen[alpha] = label
    check("exceptional-classes-disjoint", len(classes_seen) ==
          sum(len(m) for _, _, _, m in EXCEPTIONAL_ALPHA_CLASSES))

    for row in rows:
        if row.kind == "fixed":
            assert row.alpha is not None and row.m_value is not None
            for surface in row.surfaces:
                check(f"a={row.alpha}:surface {surface}",
                      algebraic_genus(surface) == row.alpha,
                      f"algebraic genus {algebraic_genus(surface)}")
            computed = m_alpha(row.alpha)
            check(f"a={row.alpha}:m-formula",
                  (computed.label, computed.value) == (row.m_label, row.m_value),
                  f"m_alpha gives {computed.label}={computed.value}, "
                  f"row says {row.m_label}={row.m_value}")
        elif row.kind == "square":
            for k in SQUARE_CHECK_ROOTS:
                if k in SQUARE_RULE_EXCLUDED_ROOTS:
                    continue
                alpha = k * k
                surface = square_family_surface(k)
                check(f"square k={k}:surface {surface}",
                      algebraic_genus(surface) == alpha,
                      f"algebraic genus {algebraic_genus(surface)}")
                check(f"square k={k}:m-formula",
                      m_alpha(alpha).value == 4 * (k + 1) ** 2,
                      f"m_alpha gives {m_alpha(alpha).value}")
        elif row.kind == "remaining":
            for alpha in REMAINING_CHECK_RANGE:
                if not is_remaining_alpha(alpha):
                    continue
                computed = m_alpha(alpha)
                check(f"remaining a={alpha}:m-formula",
                      (computed.label, computed.value) == (GENERIC_LABEL, 4 * (alpha + 1)),
                      f"m_alpha gives {computed.label}={computed.value}")
                bad = [s for s in remaining_family_surfaces(alpha)
                       if algebraic_genus(s) != alpha]
                check(f"remaining a={alpha}:surfaces", not bad,
                      f"inconsistent: {', '.join(map(str, bad))}")
        else:
            check(f"row kind {row.kind!r}", False, "unknown row kind")
    return tuple(results)


@dataclass(frozen=True)
class CatalogEntry:
    """A runnable or arithmetic-only catalog case."""

    id: str
    kind: str  # "edge" | "dashed" | "family" | "arithmetic"
    scenario: EdgeScenario | DashedArcScenario | None = None
    family: str | None = None
    expected_order: int | None = None
    expected_surfaces: tuple[SurfaceType, ...] = ()
    alpha: int | None = None
    m_label: str | None = None
    m_value: int | None = None
    arithmetic_only: bool = False


_SURFACE_RE = re.compile(r"[SN]_\{\d+,\d+\}")
_EXPECT_RE = re.compile(r"expect\s+order=(\d+)\s+surfaces=(.+)$")
_PATTERN_RE = re.compile(r"pattern\s+([A-Za-z0-9_]+)\s*:\s*(.+)$")
_HOM_RE = re.compile(r"hom\((.*)\)\s*$")


def _parse_constraints(text: str, names: tuple[str, ...], aliases: dict[str, Word]) -> tuple[Z2Constraint, ...]:
    constraints = []
    for item in text.split(","):
        item = item.strip()
        if "=" not in item:
            raise WordSyntaxError(f"constraint {item!r} needs word=bit")
        word_text, bit_text = item.rsplit("=", 1)
        constraints.append(Z2Constraint(parse_word(word_text.strip(), names, aliases),
                                        int(bit_text)))
    return tuple(constraints)


def parse_case_text(text: str) -> CatalogEntry:
    """Parse one .case file."""
    case_id: str | None = None
    arithmetic = False
    alpha: int | None = None
    m_label: str | None = None
    m_value: int | None = None
    surfaces: tuple[SurfaceType, ...] = ()
    expected_order: int | None = None
    scenario_kind: str | None = None
    scenario_alpha: int | None = None
    dashed_spec: dict[str, str] | None = None
    pattern_lines: list[str] = []
    pres_lines: list[str] = []

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("case:"):
            case_id = line[len("case:"):].strip()
        elif line.startswith("arithmetic_only:"):
            arithmetic = line.split(":", 1)[1].strip().lower() == "true"
        elif line.startswith("alpha:"):
            alpha = int(line.split(":", 1)[1])
        elif line.startswith("m:"):
            body = line.split(":", 1)[1]
            label, _, value = body.rpartition("=")
            m_label, m_value = label.strip(), int(value)
        elif line.startswith("surfaces:"):
            surfaces = tuple(surface_from_str(s)
                             for s in _SURFACE_RE.findall(line.split(":", 1)[1]))
        elif line.startswith("expect"):
            m = _EXPECT_RE.match(line)
            if not m:
                raise WordSyntaxError(f"bad expect line: {line!r}")
            expected_order = int(m.group(1))
            surfaces = tuple(surface_from_str(s) for s in _SURFACE_RE.findall(m.group(2)))
        elif line.startswith("scenario"):
            parts = line.split(None, 2)
            if len(parts) < 3:
                raise WordSyntaxError(f"bad scenario line: {line!r}")
            scenario_kind = parts[1]
            body = parts[2]
            if scenario_kind == "edge":
                kv = dict(item.split("=", 1) for item in body.split())
                scenario_alpha = int(kv["alpha"])
            elif scenario_kind == "dashed":
                hom = _HOM_RE.search(body)
                if not hom:
                    raise WordSyntaxError("dashed scenario needs a hom(...) clause")
                kv = dict(item.split("=", 1) for item in body[:hom.start()].split())
                kv["hom"] = hom.group(1)
                scenario_alpha = int(kv["alpha"])
                dashed_spec = kv
            else:
                raise WordSyntaxError(f"unknown scenario kind {scenario_kind!r}")
        elif line.startswith("pattern"):
            pattern_lines.append(line)
        else:
            pres_lines.append(line)

    if case_id is None:
        raise WordSyntaxError("case file needs a 'case:' line")
    if arithmetic:
        if alpha is None or m_label is None or m_value is None or not surfaces:
            raise WordSyntaxError("arithmetic case needs alpha:, m:, and surfaces: lines")
        return CatalogEntry(id=case_id, kind="arithmetic", alpha=alpha,
                            m_label=m_label, m_value=m_value,
                            expected_surfaces=surfaces, arithmetic_only=True)

    pres, aliases = load_presentation_with_aliases("\n".join(pres_lines))
    names = pres.generator_names
    if scenario_kind == "edge":
        patterns = []
        for line in pattern_lines:
            m = _PATTERN_RE.match(line)
            if not m:
                raise WordSyntaxError(f"bad pattern line: {line!r}")
            name, body = m.group(1), m.group(2)
            clauses = dict()
            for clause in body.split(";"):
                key, _, value = clause.partition("=")
                clauses[key.strip()] = value.strip()
            if "subgroup" not in clauses or "orient" not in clauses:
                raise WordSyntaxError(f"pattern {name!r} needs subgroup and orient clauses")
            words = tuple(parse_word(w.strip(), names, aliases)
                          for w in clauses["subgroup"].split(","))
            orient_text = clauses["orient"]
            rule: AlwaysOrientable | Z2HomRule
            if orient_text == "always":
                rule = AlwaysOrientable()
            else:
                hom = _HOM_RE.match(orient_text)
                if not hom:
                    raise WordSyntaxError(f"bad orient clause {orient_text!r}")
                rule = Z2HomRule(_parse_constraints(hom.group(1), names, aliases))
            patterns.append(BoundaryPattern(name, words, rule))
        if scenario_alpha is None or not patterns:
            raise WordSyntaxError("edge case needs a scenario line and pattern lines")
        scenario = EdgeScenario(pres, scenario_alpha, tuple(patterns))
        return CatalogEntry(id=case_id, kind="edge", scenario=scenario,
                            expected_order=expected_order, expected_surfaces=surfaces)
    if scenario_kind == "dashed":
        assert dashed_spec is not None and scenario_alpha is not None
        scenario = DashedArcScenario(
            pres, scenario_alpha,
            fixed_word=parse_word(dashed_spec["fixed"], names, aliases),
            arc_word=parse_word(dashed_spec["arc"], names, aliases),
            hom_constraints=_parse_constraints(dashed_spec["hom"], names, aliases))
        return CatalogEntry(id=case_id, kind="dashed", scenario=scenario,
                            expected_order=expected_order, expected_surfaces=surfaces)
    raise WordSyntaxError("case file needs a scenario line or arithmetic_only: true")


def _builtin_case_texts() -> dict[str, str]:
    texts = {}
    data = resources.files("orbisym").joinpath("data")
    for entry in sorted(data.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".case"):
            texts[entry.name] = entry.read_text()
    return texts


def _family_entries() -> tuple[CatalogEntry, ...]:
    return (
        CatalogEntry(id="15E", kind="family", family=FAMILY_15E),
        CatalogEntry(id="19", kind="family", family=FAMILY_19),
    )


def _builtin_entries() -> dict[str, CatalogEntry]:
    """All compiled-in entries by id, including arithmetic-only rows."""
    by_id = {}
    for _, text in sorted(_builtin_case_texts().items()):
        entry = parse_case_text(text)
        by_id[entry.id] = entry
    for entry in _family_entries():
        by_id[entry.id] = entry
    return by_id


def builtin_cases() -> tuple[CatalogEntry, ...]:
    """The four runnable cases, compiled-in copies."""
    by_id = _builtin_entries()
    return (by_id["orbifold-28-edge"], by_id["orbifold-28-dashed"],
            by_id["15E"], by_id["19"])


def catalog_search_dir() -> Path:
    """Directory searched for *.case overrides."""
    return Path(os.environ.get(CATALOG_ENV_VAR, DEFAULT_CATALOG_DIR))


def load_case_dir(directory: Path | None = None) -> dict[str, CatalogEntry]:
    """Parse every *.case file in the search directory (may be empty)."""
    directory = directory if directory is not None else catalog_search_dir()
    entries: dict[str, CatalogEntry] = {}
    if directory.is_dir():
        for path in sorted(directory.glob("*.case")):
            entry = parse_case_text(path.read_text())
            entries[entry.id] = entry
    return entries


def find_case(case_id: str, search_dir: Path | None = None) -> CatalogEntry:
    """File entries override compiled-in entries by id; UnknownCase otherwise."""
    from_files = load_case_dir(search_dir)
    if case_id in from_files:
        return from_files[case_id]
    builtin = _builtin_entries()
    if case_id in builtin:
        return builtin[case_id]
    known = sorted(set(from_files) | set(builtin))
    raise UnknownCase(f"no case {case_id!r}; known: {', '.join(known)}")


@dataclass(frozen=True)
class CaseReport:
    """Outcome of run_case: expectations next to computed values."""

    case_id: str
    status: str  # "match" | "mismatch"
    expected_order: int | None
    computed_order: int | None
    expected_surfaces: tuple[SurfaceType, ...]
    computed_surfaces: tuple[SurfaceType, ...]
    outcomes: tuple[PatternOutcome, ...]
    detail: tuple[str, ...]

    @property
    def matched(self) -> bool:
        return self.status == "match"


def _sorted_surfaces(surfaces) -> tuple[SurfaceType, ...]:
    return tuple(sorted(surfaces, key=lambda s: (not s.orientable, s.genus, s.boundary)))


def _family_expectations(family: str, n: int) -> tuple[int, tuple[SurfaceType, ...], tuple[str | None, ...]]:
    if family == FAMILY_15E:
        if n % 2 == 1:
            surfaces = (SurfaceType(True, 0, n), SurfaceType(True, (n - 1) // 2, 1))
        else:
            surfaces = (SurfaceType(True, 0, n), SurfaceType(True, (n - 2) // 2, 2))
        return 2 * n, surfaces, ("A", "B")
    if family == FAMILY_19:
        return n * n, (SurfaceType(True, (n - 1) * (n - 2) // 2, n),), (None,)
    raise InvalidParameter(f"unknown family {family!r}")


def run_case(case_id: str, n: int | None = None,
             limits: EnumerationLimits | None = None,
             threads: int = 1, early_stop: bool = False,
             search_dir: Path | None = None) -> CaseReport:
    """Run a catalog case and compare against its expectations."""
    entry = find_case(case_id, search_dir)
    detail: list[str] = []

    if entry.kind == "arithmetic":
        assert entry.alpha is not None
        ok = True
        for surface in entry.expected_surfaces:
            if algebraic_genus(surface) != entry.alpha:
                ok = False
                detail.append(f"surface {surface} has algebraic genus "
                              f"{algebraic_genus(surface)}, row says {entry.alpha}")
        computed = m_alpha(entry.alpha)
        if (computed.label, computed.value) != (entry.m_label, entry.m_value):
            ok = False
            detail.append(f"m_alpha gives {computed.label}={computed.value}, "
                          f"row says {entry.m_label}={entry.m_value}")
        return CaseReport(case_id=entry.id, status="match" if ok else "mismatch",
                          expected_order=None, computed_order=None,
                          expected_surfaces=_sorted_surfaces(entry.expected_surfaces),
                          computed_surfaces=(), outcomes=(), detail=tuple(detail))

    if entry.kind == "family":
        assert entry.family is not None
        if n is None:
            raise InvalidParameter(f"case {entry.id!r} needs a family parameter n")
        expected_order, expected_surfaces, embeddings = _family_expectations(entry.family, n)
        pres = family_15e(n) if entry.family == FAMILY_15E else family_19(n)
        computed_order = group_order(pres, limits)
        computed: list[SurfaceType] = []
        outcomes: list[PatternOutcome] = []
        status = "match"
        for embedding in embeddings:
            try:
                surface = evaluate_family(entry.family, n, embedding, limits)
            except MismatchError as exc:
                status = "mismatch"
                detail.append(str(exc))
                continue
            computed.append(surface)
            outcomes.append(PatternOutcome(
                pattern=f"embedding {embedding or 'A'}",
                boundary=surface.boundary,
                orientable=surface.orientable,
                genus=surface.genus))
        if computed_order != expected_order:
            status = "mismatch"
            detail.append(f"order {computed_order}, expected {expected_order}")
        if set(computed) != set(expected_surfaces):
            status = "mismatch"
            detail.append(f"surfaces {sorted(map(str, computed))}, "
                          f"expected {sorted(map(str, expected_surfaces))}")
        return CaseReport(case_id=entry.id, status=status,
                          expected_order=expected_order, computed_order=computed_order,
                          expected_surfaces=_sorted_surfaces(expected_surfaces),
                          computed_surfaces=_sorted_surfaces(computed),
                          outcomes=tuple(outcomes), detail=tuple(detail))

    assert entry.scenario is not None
    pres = entry.scenario.presentation
    computed_order = group_order(pres, limits)
    if entry.kind == "edge":
        result = evaluate_edge_scenario(entry.scenario, limits)
    else:
        result = evaluate_dashed_arc_scenario(entry.scenario, limits,
                                              threads=threads, early_stop=early_stop)
    status = "match"
    if entry.expected_order is not None and computed_order != entry.expected_order:
        status = "mismatch"
        detail.append(f"order {computed_order}, expected {entry.expected_order}")
    if set(result.surfaces) != set(entry.expected_surfaces):
        status = "mismatch"
        detail.append(f"surfaces {sorted(map(str, result.surfaces))}, "
                      f"expected {sorted(map(str, entry.expected_surfaces))}")
    return CaseReport(case_id=entry.id, status=status,
                      expected_order=entry.expected_order, computed_order=computed_order,
                      expected_surfaces=_sorted_surfaces(entry.expected_surfaces),
                      computed_surfaces=_sorted_surfaces(result.surfaces),
                      outcomes=result.per_pattern, detail=tuple(detail))
