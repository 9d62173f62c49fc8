"""Todd-Coxeter coset enumeration over finite presentations.

The default strategy is HLT: every live coset is scanned against every
relator, with new cosets defined to complete each scan.  When the coset
budget fills up, a lookahead pass (coincidence-only scanning) runs and
dead rows are compacted away before giving up.  A Felsch-style strategy
(define one entry at a time, then chase deductions against relator
rotations) is available behind ``strategy="felsch"``; both produce the
identical standardized table.

Tables index cosets from 0 (the subgroup itself) and act on the right:
column 2*i is the action of generator i, column 2*i+1 of its inverse.
Completed tables are renumbered by breadth-first traversal from coset 0
in column order, so equal inputs give byte-for-byte equal tables.

Coincidences are resolved by union-find with path compression, keeping
the smallest label as representative; the merge queue transfers every
edge of a dead coset to its representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LimitExceeded
from .permgroup import PermGroup, Permutation
from .presentation import Presentation
from .words import Word

__all__ = [
    "EnumerationLimits",
    "CosetTable",
    "enumerate_cosets",
    "group_order",
    "trace_word",
    "permutation_rep",
    "verify_coset_table",
    "table_to_tsv",
]

DEFAULT_MAX_COSETS = 1_000_000


@dataclass(frozen=True)
class EnumerationLimits:
    """Budgets for a single enumeration run."""

    max_cosets: int = DEFAULT_MAX_COSETS
    max_deductions: int | None = None

    def __post_init__(self) -> None:
        if self.max_cosets < 1:
            raise ValueError("max_cosets must be at least 1")
        if self.max_deductions is not None and self.max_deductions < 0:
            raise ValueError("max_deductions must be non-negative")


@dataclass(frozen=True)
class CosetTable:
    """A complete, standardized coset table.

    action[c][2*i] is coset c times generator i; column 2*i+1 is the
    inverse generator.  Coset 0 is the subgroup.
    """

    generator_names: tuple[str, ...]
    n_cosets: int
    action: tuple[tuple[int, ...], ...]
    subgroup_generators: tuple[Word, ...]


def _word_cols(w: Word) -> tuple[int, ...]:
    return tuple(2 * (abs(l) - 1) + (0 if l > 0 else 1) for l in w.letters)


def _cyclic_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == -letters[j - 1]:
        i += 1
        j -= 1
    return letters[i:j]


class _NeedRoom(Exception):
    pass


class _Enumerator:
    def __init__(self, pres: Presentation, subgroup: Sequence[Word],
                 limits: EnumerationLimits, strategy: str):
        if strategy not in ("hlt", "felsch"):
            raise ValueError(f"unknown strategy {strategy!r}")
        for w in subgroup:
            if w.max_generator_index() >= pres.n_generators:
                raise ValueError("subgroup word uses a generator outside the alphabet")
        self.pres = pres
        self.ncols = 2 * pres.n_generators
        self.relator_cols = tuple(_word_cols(r) for r in pres.relators)
        self.sub_cols = tuple(_word_cols(w) for w in subgroup)
        self.limits = limits
        self.felsch = strategy == "felsch"
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.p: list[int] = [0]
        self.assignments = 0
        self.deductions: list[tuple[int, int]] = []
        if self.felsch:
            self.buckets = self._deduction_buckets()

    def _deduction_buckets(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        # Rotations of cyclically reduced relators and their inverses,
        # grouped by first column.  Cyclic reduction keeps the normal
        # closure, so the completed table is unchanged.
        buckets: list[list[tuple[int, ...]]] = [[] for _ in range(self.ncols)]
        seen: list[set[tuple[int, ...]]] = [set() for _ in range(self.ncols)]
        for r in self.pres.relators:
            core = _cyclic_reduce(r.letters)
            for letters in (core, tuple(-l for l in reversed(core))):
                cols = _word_cols(Word(letters))
                for s in range(len(cols)):
                    rot = cols[s:] + cols[:s]
                    if rot and rot not in seen[rot[0]]:
                        seen[rot[0]].add(rot)
                        buckets[rot[0]].append(rot)
        return tuple(tuple(b) for b in buckets)

    # -- union-find ---------------------------------------------------

    def rep(self, k: int) -> int:
        p = self.p
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a != b:
            if a > b:
                a, b = b, a
            self.p[b] = a
            queue.append(b)

    def _coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        qi = 0
        while qi < len(queue):
            gamma = queue[qi]
            qi += 1
            for col in range(self.ncols):
                delta = table[gamma][col]
                if delta is None:
                    continue
                table[delta][col ^ 1] = None
                mu = self.rep(gamma)
                nu = self.rep(delta)
                existing = table[mu][col]
                if existing is not None:
                    self._merge(nu, existing, queue)
                elif table[nu][col ^ 1] is not None:
                    self._merge(mu, table[nu][col ^ 1], queue)
                else:
                    self._assign(mu, col, nu)

    # -- table writes -------------------------------------------------

    def _assign(self, a: int, col: int, b: int) -> None:
        self.table[a][col] = b
        self.table[b][col ^ 1] = a
        self.assignments += 1
        if self.limits.max_deductions is not None and self.assignments > self.limits.max_deductions:
            raise LimitExceeded(f"deduction budget {self.limits.max_deductions} exhausted")
        if self.felsch:
            self.deductions.append((a, col))

    def _define(self, alpha: int, col: int) -> int:
        if len(self.table) >= self.limits.max_cosets:
            raise _NeedRoom
        beta = len(self.table)
        self.table.append([None] * self.ncols)
        self.p.append(beta)
        self._assign(alpha, col, beta)
        return beta

    # -- scanning -----------------------------------------------------

    def _scan(self, alpha: int, cols: tuple[int, ...], fill: bool) -> None:
        """Scan a relator (or subgroup word) loop at alpha.

        With fill, missing entries are created so the scan always
        completes (HLT).  Without fill, the scan stops at a gap of two
        or more but still applies forced deductions and coincidences.
        """
        table = self.table
        f = b = alpha
        i, j = 0, len(cols) - 1
        while True:
            while i <= j:
                nxt = table[f][cols[i]]
                if nxt is None:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self._coincidence(f, b)
                return
            while j >= i:
                prv = table[b][cols[j] ^ 1]
                if prv is None:
                    break
                b = prv
                j -= 1
            if j < i:
                self._coincidence(f, b)
                return
            if j == i:
                self._assign(f, cols[i], b)
                return
            if not fill:
                return
            self._define(f, cols[i])

    def _process_deductions(self) -> None:
        table = self.table
        while self.deductions:
            alpha, col = self.deductions.pop()
            if self.p[alpha] == alpha:
                for cols in self.buckets[col]:
                    self._scan(alpha, cols, fill=False)
                    if self.p[alpha] != alpha:
                        break
            if self.p[alpha] != alpha:
                continue
            beta = table[alpha][col]
            if beta is not None and self.p[beta] == beta:
                for cols in self.buckets[col ^ 1]:
                    self._scan(beta, cols, fill=False)
                    if self.p[beta] != beta:
                        break

    # -- space management ----------------------------------------------

    def _make_room(self, alpha: int) -> int:
        """Lookahead collapse then compaction; returns alpha's new index."""
        for c in range(len(self.table)):
            if self.p[c] != c:
                continue
            for cols in self.relator_cols:
                self._scan(c, cols, fill=False)
                if self.p[c] != c:
                    break
        live = [c for c in range(len(self.table)) if self.p[c] == c]
        if len(live) >= self.limits.max_cosets:
            raise LimitExceeded(f"coset budget {self.limits.max_cosets} exhausted")
        renum = {old: new for new, old in enumerate(live)}
        self.table = [
            [None if e is None else renum[self.rep(e)] for e in self.table[old]]
            for old in live
        ]
        self.p = list(range(len(live)))
        if self.felsch:
            self.deductions = [
                (renum[self.rep(a)], col) for a, col in self.deductions
            ]
        return renum[self.rep(alpha)]

    # -- strategies ----------------------------------------------------

    def run(self) -> list[list[int | None]]:
        for cols in self.sub_cols:
            while True:
                try:
                    self._scan(0, cols, fill=True)
                    break
                except _NeedRoom:
                    self._make_room(0)
        if self.felsch:
            self._process_deductions()
            self._run_felsch()
        else:
            self._run_hlt()
        return self.table

    def _run_hlt(self) -> None:
        alpha = 0
        while alpha < len(self.table):
            if self.p[alpha] == alpha:
                try:
                    for cols in self.relator_cols:
                        self._scan(alpha, cols, fill=True)
                        if self.p[alpha] != alpha:
                            break
                    if self.p[alpha] == alpha:
                        row = self.table[alpha]
                        for col in range(self.ncols):
                            if row[col] is None:
                                self._define(alpha, col)
                except _NeedRoom:
                    alpha = self._make_room(alpha)
                    continue
            alpha += 1

    def _run_felsch(self) -> None:
        alpha = 0
        while alpha < len(self.table):
            if self.p[alpha] == alpha:
                try:
                    for col in range(self.ncols):
                        if self.p[alpha] != alpha:
                            break
                        if self.table[alpha][col] is None:
                            self._define(alpha, col)
                            self._process_deductions()
                except _NeedRoom:
                    alpha = self._make_room(alpha)
                    continue
            alpha += 1


def _standardize(table: list[list[int | None]], p: list[int], ncols: int) -> tuple[tuple[int, ...], ...]:
    def find(k: int) -> int:
        while p[k] != k:
            k = p[k]
        return k

    live = [c for c in range(len(table)) if p[c] == c]
    renum = {old: new for new, old in enumerate(live)}
    rows = []
    for old in live:
        row = table[old]
        if any(e is None for e in row):
            raise AssertionError("enumeration finished with an incomplete row")
        rows.append([renum[find(e)] for e in row])  # type: ignore[arg-type]
    order = [0]
    pos: dict[int, int] = {0: 0}
    qi = 0
    while qi < len(order):
        c = order[qi]
        qi += 1
        for col in range(ncols):
            d = rows[c][col]
            if d not in pos:
                pos[d] = len(order)
                order.append(d)
    if len(order) != len(rows):
        raise AssertionError("completed table is not transitive")
    out = [[0] * ncols for _ in rows]
    for c, old in enumerate(order):
        out[c] = [pos[rows[old][col]] for col in range(ncols)]
    return tuple(tuple(r) for r in out)


def enumerate_cosets(pres: Presentation, subgroup: Iterable[Word] = (),
                     limits: EnumerationLimits | None = None,
                     strategy: str = "hlt") -> CosetTable:
    """Enumerate cosets of <subgroup> in the presented group.

    Returns a complete standardized CosetTable or raises LimitExceeded;
    a partial table is never returned.  The result is deterministic for
    equal inputs.
    """
    subgroup = tuple(subgroup)
    limits = limits or EnumerationLimits()
    enum = _Enumerator(pres, subgroup, limits, strategy)
    table = enum.run()
    action = _standardize(table, enum.p, enum.ncols)
    result = CosetTable(
        generator_names=pres.generator_names,
        n_cosets=len(action),
        action=action,
        subgroup_generators=subgroup,
    )
    verify_coset_table(result, pres)
    return result


def group_order(pres: Presentation, limits: EnumerationLimits | None = None,
                strategy: str = "hlt") -> int:
    """Order of the presented group: cosets of the trivial subgroup."""
    return enumerate_cosets(pres, (), limits, strategy).n_cosets


def trace_word(table: CosetTable, start: int, w: Word) -> int:
    """Coset reached from start by applying w letter by letter."""
    if not 0 <= start < table.n_cosets:
        raise ValueError(f"coset {start} out of range")
    if w.max_generator_index() >= len(table.generator_names):
        raise ValueError("word uses a generator outside the table's alphabet")
    c = start
    for col in _word_cols(w):
        c = table.action[c][col]
    return c


def permutation_rep(table: CosetTable) -> PermGroup:
    """Generator actions on cosets as a permutation group on 0..n_cosets-1."""
    gens = []
    for i, name in enumerate(table.generator_names):
        images = tuple(table.action[c][2 * i] for c in range(table.n_cosets))
        gens.append((name, Permutation(images)))
    return PermGroup(degree=table.n_cosets, generators=tuple(gens))


def verify_coset_table(table: CosetTable, pres: Presentation) -> None:
    """Full-scan check of completeness, inverse pairing, relator closure,
    and subgroup-generator stabilization; raises AssertionError on any hole."""
    ncols = 2 * pres.n_generators
    for c, row in enumerate(table.action):
        if len(row) != ncols:
            raise AssertionError(f"row {c} has {len(row)} columns, wanted {ncols}")
        for col, d in enumerate(row):
            if not 0 <= d < table.n_cosets:
                raise AssertionError(f"entry ({c},{col}) out of range")
            if table.action[d][col ^ 1] != c:
                raise AssertionError(f"entry ({c},{col}) has no inverse pairing")
    for r in pres.relators:
        cols = _word_cols(r)
        for c in range(table.n_cosets):
            cur = c
            for col in cols:
                cur = table.action[cur][col]
            if cur != c:
                raise AssertionError(f"relator does not close at coset {c}")
    for w in table.subgroup_generators:
        if trace_word(table, 0, w) != 0:
            raise AssertionError("subgroup generator does not stabilize coset 0")


def table_to_tsv(table: CosetTable) -> str:
    """Tab-separated dump: one row per coset, one column per signed generator."""
    headers = ["coset"]
    for name in table.generator_names:
        headers.extend([name, f"{name}^-1"])
    lines = ["\t".join(headers)]
    for c, row in enumerate(table.action):
        lines.append("\t".join(str(v) for v in (c, *row)))
    return "\n".join(lines) + "\n"
