"""Catalog sweep, expected-findings diff and table emission."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .involutions import (
    ALMOST_SYMMETRY,
    COINDEX,
    ORIENTATION,
    SYMMETRY,
    Finding,
    Rejection,
    sweep,
)
from .orbits import Marking, all_markings
from .symspace import SymmetricSpace, catalog, inner_only

SCHEMA_VERSION = 1

SPLITTING_RANK = "splitting_rank"
NO_UNIT_CLASS = "no_unit_multiplicity_class"
ORIENTATION_EXCL = "orientation"
NONE_FOUND = "none_found"


@dataclass(frozen=True)
class MarkingOutcome:
    support: tuple[int, ...]
    findings: tuple[Finding, ...]
    symmetric: bool
    exclusions: tuple[str, ...]


@dataclass(frozen=True)
class Verdict:
    label: str
    parameters: tuple[tuple[str, int], ...]
    inner_only: bool
    outcomes: tuple[MarkingOutcome, ...]

    @property
    def findings(self) -> list[Finding]:
        """Almost symmetries, over all markings."""
        return [f for o in self.outcomes for f in o.findings]

    @property
    def symmetric_markings(self) -> list[tuple[int, ...]]:
        return [o.support for o in self.outcomes if o.symmetric]

    def outcome(self, *support: int) -> MarkingOutcome:
        for o in self.outcomes:
            if o.support == tuple(support):
                return o
        raise KeyError(support)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "parameters": dict(self.parameters),
            "verdict": {
                "inner_only": self.inner_only,
                "findings": [f.to_json() for f in self.findings],
                "symmetric_markings": [list(s) for s in self.symmetric_markings],
                "exclusions": [{"support": list(o.support), "reasons": list(o.exclusions)}
                               for o in self.outcomes if o.exclusions],
            },
        }


def _outcome(space: SymmetricSpace, marking: Marking) -> MarkingOutcome:
    results = sweep(space, marking)
    almost = tuple(r for _, r in results
                   if isinstance(r, Finding) and r.classification == ALMOST_SYMMETRY)
    symmetric = any(isinstance(r, Finding) and r.classification == SYMMETRY
                    for _, r in results)
    excl: list[str] = []
    if not almost and not symmetric:
        if space.flags.splitting_rank:
            excl.append(SPLITTING_RANK)
        if all(m != 1 for a, m in space.weighted_roots if marking.level(a) > 0):
            excl.append(NO_UNIT_CLASS)
        if any(isinstance(r, Rejection) and r.reason == ORIENTATION and r.k is not None
               and r.k <= 1 for _, r in results):
            excl.append(ORIENTATION_EXCL)
        if not excl:
            excl.append(NONE_FOUND)
    return MarkingOutcome(marking.support, almost, symmetric, tuple(excl))


def classify_space(space: SymmetricSpace) -> Verdict:
    outcomes = tuple(_outcome(space, m) for m in all_markings(space.rank))
    return Verdict(space.label, space.parameters, inner_only(space), outcomes)


def classify_all(max_rank: int = 8, spaces: Iterable[SymmetricSpace] | None = None) -> list[Verdict]:
    spaces = catalog(max_rank) if spaces is None else spaces
    return [classify_space(s) for s in spaces]


def report(verdicts: Sequence[Verdict]) -> dict:
    return {"schema_version": SCHEMA_VERSION, "spaces": [v.to_json() for v in verdicts]}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# --- expected findings -------------------------------------------------------

ANY = None  # support wildcard: the count applies to every marking


@dataclass(frozen=True)
class Expectation:
    label: str
    support: tuple[int, ...] | None
    count: int
    anchor: str


def _param(space: SymmetricSpace, name: str) -> int:
    return dict(space.parameters)[name]


def _expect_for(space: SymmetricSpace) -> list[Expectation]:
    fam, q = space.family, space.rank
    E = lambda sup, n, why: Expectation(space.label, sup, n, why)
    if fam == "AI":
        if q == 2:
            return [E((1, 2), 3, "AI(2) principal orbit, three sign characters")]
        return [E((1, 2), 1, "A_q adjacent pair at the end, beta != delta"),
                E((q - 1, q), 1, "A_q adjacent pair at the other end, beta != delta"),
                E((1, q), 1, "A_q end nodes, beta = delta, canonical involution")]
    if fam == "CI":
        out = [E((1,), 1, "C_q, delta = 2 lambda_1, fixed line p_delta")]
        if q == 2:
            out.append(E((1, 2), 1, "rank-2 BI/CI principal orbit"))
        return out
    if fam == "BDI":
        p = _param(space, "p")
        if (p, q) == (3, 3):
            return [E((1, 2), 1, "D_3 = A_3, adjacent pair"),
                    E((1, 3), 1, "D_3 = A_3, adjacent pair"),
                    E((2, 3), 1, "D_3 = A_3, end nodes, canonical involution")]
        out = [E((2,), 1, "real Grassmannian, second node")]
        if (p, q) == (3, 2):
            out.append(E((1, 2), 1, "rank-2 BI/CI principal orbit"))
        return out
    if fam in ("AIII", "DIII", "EII", "EIII", "EV", "EVI", "EVII", "EIX", "FI"):
        out = [E((1,), 1, f"{fam}, first node orbit")]
        if fam == "EIII":
            out += [E((2,), 0, "EIII, second node excluded"),
                    E((1, 2), 0, "EIII, principal orbit excluded")]
        return out
    if fam == "EI":
        return [E((2,), 1, "E_6, delta = lambda_2")]
    if fam == "EVIII":
        return [E((8,), 1, "E_8, delta = lambda_8")]
    if fam == "G":
        return [E((1,), 1, "G_2, beta != delta"), E((2,), 1, "G_2, delta = lambda_2")]
    if fam in ("AII", "EIV", "CII", "GROUP"):
        return [E(ANY, 0, f"{fam}: no almost symmetric orbit")]
    raise KeyError(f"no expectation for {space.label}")


def expected_findings(max_rank: int = 8,
                      spaces: Iterable[SymmetricSpace] | None = None) -> list[Expectation]:
    spaces = catalog(max_rank) if spaces is None else spaces
    return [e for s in spaces for e in _expect_for(s)]


@dataclass
class Diff:
    missing: list[dict] = field(default_factory=list)
    extra: list[dict] = field(default_factory=list)
    mismatched: list[dict] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not (self.missing or self.extra or self.mismatched)

    def labels(self) -> set[str]:
        return {d["space"] for d in self.missing + self.extra + self.mismatched}

    def to_json(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "ok": self.empty,
                "missing": self.missing, "extra": self.extra, "mismatched": self.mismatched}


def diff_verdicts(verdicts: Sequence[Verdict], expected: Sequence[Expectation]) -> Diff:
    by_label: dict[str, list[Expectation]] = {}
    for e in expected:
        by_label.setdefault(e.label, []).append(e)
    d = Diff()
    for v in verdicts:
        actual = Counter(f.support for f in v.findings)
        exp = by_label.get(v.label, [])
        wanted = {e.support: e for e in exp if e.support is not ANY}
        for sup, e in sorted(wanted.items()):
            got = actual.get(sup, 0)
            row = {"space": v.label, "support": list(sup), "expected": e.count,
                   "actual": got, "anchor": e.anchor}
            if e.count and not got:
                d.missing.append(row)
            elif got and not e.count:
                d.extra.append(row)
            elif got != e.count:
                d.mismatched.append(row)
        for sup, got in sorted(actual.items()):
            if sup not in wanted:
                d.extra.append({"space": v.label, "support": list(sup), "expected": 0,
                                "actual": got, "anchor": "outside the expected list"})
    return d


def verify_expected(max_rank: int = 8,
                         spaces: Sequence[SymmetricSpace] | None = None) -> Diff:
    """Sweep the catalog (or the given spaces) and diff against the expectations.

    Expectations are derived from each space's family and parameters, so a
    corrupted catalog entry is compared with what its label should produce.
    """
    spaces = catalog(max_rank) if spaces is None else list(spaces)
    return diff_verdicts(classify_all(spaces=spaces), expected_findings(spaces=spaces))


# --- table (a) ---------------------------------------------------------------

# row -> (M/S^1, k_a), as functions of the space parameters
_ROWS = {
    1: (lambda p, q: f"CP^{q - 1}", lambda p, q: f"u({q - 1})"),
    2: (lambda p, q: "S^2 x S^2", lambda p, q: "so(2)"),
    3: (lambda p, q: "Sp(3)/U(3) x S^2", lambda p, q: "su(3)+u(1)"),
    4: (lambda p, q: "Sp(4)/U(4)", lambda p, q: "su(4)"),
    5: (lambda p, q: "SU(8)/S(U(4)xU(4))", lambda p, q: "su(4)+su(4)"),
    6: (lambda p, q: "SO(16)/U(8)", lambda p, q: "su(8)"),
    7: (lambda p, q: f"G_2(R^{q + 1})", lambda p, q: f"so({q - 1})"),
    8: (lambda p, q: "S^2 x S^1", lambda p, q: "0"),
    9: (lambda p, q: f"CP^{p - 1} x CP^{q - 1}",
        lambda p, q: f"s(u({p - 1})+u({q - 1})+u(1))"),
    10: (lambda p, q: "E_6/[(Spin(10)xU(1))/Z_4]", lambda p, q: "so(10)+u(1)"),
    11: (lambda p, q: "Spin(10)/U(5)", lambda p, q: "su(5)+u(1)"),
    12: (lambda p, q: f"G_2(R^{p}) x G_2(R^{q})",
         lambda p, q: f"so({p - 2})+so({q - 2})+so(2)"),
    13: (lambda p, q: "G_3(C^6) x CP^1", lambda p, q: "s(u(3)+u(3))"),
    14: (lambda p, q: "SO(12)/U(6) x CP^1", lambda p, q: "u(6)"),
    15: (lambda p, q: "E_7/[(E_6xU(1))/Z_3] x CP^1", lambda p, q: "e_6+u(1)"),
}
_FAMILY_ROW = {"CI": 1, "G": 2, "FI": 3, "EI": 4, "EV": 5, "EVIII": 6, "AI": 7,
               "AIII": 9, "EVII": 10, "EIII": 11, "BDI": 12, "EII": 13, "EVI": 14,
               "EIX": 15}


def table_row(space: SymmetricSpace, f: Finding) -> tuple[int | None, str]:
    """Best-effort row number for a finding, plus an annotation."""
    if f.support == (1, 2) and space.label in ("CI(2)", "BDI(3,2)"):
        return 8, "so(5) = sp(2) principal orbit"
    if space.family == "DIII":
        return None, "no matching row for g = so(2n), k = u(n)"
    if space.family == "G":
        return 2, "two G_2 orbits share one row"
    if space.label == "BDI(3,3)":
        return 12, "so(6) = su(4), same orbits as AI(3)"
    return _FAMILY_ROW.get(space.family), ""


def table_a(verdicts: Sequence[Verdict], max_rank: int = 8) -> list[dict]:
    spaces = {s.label: s for s in catalog(max_rank)}
    rows = []
    for v in verdicts:
        sp = spaces[v.label]
        params = dict(sp.parameters)
        p, q = params.get("p", 0), params.get("q", sp.rank)
        for f in v.findings:
            nr, note = table_row(sp, f)
            m_s1, k_a = _ROWS[nr] if nr else (None, None)
            rows.append({
                "nr": nr, "space": sp.label, "support": list(f.support), "c": list(f.c),
                "certification": f.certification, "orbit_dim": f.orbit_dim,
                "M/S1": m_s1(p, q) if m_s1 else "", "g": sp.g_name, "k": sp.k_name,
                "k_a": k_a(p, q) if k_a else "", "note": note})
    rows.sort(key=lambda r: (r["nr"] is None, r["nr"] or 0, r["space"], r["support"], r["c"]))
    return rows


TABLE_COLUMNS = ("nr", "M/S1", "g", "k", "k_a", "space", "support", "c",
                 "certification", "orbit_dim", "note")


def emit_table_a(verdicts: Sequence[Verdict], fmt: str = "md", max_rank: int = 8) -> str:
    rows = table_a(verdicts, max_rank)
    if fmt == "json":
        return dumps({"schema_version": SCHEMA_VERSION, "columns": list(TABLE_COLUMNS),
                      "rows": rows})
    if fmt == "md":
        def cell(r, c):
            x = r[c]
            if x is None:
                return "-"
            if isinstance(x, list):
                return "{" + ",".join(map(str, x)) + "}"
            return str(x)
        lines = ["| " + " | ".join(TABLE_COLUMNS) + " |",
                 "|" + "---|" * len(TABLE_COLUMNS)]
        lines += ["| " + " | ".join(cell(r, c) for c in TABLE_COLUMNS) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unsupported format {fmt!r} (use json or md)")


# --- table (b) ---------------------------------------------------------------

def _so(n): return n * (n - 1) // 2


@dataclass(frozen=True)
class TableBRow:
    nr: int
    orbit: str
    representation: str
    orbit_dim: int
    rep_dim: int

    @property
    def ok(self) -> bool:
        return self.orbit_dim == self.rep_dim - 3


def table_b_rows(n_values: Iterable[int] = range(3, 9)) -> list[TableBRow]:
    # orbit dims from the groups acting simply transitively or by stabilizers
    rows = [TableBRow(16, f"V_2(R^{n})", f"(SO({n}), R^{n} + R^{n})",
                      _so(n) - _so(n - 2), 2 * n) for n in n_values]
    rows.append(TableBRow(17, "U(2)", "(U(2), C^2 + R^3)", 4, 4 + 3))
    rows.append(TableBRow(18, "T^2 x S^3", "(U(1) x SU(2) x U(1), C^2 + C^2)",
                          2 + 3, 4 + 4))
    return rows


def verify_table_b(n_values: Iterable[int] = range(3, 9)) -> dict:
    rows = table_b_rows(n_values)
    return {"schema_version": SCHEMA_VERSION, "ok": all(r.ok for r in rows),
            "rows": [{"nr": r.nr, "orbit": r.orbit, "representation": r.representation,
                      "orbit_dim": r.orbit_dim, "rep_dim": r.rep_dim, "ok": r.ok}
                     for r in rows]}
