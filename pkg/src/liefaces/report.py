"""Algebra files, table rendering and the regression ledger behind ``report --check``."""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Mapping

from . import published
from .algebra import GradedPresentation, betti_of, formal_dimension, validate_presentation
from .catalog import (
    EXCEPTIONAL,
    best_ct_bound,
    presentation_of,
    record,
    so_derived_ct_bound,
)
from .covering import classical_ct_bound, weighted_length_bound
from .errors import DuplicateKey, InvalidGenerator, ParseError
from .exact import IntPoly, poly_product
from .faces import FaceBoundVector, classical_facet_bound, face_bound_vector, kahler_facet_bound, total_bound

# ---------------------------------------------------------------------------
# Algebra files
# ---------------------------------------------------------------------------

_INT = re.compile(r"[0-9]+")
_TOKEN = re.compile(r"\S+")


def _strip_comment(line: str) -> str:
    pos = line.find("#")
    return line if pos < 0 else line[:pos]


def parse_algebra_file(text: str) -> GradedPresentation:
    """Parse the ``name`` / ``field`` / ``gen degree=.. height=..`` format.

    Every diagnostic carries a 1-based line and column.
    """
    name: str | None = None
    field_label: str | None = None
    gens: list[tuple[int, int]] = []
    gen_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]
        if not tokens:
            continue
        (key, col), args = tokens[0], tokens[1:]
        if key == "name":
            if name is not None:
                raise DuplicateKey("duplicate 'name' line", lineno, col)
            if not args:
                raise ParseError("'name' needs a value", lineno, col + len(key))
            name = body[args[0][1] - 1 :].strip()
        elif key == "field":
            if name is None:
                raise ParseError("'name' must come first", lineno, col)
            if field_label is not None:
                raise DuplicateKey("duplicate 'field' line", lineno, col)
            if gens:
                raise ParseError("'field' must precede 'gen' lines", lineno, col)
            if len(args) != 1:
                raise ParseError("'field' needs exactly one label", lineno, col + len(key))
            field_label = args[0][0]
        elif key == "gen":
            if name is None:
                raise ParseError("'name' must come first", lineno, col)
            gens.append(_parse_gen(args, lineno, col))
            gen_lines.append(lineno)
        else:
            raise ParseError(f"unknown key {key!r}", lineno, col)
    if name is None:
        raise ParseError("missing 'name' line", 1, 1)
    pres = GradedPresentation(name, field_label or "custom", tuple(gens))
    try:
        return validate_presentation(pres)
    except InvalidGenerator as exc:
        raise InvalidGenerator(exc.index, exc.degree, exc.height, line=gen_lines[exc.index]) from None


def _parse_gen(args: list[tuple[str, int]], lineno: int, col: int) -> tuple[int, int]:
    values: dict[str, int] = {}
    for token, tcol in args:
        k, eq, v = token.partition("=")
        if not eq or k not in ("degree", "height"):
            raise ParseError(f"expected degree=<int> or height=<int>, got {token!r}", lineno, tcol)
        if k in values:
            raise DuplicateKey(f"duplicate {k!r} in gen line", lineno, tcol)
        if not _INT.fullmatch(v):
            raise ParseError(f"{k} must be an unsigned decimal integer, got {v!r}", lineno, tcol + len(k) + 1)
        values[k] = int(v)
    for k in ("degree", "height"):
        if k not in values:
            raise ParseError(f"gen line missing {k}=", lineno, col)
    return values["degree"], values["height"]


def format_algebra_file(pres: GradedPresentation) -> str:
    lines = [f"name {pres.name}", f"field {pres.field_label}"]
    lines += [f"gen degree={g.degree} height={g.height}" for g in pres.generators]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

FORMATS = ("text", "csv", "json")


def render_table(v: FaceBoundVector | Mapping[str, FaceBoundVector], fmt: str = "text") -> str:
    """Render one face-bound vector, or several side by side keyed by field label.

    In the multi-column text layout every row maximum is marked with ``*``.
    Machine formats keep every digit.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(v, FaceBoundVector):
        columns = {"bound": v}
    else:
        columns = dict(v)
    labels = list(columns)
    nrows = max((len(c.bounds) for c in columns.values()), default=0)
    rows = [[columns[k].bounds[i] for k in labels] for i in range(nrows)]

    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i"] + labels)
        for i, row in enumerate(rows):
            w.writerow([i] + [str(x) for x in row])
        return buf.getvalue()
    if fmt == "json":
        if isinstance(v, FaceBoundVector):
            doc = {"d": v.d, "f0": v.f0_input, "bounds": list(v.bounds)}
        else:
            doc = {
                "d": nrows - 1,
                "columns": {k: {"f0": c.f0_input, "bounds": list(c.bounds)} for k, c in columns.items()},
            }
        return json.dumps(doc) + "\n"

    wi = max(len("i"), len(str(nrows - 1)))
    if len(labels) == 1:
        out = [f"{'i':>{wi}}  bound"]
        out += [f"{i:>{wi}}  {row[0]}" for i, row in enumerate(rows)]
        return "\n".join(out) + "\n"
    widths = [max([len(k)] + [len(str(r[j])) + 1 for r in rows]) for j, k in enumerate(labels)]
    out = [f"{'i':>{wi}}  " + "  ".join(f"{k:>{w}}" for k, w in zip(labels, widths))]
    for i, row in enumerate(rows):
        top = max(row)
        cells = [(f"{x}*" if x == top else f"{x} ") for x in row]
        out.append(f"{i:>{wi}}  " + "  ".join(f"{c:>{w}}" for c, w in zip(cells, widths)))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Group-level helpers
# ---------------------------------------------------------------------------


def group_faces(group: str, field_label: str, n: int | None = None, f0: int | None = None) -> FaceBoundVector:
    """Face bounds for a catalog group, with f0 the best available covering-type bound."""
    pres = presentation_of(group, field_label, n)
    if f0 is None:
        f0 = best_ct_bound(group, n).value
    betti = betti_of(pres)
    return face_bound_vector(betti.d, f0, betti)


def six_figures(x: int) -> str:
    return f"{Decimal(x):.5E}"


# ---------------------------------------------------------------------------
# Regression ledger
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LedgerEntry:
    qid: str
    expected: object
    computed: object
    match: bool
    note: str = ""
    annotated: bool = False

    @property
    def status(self) -> str:
        if self.match:
            return "noted" if self.annotated else "ok"
        return "known" if self.annotated else "MISMATCH"


@dataclass
class CheckLedger:
    entries: list[LedgerEntry] = field(default_factory=list)

    def add(self, qid, expected, computed, match, note=""):
        annotated = qid in KNOWN_DISCREPANCIES
        if annotated and not note:
            note = KNOWN_DISCREPANCIES[qid]
        self.entries.append(LedgerEntry(qid, expected, computed, match, note, annotated))

    @property
    def failures(self) -> list[LedgerEntry]:
        return [e for e in self.entries if not e.match and not e.annotated]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, qid: str) -> LedgerEntry:
        for e in self.entries:
            if e.qid == qid:
                return e
        raise KeyError(qid)

    def render(self) -> str:
        lines = []
        for e in self.entries:
            line = f"{e.status:8} {e.qid}  expected={e.expected}  computed={e.computed}"
            if e.note:
                line += f"  # {e.note}"
            lines.append(line)
        known = sum(1 for e in self.entries if not e.match and e.annotated)
        lines.append(
            f"{len(self.entries)} checks: {len(self.entries) - known - len(self.failures)} agree, "
            f"{known} known discrepancies, {len(self.failures)} mismatches"
        )
        return "\n".join(lines) + "\n"


_SU_NOTE = "published SU facet polynomial drops a -5n/6 term; derived value canonical"
_SO_NOTE = "published SO facet polynomial mixes variables n and k; evaluated with k read as n"
_SP_NOTE = "published Sp facet polynomial uses dim Sp(n) = n(n+1) instead of n(2n+1); derived value canonical"
_KAHLER_NOTE = "published Kahler facet bound miscounts f0*d-(d+2)(d-1) as 2m^3+2m+1 and the Betti sum; derived value canonical"

FACET_NS = range(2, 7)
KAHLER_MS = range(1, 7)
CT_NS = range(1, 9)

KNOWN_DISCREPANCIES: dict[str, str] = {
    "totals.E7.F3": "published exponent 73 is out of line with the other E7 columns; reported, not asserted",
    "poincare.E8.F5.published_degree": "published factored F5 series carries an extra (1+t^20+t^40); the presentation gives degree 248",
    "dim.Sp.published": "published dimension table lists n(n+1) for Sp(n); n(2n+1) is correct",
    **{f"facets.SU.n{n}": _SU_NOTE for n in FACET_NS},
    **{f"facets.SO_odd.n{n}": _SO_NOTE for n in FACET_NS},
    **{f"facets.SO_even.n{n}": _SO_NOTE for n in FACET_NS},
    **{f"facets.Sp.n{n}": _SP_NOTE for n in FACET_NS},
    **{f"facets.kahler.m{m}": _KAHLER_NOTE for m in KAHLER_MS if m != 2},
    "ct.U.n1": "closed form assumes the +1 refinement, which a single generator cannot use",
    "ct.SU.n2": "closed form assumes the +1 refinement, which a single generator cannot use",
    **{
        f"ct.Sp.n{n}": "published Sp cubic is not the weighted sum over degrees 3,7,...,4n-1; derived value canonical"
        for n in CT_NS
    },
    **{
        f"ct.SO.n{n}": "published SO cubic is the U(n) cubic; the mod 2 product of all generator powers gives the derived value"
        for n in CT_NS
        if n >= 3
    },
}


def _rounded(mantissa: str, exponent: int) -> Fraction:
    return Fraction(Decimal(mantissa)) * 10**exponent


def _factored_e8_f5_published_degree() -> int:
    # (1 - t^60)/(1 - t^12) (1 + t^20 + t^40) (1+t^3)(1+t^11)...(1+t^47), as printed
    factors = [IntPoly.from_exponents(range(0, 60, 12)), IntPoly.from_exponents((0, 20, 40))]
    factors += [IntPoly.from_exponents((0, e)) for e in (3, 11, 15, 23, 27, 35, 39, 47)]
    return poly_product(factors).degree


def check_against_embedded() -> CheckLedger:
    """Recompute every published quantity and compare it with the embedded value."""
    ledger = CheckLedger()

    for g in EXCEPTIONAL:
        got = weighted_length_bound(presentation_of(g, "F2")).value
        ledger.add(f"ct.{g}", published.EXCEPTIONAL_CT[g], got, got == published.EXCEPTIONAL_CT[g])

    g2 = group_faces("G2", "F2")
    for i, exp in enumerate(published.G2_F2_FACES):
        ledger.add(f"G2.F2.f{i}", exp, g2[i], g2[i] == exp)

    f4 = {f: group_faces("F4", f) for f in published.F4_TABLE_FIELDS}
    for i, row in enumerate(published.F4_TABLE):
        for f, exp in zip(published.F4_TABLE_FIELDS, row):
            got = f4[f][i]
            ledger.add(f"F4.{f}.f{i}", exp, got, got == exp)

    for f, exp in published.G2_TOTALS.items():
        got = total_bound(group_faces("G2", f))
        ledger.add(f"totals.G2.{f}", exp, got, got == exp)

    for g, cols in published.ROUNDED_TOTALS.items():
        for f, (mant, e) in cols.items():
            got = total_bound(group_faces(g, f))
            exp = _rounded(mant, e)
            rel = abs(Fraction(got) - exp) / exp
            ledger.add(
                f"totals.{g}.{f}", f"{mant}E+{e}", six_figures(got), rel <= Fraction(published.TOTALS_RTOL)
            )

    pres = presentation_of("E8", "F5")
    lit_deg = _factored_e8_f5_published_degree()
    ledger.add("poincare.E8.F5.published_degree", lit_deg, formal_dimension(pres), lit_deg == formal_dimension(pres))
    ledger.add("dim.Sp.published", "n(n+1) = 12 at n=3", record("Sp").dim_of(3), False)

    for fam in ("U", "SU", "SO_odd", "SO_even", "Sp"):
        for n in FACET_NS:
            r = classical_facet_bound(fam, n)
            qid = f"facets.{fam}.n{n}"
            note = KNOWN_DISCREPANCIES.get(qid, "")
            ledger.add(qid, r.paper_literal, r.derived, r.agree, note)
    for m in KAHLER_MS:
        r = kahler_facet_bound(m)
        ledger.add(f"facets.kahler.m{m}", r.paper_literal, r.derived, r.agree)

    for fam, catalog_name in (("U", "U"), ("SU", "SU"), ("Sp", "Sp"), ("SO", None)):
        for n in CT_NS:
            if fam == "SU" and n < 2:
                continue
            if fam == "SO":
                if n < 3:
                    continue
                derived = so_derived_ct_bound(n).value
            else:
                derived = weighted_length_bound(presentation_of(catalog_name, "Q", n)).value
            closed = classical_ct_bound(fam, n).value
            ledger.add(f"ct.{fam}.n{n}", closed, derived, closed == derived)
    return ledger
