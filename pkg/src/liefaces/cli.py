"""Command line interface.

    liefaces catalog list
    liefaces poincare --group G --field F [--n N]
    liefaces ct (--group G [--field F] [--n N] | --file PATH) [--method weighted|rational|rankdim]
    liefaces faces --group G --field F|all [--n N] [--i I] [--f0 F0] [--format text|csv|json]
    liefaces total --group G --field F [--n N]
    liefaces classical --family FAM --n N [--facets]
    liefaces report [--check]

Exit status: 0 success, 1 usage error, 2 validation error, 3 unannotated check mismatch.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import catalog
from .algebra import GradedPresentation, betti_of, formal_dimension, poincare_polynomial
from .covering import (
    CLASSICAL_FAMILIES,
    RationalType,
    classical_ct_bound,
    rank_dim_bound,
    rational_type_bound,
    weighted_length_bound,
)
from .errors import LieFacesError
from .faces import FACET_FAMILIES, classical_facet_bound, face_bound, total_bound
from .report import FORMATS, check_against_embedded, group_faces, render_table, parse_algebra_file, six_figures

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or "")
        raise SystemExit(status)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="liefaces", description="Lower bounds on face numbers of triangulated Lie groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    cat = sub.add_parser("catalog", help="browse built-in presentations")
    cat.add_argument("action", choices=["list"])

    def group_args(sp, field_required=True):
        sp.add_argument("--group", required=True)
        sp.add_argument("--field", required=field_required)
        sp.add_argument("--n", type=int)

    group_args(sub.add_parser("poincare", help="Poincare polynomial of a catalog entry"))

    ct = sub.add_parser("ct", help="covering-type lower bound")
    src = ct.add_mutually_exclusive_group(required=True)
    src.add_argument("--group")
    src.add_argument("--file")
    ct.add_argument("--field")
    ct.add_argument("--n", type=int)
    ct.add_argument("--method", choices=["weighted", "rational", "rankdim"], default="weighted")

    faces = sub.add_parser("faces", help="face-number lower bounds")
    group_args(faces)
    faces.add_argument("--i", type=int)
    faces.add_argument("--f0", type=int, help="override the vertex bound")
    faces.add_argument("--format", choices=FORMATS, default="text")

    group_args(sub.add_parser("total", help="lower bound on the total number of simplices"))

    cl = sub.add_parser("classical", help="closed-form bounds for classical families")
    cl.add_argument("--family", required=True, choices=sorted(set(CLASSICAL_FAMILIES) | set(FACET_FAMILIES)))
    cl.add_argument("--n", type=int, required=True)
    cl.add_argument("--facets", action="store_true")

    rep = sub.add_parser("report", help="summary tables; --check compares with published values")
    rep.add_argument("--check", action="store_true")
    return p


def _default_field(group: str, field: str | None) -> str:
    return field if field is not None else catalog.record(group).fields[-1]


def _cmd_catalog(args, out):
    for entry in catalog.list_entries():
        print(entry, file=out)


def _cmd_poincare(args, out):
    pres = catalog.presentation_of(args.group, args.field, args.n)
    print(f"{pres.name} over {pres.field_label}: {pres.citation}", file=out)
    print(poincare_polynomial(pres), file=out)


def _rational_from(pres: GradedPresentation) -> RationalType:
    if any(g.height != 1 for g in pres.generators):
        raise LieFacesError("rational and rankdim methods need an exterior presentation (all heights 1)")
    try:
        return RationalType.from_degrees([g.degree for g in pres.generators])
    except ValueError as exc:
        raise LieFacesError(str(exc)) from None


def _cmd_ct(args, out):
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                pres = parse_algebra_file(fh.read())
        except OSError as exc:
            raise LieFacesError(f"cannot read {args.file}: {exc.strerror}") from None
        if args.method == "weighted":
            bound = weighted_length_bound(pres)
        else:
            rt = _rational_from(pres)
            bound = rational_type_bound(rt) if args.method == "rational" else rank_dim_bound(rt.d, rt.l)
    else:
        if args.method == "weighted":
            bound = weighted_length_bound(
                catalog.presentation_of(args.group, _default_field(args.group, args.field), args.n)
            )
        else:
            d, l, rt = catalog.group_data(args.group, args.n)
            bound = rational_type_bound(rt) if args.method == "rational" else rank_dim_bound(d, l)
    print(bound.value, file=out)


def _cmd_faces(args, out):
    if args.field == "all":
        fields = catalog.record(args.group).fields
        columns = {f: group_faces(args.group, f, args.n, args.f0) for f in fields}
        if args.i is not None:
            for f, v in columns.items():
                print(f"{f} {_pick(v, args.i)}", file=out)
            return
        out.write(render_table(columns, args.format))
        return
    v = group_faces(args.group, args.field, args.n, args.f0)
    if args.i is not None:
        print(_pick(v, args.i), file=out)
        return
    out.write(render_table(v, args.format))


def _pick(v, i):
    if not 0 <= i <= v.d:
        raise LieFacesError(f"--i must lie in 0..{v.d}")
    return v[i]


def _cmd_total(args, out):
    print(total_bound(group_faces(args.group, args.field, args.n)), file=out)


def _cmd_classical(args, out):
    fam, n = args.family, args.n
    if args.facets:
        if fam in ("SO", "Torus"):
            raise LieFacesError(f"--facets takes one of {', '.join(FACET_FAMILIES)}")
        r = classical_facet_bound(fam, n)
        print(f"derived        {r.derived}", file=out)
        print(f"paper_literal  {r.paper_literal}", file=out)
        print(f"agree          {str(r.agree).lower()}", file=out)
        if r.literal_nonintegral:
            print(f"note           closed form is non-integral ({r.literal_exact}); rounded up", file=out)
        if r.nonintegral_input:
            print("note           vertex bound was rounded up from a non-integral closed form", file=out)
        return
    if fam in ("SO_odd", "SO_even"):
        fam, n = "SO", (2 * n + 1 if fam == "SO_odd" else 2 * n)
    closed = classical_ct_bound(fam, n)
    print(f"closed_form  {closed.value}" + ("  (non-integral, rounded up)" if closed.nonintegral else ""), file=out)
    if fam == "SO":
        derived = catalog.so_derived_ct_bound(n) if n >= 3 else None
    else:
        derived = weighted_length_bound(catalog.presentation_of(fam, "Q", n)) if (fam != "SU" or n >= 2) else None
    if derived is not None:
        print(f"derived      {derived.value}", file=out)


def _cmd_report(args, out):
    if args.check:
        ledger = check_against_embedded()
        out.write(ledger.render())
        return EXIT_OK if ledger.ok else EXIT_MISMATCH
    print("group  d    l  field  ct    total", file=out)
    for g in catalog.EXCEPTIONAL:
        d, l, _ = catalog.group_data(g)
        for f in catalog.record(g).fields:
            pres = catalog.presentation_of(g, f)
            ct = weighted_length_bound(pres).value
            tot = total_bound(group_faces(g, f))
            print(f"{g:<6} {d:<4} {l:<2} {f:<6} {ct:<5} {six_figures(tot)}", file=out)
    print(file=out)
    print("family  n  closed_form  derived", file=out)
    for fam in ("U", "SU", "Sp", "SO"):
        for n in range(2, 7):
            if fam == "SO" and n < 3:
                continue
            closed = classical_ct_bound(fam, n).value
            if fam == "SO":
                derived = catalog.so_derived_ct_bound(n).value
            else:
                derived = weighted_length_bound(catalog.presentation_of(fam, "Q", n)).value
            print(f"{fam:<7} {n:<2} {closed:<12} {derived}", file=out)
    return EXIT_OK


_COMMANDS = {
    "catalog": _cmd_catalog,
    "poincare": _cmd_poincare,
    "ct": _cmd_ct,
    "faces": _cmd_faces,
    "total": _cmd_total,
    "classical": _cmd_classical,
    "report": _cmd_report,
}


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        print(str(exc).strip(), file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        status = _COMMANDS[args.command](args, out)
    except LieFacesError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    return EXIT_OK if status is None else status


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
