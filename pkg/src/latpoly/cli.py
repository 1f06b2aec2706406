"""Command-line interface.

Exit status: 0 when everything was computed and every requested check
passed, 1 when some polytope failed a requested check, 2 on usage, input or
parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .bounds import (
    casagrande_volume_bound,
    check_volume_sandwich,
    conjecture_bound,
    cyclic_facet_count,
    evaluate_conjecture,
    mcmullen_h_bound,
    stacked_f_vector,
)
from .dataset_io import ALL_CHECKS, FAILED, BatchConfig, PolytopeRecord, batch_check, load_directory, write_report
from .ehrhart import check_volume_identity, delta_vector, ehrhart_counts, ehrhart_polynomial
from .errors import LatpolyError
from .idp import idp_check
from .polytope import normalized_volume
from .reflexive import check_reflexive_equivalences, check_smooth_fano_equivalences, is_reflexive, is_smooth_fano
from .triangulation import cone_triangulation, is_unimodular_triangulation, triangulation_index_lcm

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would call sys.exit itself
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if v is None:
        return "none"
    return str(v)


def _emit(out: TextIO, pairs: Sequence[tuple[str, object]]) -> None:
    for k, v in pairs:
        out.write(f"{k} {_fmt(v)}\n")
    out.write("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="latpoly", description="Exact checks for lattice polytopes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("delta", help="delta-vector and Ehrhart data")
    p.add_argument("file")

    p = sub.add_parser("check", help="reflexivity, smooth Fano and IDP checks")
    p.add_argument("file")
    p.add_argument("--reflexive", action="store_true")
    p.add_argument("--smooth-fano", action="store_true")
    p.add_argument("--equivalences", action="store_true")
    p.add_argument("--idp-max", type=int, metavar="C")

    p = sub.add_parser("triangulate", help="cone triangulation from the origin")
    p.add_argument("file")

    p = sub.add_parser("bounds", help="closed-form face and volume bounds")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("sandwich", help="volume bounds in terms of boundary points")
    p.add_argument("file")

    p = sub.add_parser("conjecture", help="evaluate the conjectured sharp volume bound")
    p.add_argument("--dataset", required=True)
    p.add_argument("--dim", type=int, required=True)

    p = sub.add_parser("batch", help="run every check over a directory of .poly files")
    p.add_argument("directory")
    p.add_argument("--out")
    p.add_argument("--format", choices=("lines", "table"), default="lines")
    p.add_argument("--idp-max", type=int, default=2, metavar="C")
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(ALL_CHECKS)}")
    return parser


def _load(path: str) -> list[PolytopeRecord]:
    if not Path(path).exists():
        raise _UsageError(f"latpoly: no such file or directory: {path}\n")
    return load_directory(path)


def _cmd_delta(args, out) -> int:
    for rec in _load(args.file):
        p = rec.polytope()
        poly = ehrhart_polynomial(p)
        _emit(out, [
            ("polytope", rec.id),
            ("dim", p.dim),
            ("counts", list(ehrhart_counts(p, p.dim))),
            ("delta", list(delta_vector(p).delta)),
            ("ehrhart_coefficients", [str(c) for c in poly.coefficients]),
            ("ehrhart", str(poly)),
            ("normalized_volume", normalized_volume(p)),
            ("volume_identity", check_volume_identity(p)),
        ])
    return EXIT_OK


def _cmd_check(args, out) -> int:
    everything = not (args.reflexive or args.smooth_fano or args.equivalences or args.idp_max)
    status = EXIT_OK
    for rec in _load(args.file):
        p = rec.polytope()
        pairs: list[tuple[str, object]] = [("polytope", rec.id)]
        passed = True
        if everything or args.reflexive:
            r = is_reflexive(p)
            pairs.append(("reflexive", r))
            passed &= r
        if everything or args.smooth_fano:
            s = is_smooth_fano(p)
            pairs.append(("smooth_fano", s))
            passed &= s
        if everything or args.equivalences:
            try:
                rr = check_reflexive_equivalences(p)
                pairs += [("dual_is_lattice", rr.dual_is_lattice),
                          ("boundary_volume_identity", rr.volume_identity_holds),
                          ("delta_palindromic", rr.palindromic),
                          ("reflexive_criteria_agree", rr.verdicts_agree)]
                passed &= rr.verdicts_agree
            except LatpolyError as exc:
                pairs.append(("reflexive_criteria", f"not applicable: {exc}"))
            sf = check_smooth_fano_equivalences(p)
            if sf.applicable:
                pairs += [("facet_bases_unimodular", sf.facet_basis_ok),
                          ("h_equals_delta", sf.h_equals_delta),
                          ("facets_equal_volume", sf.facets_equal_volume)]
            else:
                pairs.append(("smooth_fano_criteria", sf.notes[0]))
        c = args.idp_max or (2 if everything else None)
        if c:
            rep = idp_check(p, c)
            pairs += [("idp_cmax", c), ("idp_holds", rep.holds_up_to_c_max)]
            for level in rep.per_level:
                if level.failures:
                    pairs.append((f"idp_failures_{level.c}", [list(z) for z in level.failures]))
            passed &= rep.holds_up_to_c_max
        _emit(out, pairs)
        if not passed:
            status = EXIT_CHECK_FAILED
    return status


def _cmd_triangulate(args, out) -> int:
    status = EXIT_OK
    for rec in _load(args.file):
        p = rec.polytope()
        try:
            t = cone_triangulation(p)
        except LatpolyError as exc:
            _emit(out, [("polytope", rec.id), ("error", str(exc))])
            status = EXIT_CHECK_FAILED
            continue
        pairs: list[tuple[str, object]] = [
            ("polytope", rec.id),
            ("simplices", len(t.simplices)),
        ]
        for s in t.simplices:
            pairs.append(("simplex", f"{_fmt([list(v) for v in s.vertices])} det {s.det}"))
        pairs += [
            ("det_sum", sum(t.dets)),
            ("normalized_volume", normalized_volume(p)),
            ("unimodular", is_unimodular_triangulation(t)),
            ("lcm_index", triangulation_index_lcm(t)),
        ]
        _emit(out, pairs)
    return status


def _cmd_bounds(args, out) -> int:
    d, n = args.dim, args.n
    _emit(out, [
        ("dim", d),
        ("n", n),
        ("cyclic_facets", cyclic_facet_count(n, d)),
        ("stacked_f", list(stacked_f_vector(n, d).f)),
        ("mcmullen_h", [mcmullen_h_bound(n, d, i) for i in range(d + 1)]),
        ("casagrande", casagrande_volume_bound(d)),
        ("conjecture", conjecture_bound(d)),
    ])
    return EXIT_OK


def _cmd_sandwich(args, out) -> int:
    status = EXIT_OK
    for rec in _load(args.file):
        b = check_volume_sandwich(rec.polytope())
        _emit(out, [("polytope", rec.id), ("n", b.n), ("lower", b.lower), ("actual", b.actual),
                    ("upper", b.upper), ("within", b.within)]
              + [("note", note) for note in b.notes])
        if not b.within:
            status = EXIT_CHECK_FAILED
    return status


def _cmd_conjecture(args, out) -> int:
    data = [(r.id, r.polytope()) for r in _load(args.dataset)]
    rec = evaluate_conjecture(data, args.dim)
    pairs: list[tuple[str, object]] = [
        ("dim", rec.dim),
        ("bound", rec.bound),
        ("max_normalized_volume", rec.max_normalized_volume),
        ("attainers", rec.attainers),
        ("attainer_vertex_counts", rec.attainer_vertex_counts),
        ("centrally_symmetric", rec.centrally_symmetric_flags),
        ("attainer_classes", rec.attainer_classes),
        ("skipped", len(rec.skipped)),
    ]
    pairs += [(f"claim_{k}", "undecided" if v is None else v) for k, v in rec.claims.items()]
    pairs += [("note", note) for note in rec.notes]
    _emit(out, pairs)
    return EXIT_CHECK_FAILED if any(v is False for v in rec.claims.values()) else EXIT_OK


def _cmd_batch(args, out) -> int:
    checks = frozenset(ALL_CHECKS)
    if args.checks:
        checks = frozenset(c.strip() for c in args.checks.split(","))
        unknown = checks - set(ALL_CHECKS)
        if unknown:
            raise _UsageError(f"latpoly: unknown checks: {', '.join(sorted(unknown))}\n")
    reports = batch_check(_load(args.directory), BatchConfig(checks, args.idp_max))
    text = write_report(reports, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_CHECK_FAILED if any(r.status == FAILED for r in reports) else EXIT_OK


COMMANDS = {
    "delta": _cmd_delta,
    "check": _cmd_check,
    "triangulate": _cmd_triangulate,
    "bounds": _cmd_bounds,
    "sandwich": _cmd_sandwich,
    "conjecture": _cmd_conjecture,
    "batch": _cmd_batch,
}


def run(argv: Sequence[str], out: TextIO, err: TextIO) -> int:
    try:
        args = build_parser().parse_args(list(argv))
        if getattr(args, "idp_max", None) is not None and args.idp_max < 1:
            raise _UsageError("latpoly: --idp-max must be positive\n")
        return COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(str(exc))
        return EXIT_USAGE
    except LatpolyError as exc:
        err.write(f"latpoly: {exc}\n")
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv, sys.stdout, sys.stderr)


if __name__ == "__main__":
    raise SystemExit(main())
