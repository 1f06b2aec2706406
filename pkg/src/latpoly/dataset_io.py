"""Polytope text format, batch checking and report serialization.

Polytope files look like::

    # comment
    polytope hexagon
    dim 2
    vertices 6
    1 0
    ...

Reports are written one JSON object per line with a fixed key order.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .bounds import boundary_point_count, check_delta_unimodal, check_volume_sandwich
from .ehrhart import check_volume_identity, delta_vector
from .errors import DegenerateInputError, LatpolyError, ParseError, ValidationError
from .idp import idp_check
from .polytope import Polytope, f_vector, h_vector, make_polytope, normalized_volume, origin_in_interior
from .reflexive import check_reflexive_equivalences, check_smooth_fano_equivalences, is_reflexive, is_smooth_fano
from .triangulation import boundary_triangulation, check_hibi_inequality, verify_oda_theorem

ALL_CHECKS = ("reflexive", "smooth_fano", "ehrhart", "fh", "equivalences", "hibi", "oda", "idp", "bounds")


@dataclass(frozen=True)
class PolytopeRecord:
    id: str
    dim: int
    vertices: tuple[tuple[int, ...], ...]
    source: str = ""

    def polytope(self) -> Polytope:
        return make_polytope(self.dim, self.vertices)


def _tokens(line: str) -> list[str]:
    return line.split()


def parse_polytopes(stream: TextIO | str, source: str = "<input>") -> list[PolytopeRecord]:
    text = stream if isinstance(stream, str) else stream.read()
    lines = text.split("\n")
    records: list[PolytopeRecord] = []
    seen: set[str] = set()
    i = 0

    def next_content(i: int) -> int:
        while i < len(lines) and (not lines[i].strip() or lines[i].lstrip().startswith("#")):
            i += 1
        return i

    def header(i: int, key: str) -> tuple[str, int]:
        i = next_content(i)
        if i >= len(lines):
            raise ParseError(f"unexpected end of input, expected '{key}'", i + 1)
        toks = _tokens(lines[i])
        if len(toks) != 2 or toks[0] != key:
            raise ParseError(f"expected '{key} <value>', got {lines[i]!r}", i + 1, 1)
        return toks[1], i + 1

    def integer(tok: str, line: int, col: int) -> int:
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}", line, col) from None

    while True:
        i = next_content(i)
        if i >= len(lines):
            break
        start = i
        ident, i = header(i, "polytope")
        dim_tok, i = header(i, "dim")
        dim = integer(dim_tok, i, 5)
        if dim < 1:
            raise ParseError(f"dimension must be positive, got {dim}", i)
        nv_tok, i = header(i, "vertices")
        nv = integer(nv_tok, i, 10)
        rows = []
        for _ in range(nv):
            if i >= len(lines) or not lines[i].strip() or lines[i].lstrip().startswith("#"):
                raise ParseError(f"expected {nv} coordinate rows for {ident!r}, got {len(rows)}", i + 1)
            toks = _tokens(lines[i])
            if len(toks) != dim:
                raise ParseError(f"expected {dim} coordinates, got {len(toks)}", i + 1)
            col = 1
            row = []
            for t in toks:
                col = lines[i].index(t, col - 1) + 1
                row.append(integer(t, i + 1, col))
                col += len(t)
            rows.append(tuple(row))
            i += 1
        if ident in seen:
            raise ValidationError(f"duplicate polytope id {ident!r} ({source}:{start + 1})")
        seen.add(ident)
        records.append(PolytopeRecord(ident, dim, tuple(rows), f"{source}:{start + 1}"))
    return records


def format_polytopes(records: Iterable[PolytopeRecord]) -> str:
    blocks = []
    for r in records:
        lines = [f"polytope {r.id}", f"dim {r.dim}", f"vertices {len(r.vertices)}"]
        lines += [" ".join(str(x) for x in v) for v in r.vertices]
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)


def load_directory(path: str | Path) -> list[PolytopeRecord]:
    """Every ``*.poly`` file under ``path`` (recursively, sorted); ids must be unique."""
    path = Path(path)
    files = [path] if path.is_file() else sorted(path.rglob("*.poly"))
    records: list[PolytopeRecord] = []
    seen: set[str] = set()
    for f in files:
        for r in parse_polytopes(f.read_text(encoding="utf-8"), source=str(f)):
            if r.id in seen:
                raise ValidationError(f"duplicate polytope id {r.id!r} ({r.source})")
            seen.add(r.id)
            records.append(r)
    return records


OK, FAILED, SKIPPED = "ok", "failed", "skipped"


@dataclass
class CheckReport:
    id: str
    dim: int
    n_vertices: int | None = None
    n_boundary_points: int | None = None
    reflexive: bool | None = None
    smooth_fano: bool | None = None
    normalized_volume: int | None = None
    delta: list[int] | None = None
    h: list[int] | None = None
    f: list[int] | None = None
    oda: bool | None = None
    idp_cmax: int | None = None
    idp_holds: bool | None = None
    sandwich_lower: int | None = None
    sandwich_upper: int | None = None
    within: bool | None = None
    notes: list[str] = field(default_factory=list)
    status: str = OK


@dataclass(frozen=True)
class BatchConfig:
    checks: frozenset[str] = frozenset(ALL_CHECKS)
    idp_cmax: int = 2


def _run_checks(rec: PolytopeRecord, config: BatchConfig) -> CheckReport:
    report = CheckReport(rec.id, rec.dim)
    try:
        p = rec.polytope()
    except DegenerateInputError as exc:
        report.status = SKIPPED
        report.notes.append(f"degenerate: {exc}")
        return report
    on = config.checks
    report.n_vertices = len(p.vertices)
    report.n_boundary_points = boundary_point_count(p)
    report.normalized_volume = normalized_volume(p)
    refl = is_reflexive(p)
    smooth = is_smooth_fano(p)
    if "reflexive" in on:
        report.reflexive = refl
    if "smooth_fano" in on:
        report.smooth_fano = smooth
    if "ehrhart" in on:
        report.delta = list(delta_vector(p).delta)
        if not check_volume_identity(p):
            report.status = FAILED
            report.notes.append("delta sum differs from normalized volume")
    if "fh" in on and p.is_simplicial:
        report.f = list(f_vector(p).f)
        report.h = list(h_vector(p).h)
    if "equivalences" in on and origin_in_interior(p):
        rr = check_reflexive_equivalences(p)
        if not rr.verdicts_agree:
            report.status = FAILED
            report.notes.append(f"reflexivity criteria disagree: {rr}")
        if p.is_simplicial and refl:
            check_smooth_fano_equivalences(p)
    if "hibi" in on and refl:
        t = boundary_triangulation(p, use_all_boundary_points=True)
        hibi = check_hibi_inequality(p, t)
        report.notes.append("hibi: equality (unimodular)" if hibi.equality
                            else f"hibi: strict h={list(hibi.h)} < delta={list(hibi.delta)}")
        if p.is_simplicial:
            hb = check_hibi_inequality(p, boundary_triangulation(p))
            if not hb.equality:
                report.notes.append(f"hibi: boundary complex strict h={list(hb.h)}")
    if "oda" in on and smooth:
        report.oda = verify_oda_theorem(p)
    if "idp" in on:
        idp = idp_check(p, config.idp_cmax)
        report.idp_cmax = config.idp_cmax
        report.idp_holds = idp.holds_up_to_c_max
        if smooth and not idp.holds_up_to_c_max:
            report.status = FAILED
            report.notes.append("smooth Fano polytope failed the IDP check")
    if "bounds" in on and refl:
        b = check_volume_sandwich(p)
        report.sandwich_lower, report.sandwich_upper, report.within = b.lower, b.upper, b.within
        report.notes.extend(b.notes)
        if b.lower > b.actual or (smooth and not b.within):
            report.status = FAILED
            report.notes.append("volume bound violated")
        if smooth:
            u = check_delta_unimodal(p)
            if not (u.unimodal and u.mcmullen_ok):
                report.status = FAILED
                report.notes.append("delta-vector unimodality or McMullen bound violated")
    return report


def batch_check(records: Sequence[PolytopeRecord], config: BatchConfig | None = None) -> list[CheckReport]:
    """Run the configured checks on every record, in input order.

    A theorem violation or other library error marks that record failed and
    the batch carries on.
    """
    config = config or BatchConfig()
    out = []
    for rec in records:
        try:
            out.append(_run_checks(rec, config))
        except LatpolyError as exc:
            out.append(CheckReport(rec.id, rec.dim, status=FAILED,
                                   notes=[f"{type(exc).__name__}: {exc}"]))
    return out


REPORT_FIELDS = tuple(f.name for f in fields(CheckReport))


def write_report(reports: Iterable[CheckReport], fmt: str = "lines") -> str:
    reports = list(reports)
    if fmt == "lines":
        return "".join(json.dumps(asdict(r), separators=(", ", ": ")) + "\n" for r in reports)
    if fmt == "table":
        cols = ["id", "dim", "status", "reflexive", "smooth_fano", "normalized_volume",
                "delta", "h", "oda", "idp_holds", "within"]
        rows = [cols] + [[_cell(getattr(r, c)) for c in cols] for r in reports]
        widths = [max(len(row[i]) for row in rows) for i in range(len(cols))]
        return "".join(
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in rows
        )
    raise ValueError(f"unknown report format {fmt!r}")


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ",".join(str(x) for x in v) + "]"
    return str(v)


def read_report(text: str) -> list[CheckReport]:
    return [CheckReport(**json.loads(line)) for line in text.splitlines() if line.strip()]
