"""Simplex text format, census ingestion, and the outlook report.

Text format: one record is a dimension line ``d`` followed by d+1 lines
of d space-separated integers; records are separated by blank lines and
``#`` starts a comment.  A comment on the dimension line becomes the
record's label.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .bounds import (
    ApplicabilityError,
    best_facet_bound,
    pikhurko,
    proof_trace,
    vdc_check,
)
from .constructions import zpw_simplex
from .geometry import DegeneracyError, LatticeSimplex, interior_points, volume
from .unimodular import canonical_form

SCHEMA_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message, line=None):
        loc = f"line {line}: " if line is not None else ""
        super().__init__(f"{loc}{message}")
        self.line = line


class DataIntegrityError(ValueError):
    pass


@dataclass(frozen=True)
class SimplexRecord:
    dim: int
    vertices: tuple[tuple[int, ...], ...]
    label: str | None = None

    def to_simplex(self) -> LatticeSimplex:
        return LatticeSimplex(self.vertices)


def parse_simplices(text: str) -> list[SimplexRecord]:
    records = []
    lines = text.splitlines()
    i = 0
    n = len(lines)
    while i < n:
        raw = lines[i]
        content, _, comment = raw.partition("#")
        if not content.strip():
            i += 1
            continue
        dim_line = i + 1
        try:
            dim = int(content.strip())
        except ValueError:
            raise ParseError(f"expected a dimension, got {content.strip()!r}",
                             dim_line)
        if dim < 1:
            raise ParseError("dimension must be >= 1", dim_line)
        label = comment.strip() or None
        verts = []
        i += 1
        while len(verts) < dim + 1 and i < n:
            content, _, _ = lines[i].partition("#")
            stripped = content.strip()
            if not stripped:
                if "#" in lines[i]:
                    i += 1
                    continue
                break
            parts = stripped.split()
            if len(parts) != dim:
                raise ParseError(
                    f"expected {dim} coordinates, got {len(parts)}", i + 1
                )
            try:
                verts.append(tuple(int(p) for p in parts))
            except ValueError:
                raise ParseError(f"malformed integer in {stripped!r}", i + 1)
            i += 1
        if len(verts) != dim + 1:
            raise ParseError(
                f"expected {dim + 1} vertices for dimension {dim}, "
                f"got {len(verts)}",
                dim_line,
            )
        try:
            LatticeSimplex(verts)
        except DegeneracyError as exc:
            raise ParseError(str(exc), dim_line)
        records.append(SimplexRecord(dim, tuple(verts), label))
    return records


def format_simplex(s: LatticeSimplex, label: str | None = None) -> str:
    head = str(s.dim) + (f"  # {label}" if label else "")
    body = "\n".join(" ".join(str(c) for c in v) for v in s.vertices)
    return f"{head}\n{body}\n"


def format_census(simplices, k: int, cap) -> str:
    header = f"# k={k} cap={cap} count={len(simplices)}\n"
    return header + "\n".join(format_simplex(s) for s in simplices)


def ingest_census(path, expected_k: int) -> list[LatticeSimplex]:
    """Load and validate a census file.

    Every record must have exactly expected_k interior lattice points and
    no two records may be unimodularly equivalent.
    """
    with open(path) as fh:
        records = parse_simplices(fh.read())
    simplices = []
    seen = {}
    for idx, rec in enumerate(records, 1):
        s = rec.to_simplex()
        name = rec.label or f"record {idx}"
        count = len(interior_points(s, limit=expected_k + 1))
        if count != expected_k:
            raise DataIntegrityError(
                f"{name}: expected {expected_k} interior lattice points, "
                f"found {count}"
            )
        key = canonical_form(s).key()
        if key in seen:
            raise DataIntegrityError(
                f"{name}: duplicate of {seen[key]} under unimodular equivalence"
            )
        seen[key] = name
        simplices.append(s)
    return simplices


def _rat(x) -> str:
    return str(Fraction(x))


def analyze_simplex(vertices) -> dict:
    """Full per-simplex bound report (the unit of CLI/JSON output)."""
    s = LatticeSimplex(vertices)
    pts = interior_points(s)
    k = len(pts)
    vol = volume(s)
    detail = {
        "vertices": [list(v) for v in s.vertices],
        "canonical": canonical_form(s).encoding,
        "volume": _rat(vol),
        "interiorCount": k,
    }
    if k >= 1:
        pik = pikhurko(s)
        detail["nu"] = _rat(pik.nu)
        detail["nuHolds"] = vol <= pik.nu
    try:
        fb = best_facet_bound(s)
        detail["inSk1"] = True
        detail["facetBound"] = {
            "facet": list(fb.facet.vertex_indices),
            "relintPoint": list(fb.relint_point),
            "betas": [_rat(b) for b in fb.betas],
            "bound": _rat(fb.bound),
            "tight": fb.tight,
        }
        trace = proof_trace(s, fb.facet)
        vdc = vdc_check(trace.lattice, trace.box)
        detail["vdc"] = {
            "lhs": _rat(vdc.lhs),
            "rhs": _rat(vdc.rhs),
            "holds": vdc.holds,
            "tight": vdc.tight,
            "ySize": len(trace.y_set),
        }
    except ApplicabilityError:
        detail["inSk1"] = False
    return detail


def _worker_count() -> int:
    raw = os.environ.get("LATTICEBOUND_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def outlook_report(census) -> dict:
    """Count census members with a one-relint-point facet and those whose
    per-interior-point bound strictly exceeds vol(S_{3,2}) = 18."""
    threshold = volume(zpw_simplex(3, 2))
    vertex_lists = [s.vertices for s in census]
    workers = _worker_count()
    if workers > 1 and len(vertex_lists) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            details = list(pool.map(analyze_simplex, vertex_lists))
    else:
        details = [analyze_simplex(v) for v in vertex_lists]
    details.sort(key=lambda d: d["canonical"])
    for d in details:
        d["nuExceedsThreshold"] = (
            "nu" in d and Fraction(d["nu"]) > threshold
        )
    return {
        "schemaVersion": SCHEMA_VERSION,
        "total": len(details),
        "inSk1": sum(1 for d in details if d["inSk1"]),
        "nuExceeds": sum(1 for d in details if d["nuExceedsThreshold"]),
        "threshold": _rat(threshold),
        "details": details,
    }
