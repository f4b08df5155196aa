"""Serialization and the verification harness.

Everything here is deterministic: two runs on the same input produce
byte-identical OBJ/PLY/JSON output.  Coordinates become floats only at
export; the exact rational data (lengths, 4D vertex coordinates) travels in
comments and JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import topology
from .cwcomplex import (
    Cell,
    CWComplex,
    MembershipTable,
    facet_membership_table,
)
from .geometry import SurfaceMesh
from .linkage import (
    DEFAULT_EPSILON,
    Linkage,
    LinkageError,
    make_linkage,
    parse_rational,
)
from .partitions import parse_partition


class UnsupportedFormat(ValueError):
    pass


class IoFailure(OSError):
    pass


def parse_lengths(text: str, epsilon: Fraction = DEFAULT_EPSILON) -> list[Fraction]:
    """Parse a comma-separated length spec; each token is `int`, `int/int`
    or the symbol `eps` (replaced by the given epsilon)."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise LinkageError(f"no lengths in {text!r}")
    return [
        Fraction(epsilon) if t == "eps" else parse_rational(t) for t in tokens
    ]


def write_output(text: str, path: str) -> None:
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(f"cannot write {path!r}: {exc}") from exc


def _fmt_coord(x: float) -> str:
    value = round(x, 6)
    if value == 0:
        value = 0.0  # avoid "-0.000000"
    return f"{value:.6f}"


def _face_rows(mesh: SurfaceMesh, triangulate: bool):
    for face in sorted(mesh.faces, key=lambda f: str(f.label)):
        if triangulate:
            anchor = face.cycle[0]
            for b, c in zip(face.cycle[1:], face.cycle[2:]):
                yield face, (anchor, b, c)
        else:
            yield face, face.cycle


def export_mesh(mesh: SurfaceMesh, fmt: str = "obj", triangulate: bool = False) -> str:
    """Render the mesh as OBJ or ASCII PLY text.

    Vertices are sorted by permutation label (the mesh is already built that
    way); faces are n-gon records, or fans from each cycle's first vertex
    when `triangulate` is set.
    """
    if fmt not in ("obj", "ply"):
        raise UnsupportedFormat(f"unsupported mesh format {fmt!r}")
    report = topology.analyze(mesh)
    if fmt == "obj":
        lines = [
            f"# linkage: {mesh.linkage.spec()}",
            f"# classification: {report.classification}",
            f"# vertices: {len(mesh.vertices)}  edges: {len(mesh.edges)}  faces: {len(mesh.faces)}",
        ]
        for v in mesh.vertices:
            lines.append("v " + " ".join(_fmt_coord(c) for c in v.point3))
        for face, cycle in _face_rows(mesh, triangulate):
            lines.append(f"# face {face.label} {face.provenance}")
            lines.append("f " + " ".join(str(i + 1) for i in cycle))
        return "\n".join(lines) + "\n"
    face_rows = list(_face_rows(mesh, triangulate))
    lines = [
        "ply",
        "format ascii 1.0",
        f"comment linkage: {mesh.linkage.spec()}",
        f"comment classification: {report.classification}",
        f"element vertex {len(mesh.vertices)}",
        "property float x",
        "property float y",
        "property float z",
        f"element face {len(face_rows)}",
        "property list uchar int vertex_indices",
        "end_header",
    ]
    for v in mesh.vertices:
        lines.append(" ".join(_fmt_coord(c) for c in v.point3))
    for _, cycle in face_rows:
        lines.append(f"{len(cycle)} " + " ".join(str(i) for i in cycle))
    return "\n".join(lines) + "\n"


def complex_to_json(complex_: CWComplex) -> str:
    cells = []
    offset = [0]
    for d in range(len(complex_.cells_by_dim) - 1):
        offset.append(offset[-1] + len(complex_.cells_by_dim[d]))
    for d, layer in enumerate(complex_.cells_by_dim):
        for i, cell in enumerate(layer):
            cells.append(
                {
                    "dim": d,
                    "label": str(cell.label),
                    "boundary": [offset[d - 1] + j for j in complex_.boundary[d][i]]
                    if d > 0
                    else [],
                }
            )
    doc = {
        "schema": 1,
        "n": complex_.linkage.n,
        "lengths": [str(l) for l in complex_.linkage.lengths],
        "cells": cells,
    }
    return json.dumps(doc, indent=2) + "\n"


def complex_from_json(text: str) -> CWComplex:
    doc = json.loads(text)
    if doc.get("schema") != 1:
        raise ValueError(f"unknown schema {doc.get('schema')!r}")
    linkage = make_linkage([parse_rational(t) for t in doc["lengths"]])
    dims = max(c["dim"] for c in doc["cells"]) + 1
    cells_by_dim: list[list[Cell]] = [[] for _ in range(dims)]
    flat_position: list[tuple[int, int]] = []
    for c in doc["cells"]:
        d = c["dim"]
        flat_position.append((d, len(cells_by_dim[d])))
        cells_by_dim[d].append(Cell(parse_partition(c["label"]), d))
    boundary: list[list[tuple[int, ...]]] = [[] for _ in range(dims)]
    for c in doc["cells"]:
        d = c["dim"]
        boundary[d].append(tuple(flat_position[j][1] for j in c["boundary"]))
    return CWComplex(linkage, cells_by_dim, boundary)


def report_to_json(report: topology.TopologyReport, linkage: Linkage) -> str:
    single = report.components[0] if report.component_count == 1 else None
    doc = {
        "schema": 1,
        "lengths": [str(l) for l in linkage.lengths],
        "f_vector": list(report.f_vector),
        "components": [
            {
                "chi": c.euler_characteristic,
                "orientable": c.orientable,
                "genus": c.genus,
            }
            for c in report.components
        ],
        "chi": report.euler_characteristic,
        "orientable": single.orientable if single else None,
        "genus": single.genus if single else None,
        "classification": report.classification,
    }
    return json.dumps(doc, indent=2) + "\n"


def render_report(report: topology.TopologyReport, linkage: Linkage) -> str:
    lines = [
        f"linkage: {linkage.spec()}  (n={linkage.n})",
        "f-vector: " + " ".join(f"{c}" for c in report.f_vector),
        f"euler characteristic: {report.euler_characteristic}",
        f"components: {report.component_count}",
    ]
    for i, c in enumerate(report.components, 1):
        detail = f"  component {i}: chi={c.euler_characteristic}"
        if c.orientable is not None:
            detail += f" orientable={'yes' if c.orientable else 'no'}"
        if c.genus is not None:
            detail += f" genus={c.genus}"
        lines.append(detail)
    lines.append(f"classification: {report.classification}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Representative:
    """One of the six standard pentagons with its expected classification."""

    spec: str
    classification: str
    components: int
    chi: int

    def lengths(self, epsilon: Fraction) -> list[Fraction]:
        return parse_lengths(self.spec, epsilon)


REPRESENTATIVES: tuple[Representative, ...] = (
    Representative("1,1,1,1,3", "sphere", 1, 2),
    Representative("1,1,1,eps,2", "torus", 1, 0),
    Representative("2,2,1,1,3", "genus-2 surface", 1, -2),
    Representative("1,1,eps,eps,1", "2 tori", 2, 0),
    Representative("2,1,1,1,2", "genus-3 surface", 1, -4),
    Representative("1,1,1,1,1", "genus-4 surface", 1, -6),
)


def render_tables(epsilon: Fraction = DEFAULT_EPSILON) -> str:
    """Regenerate both facet-admissibility tables for the six standard
    pentagons, with 'v' marking admissible rows."""
    linkages = [make_linkage(r.lengths(epsilon)) for r in REPRESENTATIVES]
    columns = [f"({r.spec})" for r in REPRESENTATIVES]
    table = facet_membership_table(linkages, columns)
    return _render_membership(table, epsilon)


def _render_membership(table: MembershipTable, epsilon: Fraction) -> str:
    width = max(
        [len("partition")]
        + [len(r) for r, _ in table.step2]
        + [len(f"{a} & {b}") for (a, b), _ in table.step3]
    )
    col_widths = [max(len(c), 1) for c in table.columns]

    def row_line(idx: int, label: str, values) -> str:
        cells = "  ".join(
            ("v" if v else "-").center(w) for v, w in zip(values, col_widths)
        )
        return f"{idx:>2}  {label:<{width}}  {cells}"

    header = f"{'':>2}  {'partition':<{width}}  " + "  ".join(
        c.center(w) for c, w in zip(table.columns, col_widths)
    )
    lines = [f"step 2: permutohedron facets kept (eps = {epsilon})", "", header]
    for i, (label, values) in enumerate(table.step2, 1):
        lines.append(row_line(i, label, values))
    lines += ["", f"step 3: diagonal faces patched in (eps = {epsilon})", "", header]
    for i, ((a, b), values) in enumerate(table.step3, 1):
        lines.append(row_line(i, f"{a} & {b}", values))
    lines += [
        "",
        "note: step-2 row 8 is the reversal {2,3,4}{1}{5} of row 1; it is",
        "sometimes misprinted as {1,2,3}{1}{5}, which repeats 1 and omits 4.",
    ]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    lines: tuple[str, ...]

    def render(self) -> str:
        return "\n".join(self.lines) + "\n"


def verify_all(
    epsilon: Fraction = DEFAULT_EPSILON,
    expectations: tuple[Representative, ...] = REPRESENTATIVES,
) -> VerifyResult:
    """Classify the six standard pentagons and compare classification,
    component count and Euler characteristic against the expected values.
    Specs containing `eps` are re-checked at epsilon/10 to confirm the
    combinatorics has stabilised."""
    lines = []
    ok = True
    for rep in expectations:
        try:
            report = topology.classify_linkage(make_linkage(rep.lengths(epsilon)))
            got = (report.classification, report.component_count, report.euler_characteristic)
            want = (rep.classification, rep.components, rep.chi)
            good = got == want
            detail = f"got {got[0]!r}, {got[1]} component(s), chi={got[2]}"
            if good and "eps" in rep.spec:
                retry = topology.classify_linkage(
                    make_linkage(rep.lengths(epsilon / 10))
                )
                if retry.classification != report.classification:
                    good = False
                    detail += (
                        f"; UNSTABLE: eps/10 gives {retry.classification!r}"
                        f" (epsilon {epsilon} is too large)"
                    )
            if not good and got != want:
                detail += f"; expected {want[0]!r}, {want[1]} component(s), chi={want[2]}"
        except LinkageError as exc:
            good = False
            detail = f"construction failed: {exc}"
        ok = ok and good
        lines.append(f"[{'PASS' if good else 'FAIL'}] ({rep.spec}): {detail}")
    lines.append(f"verification {'passed' if ok else 'FAILED'} for {len(expectations)} linkages")
    return VerifyResult(ok, tuple(lines))
