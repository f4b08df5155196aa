import json
from fractions import Fraction

import pytest

from linkspace.cli import main
from linkspace.cwcomplex import build_complex
from linkspace.export import (
    REPRESENTATIVES,
    IoFailure,
    Representative,
    UnsupportedFormat,
    complex_from_json,
    complex_to_json,
    export_mesh,
    parse_lengths,
    render_tables,
    report_to_json,
    verify_all,
    write_output,
)
from linkspace.linkage import LinkageError, make_linkage
from linkspace.topology import classify_linkage

from oracles import is_watertight, parse_obj


def test_parse_lengths_forms():
    assert parse_lengths("1,1,1,1/100,2") == [1, 1, 1, Fraction(1, 100), 2]
    assert parse_lengths("1,1,eps,eps,1", Fraction(1, 50)) == [
        1,
        1,
        Fraction(1, 50),
        Fraction(1, 50),
        1,
    ]
    with pytest.raises(LinkageError):
        parse_lengths("1,banana,2")
    with pytest.raises(LinkageError):
        parse_lengths("")


def test_obj_export_of_the_sphere(meshes):
    mesh = next(m for rep, _, m in meshes if rep.spec == "1,1,1,1,3")
    text = export_mesh(mesh, "obj")
    assert text.startswith("# linkage: 1,1,1,1,3\n# classification: sphere\n")
    vertices, faces = parse_obj(text)
    assert len(vertices) == 24
    assert len(faces) == 14
    assert is_watertight(faces)


def test_obj_triangulation_counts(meshes):
    mesh = next(m for rep, _, m in meshes if rep.spec == "1,1,1,1,1")
    vertices, faces = parse_obj(export_mesh(mesh, "obj", triangulate=True))
    assert len(vertices) == 24
    assert len(faces) == 60  # 30 quads fan into 2 triangles each
    assert all(len(f) == 3 for f in faces)


def test_all_representative_objs_are_watertight(meshes):
    for _, _, mesh in meshes:
        _, faces = parse_obj(export_mesh(mesh, "obj"))
        assert is_watertight(faces)


def test_ply_export_structure(meshes):
    mesh = next(m for rep, _, m in meshes if rep.spec == "1,1,1,1,3")
    lines = export_mesh(mesh, "ply").splitlines()
    assert lines[0] == "ply"
    assert "element vertex 24" in lines
    assert "element face 14" in lines
    body = lines[lines.index("end_header") + 1 :]
    assert len(body) == 24 + 14
    assert body[24].startswith("6 ")  # first face (a hexagon) lists 6 indices


def test_export_rejects_unknown_formats(meshes):
    mesh = meshes[0][2]
    with pytest.raises(UnsupportedFormat):
        export_mesh(mesh, "stl")


def test_write_output_failure():
    with pytest.raises(IoFailure):
        write_output("x", "")
    with pytest.raises(IoFailure):
        write_output("x", "/nonexistent-dir/deep/file.obj")


def test_export_is_deterministic(meshes):
    from linkspace.geometry import perform_surgery

    for _, linkage, mesh in meshes:
        again = perform_surgery(linkage)
        assert export_mesh(mesh, "obj") == export_mesh(again, "obj")
        assert export_mesh(mesh, "ply") == export_mesh(again, "ply")


def test_complex_json_round_trip(representatives):
    for _, linkage in representatives:
        complex_ = build_complex(linkage)
        text = complex_to_json(complex_)
        assert complex_from_json(text) == complex_
        doc = json.loads(text)
        assert doc["schema"] == 1
        assert [c["dim"] for c in doc["cells"]] == sorted(
            c["dim"] for c in doc["cells"]
        )


def test_report_json_schema(representatives):
    rep, linkage = representatives[0]
    doc = json.loads(report_to_json(classify_linkage(linkage), linkage))
    assert doc["schema"] == 1
    assert doc["classification"] == "sphere"
    assert doc["chi"] == 2
    assert doc["orientable"] is True
    assert doc["genus"] == 0
    assert doc["components"] == [{"chi": 2, "orientable": True, "genus": 0}]


def test_render_tables_spot_rows():
    text = render_tables()
    lines = text.splitlines()
    row4 = next(l for l in lines if l.lstrip().startswith("4  {4}{1,2,3}{5}"))
    assert row4.count("v") == 1
    step3 = lines[lines.index("step 3: diagonal faces patched in (eps = 1/100)") :]
    for i in range(1, 6):
        row = next(l for l in step3 if l.lstrip().startswith(f"{i}  "))
        assert "v" not in row.split("}")[-1]
    row16 = next(l for l in step3 if l.lstrip().startswith("16  "))
    assert row16.split("}")[-1].count("v") == 5
    assert "misprinted" in text


def test_verify_all_passes():
    result = verify_all()
    assert result.ok
    assert sum(1 for l in result.lines if l.startswith("[PASS]")) == 6


def test_verify_all_reports_corrupted_expectations():
    corrupted = tuple(
        Representative(r.spec, "genus-5 surface", r.components, r.chi)
        if r.spec == "1,1,1,1,1"
        else r
        for r in REPRESENTATIVES
    )
    result = verify_all(expectations=corrupted)
    assert not result.ok
    fail = next(l for l in result.lines if l.startswith("[FAIL]"))
    assert "expected 'genus-5 surface'" in fail


def test_verify_all_flags_oversized_epsilon():
    result = verify_all(epsilon=Fraction(1, 2))
    assert not result.ok
    fail = next(l for l in result.lines if "(1,1,eps,eps,1)" in l)
    assert fail.startswith("[FAIL]")


def test_cli_classify_text(capsys):
    assert main(["classify", "1,1,1,1,3"]) == 0
    out = capsys.readouterr().out
    assert "classification: sphere" in out


def test_cli_classify_json(capsys):
    assert main(["classify", "2,1,1,1,2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["classification"] == "genus-3 surface"


def test_cli_epsilon_override(capsys):
    assert main(["classify", "1,1,1,eps,2", "--epsilon", "1/1000"]) == 0
    assert "classification: torus" in capsys.readouterr().out


def test_cli_invalid_input_exit_code(capsys):
    assert main(["classify", "1,2,3,oops"]) == 2
    assert main(["classify", "1,1,1,1,2"]) == 2  # non-generic
    assert main(["mesh", "2,1,1,1", "-o", "unused.obj"]) == 2  # not a pentagon
    assert main(["mesh", "1,1,1,1,3", "-o", ""]) == 2  # empty path


def test_cli_verify_exit_code(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 6


def test_cli_tables(capsys):
    assert main(["tables"]) == 0
    assert "{2,3,4}{1}{5}" in capsys.readouterr().out


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "linkspace", "classify", "1,1,1,1,3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "classification: sphere" in proc.stdout


def test_cli_mesh_and_complex_files(tmp_path, capsys):
    obj = tmp_path / "model.obj"
    assert main(["mesh", "1,1,1,1,1", "-o", str(obj)]) == 0
    vertices, faces = parse_obj(obj.read_text())
    assert (len(vertices), len(faces)) == (24, 30)
    ply = tmp_path / "model.ply"
    assert main(["mesh", "1,1,1,1,1", "--format", "ply", "-o", str(ply)]) == 0
    assert ply.read_text().startswith("ply\n")
    cx = tmp_path / "complex.json"
    assert main(["complex", "2,2,1,1,3", "-o", str(cx)]) == 0
    assert complex_from_json(cx.read_text()) == build_complex(
        make_linkage([2, 2, 1, 1, 3])
    )
