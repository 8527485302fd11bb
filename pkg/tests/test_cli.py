import io
import os
from pathlib import Path
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from terravis.cli import main
from terravis.graph import parse_graph
from terravis.render import RenderSpec, render_svg
from terravis.terrain import parse_terrain, visibility_graph

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"
SVG = "{http://www.w3.org/2000/svg}"


def run(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    old = dict(os.environ)
    if env:
        os.environ.update(env)
    try:
        code = main([str(a) for a in argv], out=out, err=err)
    finally:
        os.environ.clear()
        os.environ.update(old)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "name, argv, code",
    [
        ("vg_peak", ["vg", DATA / "peak.terrain"], 0),
        ("vg_zigzag", ["vg", DATA / "zigzag.terrain"], 0),
        ("persistence_crossing", ["persistence", DATA / "crossing.graph"], 1),
        ("persistence_bar", ["persistence", DATA / "bar.graph"], 1),
        ("reconstruct_one_chord", ["reconstruct", DATA / "one_chord.graph", DATA / "x4.txt"], 0),
        ("reconstruct_gprime_uniform", ["reconstruct", DATA / "gprime.graph", DATA / "uniform7.txt"], 1),
        ("gen_gprime", ["gen", "gprime"], 0),
        ("render_zigzag", ["render", DATA / "zigzag.terrain", "--width", 400, "--height", 200, "--margin", 20], 0),
    ],
)
def test_golden(name, argv, code):
    got_code, out, _ = run(*argv)
    assert got_code == code
    assert out == (GOLDEN / f"{name}.out").read_text()


def test_vg_two_points(tmp_path):
    f = tmp_path / "t.terrain"
    f.write_text("0 0\n1 5\n")
    assert run("vg", f)[1] == "2\n0 1\n"


def test_vg_errors():
    code, _, err = run("vg", DATA / "dup.terrain")
    assert code == 3 and "line 3" in err
    assert run("vg", DATA / "bad.terrain")[0] == 2
    assert run("vg", DATA / "missing.terrain")[0] == 2


def test_persistence_gstar(tmp_path):
    f = tmp_path / "gstar.graph"
    f.write_text(run("gen", "gstar")[1])
    code, out, _ = run("persistence", f)
    assert (code, out) == (0, "PERSISTENT\n")
    assert run("persistence", DATA / "bad.graph")[0] == 2


def test_reconstruct_roundtrip_through_vg(tmp_path):
    code, out, _ = run("reconstruct", DATA / "gprime.graph", DATA / "spread7.txt", "--epsilon", "1/2")
    assert code == 0
    t = tmp_path / "t.terrain"
    t.write_text(out)
    code, out, _ = run("vg", t)
    assert parse_graph(out) == parse_graph((DATA / "gprime.graph").read_text())


def test_reconstruct_prune_and_system_out(tmp_path):
    sysfile = tmp_path / "sys.txt"
    code, out, _ = run("reconstruct", DATA / "one_chord.graph", DATA / "x4.txt", "--prune", "--system-out", sysfile)
    assert code == 0
    assert sysfile.read_text().splitlines()[0] == "2 4 1"


def test_reconstruct_errors(tmp_path):
    assert run("reconstruct", DATA / "crossing.graph", DATA / "x4.txt")[0] == 2  # wrong length
    x5 = tmp_path / "x5.txt"
    x5.write_text("0 1 2 3 4\n")
    assert run("reconstruct", DATA / "crossing.graph", x5)[0] == 4
    assert run("reconstruct", DATA / "bad.graph", x5)[0] == 2
    assert run("reconstruct", DATA / "one_chord.graph", DATA / "x4.txt", "--epsilon", "0")[0] == 2
    assert run("reconstruct", DATA / "one_chord.graph", DATA / "x4.txt", "--epsilon", "abc")[0] == 2


def test_verify_theorem_seed_from_env():
    code, out, _ = run("verify-theorem", "--samples", 2, env={"TERRAVIS_SEED": "5"})
    assert code == 0 and "seed 5" in out and out.rstrip().endswith("PASS")
    code, out, _ = run("verify-theorem", "--samples", 2, "--seed", 6, env={"TERRAVIS_SEED": "5"})
    assert "seed 6" in out
    assert run("verify-theorem", "--samples", 0)[0] == 2
    assert run("verify-theorem", env={"TERRAVIS_SEED": "x"})[0] == 2


def test_usage_errors():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2


def svg_counts(svg):
    root = ET.fromstring(svg)
    polylines = root.findall(f"{SVG}polyline")
    circles = root.findall(f"{SVG}circle")
    chords = [e for e in root.findall(f"{SVG}line") if e.get("stroke-dasharray")]
    hi = [c for c in circles if "highlight" in c.get("class", "")]
    return polylines, circles, chords, hi


def test_render_counts():
    T = parse_terrain((DATA / "zigzag.terrain").read_text())
    polylines, circles, chords, hi = svg_counts(render_svg(T))
    assert len(polylines) == 1 and len(circles) == 4
    assert len(chords) == len(visibility_graph(T).chords())
    assert hi == []
    _, _, chords, _ = svg_counts(render_svg(T, RenderSpec(draw_visibility_edges=False)))
    assert chords == []


def test_render_two_points():
    T = parse_terrain("0 0\n1 1\n")
    polylines, circles, chords, _ = svg_counts(render_svg(T))
    assert len(polylines[0].get("points").split()) == 2
    assert chords == []


def test_render_highlight_cli():
    code, out, _ = run("render", DATA / "zigzag.terrain", "--highlight", "0,3")
    assert code == 0
    assert len(svg_counts(out)[3]) == 2
    assert run("render", DATA / "zigzag.terrain", "--width", 50)[0] == 2
    assert run("render", DATA / "zigzag.terrain", "--highlight", "a")[0] == 2
    assert run("render", DATA / "bad.terrain")[0] == 2


def test_render_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec(width=80, height=400, margin=40)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "terravis", "vg", str(DATA / "peak.terrain")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "vg_peak.out").read_text()
