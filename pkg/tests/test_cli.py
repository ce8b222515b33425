import json
import random

import pytest

from linecut import cli
from linecut.drawing import draw_on_lines
from linecut.errors import SearchExhausted
from linecut.generators import generic_lines, random_arrangement
from linecut.io import DrawingFile, GraphFile, LineSetFile, lines_to_file
from linecut.partition import pencil_arrangement
from linecut.planar import k4, octahedron, triangle


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def is_rational(s):
    return isinstance(s, str) and all(part.lstrip("-").isdigit() for part in s.split("/"))


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p

    rng = random.Random(5)
    return {
        "pencil": write("pencil.json", lines_to_file(pencil_arrangement(3).lines).serialize()),
        "six": write("six.json", lines_to_file(generic_lines(6, rng)).serialize()),
        "four": write("four.json", lines_to_file(pencil_arrangement(2).lines).serialize()),
        "three": write("three.json", lines_to_file(generic_lines(3, rng)).serialize()),
        "k4": write("k4.json", GraphFile(k4()).serialize()),
        "oct": write("oct.json", GraphFile(octahedron()).serialize()),
        "tri": write("tri.json", GraphFile(triangle()).serialize()),
        "nine": [write(f"nine{i}.json", lines_to_file(random_arrangement(9, rng).lines).serialize()) for i in range(3)],
        "dir": tmp_path,
    }


# -- successful runs -------------------------------------------------------


def test_mu(capsys, files):
    code, out, _ = run(capsys, "mu", "--lines", files["pencil"], "--halfplane", "1,0,0,<=")
    assert code == 0
    data = json.loads(out)
    assert data["mu"] == 3 and len(data["witness"]) == 3
    assert data["halfplane"] == "1*x + 0*y <= 0"


def test_cut_json_and_text(capsys, files):
    a, b = files["dir"] / "pa.json", files["dir"] / "pa.b.json"
    assert run(capsys, "pencils", "--k", 2, "--pair", "--out", a)[0] == 0
    assert b.exists()
    code, out, _ = run(capsys, "cut", "--lines-a", a, "--lines-b", b, "--json")
    assert code == 0
    data = json.loads(out)
    assert min(data["values"]) == 2
    assert data["targets"] == [2, 2]
    assert all(is_rational(data["cut"][k]) for k in "abc")
    assert [len(w) for side in data["witnesses"] for w in side] == data["values"]
    code, out, _ = run(capsys, "cut", "--lines-a", a, "--lines-b", b)
    assert code == 0 and out.startswith("cut: ")


def test_centerpoint(capsys, files):
    code, out, _ = run(capsys, "centerpoint", "--lines", files["six"])
    data = json.loads(out)
    assert code == 0 and data["depth"] >= data["bound"] == 2
    assert all(is_rational(c) for c in data["point"])


def test_pencils_single(capsys, files):
    out_file = files["dir"] / "p3.json"
    assert run(capsys, "pencils", "--k", 3, "--seed", 4, "--out", out_file)[0] == 0
    assert LineSetFile.parse(out_file.read_text()) == lines_to_file(pencil_arrangement(3, seed=4).lines)


def test_same_type(capsys, files):
    a, b, c = files["nine"]
    code, out, _ = run(capsys, "same-type", "--lines-a", a, "--lines-b", b, "--lines-c", c, "--target", 2)
    assert code == 0
    data = json.loads(out)
    assert len(data["subsets"]) == 3 and all(len(s) >= 2 for s in data["subsets"])
    assert 0 <= data["rounds"] <= 4


def test_convex_pos(capsys, files):
    lines = []
    for (cx, cy), slopes in (((0, 0), (1, 2)), ((10, 0), (3, 4)), ((0, 10), (5, 6))):
        lines += [{"a": str(m), "b": "-1", "c": str(m * cx - cy)} for m in slopes]
    p = files["dir"] / "sep.json"
    p.write_text(json.dumps({"lines": lines}))
    code, out, _ = run(capsys, "convex-pos", "--lines", p, "--k", 3, "--c", 1, "--m", 3)
    assert code == 0
    assert sorted(json.loads(out)["groups"]) == [[0, 1], [2, 3], [4, 5]]


def test_draw_and_verify(capsys, files):
    d, s = files["dir"] / "d.json", files["dir"] / "d.svg"
    code, _, _ = run(capsys, "draw", "--graph", files["oct"], "--lines", files["six"], "--out", d, "--svg", s, "--trace")
    assert code == 0
    assert "trace" in json.loads(d.read_text()) and "<svg " in s.read_text()
    code, out, _ = run(capsys, "verify", "--graph", files["oct"], "--lines", files["six"], "--drawing", d)
    assert code == 0
    assert out.splitlines()[:5] == [f"{c}: ok" for c in ("bijection", "incidence", "crossing", "vertex_on_edge", "distinct")]


def test_falsify_found(capsys, files):
    code, out, _ = run(
        capsys, "falsify", "--graph", files["tri"], "--labels", "2,3,1", "--lines", files["three"], "--budget", 100, "--seed", 0
    )
    assert code == 0
    d = DrawingFile.parse(out).drawing
    assert list(d.assignment) == [1, 2, 0]


# -- negative results (exit 1) ---------------------------------------------


def test_verify_failure_is_negative(capsys, files):
    L = LineSetFile.parse(files["six"].read_text()).lines
    d = draw_on_lines(octahedron(), L)
    pts = list(d.points)
    pts[0], pts[1] = pts[1], pts[0]
    bad = files["dir"] / "bad.json"
    bad.write_text(DrawingFile(type(d)(d.assignment, tuple(pts), d.edges)).serialize())
    code, out, _ = run(capsys, "verify", "--graph", files["oct"], "--lines", files["six"], "--drawing", bad)
    assert code == 1 and "incidence: FAIL" in out


def test_falsify_none_found(capsys, files):
    code, _, err = run(
        capsys, "falsify", "--graph", files["k4"], "--labels", "1,2,3,4", "--lines", files["four"], "--budget", 0, "--seed", 1
    )
    assert code == 1
    assert "does not show that no drawing exists" in err


def test_unreachable_target(capsys, files):
    a, b, c = files["nine"]
    code, _, _ = run(capsys, "same-type", "--lines-a", a, "--lines-b", b, "--lines-c", c, "--target", 9)
    assert code == 1


def test_infeasible_scale(capsys, files):
    code, _, _ = run(capsys, "convex-pos", "--lines", files["six"], "--k", 4, "--c", 2, "--m", 5)
    assert code == 1


# -- input errors (exit 2) -------------------------------------------------


def test_missing_file(capsys, files):
    code, _, err = run(capsys, "mu", "--lines", files["dir"] / "nope.json", "--halfplane", "1,0,0,<")
    assert code == 2 and err.startswith("error:")


def test_bad_halfplane(capsys, files):
    assert run(capsys, "mu", "--lines", files["pencil"], "--halfplane", "1,0,<")[0] == 2


def test_malformed_json(capsys, files):
    bad = files["dir"] / "bad.json"
    bad.write_text('{"lines": [')
    code, _, err = run(capsys, "centerpoint", "--lines", bad)
    assert code == 2 and "line 1" in err


def test_parallel_lines_file(capsys, files):
    bad = files["dir"] / "par.json"
    bad.write_text('{"lines": [{"a": "1", "b": "1", "c": "0"}, {"a": "1", "b": "1", "c": "0"}]}')
    assert run(capsys, "centerpoint", "--lines", bad)[0] == 2


def test_max_concurrent(capsys, files):
    args = ["mu", "--lines", files["pencil"], "--halfplane", "1,0,0,<="]
    assert run(capsys, *args, "--max-concurrent", 2)[0] == 2
    assert run(capsys, *args, "--max-concurrent", 3)[0] == 0


def test_bad_labels(capsys, files):
    base = ["falsify", "--graph", files["tri"], "--lines", files["three"], "--budget", 10, "--seed", 0, "--labels"]
    assert run(capsys, *base, "1,1,2")[0] == 2
    assert run(capsys, *base, "a,b,c")[0] == 2


def test_graph_line_count_mismatch(capsys, files):
    assert run(capsys, "draw", "--graph", files["k4"], "--lines", files["six"], "--out", files["dir"] / "x.json")[0] == 2


def test_centerpoint_size_limit(capsys, files):
    big = files["dir"] / "big.json"
    big.write_text(lines_to_file(random_arrangement(13, random.Random(0)).lines).serialize())
    assert run(capsys, "centerpoint", "--lines", big)[0] == 2


def test_argparse_errors(capsys):
    assert run(capsys, "mu")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "--help")[0] == 0


# -- internal errors (exit 3) ----------------------------------------------


def test_invariant_violation(capsys, files, monkeypatch):
    def broken(A):
        raise SearchExhausted("no candidate reached the bound")

    monkeypatch.setattr(cli, "centerpoint", broken)
    code, _, err = run(capsys, "centerpoint", "--lines", files["six"])
    assert code == 3 and err.startswith("internal error")


# -- determinism -----------------------------------------------------------


def test_repeated_runs_are_byte_identical(capsys, files):
    invocations = [
        ["mu", "--lines", files["six"], "--halfplane", "1,-1,1/2,<"],
        ["centerpoint", "--lines", files["six"]],
        ["falsify", "--graph", files["oct"], "--labels", "6,5,4,3,2,1", "--lines", files["six"], "--budget", 50, "--seed", 3],
    ]
    for argv in invocations:
        assert run(capsys, *argv) == run(capsys, *argv)
    outs = []
    for _ in range(2):
        d = files["dir"] / "rep.json"
        run(capsys, "draw", "--graph", files["oct"], "--lines", files["six"], "--out", d, "--trace")
        outs.append(d.read_bytes())
    assert outs[0] == outs[1]
