import json

import pytest

from mysticum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sequence(capsys):
    code, out, _ = run(capsys, "sequence", "12")
    assert code == 0
    assert out.split() == ["inf", "0", "1", "1/2", "3/2", "3/7", "11/7", "11/26",
                           "41/26", "41/97", "153/97", "153/362"]
    assert run(capsys, "sequence", "0")[1] == ""
    assert run(capsys, "sequence", "4")[1].split() == ["inf", "0", "1", "1/2"]
    assert json.loads(run(capsys, "sequence", "3", "--format", "json")[1]) == ["inf", "0", "1"]


def test_build_counts(capsys):
    code, out, _ = run(capsys, "build", "--height", "4")
    doc = json.loads(out)
    assert code == 0
    assert sum(l["pascal"] for l in doc["counts"]["layers"]) == 300


def test_special_sextuple_is_rejected(capsys):
    code, out, err = run(capsys, "build", "--params", "0,1,2,3,4,inf", "--height", "4")
    assert code == 2
    assert json.loads(out)["error"]["step"]
    assert "degenerate" in err


def test_repeated_parameter(capsys):
    code, out, _ = run(capsys, "build", "--params", "0,0,1,2,3,4")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "DegenerateSextuple"


def _strip_timing(text):
    doc = json.loads(text)
    doc.pop("timing", None)
    return json.dumps(doc)


def test_build_is_deterministic(capsys):
    a = run(capsys, "build", "--random", "--seed", "7", "--height", "2")[1]
    b = run(capsys, "build", "--random", "--seed", "7", "--height", "2")[1]
    assert _strip_timing(a) == _strip_timing(b)
    assert json.loads(a)["config"]["seed"] == 7


def test_verify_fixture(capsys):
    code, out, _ = run(capsys, "verify", "--height", "8")
    assert code == 0
    assert "300/300" in out and "verdict PASS" in out


def test_verify_depth_zero(capsys):
    code, out, _ = run(capsys, "verify", "--depth", "0", "--height", "0")
    assert code == 0


def test_verify_json_report(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--height", "3", "--format", "json", "--out", str(path))
    doc = json.loads(path.read_text())
    assert code == 0
    assert doc["verdict"]["ranges"] == "300/300"
    assert len(doc["ranges"]) == 300 and len(doc["witnesses"]) == 4


def test_verify_stored_and_tampered(capsys, tmp_path):
    stored = tmp_path / "b.json"
    assert run(capsys, "build", "--height", "3", "--out", str(stored))[0] == 0
    assert run(capsys, "verify", "--input", str(stored), "--depth", "3")[0] == 0
    doc = json.loads(stored.read_text())
    pascals = doc["layers"][2]["pascals"]
    x, y, z = pascals["P 4;25"]
    pascals["P 4;25"] = [x, y, str(int(z) + 1)]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--input", str(bad), "--depth", "3")
    assert code == 3
    assert "mismatch P(4;25) index 4" in out


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "--labels", "P *")
    assert code == 0 and out.count("<line") == 60
    code, out, _ = run(capsys, "render", "--range", "K(3;05)", "--height", "3", "--no-text")
    assert code == 0 and "carrier L 124" in out
    path = tmp_path / "x.svg"
    assert run(capsys, "render", "--labels", "N *", "--heights", "0,1", "--svg-size", "300x200",
               "--out", str(path))[0] == 0
    assert 'width="300"' in path.read_text()


def test_render_empty_filter(capsys):
    code, _, err = run(capsys, "render", "--labels", "nothing")
    assert code == 1 and "nothing" in err


@pytest.mark.parametrize("argv", [
    ["build", "--params", "1,2,3"],
    ["build", "--params", "a,b,c,d,e,f"],
    ["verify", "--depth", "-1"],
    ["render", "--svg-size", "big"],
    ["render", "--range", "Q(1;23)"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 1
