import json
import random
import subprocess
import sys

import pytest

from linkdet.cli import main
from linkdet.generators import random_plane_map
from linkdet.io import EdgeRecord, GraphDocument, builtin, serialize_document


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_det_fig5_with_negative_ab(capsys):
    code, out, _ = run(capsys, "det", "builtin:fig5", "--signs=--++++++")
    assert code == 0
    assert out.splitlines() == ["trees\t15", "matrix\t15", "fh\t15", "bracket\t15"]


def test_det_examples(capsys):
    assert run(capsys, "det", "builtin:triangle", "--json")[0] == 0
    code, out, _ = run(capsys, "det", "builtin:triangle", "--json")
    payload = json.loads(out)
    assert payload["agree"] and set(payload["determinants"].values()) == {3}
    code, out, _ = run(capsys, "det", "builtin:p2", "--method", "trees")
    assert out.strip() == "trees\t0"


@pytest.mark.parametrize("name, text", [
    ("isthmus", "1 - 2*x0"),
    ("loop", "1"),
    ("triangle", "3 - 4*x0 - 4*x1 - 4*x2 + 4*x0*x1 + 4*x0*x2 + 4*x1*x2"),
])
def test_poly(capsys, name, text):
    outs = set()
    for form in ("explicit", "recursive", "both"):
        code, out, _ = run(capsys, "poly", f"builtin:{name}", "--form", form)
        assert code == 0
        outs.add(out)
    assert outs == {text + "\n"}


def test_spectrum_examples(capsys):
    code, out, _ = run(capsys, "spectrum", "builtin:triangle")
    assert out.splitlines() == ["value\tcount", "1\t6", "3\t2"]
    code, out, _ = run(capsys, "spectrum", "builtin:p2", "--json")
    assert json.loads(out)["counts"] == {"0": 2, "2": 2}


def test_spectrum_fig5_half(capsys):
    code, out, _ = run(capsys, "spectrum", "builtin:fig5", "--restrict-first-bit", "1", "--json")
    payload = json.loads(out)
    assert payload["universe"] == 128
    assert sum(payload["counts"].values()) == 128


def test_spectrum_figure(capsys, tmp_path):
    path = tmp_path / "fig5.png"
    code, out, _ = run(capsys, "spectrum", "builtin:fig5", "--figure", str(path))
    assert code == 0
    assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert out.startswith("value\tcount\n")


def test_components(capsys):
    assert run(capsys, "components", "builtin:triangle")[1].strip() == "1"
    assert run(capsys, "components", "builtin:p2")[1].strip() == "2"


def test_symmetry_p2(capsys):
    code, out, _ = run(capsys, "symmetry", "builtin:p2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["centrally_symmetric"]
    assert payload["report"]["component_count"] == 2
    assert [v["passed"] for v in payload["verdicts"]] == [True, True]
    dets = payload["verdicts"][1]["details"]["determinants"]
    assert set(dets.values()) == {0}


def test_symmetry_text_output(capsys):
    code, out, _ = run(capsys, "symmetry", "builtin:c4-symmetric")
    assert code == 0
    assert "verdict\tparity-law\tpass" in out
    assert "verdict\teven-component-determinant\tpass" in out


def test_symmetry_without_involution(capsys):
    code, out, err = run(capsys, "symmetry", "builtin:fig5")
    assert code == 3 and "involution" in err and out == ""


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "det", str(bad))[0] == 2
    assert run(capsys, "det", "builtin:nope")[0] == 2
    assert run(capsys, "det", "builtin:fig5", "--signs", "++")[0] == 2

    split = GraphDocument(3, (EdgeRecord(0, 0, 1, 1),))
    path = tmp_path / "split.json"
    path.write_text(serialize_document(split))
    assert run(capsys, "det", str(path))[0] == 3
    norot = tmp_path / "norot.json"
    norot.write_text(serialize_document(GraphDocument(2, (EdgeRecord(0, 0, 1, 1),))))
    code, _, err = run(capsys, "components", str(norot))
    assert code == 3 and "rotation" in err

    code, _, err = run(capsys, "spectrum", "builtin:fig5", "--limit", "6")
    assert code == 4 and "--limit" in err
    assert run(capsys, "det", "builtin:fig5", "--method", "bracket", "--limit", "7")[0] == 4


def test_det_all_agrees_on_random_documents(capsys, tmp_path):
    rng = random.Random(61)
    for i in range(40):
        m = random_plane_map(rng, rng.randint(1, 10))
        doc = GraphDocument(m.vertex_count, tuple(EdgeRecord(e.id, e.u, e.v, e.sign) for e in m.graph.edges),
                            tuple(m.vertex_rotations))
        path = tmp_path / f"g{i}.json"
        path.write_text(serialize_document(doc))
        code, out, _ = run(capsys, "det", str(path), "--json")
        assert code == 0 and json.loads(out)["agree"]


def test_stdin_and_module_entry_point():
    text = serialize_document(builtin("triangle"))
    proc = subprocess.run([sys.executable, "-m", "linkdet", "det", "-", "--method", "matrix"],
                          input=text, capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "matrix\t3\n"


def test_mismatch_exit_code(capsys, monkeypatch):
    import linkdet.cli as cli

    real = cli._determinant
    monkeypatch.setattr(cli, "_determinant", lambda m, doc, limit: real(m, doc, limit) + (m == "fh"))
    code, out, err = run(capsys, "det", "builtin:triangle", "--json")
    assert code == 5 and "disagree" in err
    assert json.loads(out)["agree"] is False
