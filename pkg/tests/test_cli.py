import json
import subprocess
import sys
from pathlib import Path

import pytest

from fockshift.cli import main
from fockshift.config import parse_config, top_to_config
from fockshift.errors import ConfigError
from fockshift.periodicity import example_top

EXAMPLE = str(Path(__file__).resolve().parents[1] / "configs" / "periodic_n2_k2.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_config(tmp_path, doc, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_build_example(capsys):
    code, out, _ = run(capsys, "build", "--config", EXAMPLE)
    assert code == 0
    doc = json.loads(out)
    assert doc["L"] == 2 and doc["dimension"] == 7
    assert [s["letter"] for s in doc["shifts"]] == [1, 2]
    # T_1 sends xi_2 (index 2) to 1/8 xi_12 (index 4)
    assert [4, 2, "1/8"] in doc["shifts"][0]["entries"]


def test_build_float_has_same_sparsity(capsys):
    _, exact, _ = run(capsys, "build", "--config", EXAMPLE)
    _, approx, _ = run(capsys, "build", "--config", EXAMPLE, "--float")
    for a, b in zip(json.loads(exact)["shifts"], json.loads(approx)["shifts"]):
        assert [e[:2] for e in a["entries"]] == [e[:2] for e in b["entries"]]
        assert all(isinstance(e[2], float) for e in b["entries"])


def test_build_csv(capsys, tmp_path):
    out = tmp_path / "t.csv"
    code, stdout, _ = run(capsys, "build", "--config", EXAMPLE, "--format", "csv", "--out", str(out))
    assert code == 0 and stdout == ""
    lines = out.read_text().splitlines()
    assert lines[0] == "letter,row,col,value"
    assert "1,4,2,1/8" in lines


def test_missing_weight_is_named(capsys, tmp_path):
    doc = top_to_config(example_top())
    doc["weights"] = [w for w in doc["weights"] if (w["i"], w["u"]) != (2, "1")]
    code, _, err = run(capsys, "build", "--config", write_config(tmp_path, doc))
    assert code == 2
    assert "missing weight (i=2, u=1)" in err


def test_config_errors_carry_location(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"N": 2,\n "mode": "periodic" "k": 2}')
    code, _, err = run(capsys, "build", "--config", str(bad))
    assert code == 2 and "line 2" in err
    doc = top_to_config(example_top())
    doc["weights"][3]["value"] = "abc"
    with pytest.raises(ConfigError, match=r"weights\[3\]\.value"):
        parse_config(doc)
    code, _, _ = run(capsys, "build", "--config", str(tmp_path / "absent.json"))
    assert code == 2


def test_verify_theorem_passes(capsys):
    code, out, _ = run(capsys, "verify", "theorem", "--config", EXAMPLE)
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert report["reports"][0]["L"] == 3


def test_verify_relations_zero_weight_fails(capsys, tmp_path):
    doc = top_to_config(example_top().replace({(1, "e"): 0}), L=3)
    code, out, _ = run(capsys, "verify", "--check", "relations", "--config", write_config(tmp_path, doc))
    assert code == 1
    assert json.loads(out)["reports"][0]["relation"] == "a"


def test_verify_factorization_and_containment(capsys):
    code, out, _ = run(capsys, "verify", "--check", "factorization", "--check", "containment",
                       "--config", EXAMPLE, "--n1", "2", "--n2", "6")
    assert code == 0
    reports = json.loads(out)["reports"]
    assert [r["check"] for r in reports] == ["factorization", "containment"]
    assert reports[1]["depth"] == 8


def test_verify_containment_bad_pair(capsys):
    code, _, err = run(capsys, "verify", "containment", "--config", EXAMPLE, "--n2", "3")
    assert code == 2 and "does not divide" in err


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "--seq-a", "2,4,8", "--seq-b", "4,8", "-N", "2")
    assert code == 0
    assert out.splitlines()[-1] == "equal (prefix semantics); K0 agrees"
    code, out, _ = run(capsys, "classify", "--seq-a", "2,4", "--seq-b", "3,6")
    assert code == 0
    assert out.splitlines()[-1] == "not equal; K0 agrees"


def test_classify_json_and_errors(capsys):
    code, out, _ = run(capsys, "classify", "--seq-a", "6,12,36", "--seq-b", "6,36", "--format", "json")
    doc = json.loads(out)
    assert doc["a"]["supernatural"] == "2^2 · 3^2" and doc["prefix_semantics"]
    code, _, err = run(capsys, "classify", "--seq-a", "2,4,6", "--seq-b", "2")
    assert code == 2 and "6" in err


def test_tree(capsys):
    code, out, _ = run(capsys, "tree", "--config", EXAMPLE, "--depth", "3")
    assert code == 0
    assert out.count(" -> ") == 14
    assert sum(1 for line in out.splitlines() if line.strip().startswith('"') and "->" not in line) == 15
    _, out0, _ = run(capsys, "tree", "--config", EXAMPLE, "--depth", "0")
    assert out0 == 'digraph fock_tree {\n  ordering=out;\n  "e";\n}\n'


def test_seeded_weights(capsys, monkeypatch):
    monkeypatch.setenv("FOCKSHIFT_SEED", "17")
    _, a, _ = run(capsys, "build", "-N", "2", "--k", "2", "--m", "1")
    _, b, _ = run(capsys, "build", "-N", "2", "--k", "2", "--m", "1")
    monkeypatch.setenv("FOCKSHIFT_SEED", "18")
    _, c, _ = run(capsys, "build", "-N", "2", "--k", "2", "--m", "1")
    assert a == b != c
    monkeypatch.setenv("FOCKSHIFT_SEED", "x")
    code, _, _ = run(capsys, "build", "-N", "2", "--k", "2")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fockshift", "verify", "theorem", "--config", EXAMPLE],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"]
