"""End-to-end checks of the command line interface.

Each test drives ``hypermatroid.cli.main`` directly with an argv list and
inspects the exit code plus captured stdout/stderr, so no subprocess is
needed.
"""

import json

import pytest

from hypermatroid import CORPUS, serialize
from hypermatroid.cli import main


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(serialize(obj) + "\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_axioms_ok(capsys):
    code, out, err = run(capsys, "axioms", "--hyperfield", "sign")
    assert code == 0 and err == ""
    report = json.loads(out)
    assert report["ok"] is True and report["hyperfield"] == "sign"


def test_axioms_unknown_hyperfield(capsys):
    code, out, err = run(capsys, "axioms", "--hyperfield", "gf(4)")
    assert code == 2 and err.startswith("error:")


def test_check_gp_both_sections(capsys, tmp_path):
    path = write(tmp_path, "gp.json", CORPUS["sign-u24"].build())
    code, out, _ = run(capsys, "check-gp", "--both", path)
    assert code == 0
    report = json.loads(out)
    assert report["weak"]["ok"] and report["strong"]["ok"]


def test_check_gp_weak_only_instance(capsys, tmp_path):
    path = write(tmp_path, "tri.json",
                 CORPUS["triangle-weak-not-strong"].build())
    code, out, _ = run(capsys, "check-gp", "--strong", path)
    assert code == 1
    report = json.loads(out)
    assert report["strong"]["ok"] is False
    assert report["strong"]["witness"]


def test_check_circuits(capsys, tmp_path):
    from hypermatroid import circuits_from_gp
    sig = circuits_from_gp(CORPUS["sign-u24"].build())
    path = write(tmp_path, "sig.json", sig)
    code, out, _ = run(capsys, "check-circuits", path)
    assert code == 0
    report = json.loads(out)
    assert report["weak_elimination"]["ok"]


def test_classify_verdicts(capsys, tmp_path):
    from hypermatroid import circuits_from_gp
    good = write(tmp_path, "good.json",
                 circuits_from_gp(CORPUS["sign-u24"].build()))
    code, out, _ = run(capsys, "classify", good)
    assert code == 0 and json.loads(out)["verdict"] == "Strong"

    weak = write(tmp_path, "weak.json",
                 circuits_from_gp(CORPUS["triangle-weak-not-strong"].build()))
    code, out, _ = run(capsys, "classify", weak)
    assert code == 1 and json.loads(out)["verdict"] == "WeakOnly"


def test_circuits_and_gp_roundtrip(capsys, tmp_path):
    gp_path = write(tmp_path, "gp.json", CORPUS["gf3-u24"].build())
    code, out, _ = run(capsys, "circuits", gp_path)
    assert code == 0
    sig_path = tmp_path / "sig.json"
    sig_path.write_text(out)

    code, out, _ = run(capsys, "dual", str(sig_path))
    assert code == 0
    pair = {"circuits": json.loads(sig_path.read_text()),
            "cocircuits": json.loads(out)}
    pair_path = tmp_path / "pair.json"
    pair_path.write_text(json.dumps(pair))

    code, out, _ = run(capsys, "gp", str(pair_path))
    assert code == 0
    assert json.loads(out)["rank"] == 2


def test_dual_on_gp(capsys, tmp_path):
    path = write(tmp_path, "gp.json", CORPUS["sign-k4"].build())
    code, out, _ = run(capsys, "dual", path)
    assert code == 0 and json.loads(out)["rank"] == 3


def test_minor(capsys, tmp_path):
    path = write(tmp_path, "gp.json", CORPUS["sign-k4"].build())
    code, out, _ = run(capsys, "minor", "--delete", "ab",
                       "--contract", "cd", path)
    assert code == 0
    report = json.loads(out)
    assert report["rank"] == 2 and len(report["ground_set"]) == 4

    code, out, err = run(capsys, "minor", path)
    assert code == 2 and "error:" in err


def test_pushforward(capsys, tmp_path):
    path = write(tmp_path, "gp.json", CORPUS["rational-u24"].build())
    code, out, _ = run(capsys, "pushforward", "--hom", "sign", path)
    assert code == 0 and json.loads(out)["hyperfield"] == "sign"

    code, out, _ = run(capsys, "pushforward", "--hom", "padic:5", path)
    assert code == 0 and json.loads(out)["hyperfield"] == "tropical"

    code, _, err = run(capsys, "pushforward", "--hom", "sign",
                       write(tmp_path, "s.json", CORPUS["sign-u24"].build()))
    assert code == 2 and "error:" in err


def test_dressian(capsys, tmp_path):
    path = write(tmp_path, "trop.json", CORPUS["tropical-u24"].build())
    code, out, _ = run(capsys, "dressian", path)
    assert code == 0
    report = json.loads(out)
    assert report["ok"] and report["relations_checked"] >= 1


def test_demo_list_and_run(capsys):
    code, out, _ = run(capsys, "demo", "--list")
    assert code == 0 and "triangle-weak-not-strong" in out

    code, out, _ = run(capsys, "demo", "sign-u24")
    assert code == 0 and json.loads(out)["ok"]


def test_experiment_deterministic(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"hyperfield": "sign", "samples": 8,
                               "seed": 3}))
    code, first, _ = run(capsys, "experiment", "--config", str(cfg))
    assert code == 0
    code, second, _ = run(capsys, "experiment", "--config", str(cfg))
    assert first == second

    code, third, _ = run(capsys, "experiment", "--config", str(cfg),
                         "--seed", "4")
    assert code == 0 and third != first


def test_stdin_input(capsys, monkeypatch):
    import io
    payload = serialize(CORPUS["sign-u24"].build())
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    code, out, _ = run(capsys, "check-gp", "--weak", "-")
    assert code == 0 and json.loads(out)["weak"]["ok"]


def test_missing_file(capsys):
    code, _, err = run(capsys, "classify", "/nonexistent/path.json")
    assert code == 2 and err.startswith("error:")


def test_malformed_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "classify", str(path))
    assert code == 2 and err.startswith("error:")
