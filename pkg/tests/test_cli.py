from __future__ import annotations

import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

import oracles
from conftest import GOLDEN
from lexcycle.cli import main
from lexcycle.constructions import cycle_graph, fixture_g3, fixture_g4
from lexcycle.io import parse_graph, parse_ordering, serialize_graph, serialize_ordering

SCHEMA = json.loads(resources.files("lexcycle").joinpath("data").joinpath("report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert report["exit_code"] == code
    return code, report


@pytest.fixture
def files(tmp_path):
    g3, g4 = fixture_g3(), fixture_g4()
    paths = {}
    for name, text in {
        "g3": serialize_graph(g3.graph),
        "sigma1": serialize_ordering(g3["sigma1"]),
        "g4": serialize_graph(g4.graph),
        "mu1": serialize_ordering(g4["mu1"]),
        "k3": "a b\nb c\na c\n",
        "star": "c l1\nc l2\n",
        "star_order": "l1 l2 c\n",
        "bad": "a b c\n",
        "zeros": "2 3\n000\n000\n",
        "anti": "2 2\n10\n01\n",
    }.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_sweep_nine_vertex_example(capsys, files):
    code, out, _ = run(capsys, "sweep", "--search", "lexbfs+", "--graph", files["g3"], "--order", files["sigma1"], "--sweeps", "3")
    g3 = fixture_g3()
    assert code == 0
    assert out.splitlines() == [str(g3["sigma2"]), str(g3["sigma3"]), str(g3["sigma1"])]


def test_sweep_zero_is_usage_error(capsys, files):
    code, _, err = run(capsys, "sweep", "--graph", files["g3"], "--order", files["sigma1"], "--sweeps", "0")
    assert code == 64 and "sweeps" in err


def test_sweep_json_round_trip(capsys, files):
    code, rep = run_json(capsys, "sweep", "--graph", files["g3"], "--order", files["sigma1"], "--sweeps", "3")
    g = fixture_g3().graph
    orders = [parse_ordering(" ".join(o), g) for o in rep["outputs"]["orderings"]]
    assert orders[-1] == fixture_g3()["sigma1"] and len(orders) == 3


def test_sweep_default_seed(capsys, files):
    code, out, _ = run(capsys, "sweep", "--graph", files["k3"], "--default-seed", "--sweeps", "2")
    assert code == 0 and out.splitlines() == ["c b a", "a b c"]


def test_cycle_twelve_vertex_example(capsys, files):
    code, rep = run_json(capsys, "cycle", "--graph", files["g4"], "--order", files["mu1"])
    assert code == 0 and rep["outputs"]["cycle_length"] == 4


def test_cycle_exhaustive_clique(capsys, files):
    code, rep = run_json(capsys, "cycle", "--graph", files["k3"], "--exhaustive")
    assert code == 0 and rep["outputs"]["lexcycle"] == 2 and rep["outputs"]["exact"]


def test_cycle_starjoin(capsys, files, tmp_path):
    code, out, _ = run(capsys, "gen", f"starjoin:{files['g3']},{files['g4']}")
    sj = tmp_path / "sj.txt"
    sj.write_text(out)
    seed = tmp_path / "seed.txt"
    seed.write_text("r g1 g2 " + serialize_ordering(fixture_g3()["sigma1"]).strip() + " " + serialize_ordering(fixture_g4()["mu1"]))
    code, rep = run_json(capsys, "cycle", "--graph", str(sj), "--order", str(seed))
    assert code == 0 and rep["outputs"]["cycle_length"] % 12 == 0


def test_cycle_budget_exit(capsys, files):
    code, rep = run_json(capsys, "cycle", "--graph", files["g4"], "--order", files["mu1"], "--budget", "2")
    assert code == 2 and len(rep["outputs"]["trace"]) == 3


def test_check_pi_on_unit_interval(capsys, tmp_path):
    w = tmp_path / "w.txt"
    code, out, _ = run(capsys, "gen", "unitinterval:20:4", "--witness", str(w))
    g = tmp_path / "g.txt"
    g.write_text(out)
    code, rep = run_json(capsys, "check", "--graph", str(g), "--order", str(w), "--property", "pi")
    assert code == 0 and rep["outputs"]["ok"]


def test_check_cocomp_on_g6(capsys, tmp_path):
    tau = tmp_path / "tau.txt"
    code, out, _ = run(capsys, "gen", "twochain:6", "--complement", "--witness", str(tau))
    g = tmp_path / "h.txt"
    g.write_text(out)
    code, out, _ = run(capsys, "check", "--graph", str(g), "--order", str(tau), "--property", "cocomp")
    assert code == 0 and out.strip() == "cocomp: ok"


def test_check_star_4pc_violation(capsys, files):
    code, rep = run_json(capsys, "check", "--graph", files["star"], "--order", files["star_order"], "--property", "lexbfs4pc")
    assert code == 1 and rep["outputs"]["violation"]["witness"] == ["l1", "l2", "c"]


def test_repro_targets(capsys):
    for name in ("figure1", "g6"):
        code, out, _ = run(capsys, "repro", name)
        assert code == 0 and "PASS" in out.splitlines()[0]
    code, rep = run_json(capsys, "repro", "interval", "--trials", "200", "--seed", "7")
    assert code == 0 and rep["outputs"]["trials"] == 200


def test_repro_g6_prints_trace(capsys):
    code, out, _ = run(capsys, "repro", "g6")
    lines = [ln.strip() for ln in out.splitlines()]
    from lexcycle.constructions import g6_trace

    trace = g6_trace()
    assert f"sigma8: {trace[7]}" in lines
    assert f"sigma6: {trace[5]}" in lines


def test_repro_jobs_independent(capsys):
    _, a = run_json(capsys, "repro", "trees", "--trials", "30", "--seed", "3", "--jobs", "1")
    _, b = run_json(capsys, "repro", "trees", "--trials", "30", "--seed", "3", "--jobs", "2")
    assert a["outputs"] == b["outputs"]


def test_gen_matches_golden(capsys):
    code, out, _ = run(capsys, "gen", "g3")
    assert code == 0 and out == (GOLDEN / "g3.txt").read_text()
    code, out, _ = run(capsys, "gen", "ladder:1")
    assert oracles.is_isomorphic(parse_graph(out), cycle_graph(4))
    _, first, _ = run(capsys, "gen", "tree:50:3")
    _, second, _ = run(capsys, "gen", "tree:50:3")
    assert first == second == (GOLDEN / "tree_50_3.txt").read_text()


@pytest.mark.parametrize("spec", ["nosuch", "ladder", "ladder:x", "ladder:0", "twochain:1", "tree:5"])
def test_gen_bad_specs(capsys, spec):
    code, _, _ = run(capsys, "gen", spec)
    assert code == 64


def test_orient_interval(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "interval:20:5")
    g = tmp_path / "g.txt"
    g.write_text(out)
    code, rep = run_json(capsys, "orient", "--graph", str(g))
    assert code == 0 and rep["outputs"]["valid"]


def test_orient_proper_interval_stop(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "unitinterval:25:2")
    g = tmp_path / "g.txt"
    g.write_text(out)
    code, rep = run_json(capsys, "orient", "--graph", str(g))
    assert code == 0 and rep["outputs"]["stop_index"] <= 5


def test_orient_budget_exhausted(capsys, tmp_path):
    tau = tmp_path / "tau.txt"
    _, out, _ = run(capsys, "gen", "twochain:6", "--complement", "--witness", str(tau))
    g = tmp_path / "h.txt"
    g.write_text(out)
    code, out, err = run(capsys, "orient", "--graph", str(g), "--order", str(tau), "--budget", "4")
    assert code == 2 and len(out.splitlines()) == 4 and "budget" in err


def test_orient_env_budget(capsys, tmp_path, monkeypatch):
    tau = tmp_path / "tau.txt"
    _, out, _ = run(capsys, "gen", "twochain:6", "--complement", "--witness", str(tau))
    g = tmp_path / "h.txt"
    g.write_text(out)
    monkeypatch.setenv("LEXCYCLE_MAX_SWEEPS", "5")
    code, _, _ = run(capsys, "orient", "--graph", str(g), "--order", str(tau))
    assert code == 2


def test_matrix(capsys, files):
    code, rep = run_json(capsys, "matrix", files["zeros"])
    assert code == 0 and rep["outputs"]["steps"] == 1
    code, rep = run_json(capsys, "matrix", files["anti"])
    assert rep["outputs"]["final"] == ["01", "10"] and rep["outputs"]["steps"] == 2


def test_parse_errors_exit_65(capsys, files, tmp_path):
    code, rep = run_json(capsys, "sweep", "--graph", files["bad"], "--default-seed")
    assert code == 65 and "line 1" in rep["error"]
    code, _, _ = run(capsys, "sweep", "--graph", str(tmp_path / "missing.txt"), "--default-seed")
    assert code == 65
    bad_matrix = tmp_path / "m.txt"
    bad_matrix.write_text("2 2\n10\n")
    code, _, _ = run(capsys, "matrix", str(bad_matrix))
    assert code == 65


def test_usage_errors_exit_64(capsys):
    with pytest.raises(SystemExit) as err:
        main(["bogus"])
    assert err.value.code == 64
    with pytest.raises(SystemExit) as err:
        main(["check", "--graph", "x"])
    assert err.value.code == 64


def test_inputs_digest_deterministic(capsys, files):
    _, a = run_json(capsys, "cycle", "--graph", files["g4"], "--order", files["mu1"])
    _, b = run_json(capsys, "cycle", "--graph", files["g4"], "--order", files["mu1"])
    assert a["inputs_digest"] == b["inputs_digest"] and a["outputs"] == b["outputs"]


def test_console_script(files):
    proc = subprocess.run(
        [sys.executable, "-m", "lexcycle.cli", "cycle", "--graph", files["g4"], "--order", files["mu1"]],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "cycle_length 4" in proc.stdout
