import json

import pytest
from click.testing import CliRunner

from twelverep.catalog import load_shape
from twelverep.grid.embedding import format_embedding
from twelverep.lab.cli import main


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, env=None):
        return runner.invoke(main, [str(a) for a in args], env=env, catch_exceptions=False)

    return invoke


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p

    return write


C4 = "4 4\n1 3\n1 4\n2 3\n2 4\n"
C6 = "6 6\n1 2\n2 3\n3 4\n4 5\n5 6\n1 6\n"


def test_verify_yes_and_no(run, files):
    g = files("c4.txt", C4)
    assert run("verify", g, "3412").exit_code == 0
    r = run("verify", g, "1234", "--json")
    assert r.exit_code == 1
    assert json.loads(r.output)["represents"] is False


def test_verify_bad_input(run, files):
    g = files("c4.txt", C4)
    assert run("verify", g, "1 x").exit_code == 2
    bad = files("bad.txt", "3 2\n1 2\n")
    assert run("verify", bad, "1").exit_code == 2


def test_represent_exit_codes(run, files):
    r = run("represent", files("c4.txt", C4), "--json")
    assert r.exit_code == 0
    assert json.loads(r.output)["outcome"] == "Representable"
    r = run("represent", files("c6.txt", C6))
    assert r.exit_code == 1 and "NotRepresentable" in r.output
    assert run("represent", files("c6.txt", C6), "--budget", "2").exit_code == 2


def test_budget_from_environment(run, files):
    r = run("represent", files("c6.txt", C6), env={"TWELVEREP_BUDGET": "2"})
    assert r.exit_code == 2 and "Undecided" in r.output


def test_config_file_and_flag_precedence(run, files):
    c6 = files("c6.txt", C6)
    cfg = files("cfg.json", json.dumps({"budget": 2}))
    assert run("--config", cfg, "represent", c6).exit_code == 2
    assert run("--config", cfg, "represent", c6, "--budget", "100000").exit_code == 1
    nested = files("nested.json", json.dumps({"represent": {"budget": 2}}))
    assert run("--config", nested, "represent", c6).exit_code == 2
    broken = files("broken.json", "{")
    assert run("--config", broken, "represent", c6).exit_code == 2


def test_good_labelings(run, files):
    r = run("good-labelings", files("c4.txt", C4), "--count")
    assert r.exit_code == 0 and int(r.output) > 0
    r = run("good-labelings", files("c6.txt", C6), "--first")
    assert r.exit_code == 1


def test_grid_commands(run, files):
    stair = files("stair.txt", "0 0\n1 0\n2 0\n0 1\n1 1\n2 1\n1 2\n2 2\n1 3\n2 3\n")
    r = run("grid", "classify", stair)
    assert r.output.splitlines()[0] == "SquareGrid" and "(2, 0)" in r.output
    assert run("grid", "characterize", stair).exit_code == 0
    r = run("grid", "build", stair, "--json")
    assert r.exit_code == 0 and "word" in json.loads(r.output)
    assert run("grid", "build", stair, "--corner").exit_code == 0
    assert run("grid", "glue", stair, 2, 0).exit_code == 1
    r = run("grid", "glue", stair, 0, 0, "--json")
    assert r.exit_code == 0 and json.loads(r.output)["glued"]
    assert run("grid", "glue", stair, 9, 9).exit_code == 2


def test_grid_characterize_forbidden_shapes(run, files):
    x = files("x.txt", format_embedding(load_shape("x")))
    r = run("grid", "characterize", x, "--json")
    assert r.exit_code == 1 and json.loads(r.output)["entry"] == "X"
    g3 = files("g3.txt", format_embedding(load_shape("g3")))
    r = run("grid", "characterize", g3, "--json")
    obj = json.loads(r.output)
    assert r.exit_code == 1 and obj["entry"] == "G3" and obj["necessary"]
    assert run("grid", "build", x).exit_code == 2


def test_disconnected_embedding_is_a_usage_error(run, files):
    assert run("grid", "classify", files("d.txt", "0 0\n3 3\n")).exit_code == 2


def test_catalog_list(run):
    r = run("catalog", "list")
    assert r.exit_code == 0 and "B(3,3,3)" in r.output and "G6" in r.output


def test_scan_commands(run, tmp_path):
    report = tmp_path / "r.jsonl"
    r = run("scan", "characterization", "--max-nodes", 6, "--report", report)
    assert r.exit_code == 0
    lines = report.read_text().splitlines()
    assert json.loads(lines[0])["type"] == "params"
    assert json.loads(lines[-1])["type"] == "summary"
    assert run("scan", "conjecture", "--max-nodes", 5).exit_code == 0
    assert run("scan", "conjecture", "--max-nodes", 0).exit_code == 2


def test_version(run):
    assert run("--version").exit_code == 0
