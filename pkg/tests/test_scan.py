import json
import os
import subprocess
import sys

from twelverep import backend
from twelverep.lab.scan import (check_record, read_report, scan_characterization,
                                scan_conjecture, strip_timing)


def test_report_is_deterministic_up_to_timing():
    a = scan_characterization(9)
    b = scan_characterization(9)
    assert strip_timing(a.lines()) == strip_timing(b.lines())
    assert a.exit_code() == 0
    assert a.summary["shapes"] == len(a.records)


def test_parallel_run_gives_the_same_report():
    one = scan_conjecture(7, jobs=1)
    two = scan_conjecture(7, jobs=2)
    assert strip_timing(one.lines()) == strip_timing(two.lines())


def test_timing_lives_only_under_its_key(tmp_path):
    rep = scan_characterization(8)
    path = tmp_path / "r.jsonl"
    rep.write(path)
    recs = read_report(path)
    assert [r["type"] for r in recs[:1] + recs[-1:]] == ["params", "summary"]
    for r in recs[1:-1]:
        assert set(r["timing"]) == {"forbidden_s", "build_s", "decide_s"}
    stripped = [json.loads(x) for x in strip_timing(path.read_text().splitlines())]
    assert all("timing" not in r for r in stripped)


def test_check_record_catches_tampering():
    rep = scan_characterization(8)
    good = next(r for r in rep.records if r["outcome"] == "Representable")
    assert check_record(good) == []
    bad = dict(good, word=" ".join(reversed(good["word"].split())))
    assert any("decision word" in p for p in check_record(bad))
    violating = next(r for r in scan_conjecture(8).records if not r["p_avoiding"])
    assert check_record(violating) == []
    moved = dict(violating, p_witness=violating["p_witness"][:-1])
    assert check_record(moved)


def test_undecided_entries_are_reported():
    rep = scan_conjecture(6, budget=1)
    assert rep.undecided and rep.exit_code() == 2
    assert "undecided" in rep.table()


PURE_WORKER = r"""
import json
from twelverep import backend, is_12_representable
from twelverep.catalog import make_cycle, load_shape
from twelverep.grid.embedding import to_labeled_graph
out = {"backend": backend()}
for name, g in [("C4", make_cycle(4)), ("C6", make_cycle(6)),
                ("X", to_labeled_graph(load_shape("x")))]:
    d = is_12_representable(g)
    out[name] = [d.outcome, int(d.nodes), list(d.word) if d.word else None]
print(json.dumps(out))
"""


def test_pure_python_fallback_matches_the_compiled_kernels():
    results = {}
    for flag in ("0", "1"):
        env = dict(os.environ, TWELVEREP_PURE=flag)
        res = subprocess.run([sys.executable, "-c", PURE_WORKER], env=env,
                             capture_output=True, text=True, check=True)
        results[flag] = json.loads(res.stdout)
    assert results["1"].pop("backend") == "python"
    assert results["0"].pop("backend") == backend()
    assert results["0"] == results["1"]
