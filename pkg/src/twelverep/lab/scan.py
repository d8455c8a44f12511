"""Exhaustive scans comparing the decision procedure with the grid characterizations.

A report is a list of JSON-serialisable records: one ``params`` record, one
``shape`` record per embedding in canonical order, and a closing ``summary``.
Timings live under the ``timing`` key of each shape record and nowhere else,
so :func:`strip_timing` gives a byte-stable view for comparisons.
"""
from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Iterable, Optional

from ..catalog import entry, find_induced, is_P_avoiding
from ..graphs import LabeledGraph
from ..grid.build import build_representant
from ..grid.embedding import GridEmbedding, Kind, classify, to_labeled_graph
from ..grid.forbidden import FCheck, f_check
from ..grid.lines import necessary_conditions_line
from ..represent import default_budget, is_12_representable, verify
from ..words import format_word, parse_word
from .enumerate import enumerate_embeddings

CONSISTENT = "consistent"
COUNTEREXAMPLE = "counterexample"
UNDECIDED = "undecided"


@dataclass
class ScanReport:
    params: dict
    records: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def counterexamples(self) -> list:
        return [r for r in self.records if r["status"] == COUNTEREXAMPLE]

    @property
    def undecided(self) -> list:
        return [r for r in self.records if r["status"] == UNDECIDED]

    def exit_code(self) -> int:
        if self.counterexamples:
            return 1
        if self.undecided:
            return 2
        return 0

    def lines(self) -> list:
        out = [{"type": "params", **self.params}]
        out += [{"type": "shape", **r} for r in self.records]
        out.append({"type": "summary", **self.summary})
        return [json.dumps(r, sort_keys=True) for r in out]

    def write(self, path):
        with open(path, "w") as fh:
            for line in self.lines():
                fh.write(line + "\n")

    def table(self) -> str:
        s = self.summary
        rows = [("scan", self.params["scan"]), ("max points", self.params["max_points"]),
                ("shapes", s["shapes"])]
        rows += [(k, v) for k, v in sorted(s["by_category"].items())]
        rows += [("counterexamples", len(s["counterexamples"])),
                 ("undecided", len(s["undecided"]))]
        width = max(len(str(k)) for k, _ in rows)
        return "\n".join(f"{str(k):<{width}}  {v}" for k, v in rows)


def strip_timing(lines: Iterable[str]) -> list:
    out = []
    for line in lines:
        rec = json.loads(line)
        rec.pop("timing", None)
        out.append(json.dumps(rec, sort_keys=True))
    return out


def read_report(path) -> list:
    with open(path) as fh:
        return [json.loads(line) for line in fh if line.strip()]


# -- per-shape work ------------------------------------------------------------

def _points(ps) -> list:
    return [list(p) for p in ps]


def _decide(e: GridEmbedding, budget: int) -> dict:
    g = to_labeled_graph(e)
    d = is_12_representable(g, budget=budget)
    rec = {"outcome": d.outcome, "nodes": int(d.nodes)}
    if d.word is not None:
        rec["word"] = format_word(d.word)
        rec["labeling"] = [d.mapping[v] for v in range(1, g.n + 1)]
    if d.certificate is not None:
        rec["certificate"] = d.certificate.to_dict()
    return rec


def _characterization_record(e: GridEmbedding, budget: int) -> dict:
    t0 = time.perf_counter()
    rec = {"points": _points(e.sorted_points()), "n": len(e), "kind": classify(e).value}
    chk = f_check(e)
    rec["f_avoiding"] = chk.avoiding
    if not chk.avoiding:
        rec["f_entry"] = chk.entry
        rec["f_witness"] = _points(chk.witness)
    t1 = time.perf_counter()
    try:
        built = build_representant(e)
    except RuntimeError as exc:
        built = exc
    if isinstance(built, RuntimeError):
        rec["builder"] = {"ok": False, "error": str(built)}
    elif isinstance(built, FCheck):
        rec["builder"] = {"ok": False}
    else:
        rec["builder"] = {"ok": True, "word": format_word(built.word),
                          "labeling": [built.labeling[p] for p in e.sorted_points()]}
    t2 = time.perf_counter()
    rec.update(_decide(e, budget))
    t3 = time.perf_counter()
    if rec["outcome"] == "Undecided":
        rec["status"] = UNDECIDED
    else:
        rep = rec["outcome"] == "Representable"
        agree = rep == chk.avoiding and rec["builder"]["ok"] == chk.avoiding
        rec["status"] = CONSISTENT if agree else COUNTEREXAMPLE
    rec["timing"] = {"forbidden_s": round(t1 - t0, 6), "build_s": round(t2 - t1, 6),
                     "decide_s": round(t3 - t2, 6)}
    return rec


def _conjecture_record(e: GridEmbedding, budget: int) -> dict:
    t0 = time.perf_counter()
    rec = {"points": _points(e.sorted_points()), "n": len(e), "kind": classify(e).value}
    chk = is_P_avoiding(e)
    rec["p_avoiding"] = chk.avoiding
    if not chk.avoiding:
        rec["p_entry"] = chk.entry
        rec["p_witness"] = _points(chk.witness)
    rec["necessary"] = [v.to_dict() for v in necessary_conditions_line(e)]
    t1 = time.perf_counter()
    rec.update(_decide(e, budget))
    t2 = time.perf_counter()
    if rec["outcome"] == "Undecided":
        rec["status"] = UNDECIDED
    else:
        rep = rec["outcome"] == "Representable"
        rec["status"] = CONSISTENT if rep == chk.avoiding else COUNTEREXAMPLE
    rec["timing"] = {"forbidden_s": round(t1 - t0, 6), "decide_s": round(t2 - t1, 6)}
    return rec


_WORKERS = {"characterization": _characterization_record, "conjecture": _conjecture_record}


def _work(args):
    scan, pts, budget = args
    return _WORKERS[scan](GridEmbedding(frozenset(map(tuple, pts))), budget)


# -- driver ----------------------------------------------------------------------

def _run(scan: str, kind: Kind, max_points: int, jobs: int, budget: Optional[int],
         symmetry: str) -> ScanReport:
    budget = default_budget() if budget is None else int(budget)
    shapes = enumerate_embeddings(max_points, symmetry, kind=kind)
    params = {"scan": scan, "max_points": max_points, "symmetry": symmetry, "budget": budget}
    tasks = [(scan, sorted(e.points), budget) for e in shapes]
    if jobs > 1 and len(tasks) > 1:
        with get_context("spawn").Pool(jobs) as pool:
            records = pool.map(_work, tasks, chunksize=max(1, len(tasks) // (8 * jobs)))
    else:
        records = [_work(t) for t in tasks]
    # the shape list is already canonical; sorting again makes the order
    # independent of how the work was split
    records.sort(key=lambda r: (r["n"], r["points"]))
    for r in records:
        problems = check_record(r)
        if problems:
            raise AssertionError(f"record for {r['points']} fails re-verification: {problems}")
    report = ScanReport(params, records)
    report.summary = summarize(scan, records)
    return report


def scan_characterization(max_points: int, *, jobs: int = 1, budget: Optional[int] = None,
                          symmetry: str = "free") -> ScanReport:
    """Square grids: F-avoidance, the builder and the decision procedure must agree."""
    return _run("characterization", Kind.SQUARE_GRID, max_points, jobs, budget, symmetry)


def scan_conjecture(max_points: int, *, jobs: int = 1, budget: Optional[int] = None,
                    symmetry: str = "free") -> ScanReport:
    """Line grids: P-avoidance against the decision procedure."""
    return _run("conjecture", Kind.LINE_GRID, max_points, jobs, budget, symmetry)


def summarize(scan: str, records: list) -> dict:
    cats: Counter = Counter()
    avoid_key = "f_avoiding" if scan == "characterization" else "p_avoiding"
    for r in records:
        side = "avoiding" if r[avoid_key] else "violating"
        cats[f"{side}/{r['outcome']}"] += 1
    return {"shapes": len(records), "by_category": dict(sorted(cats.items())),
            "counterexamples": [r["points"] for r in records if r["status"] == COUNTEREXAMPLE],
            "undecided": [r["points"] for r in records if r["status"] == UNDECIDED]}


# -- re-verification ---------------------------------------------------------------

def _labeled(points: list, labels: list) -> LabeledGraph:
    e = GridEmbedding(frozenset(map(tuple, points)))
    return to_labeled_graph(e, {tuple(p): v for p, v in zip(points, labels)})


def _witness_ok(name: str, witness: list, e: GridEmbedding) -> bool:
    pts = set(map(tuple, witness))
    if not pts <= e.points:
        return False
    sub = GridEmbedding(frozenset(pts))
    g = to_labeled_graph(sub)
    if name.startswith("C") and name[1:].isdigit():
        # a chordless cycle: connected and every vertex of degree two
        return (len(pts) == int(name[1:]) and sub.is_connected()
                and all(len(g.neighbors(v)) == 2 for v in g.vertices))
    ref = entry(name).graph
    return ref.n == g.n and len(ref.edges) == len(g.edges) and find_induced(g, ref) is not None


def check_record(r: dict) -> list:
    """Problems found when re-checking a shape record; empty when it holds up."""
    problems = []
    e = GridEmbedding(frozenset(map(tuple, r["points"])))
    if r.get("outcome") == "Representable":
        try:
            verify(parse_word(r["word"]), _labeled(r["points"], r["labeling"]))
        except AssertionError as exc:
            problems.append(f"decision word: {exc}")
    builder = r.get("builder")
    if builder and builder["ok"]:
        try:
            verify(parse_word(builder["word"]), _labeled(r["points"], builder["labeling"]))
        except AssertionError as exc:
            problems.append(f"builder word: {exc}")
    for key in ("f", "p"):
        if r.get(f"{key}_avoiding") is False:
            if not _witness_ok(r[f"{key}_entry"], r[f"{key}_witness"], e):
                problems.append(f"{key} witness does not induce {r[f'{key}_entry']}")
    return problems
