"""Compare the numba kernels with the plain Python fallback.

Each backend runs in its own interpreter, since the choice is fixed at import
time by TWELVEREP_PURE.  The numba run is timed after one warm-up pass so
compilation (or loading from the cache) is excluded.

    python3 benchmarks/bench_backends.py [--repeat 3]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from twelverep import backend, is_12_representable
from twelverep.catalog import load_shape, make_cycle
from twelverep.grid.embedding import to_labeled_graph

cases = {
    "C6": make_cycle(6),
    "X": to_labeled_graph(load_shape("x")),
    "G1": to_labeled_graph(load_shape("g1")),
    "B333": to_labeled_graph(load_shape("b333")),
    "G6": to_labeled_graph(load_shape("g6")),
}
repeat = int(sys.argv[1])
for g in cases.values():
    is_12_representable(g)
out = {"backend": backend(), "cases": {}}
for name, g in cases.items():
    best = None
    for _ in range(repeat):
        t = time.perf_counter()
        d = is_12_representable(g)
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    out["cases"][name] = {"outcome": d.outcome, "nodes": int(d.nodes), "seconds": best}
print(json.dumps(out))
"""


def run(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env["TWELVEREP_PURE"] = "1" if pure else "0"
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    print(f"{'case':<6} {'outcome':<17} {'nodes':>8} {fast['backend']:>10} "
          f"{slow['backend']:>10} {'speedup':>8}")
    for name, a in fast["cases"].items():
        b = slow["cases"][name]
        assert a["outcome"] == b["outcome"] and a["nodes"] == b["nodes"], name
        print(f"{name:<6} {a['outcome']:<17} {a['nodes']:>8} {a['seconds']:>10.4f} "
              f"{b['seconds']:>10.4f} {b['seconds'] / a['seconds']:>7.1f}x")


if __name__ == "__main__":
    main()
