"""Compare the compiled kernels with the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py``. Each backend is loaded in
its own subprocess so the import-time selection is exercised as in real use.
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from dhmyerson import kernels
from dhmyerson.analysis import random_hypergraph
from dhmyerson.game import random_table_game
from dhmyerson.restriction import restrict
from dhmyerson.values import myerson

out = {"backend": kernels.BACKEND, "rows": []}
for n in json.loads(sys.argv[1]):
    h = random_hypergraph(n, 20, 3, 3, n)
    g = random_table_game(n, n)
    t0 = time.perf_counter()
    table = kernels.partition_table(n, h.tails, h.heads, False)
    t1 = time.perf_counter()
    r = restrict(h, g)
    w, _ = r.scaled
    t2 = time.perf_counter()
    kernels.size_marginal_sums(w, n)
    t3 = time.perf_counter()
    myerson(h, g)
    t4 = time.perf_counter()
    out["rows"].append({"n": n, "partition_table": t1 - t0, "restricted_cache": t2 - t1,
                        "marginal_sums": t3 - t2, "myerson": t4 - t3})
print(json.dumps(out))
"""


def run(sizes, pure):
    env = dict(os.environ)
    env.pop("DHMYERSON_PURE_PYTHON", None)
    if pure:
        env["DHMYERSON_PURE_PYTHON"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKER, json.dumps(sizes)],
                         capture_output=True, text=True, env=env, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[12, 14, 16])
    args = ap.parse_args()
    fast, slow = run(args.sizes, False), run(args.sizes, True)
    if fast["backend"] != "compiled":
        print("compiled extension not available; both columns use the fallback")
    cols = ["partition_table", "restricted_cache", "marginal_sums", "myerson"]
    print(f"{'n':>3}  {'stage':<17} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for a, b in zip(fast["rows"], slow["rows"]):
        for c in cols:
            ratio = b[c] / a[c] if a[c] > 0 else float("inf")
            print(f"{a['n']:>3}  {c:<17} {a[c]:>11.4f} {b[c]:>10.4f} {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
