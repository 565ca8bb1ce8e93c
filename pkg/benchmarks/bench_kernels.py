"""Compare the compiled kernel with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Times the Dubrovnik skein evaluation over the vendored knot table and the
exhaustive ruling search over the constructed fronts, checks that both
backends return identical results, and prints a small table.
"""

from __future__ import annotations

import argparse
import json
import time
from importlib import resources

from maxtb import _kernels
from maxtb._kernels import python as py_kernel
from maxtb.diagram import is_plus_adequate, parse_pd, s_plus
from maxtb.front import front_of_diagram
from maxtb.kauffman import slot_involution


def _table():
    text = resources.files("maxtb").joinpath("data/knot_table.jsonl").read_text()
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def _time(fn, repeat):
    best, out = None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    rows = _table()
    codes = [slot_involution(parse_pd(r["pd"])) for r in rows]
    fronts = []
    for r in rows:
        d = parse_pd(r["pd"])
        if is_plus_adequate(s_plus(d)) and d.n <= 10:
            fronts.append(front_of_diagram(d)[0].kernel_input())

    def skein(k):
        return lambda: [k.dubrovnik_regular(p, {}) for p in codes]

    def rulings(k):
        return lambda: [k.ruling_masks(kinds, pos, sum(1 for x in kinds if x == 2)) for kinds, pos in fronts]

    backends = [("python", py_kernel)]
    if _kernels.BACKEND != "python":
        backends.insert(0, (_kernels.BACKEND, _kernels))
    else:
        print("compiled kernel not built; only the fallback is timed")
    results = {}
    print("%-10s %-28s %10s" % ("backend", "task", "seconds"))
    for name, k in backends:
        for task, fn in (("dubrovnik (%d knots)" % len(codes), skein(k)),
                         ("ruling search (%d fronts)" % len(fronts), rulings(k))):
            dt, out = _time(fn, args.repeat)
            results.setdefault(task, []).append((name, dt, out))
            print("%-10s %-28s %10.3f" % (name, task, dt))
    for task, runs in results.items():
        outs = [o for _, _, o in runs]
        assert all(o == outs[0] for o in outs), "backends disagree on %s" % task
        if len(runs) == 2:
            print("speedup on %s: %.1fx" % (task, runs[1][1] / runs[0][1]))


if __name__ == "__main__":
    main()
