"""Time the numba and numpy kernel backends on the workloads the sweeps use.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]

Numba timings exclude compilation (one warm-up call per kernel first).
"""

from __future__ import annotations

import argparse
import json
import time

import numpy as np

from famspecies import kernels
from famspecies._config import INF_CODE, numba_available
from famspecies.enumeration import LADDER, family_tables, monotone_repair, tables_to_codes
from famspecies.foundations import Universe
from famspecies.topology import all_topologies


def workloads():
    t4 = family_tables(4)
    rng = np.random.default_rng(0)
    t6 = rng.random((4096, 64)) < 0.5
    images = tables_to_codes(kernels.aso(t4))
    dp_rows = [monotone_repair(rng.choice(np.array(LADDER), size=1 << 10), upward=True) for _ in range(20)]
    mf_rows = [monotone_repair(rng.choice(np.array(LADDER), size=16), upward=True) for _ in range(200)]
    opens = [T.open_array for T in all_topologies(Universe.of_size(4))]
    return {
        "upward_closed  (65536 families, n=4)": ("upward_closed", lambda k: k(t4)),
        "aso            (65536 families, n=4)": ("aso", lambda k: k(t4)),
        "meet_closed    (4096 random, n=6)": ("meet_closed", lambda k: k(t6)),
        "has_disjoint   (4096 random, n=6)": ("has_disjoint_members", lambda k: k(t6)),
        "upward_core    (65536 families, n=4)": ("upward_core", lambda k: k(t4)),
        "antitone pairs (3^16 comparable pairs)": ("antitone_violations", lambda k: k(images)),
        "out_core       (20 tables, n=10)": ("out_core", lambda k: [k(v, INF_CODE) for v in dp_rows]),
        "inn_hull       (20 tables, n=10)": ("inn_hull", lambda k: [k(v, INF_CODE) for v in dp_rows]),
        "closure_min    (20 tables x 355 topologies, n=4)": (
            "closure_min",
            lambda k: [k(v, o, INF_CODE) for v in mf_rows[:20] for o in opens],
        ),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    args = ap.parse_args(argv)

    names = ["numpy"] + (["numba"] if numba_available() else [])
    backends = {b: kernels.get_backend(b) for b in names}
    rows = []
    for label, (kernel, call) in workloads().items():
        row = {"workload": label}
        for b, ns in backends.items():
            call(ns[kernel])  # warm-up / compile
            row[b] = best_of(lambda: call(ns[kernel]), args.repeat)
        if "numba" in row:
            row["speedup"] = row["numpy"] / row["numba"]
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    width = max(len(r["workload"]) for r in rows)
    header = f"{'workload':<{width}}  " + "  ".join(f"{b:>10}" for b in names)
    if "numba" in names:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for r in rows:
        line = f"{r['workload']:<{width}}  " + "  ".join(f"{r[b] * 1e3:>8.2f}ms" for b in names)
        if "speedup" in r:
            line += f"  {r['speedup']:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
