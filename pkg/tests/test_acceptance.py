"""Acceptance criteria, one test each, with their runtime budgets.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible with ``-v`` or
``-s``) and asserts the same verdict.
"""

import json
import shutil
import subprocess
import sys
import time

import pytest

from famspecies import natep, sweeps
from famspecies import topology as top
from famspecies.foundations import INF, Universe
from famspecies.natep import EpSequence


@pytest.fixture
def verdict(capsys):
    def report(number, title, checks: dict, elapsed=None, budget=None):
        ok = all(checks.values())
        timing = ""
        if budget is not None:
            ok = ok and elapsed < budget
            timing = f" ({elapsed:.2f}s, budget {budget}s)"
        failed = [k for k, v in checks.items() if not v]
        extra = f" failed: {failed}" if failed else ""
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}{timing}{extra}")
        assert ok, failed or f"over budget: {elapsed:.2f}s > {budget}s"

    return report


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_criterion_01_species_foundations(verdict):
    (obs, inv), elapsed = timed(lambda: (sweeps.run_sweep("simple-observ"), sweeps.run_sweep("aso-involution")))
    checks = {
        "duality and trivial intersection on all 256 + 65536 families": obs.ok and obs.instances == 256 + 65536,
        "exactly 2 eventual & co-eventual at n=3": obs.notes["n=3: eventual and co-eventual"] == 2,
        "exactly 2 eventual & co-eventual at n=4": obs.notes["n=4: eventual and co-eventual"] == 2,
        "Aso involution + per-family anti-monotonicity": inv.ok and inv.instances == 256 + 65536,
        "no comparable pair violates anti-monotonicity (n=3)": inv.notes["n=3: comparable pairs violating anti-monotonicity"] == 0,
        "no comparable pair violates anti-monotonicity (n=4)": inv.notes["n=4: comparable pairs violating anti-monotonicity"] == 0,
    }
    verdict(1, "species foundations on |X| = 3, 4", checks, elapsed, 5)


def test_criterion_02_prop_flt(verdict):
    rep, elapsed = timed(lambda: sweeps.run_sweep("prop-flt", n=4))
    counts = [rep.notes[f"n={k}: self-Aso eventual"] for k in (1, 2, 3, 4)]
    checks = {
        "four conditions agree on every self-Aso eventual family, |X| <= 4": rep.ok,
        "all self-Aso eventual families visited": rep.instances == sum(counts) == 19,
    }
    verdict(2, "filter criterion for self-Aso families", checks, elapsed, 30)


def test_criterion_03_out_inn_oracle(verdict):
    rep, elapsed = timed(lambda: sweeps.run_sweep("out-inn-oracle", n=3, samples=1000))
    checks = {
        "DP == oracle, sandwich, idempotence, fixed points": rep.ok,
        "|X| = 2 exhaustive": rep.notes["n=2"] == "exhaustive",
        ">= 1000 samples at |X| = 3": rep.notes["n=3"] == "1000 samples",
    }
    verdict(3, "Out/Inn correctness", checks, elapsed, 60)


def test_criterion_04_bridge(verdict):
    rep = sweeps.run_sweep("species-bridge", n=3)
    checks = {"(O)/(I) agree with outer/inner indicators on all eventual families, |X| <= 3":
              rep.ok and rep.instances == 3 + 6 + 20}
    verdict(4, "condition/indicator bridge", checks)


def test_criterion_05_propositions(verdict):
    ids = ["prop-ia", "prop-ib", "prop-ii", "prop-iii", "prop-ii-star", "thm-lim", "cor-inn-seq"]
    reps = {i: sweeps.run_sweep(i) for i in ids}
    checks = {f"{i}: {r.passed}/{r.instances}": r.ok for i, r in reps.items()}
    # scope: (i)a/(i)b use 200 samples against every map 3->2 and 3->3
    checks["(i)a scope"] = reps["prop-ia"].instances == 200 * (2**3 + 3**3)
    checks["(i)b scope"] = reps["prop-ib"].instances == 200 * (2**3 + 3**3)
    # (ii): all 4 topologies on 2 points and all 29 on 3 points
    checks["(ii) scope"] = reps["prop-ii"].instances == 100 * (4 + 29)
    verdict(5, "pushforward / closure inequalities and limit theorem", checks)


def test_criterion_06_inner_unique_limit(verdict):
    rep = sweeps.run_sweep("inner-unique-limit", n=4)
    checks = {"at most one limit; pushes land on f(limit)": rep.ok and rep.instances > 0}
    verdict(6, "inner eventual families have unique limits", checks)


def test_criterion_07_level_sets(verdict):
    rep = sweeps.run_sweep("level-set-aso", n=3, samples=500)
    checks = {"Aso of upper level set == lower level set of co M": rep.ok,
              "exhaustive |X|=2 plus 500 samples at |X|=3": rep.instances >= 4 * 500}
    verdict(7, "level-set proposition", checks)


def test_criterion_08_nat_ep(verdict):
    rep = sweeps.run_sweep("nat-ep", samples=500)
    cov = sweeps.run_sweep("cogap-formula", samples=200)
    checks = {
        "windowed oracle (500), toggles, monotonicity, split, witnesses K<=5 (100 sets)": rep.ok,
        "instance count": rep.instances == 500 + 3 * 250 + 5 * 100,
        "Out coGap closed form unbeaten by bounded covers on 200 sets": cov.ok and cov.instances == 200,
    }
    verdict(8, "eventually periodic sets", checks)


def test_criterion_09_rerere_analog(verdict):
    X = Universe(("a", "b"))
    T = top.discrete(X)
    const = EpSequence.from_labels(X, [], ["a"])
    alt = EpSequence.from_labels(X, [], ["a", "b"])
    checks = {
        "constant sequence: coGap-limit {a: INF, b: 0}": natep.seq_limit(const, T, "cogap").as_dict() == {"a": INF, "b": 0},
        "alternating: coGap-limit {a: 1, b: 1}": natep.seq_limit(alt, T, "cogap").as_dict() == {"a": 1, "b": 1},
        "alternating: no H-limit": natep.seq_limit(alt, T, "H").support() == 0,
        "sweep": sweeps.run_sweep("rerere-analog").ok,
    }
    verdict(9, "coGap limits without ordinary limits", checks)


def test_criterion_10_constructions(verdict):
    rep = sweeps.run_sweep("constructions", n=3)
    witness = rep.notes.get("order witness")
    checks = {
        "products self-Aso, projection exact, samples self-Aso": rep.ok,
        "order-dependence witness on Maj3 x Maj3": witness is not None and witness["in XY"] != witness["in YX"],
    }
    verdict(10, "product and majority-projection constructions", checks)


def test_verify_all_under_three_minutes(verdict):
    exe = shutil.which("famspecies")
    cmd = [exe] if exe else [sys.executable, "-m", "famspecies.cli"]
    res, elapsed = timed(lambda: subprocess.run(cmd + ["verify", "--all"], capture_output=True, text=True))
    out = json.loads(res.stdout) if res.stdout else {}
    checks = {
        "exit code 0": res.returncode == 0,
        "every sweep passes": bool(out.get("ok")) and len(out.get("reports", [])) == len(sweeps.SWEEPS),
    }
    verdict("all", "`famspecies verify --all`", checks, elapsed, 180)
