import pytest

from famspecies import families as fam
from famspecies import multifamilies as mf
from famspecies import sweeps
from famspecies.families import Family
from famspecies.foundations import INF, Universe
from famspecies.multifamilies import MultiFamily

FAST = ["simple-observ", "aso-involution", "push-aso-commute", "prop-flt", "species-bridge",
        "inner-unique-limit", "rerere-analog", "level-set-aso", "constructions"]


def test_registry_covers_declared_ids():
    declared = {"simple-observ", "aso-involution", "push-aso-commute", "prop-ia", "prop-ib", "prop-ii",
                "prop-iii", "prop-ii-star", "thm-lim", "cor-inn-seq", "inner-unique-limit", "prop-flt",
                "level-set-aso", "push-out-inn", "cogap-formula", "rerere-analog"}
    assert declared <= set(sweeps.SWEEPS)


def test_unknown_sweep_and_bad_scope():
    with pytest.raises(ValueError):
        sweeps.run_sweep("no-such-statement")
    with pytest.raises(ValueError):
        sweeps.run_sweep("prop-flt", n=5)


def test_aso_involution_at_three_points():
    r = sweeps.run_sweep("aso-involution", n=3)
    assert (r.passed, r.instances) == (256, 256) and r.ok


@pytest.mark.parametrize("sid", FAST)
def test_fast_sweeps_pass(sid):
    r = sweeps.run_sweep(sid)
    assert r.ok, r.counterexample
    assert 0 < r.instances and r.passed <= r.instances


@pytest.mark.parametrize("sid", ["prop-ia", "nat-ep", "cogap-formula"])
def test_sampled_sweeps_are_reproducible(sid):
    a = sweeps.run_sweep(sid, samples=20, seed=5).to_json()
    b = sweeps.run_sweep(sid, samples=20, seed=5).to_json()
    for r in (a, b):
        r.pop("elapsed")
    assert a == b and a["seed"] == 5 and a["scope"] == {"samples": 20}


def test_failing_sweep_reports_shrunk_counterexample(monkeypatch):
    # a false statement: every increasing multi-family is outer
    def bogus(rep, n=2, samples=30, **_):
        import random
        from famspecies.enumeration import random_increasing

        rng = random.Random(rep.seed)
        U = Universe.of_size(n)
        for _ in range(samples):
            M = random_increasing(rng, U)
            sweeps._Tally(rep).check(mf.is_outer(M), lambda: sweeps._mf_witness(M, lambda N: not mf.is_outer(N)))

    monkeypatch.setitem(sweeps.SWEEPS, "bogus", bogus)
    r = sweeps.run_sweep("bogus", seed=1)
    assert not r.ok and r.passed < r.instances
    ce = r.counterexample["multifamily"]
    M = MultiFamily.from_values(Universe(tuple(ce["universe"])), [v["value"] if v["value"] != "inf" else INF for v in ce["values"]])
    assert not mf.is_outer(M)
    # greedy shrinking leaves no single value that can be lowered
    for S in range(M.universe.size):
        for lower in (0, 1, 2):
            if lower < M.codes[S]:
                codes = M.codes.copy()
                codes[S] = lower
                cand = MultiFamily(M.universe, codes)
                assert not (mf.is_increasing(cand) and not mf.is_outer(cand))
    assert r.to_json()["ok"] is False


def test_shrink_family():
    U = Universe.of_size(3)
    F = fam.all_subsets(U)
    small = sweeps.shrink_family(F, lambda G: U.full in G)
    assert small == Family(U, frozenset({U.full}))


def test_census_examples():
    assert sweeps.census(1).counts["ultrafilter"] == 1
    c2 = sweeps.census(2)
    assert c2.counts["ultrafilter"] == 2
    assert c2.total == 16 and c2.counts["eventual"] == 6
    c3 = sweeps.census(3)
    assert c3.crosstab["self_aso_eventual & not filter"] == 1  # Maj3
    assert c3.assertions["majority family is self-Aso, not a filter"]
    for n in (1, 2, 3, 4):
        c = sweeps.census(n)
        assert all(c.assertions.values())
        assert all(v <= 2 ** (2**n) for v in c.counts.values())
        assert sum(c.crosstab.values()) == c.total
    assert sweeps.census(4).counts["eventual"] == 168
