import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from famspecies import families as fam
from famspecies import multifamilies as mf
from famspecies import oracles
from famspecies.enumeration import all_increasing, enumerate_families, random_increasing
from famspecies.families import Family
from famspecies.foundations import INF, FiniteMap, Universe, extnat_sum, set_partitions, submasks
from famspecies.multifamilies import MultiFamily, MultiSet

from conftest import increasing_multifamilies, maps_from


def ind(F):
    return mf.indicator_of_family(F)


@pytest.fixture
def maj3(abc):
    return fam.majority(abc)


def collapse(abc):
    Y = Universe(("p", "q"))
    return FiniteMap.from_dict(abc, Y, {"a": "p", "b": "p", "c": "q"})


# -- basics ---------------------------------------------------------------------

def test_construction_and_access(ab):
    M = MultiFamily.from_mapping(ab, {0b01: 1, 0b11: INF})
    assert M[0b01] == 1 and M[0b10] == 0 and M[["a", "b"]] == INF
    assert M.values() == [0, 1, 0, INF]
    assert MultiFamily.constant(ab, 2).values() == [2] * 4


def test_increasing_examples(ab, maj3):
    assert mf.is_increasing(ind(maj3))
    const = MultiFamily.constant(ab, INF)
    assert mf.is_increasing(const) and mf.is_decreasing(const)
    single = ind(Family.from_sets(ab, [["a"]]))
    assert not mf.is_increasing(single) and not mf.is_decreasing(single)


def test_indicator_roundtrip(abc):
    for F in enumerate_families(3):
        assert mf.family_of_indicator(ind(F)) == F
    assert ind(fam.empty_family(abc)) == MultiFamily.constant(abc, 0)
    with pytest.raises(ValueError):
        mf.family_of_indicator(MultiFamily.constant(abc, 2))


def test_co_multifamily(abc):
    Ua = fam.principal(abc, "a")
    not_a = Family.from_predicate(abc, lambda S: not S & 1)
    assert mf.co_multifamily(ind(Ua)) == ind(not_a)


@given(increasing_multifamilies())
def test_co_is_involution_and_flips_monotonicity(M):
    C = mf.co_multifamily(M)
    assert mf.co_multifamily(C) == M
    assert mf.is_decreasing(C)


# -- Out / Inn ------------------------------------------------------------------

def test_out_core_examples(abc, maj3):
    assert mf.out_core(ind(maj3)) == MultiFamily.constant(abc, 0)
    Ua = ind(fam.principal(abc, "a"))
    assert mf.out_core(Ua) == Ua
    top_only = ind(Family.from_sets(abc, [["a", "b", "c"]]))
    assert mf.out_core(top_only) == MultiFamily.constant(abc, 0)


def test_inn_hull_examples(abc, maj3):
    assert mf.inn_hull(ind(maj3)) == ind(maj3)
    I = mf.inn_hull(ind(fam.at_least(abc, 1)))
    assert I[abc.full] == 3
    assert I.values() == [bin(S).count("1") for S in range(8)]
    assert mf.inn_hull(MultiFamily.constant(abc, 0)) == MultiFamily.constant(abc, 0)


def test_non_increasing_is_rejected(ab):
    M = ind(Family.from_sets(ab, [["a"]]))
    for op in (mf.out_core, mf.inn_hull, mf.is_outer, mf.is_inner):
        with pytest.raises(ValueError):
            op(M)


def test_outer_inner_examples(abc, maj3):
    assert mf.is_inner(ind(maj3)) and not mf.is_outer(ind(maj3))
    Ua = ind(fam.principal(abc, "a"))
    assert mf.is_inner(Ua) and mf.is_outer(Ua)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_proper_filters_are_inner(n):
    for F in enumerate_families(n, species=fam.is_filter, eventual_only=True):
        if fam.is_proper(F):
            assert mf.is_inner(ind(F))


def test_nonzero_empty_value_makes_hull_infinite(ab):
    # the empty set may be repeated as a part, so any positive value there is unbounded
    M = MultiFamily.constant(ab, 1)
    assert mf.inn_hull(M) == MultiFamily.constant(ab, INF)
    assert mf.out_core(M) == M


@pytest.mark.parametrize("n", [1, 2])
def test_dp_matches_oracle_exhaustively(n):
    U = Universe.of_size(n)
    count = 0
    for M in all_increasing(U):
        assert mf.out_core(M) == oracles.out_core_bruteforce(M)
        assert mf.inn_hull(M) == oracles.inn_hull_bruteforce(M)
        count += 1
    assert count > 0


def test_dp_matches_oracle_sampled(rng):
    U = Universe.of_size(3)
    for _ in range(300):
        M = random_increasing(rng, U)
        assert mf.out_core(M) == oracles.out_core_bruteforce(M)
        assert mf.inn_hull(M) == oracles.inn_hull_bruteforce(M)


def _cover_split_out(M):
    """Reference recursion over two-part covers (parts may overlap)."""
    vals = M.values()
    out = list(vals)
    for S in sorted(range(len(vals)), key=lambda s: bin(s).count("1")):
        for A in submasks(S):
            for B in submasks(S):
                if A | B == S and A != S and B != S:
                    out[S] = min(out[S], extnat_sum([out[A], out[B]]))
    return out


@given(increasing_multifamilies())
def test_disjoint_split_agrees_with_cover_split(M):
    # for increasing tables, overlapping covers never beat disjoint ones
    assert mf.out_core(M).values() == _cover_split_out(M)


@given(increasing_multifamilies())
def test_sandwich_and_idempotence(M):
    O, I = mf.out_core(M), mf.inn_hull(M)
    assert O <= M <= I
    assert mf.out_core(O) == O and mf.inn_hull(I) == I
    assert mf.is_increasing(O) and mf.is_increasing(I)
    assert mf.is_outer(O) and mf.is_inner(I)


@given(increasing_multifamilies())
def test_fixed_points_match_direct_checks(M):
    assert mf.is_outer(M) == (oracles.outer_violation(M) is None)
    assert mf.is_inner(M) == (oracles.inner_violation(M) is None)


@given(increasing_multifamilies())
def test_out_core_is_largest_outer_minorant(M):
    # any outer N below M is below Out M; N = Out of a smaller table is one such
    N = mf.out_core(MultiFamily(M.universe, np.minimum(M.codes, 1)))
    assert N <= M
    assert N <= mf.out_core(M)


@given(increasing_multifamilies(n_max=3))
def test_inner_extends_to_all_partitions(M):
    I = mf.inn_hull(M)
    vals = I.values()
    for S in range(M.universe.size):
        for parts in set_partitions(S):
            assert extnat_sum(vals[p] for p in parts) <= vals[S]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bridge_between_conditions_and_indicators(n):
    for F in enumerate_families(n, eventual_only=True):
        assert fam.condition_o(F) == mf.is_outer(ind(F)) == fam.is_filter(fam.aso(F))
        assert fam.condition_i(F) == mf.is_inner(ind(F))


# -- push, star, multi-image ---------------------------------------------------------

def test_push_examples(abc, maj3):
    f = collapse(abc)
    assert mf.push_multifamily(f, ind(maj3)) == ind(fam.principal(f.codomain, "p"))
    M = random_increasing(random.Random(1), abc)
    assert mf.push_multifamily(FiniteMap.identity(abc), M) == M


@given(st.data())
def test_push_preserves_species(data):
    M = data.draw(increasing_multifamilies(n_min=2))
    f = data.draw(maps_from(M.universe))
    P = mf.push_multifamily(f, M)
    assert mf.is_increasing(P)
    O, I = mf.out_core(M), mf.inn_hull(M)
    assert mf.is_outer(mf.push_multifamily(f, O))
    assert mf.is_inner(mf.push_multifamily(f, I))


def test_star_examples(abc, maj3):
    assert mf.star_multiset(ind(fam.principal(abc, "a"))).as_dict() == {"a": 1, "b": 0, "c": 0}
    assert mf.star_multiset(ind(maj3)).as_dict() == {"a": 0, "b": 0, "c": 0}
    assert set(mf.star_multiset(MultiFamily.constant(abc, INF)).as_dict().values()) == {INF}


def test_multi_image_examples(abc):
    f = collapse(abc)
    L = MultiSet.from_mapping(abc, {"a": 1, "b": 2, "c": INF})
    assert mf.multi_image(f, L).as_dict() == {"p": 3, "q": INF}
    ind01 = MultiSet.from_mapping(abc, {"a": 1, "b": 1, "c": 0})
    assert mf.multi_image(f, ind01)["p"] == 2
    Y = Universe(("x", "y", "z"))
    g = FiniteMap.from_dict(abc, Y, {"a": "z", "b": "x", "c": "y"})
    assert mf.multi_image(g, L).as_dict() == {"x": 2, "y": INF, "z": 1}


# -- level sets ----------------------------------------------------------------------------

def test_level_set_examples(abc):
    for F in enumerate_families(3, eventual_only=True):
        assert mf.upper_level_family(ind(F), 0) == F
    I = mf.inn_hull(ind(fam.at_least(abc, 1)))
    assert mf.upper_level_family(I, 2) == Family.from_sets(abc, [["a", "b", "c"]])
    with pytest.raises(ValueError):
        mf.upper_level_family(I, INF)


@pytest.mark.parametrize("n", [1, 2])
def test_level_set_aso_exhaustive(n):
    for M in all_increasing(Universe.of_size(n)):
        C = mf.co_multifamily(M)
        for level in range(4):
            assert fam.aso(mf.upper_level_family(M, level)) == mf.lower_level_family(C, level)


@given(increasing_multifamilies(n_min=3, n_max=3), st.integers(0, 3))
def test_level_set_aso_sampled(M, level):
    assert fam.aso(mf.upper_level_family(M, level)) == mf.lower_level_family(mf.co_multifamily(M), level)
    assert fam.is_eventual(mf.upper_level_family(M, level))
