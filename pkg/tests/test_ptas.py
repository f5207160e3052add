import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import instances
from cspreopt import (
    Instance,
    RatioParams,
    RSample,
    UnboundedRatio,
    enumerate_r_samples,
    gen_random,
    ptas_solve,
    ratio_bound,
    sample_count,
    solve_exact_tuples,
)
from cspreopt.ptas import sweep_samples


def ratio_reference(r, sigma):
    mpmath.mp.dps = 50
    return 1 + (4 * sigma - 4) / (mpmath.sqrt(mpmath.e) * (mpmath.sqrt(4 * r + 1) - 3))


@pytest.mark.parametrize("r,sigma", [(3, 2), (6, 4), (3, 4), (4, 2), (10, 20)])
def test_ratio_bound_matches_high_precision_reference(r, sigma):
    assert ratio_bound(r, sigma) == pytest.approx(float(ratio_reference(r, sigma)), abs=1e-9)
    assert RatioParams(r, sigma).bound == ratio_bound(r, sigma)


def test_ratio_bound_frozen_values():
    assert ratio_bound(3, 2) == pytest.approx(5.006469372872801, abs=1e-9)
    assert ratio_bound(6, 4) == pytest.approx(4.639183958275801, abs=1e-9)


@pytest.mark.parametrize("r", [0, 1, 2])
def test_ratio_unbounded_for_small_r(r):
    with pytest.raises(UnboundedRatio):
        ratio_bound(r, 2)


def test_ratio_params_need_two_symbols():
    with pytest.raises(ValueError):
        RatioParams(3, 1)


def test_sample_counts(ex1):
    assert len(list(enumerate_r_samples(ex1, 1))) == 20 == sample_count(4, 5, 1)
    assert len(list(enumerate_r_samples(ex1, 4))) == 625 == sample_count(4, 5, 4)
    assert len(list(enumerate_r_samples(Instance(("AB", "BA", "AA"), 2), 3))) == 1


@given(instances(max_t=4, max_n=5), st.data())
def test_enumeration_is_canonical_and_complete(inst, data):
    r = data.draw(st.integers(1, inst.t))
    got = list(enumerate_r_samples(inst, r))
    assert len(got) == len(set(got)) == sample_count(inst.t, inst.num_windows, r)
    assert all(s.distinct_sequences and s.r == r for s in got)
    keys = [(tuple(p.seq_index for p in s.picks), tuple(p.position for p in s.picks)) for s in got]
    assert keys == sorted(keys)
    assert sweep_samples(inst, r).samples == len(got)


def test_multiset_mode_counts(ex1):
    got = list(enumerate_r_samples(ex1, 2, mode="multiset"))
    assert len(got) == sample_count(4, 5, 2, "multiset") == math.comb(21, 2)
    assert not all(s.distinct_sequences for s in got)
    assert ptas_solve(ex1, 2, mode="multiset").samples == len(got)


def test_r_out_of_range(ex1):
    for r in (0, 5):
        with pytest.raises(ValueError):
            list(enumerate_r_samples(ex1, r))
        with pytest.raises(ValueError):
            ptas_solve(ex1, r)
    with pytest.raises(ValueError):
        ptas_solve(ex1, 2, mode="bogus")


def test_rsample_rejects_unsorted_picks():
    with pytest.raises(ValueError):
        RSample(((1, 0), (0, 0)))


def test_examples(ex1, ex1p):
    assert ptas_solve(ex1p, 1).cost == 1
    assert oracles.ptas_brute(ex1p.sequences, 4, 1) == 1
    assert ptas_solve(ex1, 4).cost == 0


@given(instances(max_t=4, max_n=6), st.data())
def test_ptas_matches_brute_force(inst, data):
    r = data.draw(st.integers(1, inst.t))
    res = ptas_solve(inst, r)
    assert res.cost == oracles.ptas_brute(inst.sequences, inst.l, r)
    assert res.cost == oracles.pattern_cost(res.pattern, inst.sequences)
    assert res.costed.cost <= res.cost


@given(instances(max_t=4, max_n=6))
def test_r_equal_t_is_exact(inst):
    assert ptas_solve(inst, inst.t).cost == solve_exact_tuples(inst).cost


def test_first_minimum_in_enumeration_order(ex1p):
    res = ptas_solve(ex1p, 1)
    # the first cost-1 sample in order is BBBB at sequence 0, position 4
    assert res.sample.picks == ((0, 4),)
    assert res.pattern == "BBBB"


def test_deterministic_across_workers():
    inst = gen_random(5, 9, 3, 3, 2)
    one = ptas_solve(inst, 3)
    assert ptas_solve(inst, 3) == one
    assert ptas_solve(inst, 3, jobs=4) == one
