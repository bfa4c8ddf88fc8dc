import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import weights
from oracles import hook_sdim, left_moves_oracle
from glnn.diagrams import enumerate_basic, enumerate_normalized, is_weakly_selfdual, sectors
from glnn.ds import (
    DerivativeSummand,
    determinant_berezin_power,
    ds,
    ds_iterate,
    ell,
    left_moves_D,
    sdim,
    sdim_value,
    signed_count,
)
from glnn.weights import Weight, berezin_twist, normalize


def W(*xs):
    return Weight(tuple(xs))


def exhaustive(nmax=5):
    for n in range(1, nmax + 1):
        for c in itertools.combinations_with_replacement(range(7), n):
            yield Weight(tuple(sorted(c, reverse=True)))


def test_ds_examples():
    assert ds([7, 7, 4, 2, 2, 2]) == [
        DerivativeSummand(W(7, 7, 4, 2, 2), 0),
        DerivativeSummand(W(7, 3, 1, 1, 1), 1),
    ]
    got = ds([3, 2, 1, 0])
    assert {s.weight for s in got} == {W(3, 2, 1), W(3, 2, -1), W(3, 0, -1), W(1, 0, -1)}
    assert all(s.shift == 0 for s in got)
    assert {s.weight for s in ds([3, 1, 0, 0])} == {W(3, 1, 0), W(0, -1, -1)}


def test_ds_rejects_rank_zero():
    with pytest.raises(ValueError):
        ds([])


def test_ds_iterate_examples():
    assert ds_iterate([1, 0], 2) == [DerivativeSummand(W(), 1)] * 2
    assert ds_iterate([4, 2], 0) == [DerivativeSummand(W(4, 2), 0)]
    assert {s.weight for s in ds_iterate([3, 0, 0, 0], 1)} == {W(3, 0, 0), W(-1, -1, -1)}
    with pytest.raises(ValueError):
        ds_iterate([1, 0], 3)
    with pytest.raises(ValueError):
        ds_iterate([1, 0], -1)


def test_sdim_examples():
    assert sdim([3, 2, 1, 0]).sdim == 24
    assert sdim([1, 0, 0, 0]).sdim == -2
    assert sdim([2, 2, 0, 0]).sdim == 6
    assert sdim([3, 1, 1, 0]).dim == 12
    assert sdim_value([]) == 1
    assert [sdim_value([j]) for j in range(-2, 3)] == [1, -1, 1, -1, 1]


def test_structure_exhaustive():
    for w in exhaustive():
        parts = ds(w)
        assert len(parts) == len(sectors(w))
        assert len(set(parts)) == len(parts)
        s = sdim_value(w)
        assert s != 0 and (s > 0) == (sum(w) % 2 == 0)
        assert s == sum((-1) ** p.shift * sdim_value(p.weight) for p in parts)
        for sec, p in zip(sectors(w), parts):
            assert abs(s) * sec.rank == abs(sdim_value(p.weight)) * w.n


def test_sdim_against_signed_count_exhaustive():
    for w in exhaustive():
        assert sdim_value(w) == signed_count(ds_iterate(w, w.n))


@given(weights(max_n=6, lo=-8, hi=8))
def test_sdim_against_hook_formula(w):
    assert sdim_value(w) == hook_sdim(w)


def test_left_moves_examples():
    for i in range(1, 12):
        assert left_moves_D([i, 0]) == i - 1
    for n in range(1, 6):
        for b in enumerate_basic(n):
            assert left_moves_D(b) == 0


@given(weights(), st.integers(-5, 5))
def test_left_moves_twist_and_oracle(w, m):
    assert left_moves_D(berezin_twist(w, m)) == left_moves_D(w) + m * len(w)
    assert left_moves_D(w) == left_moves_oracle(w)


def test_ell_examples():
    assert [ell([i, 0]) for i in range(1, 6)] == [0, 1, 2, 3, 4]
    assert ell([3, 2, 1, 0]) == 0
    assert ell([6, 6, 1, 1]) == 15
    assert determinant_berezin_power([5, 0]) == 4


@given(weights(max_n=6))
def test_ell_is_integral_and_consistent(w):
    n = len(w)
    assert n * ell(w) == abs(sdim_value(w)) * left_moves_D(w)


@pytest.mark.parametrize("n", range(2, 7))
def test_chain_rule(n):
    for b in enumerate_basic(n):
        for r in range(-3, 4):
            w = berezin_twist(b, r)
            parts = ds(w)
            ranks = [s.rank for s in sectors(w)]
            assert (n - 1) * left_moves_D(w) == sum(r_ * left_moves_D(p.weight) for r_, p in zip(ranks, parts))
            assert ell(w) == sum(ell(p.weight) for p in parts)


@given(weights(min_n=2, max_n=6, lo=-5, hi=9))
def test_chain_rule_random(w):
    parts = ds(w)
    assert ell(w) == sum(ell(p.weight) for p in parts)


@pytest.mark.parametrize("n", range(1, 7))
def test_odd_selfdual_is_berezin_power(n):
    for w in enumerate_normalized(n, 9 if n < 6 else 7):
        if is_weakly_selfdual(w) and sdim_value(w) % 2:
            assert normalize(w).w0 == Weight((0,) * n)
