import itertools
import random

import pytest

from oracles import character_value, random_point, type_a_multiplicity, weyl_character_value
from glnn.fusion.classical import (
    RootSystem,
    brute_force_tensor,
    dominant_weights,
    klimyk_tensor,
    parse_root_system,
    weight_system,
    weyl_dimension,
)

SYSTEMS = [RootSystem(t, r) for t in "ABC" for r in (1, 2, 3)] + [RootSystem("D", r) for r in (2, 3)]


def dominant_sample(g, max_dim=200, top=4):
    out = []
    for c in itertools.product(range(-top, top + 1), repeat=g.dim):
        if g.is_dominant(c) and (g.type != "A" or c[-1] in (-1, 0)):
            if weyl_dimension(g, c) <= max_dim:
                out.append(c)
    return out


def test_root_system_validation():
    with pytest.raises(ValueError):
        RootSystem("E", 6)
    with pytest.raises(ValueError):
        RootSystem("D", 1)
    with pytest.raises(ValueError):
        RootSystem("A", 0)
    assert parse_root_system("c3") == RootSystem("C", 3)


def test_positive_root_counts():
    for g in SYSTEMS:
        r = g.rank
        expected = {"A": r * (r + 1) // 2, "B": r * r, "C": r * r, "D": r * (r - 1)}[g.type]
        assert len(g.positive_roots) == expected


def test_weyl_dimension_examples():
    assert weyl_dimension(RootSystem("C", 3), (1, 1, 0)) == 14
    assert weyl_dimension(RootSystem("A", 3), (1, 0, 0, 0)) == 4
    for g in SYSTEMS:
        assert weyl_dimension(g, (0,) * g.dim) == 1
    # standard representations
    assert weyl_dimension(RootSystem("B", 3), (1, 0, 0)) == 7
    assert weyl_dimension(RootSystem("D", 3), (1, 0, 0)) == 6
    assert weyl_dimension(RootSystem("D", 3), (1, 1, 1)) == 10
    assert weyl_dimension(RootSystem("C", 3), (2, 0, 0)) == 21
    with pytest.raises(ValueError):
        weyl_dimension(RootSystem("C", 2), (0, 1))


def test_weight_system_examples():
    assert weight_system(RootSystem("A", 1), (2, 0)) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    ws = weight_system(RootSystem("C", 3), (1, 0, 0))
    assert set(ws) == {tuple(s if j == i else 0 for j in range(3)) for i in range(3) for s in (1, -1)}
    assert set(ws.values()) == {1}
    for g in SYSTEMS:
        assert weight_system(g, (0,) * g.dim) == {(0,) * g.dim: 1}


@pytest.mark.parametrize("g", SYSTEMS, ids=str)
def test_weight_system_dimension_and_invariance(g):
    for lam in dominant_sample(g, 120, 3):
        ws = weight_system(g, lam, use_cache=False)
        assert sum(ws.values()) == weyl_dimension(g, lam)
        for mu, m in ws.items():
            assert ws[g.dominant_rep(mu)] == m


@pytest.mark.parametrize("rank", (1, 2, 3))
def test_type_a_multiplicities_are_kostka_numbers(rank):
    g = RootSystem("A", rank)
    for lam in dominant_sample(g, 200, 4):
        ws = weight_system(g, lam)
        for mu in set(itertools.permutations(lam)) | set(ws):
            assert ws.get(tuple(mu), 0) == type_a_multiplicity(lam, mu)


@pytest.mark.parametrize("g", SYSTEMS, ids=str)
def test_weight_system_against_weyl_character(g):
    rng = random.Random(hash(str(g)) % 1000)
    for lam in dominant_sample(g, 80, 2):
        ws = weight_system(g, lam)
        x = random_point(g.dim, rng)
        a = weyl_character_value(g.type, lam, x)
        b = character_value(ws, x)
        assert abs(a - b) <= 1e-8 * max(1.0, abs(b))


def test_dominant_weights_c3():
    assert dominant_weights(RootSystem("C", 3), (1, 1, 0)) == [(1, 1, 0), (0, 0, 0)]


def test_klimyk_examples():
    C3 = RootSystem("C", 3)
    got = klimyk_tensor(C3, (2, 0, 0), (2, 0, 0)).as_dict()
    assert got == {(4, 0, 0): 1, (3, 1, 0): 1, (2, 2, 0): 1, (2, 0, 0): 1, (1, 1, 0): 1, (0, 0, 0): 1}
    A1 = RootSystem("A", 1)
    assert klimyk_tensor(A1, (1, 0), (1, 0)).as_dict() == {(2, 0): 1, (1, 1): 1}
    B2 = RootSystem("B", 2)
    assert klimyk_tensor(B2, (2, 1), (0, 0)).as_dict() == {(2, 1): 1}


def test_klimyk_sl2_clebsch_gordan():
    A1 = RootSystem("A", 1)
    for a in range(6):
        for b in range(6):
            got = klimyk_tensor(A1, (a, 0), (b, 0)).as_dict()
            want = {(a + b - k, k): 1 for k in range(min(a, b) + 1)}
            assert got == want


@pytest.mark.parametrize("g", SYSTEMS, ids=str)
def test_klimyk_commutes_and_conserves(g):
    rng = random.Random(3)
    sample = dominant_sample(g, 60, 2)
    for _ in range(15):
        a, b = rng.choice(sample), rng.choice(sample)
        d1 = klimyk_tensor(g, a, b)
        assert d1.as_dict() == klimyk_tensor(g, b, a).as_dict()
        assert d1.total_dimension == weyl_dimension(g, a) * weyl_dimension(g, b)
        assert d1.as_dict() == brute_force_tensor(g, a, b).as_dict()


def test_type_a_duals_close_up():
    A3 = RootSystem("A", 3)
    d = klimyk_tensor(A3, (1, 0, 0, 0), (0, 0, 0, -1)).as_dict()
    assert d == {(1, 0, 0, -1): 1, (0, 0, 0, 0): 1}
    d = klimyk_tensor(A3, (2, 1, 0, 0), (0, 0, -1, -2)).as_dict()
    assert d == {tuple(-x for x in reversed(k)): v for k, v in d.items()}
