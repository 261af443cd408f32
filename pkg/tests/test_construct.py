import pytest

from kcritical.checks import all_params, g2_floor_variant
from kcritical.construct import (
    construct_conjecture,
    construct_g1,
    construct_g1_blowup,
    construct_g2,
    construct_g2_step,
    construct_negative,
    tilde,
)
from kcritical.errors import Inapplicable, InvalidStep, IsBiregularCase
from kcritical.graph import BipartiteGraph
from kcritical.verify import is_k_critical_deficiency, is_k_critical_deletion


def test_g1_6_3(P63):
    G = construct_g1(P63)
    assert G.adj == ((0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2))
    assert G.e == 12


def test_g1_12_9(P129):
    G = construct_g1(P129)
    assert G.adj == ((0, 1, 2),) * 4 + ((3, 4, 5),) * 4 + ((6, 7, 8),) * 4


def test_g1_matches_blowup():
    for P in all_params(60):
        G = construct_g1(P)
        assert G == construct_g1_blowup(P)
        assert G.is_biregular(P.a, P.b)


def test_g2_6_3(P63):
    G = construct_g2(P63)
    first = [0, 1, 1, 2, 2, 0]
    assert list(G.adj) == [tuple(sorted({j, (j + 1) % 3})) for j in first]
    assert G.adj[0] == (0, 1) and G.adj[5] == (0, 1)
    assert G.v_degrees() == [4, 4, 4]


def test_g2_12_9(P129):
    G = construct_g2(P129)
    first = [-(-i * 3 // 4) % 9 for i in range(12)]
    assert [first.count(j) for j in range(9)] == [2, 1, 1, 2, 1, 1, 2, 1, 1]
    assert G.v_degrees() == [4] * 9


def test_g2_10_5(P105):
    assert construct_g2(P105).is_biregular(3, 6)


def test_g2_biregular_up_to_200():
    for P in all_params(200):
        assert construct_g2(P).is_biregular(P.a, P.b)


def test_g2_step(P63, P129):
    assert construct_g2_step(P63, 1) == construct_g2(P63)
    G = construct_g2_step(P129, 2)
    assert G.is_biregular(3, 4)
    assert is_k_critical_deletion(G).is_k_critical
    with pytest.raises(InvalidStep):
        construct_g2_step(P129, 3)
    loose = construct_g2_step(P129, 3, unchecked=True)
    assert loose.order == (12, 9)


def test_g2_step_divisors_are_k_critical():
    for P in all_params(24):
        for s in range(1, P.x + 1):
            if P.x % s == 0:
                G = construct_g2_step(P, s)
                assert G.is_biregular(P.a, P.b)
                assert is_k_critical_deficiency(G).is_k_critical


def test_floor_variant_is_k_critical():
    for P in all_params(16):
        G = g2_floor_variant(P)
        assert is_k_critical_deletion(G).is_k_critical
        assert is_k_critical_deficiency(G).is_k_critical


def test_negative_10_5(P105):
    G = construct_negative(P105)
    assert G.is_biregular(3, 6)
    assert G.neighborhood([0, 4]) == {0, 1, 2, 5, 6, 7}
    kept = sorted(set(range(10)) - {1, 2, 5, 6, 7})
    from kcritical.verify import has_complete_matching
    assert not has_complete_matching(G.induced(kept))


def test_negative_gates(P63, P129):
    with pytest.raises(Inapplicable):
        construct_negative(P63)
    with pytest.raises(Inapplicable):
        construct_negative(P129)


def test_negative_witness_up_to_40():
    applicable = [P for P in all_params(40) if P.c == P.m and P.a < P.m - 1]
    assert applicable
    for P in applicable:
        G = construct_negative(P)
        B = [0, P.m - 1]
        assert G.is_biregular(P.a, P.b)
        assert len(G.neighborhood(B)) == P.a * P.x == P.b
        assert not is_k_critical_deficiency(G).is_k_critical


def test_conjecture_graphs():
    G = construct_conjecture(5, 3)
    assert [-(-i * 3 // 5) for i in range(5)] == [0, 1, 2, 2, 3]
    assert G.adj[0] == (0, 1) and G.adj[4] == (0, 1)
    assert set(G.u_degrees()) == {2}
    assert construct_conjecture(4, 3).e == 8
    with pytest.raises(IsBiregularCase):
        construct_conjecture(6, 3)


def test_tilde(P63):
    G = construct_g2(P63)
    T = tilde(G)
    assert T.order == (6, 6) and T.e == G.e + 18
    assert set(T.v_degrees()) == {4, 6}
    square = BipartiteGraph.build(3, 3, [(0, 0), (1, 1), (2, 2)])
    assert tilde(square) == square
