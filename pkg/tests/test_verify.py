import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from kcritical.checks import all_params, construction_corpus, perturbed_corpus
from kcritical.construct import construct_conjecture, construct_g1, construct_g2, construct_negative, tilde
from kcritical.errors import BudgetExceeded, NoPerfectMatching, ShapeError, Unbalanced
from kcritical.graph import BipartiteGraph, Matching
from kcritical.verify import (
    check_tilde_equivalence,
    contracted_digraph,
    hall_deficient,
    has_complete_matching,
    is_k_critical,
    is_k_critical_deficiency,
    is_k_critical_deletion,
    is_k_critical_tilde,
    is_k_extendable,
    is_strongly_k_connected,
    local_connectivity,
    max_matching,
)


def brute_k_critical(G):
    """Definition check by subset enumeration of V (independent of the library scan)."""
    k = G.n - G.m
    return all(
        len({i for j in B for i in G.vadj[j]}) >= len(B) + k
        for r in range(1, G.m + 1)
        for B in combinations(range(G.m), r)
    )


def nx_matching_size(G):
    H = nx.Graph()
    H.add_nodes_from((("u", i) for i in range(G.n)), bipartite=0)
    H.add_nodes_from((("v", j) for j in range(G.m)), bipartite=1)
    H.add_edges_from((("u", i), ("v", j)) for i, j in G.edges())
    M = nx.bipartite.hopcroft_karp_matching(H, top_nodes=[("u", i) for i in range(G.n)])
    return len(M) // 2


def small_corpus():
    base = construction_corpus(12)
    return [G for _, G in base + perturbed_corpus(base, seed=7, per_graph=1)]


graphs = st.integers(2, 8).flatmap(
    lambda n: st.integers(1, n).flatmap(
        lambda m: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, m - 1))).map(
            lambda E: BipartiteGraph.build(n, m, E)
        )
    )
)


def test_max_matching_examples(P63):
    assert max_matching(construct_g2(P63)).size == 3
    assert max_matching(BipartiteGraph.build(3, 3, [])).size == 0
    diag = BipartiteGraph.build(5, 5, [(i, i) for i in range(5)])
    assert max_matching(diag).size == 5


@given(graphs)
def test_max_matching_against_networkx(G):
    M = max_matching(G)
    assert M.is_valid_in(G)
    assert M.size == nx_matching_size(G)


def test_has_complete_matching(P63, P129):
    assert has_complete_matching(construct_g2(P63).induced([0, 2, 4]))
    G1 = construct_g1(P129)
    B = [6, 7, 8]
    N = sorted(G1.neighborhood(B))
    kept = sorted((set(range(12)) - set(N)) | {N[0]})
    assert len(kept) == 9
    assert not has_complete_matching(G1.induced(kept))
    assert not has_complete_matching(BipartiteGraph.build(0, 1, []))


def test_deficiency_examples(P63, P105, P129):
    assert is_k_critical_deficiency(construct_g2(P63)).is_k_critical
    v = is_k_critical_deficiency(construct_negative(P105))
    assert not v.is_k_critical
    assert v.witness.B == (0, 4) and v.witness.neighborhood_size == 6
    G1 = construct_g1(P129)
    v = is_k_critical_deficiency(G1)
    assert not v.is_k_critical
    # the block witness {v6, v7, v8} is deficient; the reported one is smallest
    assert hall_deficient(G1, [6, 7, 8]) and len(G1.neighborhood([6, 7, 8])) == 4
    assert v.witness.B == (0, 1) and v.witness.neighborhood_size == 4
    with pytest.raises(ShapeError):
        is_k_critical_deficiency(BipartiteGraph.build(2, 3, []))


def test_witness_is_inclusion_minimal():
    for G in small_corpus():
        v = is_k_critical_deficiency(G)
        if v.is_k_critical:
            continue
        B = v.witness.B
        assert hall_deficient(G, B)
        assert not any(hall_deficient(G, set(B) - {j}) for j in B if len(B) > 1)


def test_scan_and_matching_routes_agree():
    for G in small_corpus():
        scan = is_k_critical_deficiency(G)
        flow = is_k_critical_deficiency(G, scan_limit=0)
        assert scan.is_k_critical == flow.is_k_critical
        if not flow.is_k_critical:
            assert hall_deficient(G, flow.witness.B)


def test_deletion_examples(P105, P129):
    v = is_k_critical_deletion(construct_g2(P129))
    assert v.is_k_critical
    assert is_k_critical_deletion(construct_conjecture(5, 3)).is_k_critical
    v = is_k_critical_deletion(construct_negative(P105))
    assert not v.is_k_critical and hall_deficient(construct_negative(P105), v.witness.B)
    with pytest.raises(BudgetExceeded):
        is_k_critical_deletion(construct_g2(P129), budget=100)


def test_oracles_agree_on_corpus():
    corpus = small_corpus()
    assert len(corpus) > 100
    for G in corpus:
        truth = brute_k_critical(G)
        assert is_k_critical_deficiency(G).is_k_critical == truth
        assert is_k_critical_deletion(G).is_k_critical == truth


@settings(max_examples=150)
@given(graphs)
def test_oracles_agree_on_random_graphs(G):
    truth = brute_k_critical(G)
    assert is_k_critical_deficiency(G).is_k_critical == truth
    assert is_k_critical_deletion(G).is_k_critical == truth
    if G.n > G.m:
        assert is_k_critical_tilde(G).is_k_critical == truth


def cycle6():
    # u0-v0-u1-v1-u2-v2-u0
    return BipartiteGraph.build(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)])


def test_k_extendable_examples(P63):
    assert is_k_extendable(cycle6(), 1)
    assert not is_k_extendable(BipartiteGraph.build(4, 4, [(i, i) for i in range(4)]), 1)
    assert is_k_extendable(tilde(construct_g2(P63)), 3)
    with pytest.raises(Unbalanced):
        is_k_extendable(construct_g2(P63), 1)
    with pytest.raises(NoPerfectMatching):
        is_k_extendable(BipartiteGraph.build(2, 2, [(0, 0), (1, 0)]), 1)


def brute_k_extendable(G, k):
    """Every matching of size k extends to a perfect matching."""
    edges = list(G.edges())
    if nx_matching_size(G) < G.n:
        return False
    for S in combinations(edges, k):
        us = {i for i, _ in S}
        vs = {j for _, j in S}
        if len(us) < k or len(vs) < k:
            continue
        rest = BipartiteGraph.build(
            G.n - k, G.m - k,
            [(sorted(set(range(G.n)) - us).index(i), sorted(set(range(G.m)) - vs).index(j))
             for i, j in edges if i not in us and j not in vs],
        )
        if nx_matching_size(rest) < G.n - k:
            return False
    return True


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 5).flatmap(
    lambda q: st.sets(st.tuples(st.integers(0, q - 1), st.integers(0, q - 1)), min_size=q).map(
        lambda E: BipartiteGraph.build(q, q, E | {(i, i) for i in range(q)})
    )
), st.integers(1, 2))
def test_k_extendable_against_definition(G, k):
    connected = nx.is_connected(nx.Graph([(("u", i), ("v", j)) for i, j in G.edges()])) and G.e > 0
    expected = connected and G.n > k and brute_k_extendable(G, k)
    assert is_k_extendable(G, k) == expected


def test_extendability_independent_of_matching():
    rng = random.Random(3)
    for G in small_corpus():
        if G.n <= G.m:
            continue
        T = tilde(G)
        k = G.n - G.m
        first = max_matching(T)
        if first.size < T.n:
            continue
        other = None
        for i, j in sorted(first.pairs):
            alt = T.remove_edge(i, j)
            M2 = max_matching(alt)
            if M2.size == T.n:
                other = M2
                break
        if other is None:
            continue
        assert is_k_extendable(T, k, first) == is_k_extendable(T, k, other)
        if rng.random() < 0.5:
            break


def brute_strongly_k_connected(D, k):
    """More than k vertices, and strongly connected after removing any k-1 of them."""
    nodes = list(D.nodes)
    if len(nodes) <= k:
        return False
    return all(
        nx.is_strongly_connected(D.subgraph(set(nodes) - set(R)))
        for r in range(k)
        for R in combinations(nodes, r)
    )


def test_strong_connectivity_against_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        q = rng.randint(2, 7)
        arcs = {i: {j for j in range(q) if j != i and rng.random() < 0.55} for i in range(q)}
        D = nx.DiGraph()
        D.add_nodes_from(range(q))
        D.add_edges_from((i, j) for i, js in arcs.items() for j in js)
        for k in range(1, q + 1):
            assert is_strongly_k_connected(arcs, k) == brute_strongly_k_connected(D, k)
        for s in range(q):
            for t in range(q):
                if s != t and t not in arcs[s]:
                    assert local_connectivity(arcs, s, t) == nx.node_connectivity(D, s, t)


def test_contracted_digraph_of_cycle():
    G = cycle6()
    M = Matching(frozenset({(0, 0), (1, 1), (2, 2)}))
    assert contracted_digraph(G, M) == {0: {2}, 1: {0}, 2: {1}}


def test_tilde_equivalence_examples(P63, P105):
    assert check_tilde_equivalence(construct_g2(P63))
    assert check_tilde_equivalence(construct_negative(P105))
    assert not is_k_critical_tilde(construct_negative(P105)).is_k_critical
    G1 = construct_g1(P63)
    assert check_tilde_equivalence(G1) and is_k_critical_tilde(G1).is_k_critical


def test_monotonicity_on_small_graphs():
    for G in small_corpus():
        if G.n > 10 or not is_k_critical_deficiency(G).is_k_critical:
            continue
        for i in range(G.n):
            for j in range(G.m):
                if not G.has_edge(i, j):
                    assert is_k_critical_deficiency(G.add_edge(i, j)).is_k_critical


def test_g1_critical_iff_c_equals_m():
    for P in all_params(20):
        assert is_k_critical(construct_g1(P), "deletion").is_k_critical == (P.c == P.m)


def test_interval_construction_small():
    for P in all_params(30):
        G = construct_g2(P)
        assert is_k_critical(G).is_k_critical
        if P.n <= 16:
            assert is_k_critical(G, "deletion").is_k_critical


def test_pigeonhole_bound_on_corpus():
    for G in small_corpus():
        if is_k_critical_deficiency(G).is_k_critical:
            assert G.degree_profile().delta_v >= G.n - G.m + 1
