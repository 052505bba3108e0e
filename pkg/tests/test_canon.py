import random
from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_isomorphic, graphs, graphs_with_perm, random_graph, random_perm
from graphrecon.canon import (
    are_isomorphic,
    canonical_labeling,
    certificate,
    find_isomorphism,
    is_isomorphism,
)
from graphrecon.enumeration import all_labeled_graphs
from graphrecon.graph import Graph, complete, cycle, disjoint_union, path, star


def test_certificate_examples():
    k3 = complete(3)
    assert certificate(k3) == certificate(k3.relabel([2, 0, 1]))
    assert certificate(path(3)) != certificate(disjoint_union(complete(2), Graph.empty(1)))


def test_three_vertex_groups_match_brute_force():
    labeled = list(all_labeled_graphs(3))
    assert len(labeled) == 8
    by_cert = {}
    for g in labeled:
        by_cert.setdefault(certificate(g), []).append(g)
    groups = sorted(sorted(g.adj for g in grp) for grp in by_cert.values())
    brute = []
    for g in labeled:
        for grp in brute:
            if brute_isomorphic(grp[0], g):
                grp.append(g)
                break
        else:
            brute.append([g])
    assert groups == sorted(sorted(g.adj for g in grp) for grp in brute)
    assert sorted(len(grp) for grp in by_cert.values()) == [1, 1, 3, 3]
    one_edge = [g for g in labeled if g.num_edges() == 1]
    assert len({certificate(g) for g in one_edge}) == 1


def test_find_isomorphism_examples():
    k3 = complete(3)
    f = find_isomorphism(k3, k3)
    assert f is not None and f.is_isomorphism(k3, k3)
    assert find_isomorphism(path(3), k3) is None

    c5 = cycle(5)
    rng = random.Random(5)
    for _ in range(20):
        pi = random_perm(rng, 5)
        f = find_isomorphism(c5, c5.relabel(pi))
        assert f is not None
        inv = [0] * 5
        for v, w in enumerate(pi):
            inv[w] = v
        auto = [inv[f[v]] for v in range(5)]
        assert is_isomorphism(c5, c5, auto)


def test_three_edge_four_vertex_graphs_pairwise_distinct():
    p4 = path(4)
    k13 = star(3)
    k3k1 = disjoint_union(complete(3), Graph.empty(1))
    for g, h in combinations([p4, k13, k3k1], 2):
        assert not brute_isomorphic(g, h)
        assert not are_isomorphic(g, h)


def test_different_degree_multisets_not_isomorphic():
    assert not are_isomorphic(path(4), cycle(4))


def test_symmetric_graphs_canonicalize():
    # Graphs whose search trees would explode without automorphism pruning.
    rng = random.Random(9)
    for g in [Graph.empty(12), complete(12), disjoint_union(*[cycle(4)] * 3), disjoint_union(*[complete(2)] * 6)]:
        canonical_labeling.cache_clear()
        cert = certificate(g)
        for _ in range(3):
            assert certificate(g.relabel(random_perm(rng, g.n))) == cert


@given(graphs_with_perm(max_n=10))
def test_certificate_invariant_under_relabel(gp):
    g, perm = gp
    assert certificate(g.relabel(perm)) == certificate(g)


@given(graphs(max_n=10))
def test_canonical_labeling_reproduces_certificate(g):
    cert, perm = canonical_labeling(g)
    assert g.relabel(perm).to_graph6() == cert.canonical_bytes
    assert cert.graph().n == g.n


@given(graphs_with_perm(max_n=10))
def test_isomorphism_maps_verified(gp):
    g, perm = gp
    h = g.relabel(perm)
    f = find_isomorphism(g, h)
    assert f is not None
    assert is_isomorphism(g, h, f.mapping)
    assert is_isomorphism(h, g, f.inverse().mapping)


@settings(max_examples=300)
@given(st.integers(1, 6), st.integers(0, 2**32))
def test_are_isomorphic_agrees_with_brute_force(n, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n)
    # Half the time compare against a relabeled copy so positives get exercised.
    h = g.relabel(random_perm(rng, n)) if rng.random() < 0.5 else random_graph(rng, n)
    expected = brute_isomorphic(g, h)
    assert are_isomorphic(g, h) == expected
    assert (certificate(g) == certificate(h)) == expected
