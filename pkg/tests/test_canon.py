from __future__ import annotations

import random
from itertools import permutations

import pytest
from hypothesis import given, settings

from isolationlab.canon import (
    automorphism_count,
    brute_force_isomorphic,
    brute_force_rooted_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    is_isomorphic,
    rooted_form,
)
from isolationlab.graph import (
    Graph,
    UnsupportedSize,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    star_graph,
)

from conftest import graphs, random_graph, random_perm


def k33_minus_matching() -> Graph:
    return Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6) if b - 3 != a])


def test_c6_equals_k33_minus_perfect_matching():
    h = k33_minus_matching()
    assert brute_force_isomorphic(cycle_graph(6), h)
    assert canonical_form(cycle_graph(6)) == canonical_form(h)


def test_c6_differs_from_two_triangles():
    assert canonical_form(cycle_graph(6)) != canonical_form(disjoint_union(complete_graph(3), complete_graph(3)))


def test_petersen_relabelings_agree():
    p = petersen_graph()
    rng = random.Random(3)
    key = canonical_form(p)
    for _ in range(5):
        assert canonical_form(p.relabel(random_perm(rng, 10))) == key


def test_labeling_is_a_permutation_to_the_canonical_graph():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4), (0, 3)])
    key, order = canonical_labeling(g)
    assert sorted(order) == list(range(5))
    assert canonical_form(canonical_graph(g)) == key


def test_bound():
    canonical_form(complete_graph(16))
    with pytest.raises(UnsupportedSize):
        canonical_form(path_graph(17))


def test_automorphism_counts():
    assert automorphism_count(cycle_graph(5)) == 10
    assert automorphism_count(star_graph(3)) == 6
    assert automorphism_count(path_graph(4)) == 2


def test_rooted_forms_separate_roots():
    p3 = path_graph(3)
    assert rooted_form(p3, 0) == rooted_form(p3, 2)
    assert rooted_form(p3, 0) != rooted_form(p3, 1)


@given(graphs(max_n=8))
@settings(max_examples=300)
def test_key_invariant_under_relabeling(g):
    rng = random.Random(g.edge_count * 31 + g.n)
    assert canonical_form(g.relabel(random_perm(rng, g.n))) == canonical_form(g)


@given(graphs(max_n=6), graphs(max_n=6))
@settings(max_examples=300)
def test_keys_agree_with_permutation_oracle(g, h):
    assert is_isomorphic(g, h) == brute_force_isomorphic(g, h)


def test_random_pairs_against_oracle():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 7)
        g = random_graph(rng, n)
        if rng.random() < 0.5:
            h = g.relabel(random_perm(rng, n))
        else:
            h = random_graph(rng, n, g.edge_count / max(1, n * (n - 1) / 2))
        assert is_isomorphic(g, h) == brute_force_isomorphic(g, h)


@given(graphs(min_n=1, max_n=6))
@settings(max_examples=150)
def test_rooted_form_matches_rooted_oracle(g):
    for r in range(g.n):
        for s in range(g.n):
            assert (rooted_form(g, r) == rooted_form(g, s)) == brute_force_rooted_isomorphic(g, r, g, s)


def test_brute_force_oracle_itself():
    # the oracle must find the isomorphism by some permutation
    g = path_graph(4)
    h = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert any(g.relabel(list(p)) == h for p in permutations(range(4)))
    assert brute_force_isomorphic(g, h)
    assert not brute_force_isomorphic(g, star_graph(3))
