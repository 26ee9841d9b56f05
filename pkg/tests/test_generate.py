from __future__ import annotations

from itertools import permutations

import pytest

from isolationlab.canon import canonical_form
from isolationlab.generate import (
    block_graphs,
    block_graphs_by_filter,
    connected_graphs,
    graphs_from_file,
    level_sequences,
    stream,
    trees,
    unicyclic_graphs,
)
from isolationlab.graph import (
    Graph,
    UnsupportedSize,
    cycle_graph,
    is_block_graph,
    is_connected,
    is_tree,
    is_unicyclic,
    write_graph6,
)

# OEIS A001349, A000055, A001429, A035053
CONNECTED = [1, 1, 2, 6, 21, 112, 853]
TREES = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
UNICYCLIC = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240}
BLOCK = [1, 1, 2, 4, 9, 22, 59, 165, 496]


def test_small_examples():
    assert len(list(connected_graphs(3))) == 2
    assert len(list(connected_graphs(4))) == 6
    assert len(list(trees(4))) == 2
    [c3] = unicyclic_graphs(3)
    assert canonical_form(c3) == canonical_form(cycle_graph(3))
    assert sum(g.max_degree() <= 3 for g in block_graphs(6)) == 9


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts(n):
    gs = list(connected_graphs(n))
    assert len(gs) == CONNECTED[n - 1]
    assert all(is_connected(g) for g in gs)


@pytest.mark.parametrize("n", range(1, 13))
def test_tree_counts(n):
    gs = list(trees(n))
    assert len(gs) == TREES[n - 1]
    assert all(is_tree(g) for g in gs)


@pytest.mark.parametrize("n", sorted(UNICYCLIC))
def test_unicyclic_counts(n):
    gs = list(unicyclic_graphs(n))
    assert len(gs) == UNICYCLIC[n]
    assert all(is_unicyclic(g) for g in gs)


@pytest.mark.parametrize("n", range(1, 10))
def test_block_counts(n):
    gs = list(block_graphs(n))
    assert len(gs) == BLOCK[n - 1]
    assert all(is_block_graph(g) for g in gs)


@pytest.mark.parametrize("kind,gen,top", [("connected", connected_graphs, 7), ("tree", trees, 10),
                                          ("unicyclic", unicyclic_graphs, 9), ("block", block_graphs, 8)])
def test_streams_are_sorted_and_distinct(kind, gen, top):
    for n in range(1, top + 1):
        keys = [canonical_form(g) for g in gen(n)]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)


@pytest.mark.parametrize("n", range(1, 9))
def test_recursive_block_generator_matches_filter(n):
    a = {canonical_form(g) for g in block_graphs(n)}
    b = {canonical_form(g) for g in block_graphs_by_filter(n)}
    assert a == b


@pytest.mark.parametrize("n", range(1, 8))
def test_special_streams_inside_connected(n):
    every = {canonical_form(g) for g in connected_graphs(n)}
    for gen in (trees, unicyclic_graphs, block_graphs):
        assert {canonical_form(g) for g in gen(n)} <= every


def _orbit_counts(n: int) -> dict[str, int]:
    """Isomorphism classes among labeled graphs on n vertices, by orbit marking."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    index = {p: i for i, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    seen = bytearray(1 << len(pairs))
    counts = {"connected": 0, "tree": 0, "unicyclic": 0, "block": 0}
    for code in range(1 << len(pairs)):
        if seen[code]:
            continue
        edges = [p for i, p in enumerate(pairs) if code >> i & 1]
        for perm in perms:
            img = 0
            for u, v in edges:
                a, b = perm[u], perm[v]
                img |= 1 << index[(a, b) if a < b else (b, a)]
            seen[img] = 1
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            counts["connected"] += 1
            counts["tree"] += is_tree(g)
            counts["unicyclic"] += is_unicyclic(g)
            counts["block"] += is_block_graph(g)
    return counts


@pytest.mark.parametrize("n", range(1, 7))
def test_dedup_completeness_against_labeled_enumeration(n):
    want = _orbit_counts(n)
    assert len(list(connected_graphs(n))) == want["connected"]
    assert len(list(trees(n))) == want["tree"]
    assert len(list(unicyclic_graphs(n))) == want["unicyclic"]
    assert len(list(block_graphs(n))) == want["block"]


def test_level_sequences_are_distinct_trees():
    seqs = list(level_sequences(9))
    assert len(seqs) == 47
    assert len({tuple(s) for s in seqs}) == 47


def test_bounds():
    with pytest.raises(UnsupportedSize):
        connected_graphs(9)
    with pytest.raises(UnsupportedSize):
        trees(17)
    with pytest.raises(UnsupportedSize):
        unicyclic_graphs(13)
    with pytest.raises(ValueError):
        trees(0)


def test_env_cap(monkeypatch):
    monkeypatch.setenv("ISOLATIONLAB_MAXN", "5")
    with pytest.raises(UnsupportedSize):
        trees(6)
    assert len(list(trees(5))) == 3


def test_stream_rejects_unknown_class():
    with pytest.raises(ValueError):
        list(stream("planar", [3]))


def test_file_stream_dedups(tmp_path):
    path = tmp_path / "g.g6"
    p3a = Graph.from_edges(3, [(0, 1), (1, 2)])
    p3b = Graph.from_edges(3, [(0, 2), (2, 1)])
    path.write_text("\n".join(write_graph6(g) for g in (p3a, p3b, cycle_graph(3))) + "\n")
    assert len(list(graphs_from_file(str(path)))) == 2
    assert len(list(graphs_from_file(str(path), assume_distinct=True))) == 3
