"""Non-isomorphic graph streams: connected graphs, trees, unicyclic and block graphs.

Every stream yields one canonically relabelled representative per
isomorphism class, ordered by canonical key.
"""
from __future__ import annotations

import os
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .canon import canonical_labeling
from .graph import (
    Graph,
    UnsupportedSize,
    block_decomposition,
    is_block_graph,
    read_graph6_lines,
)

BOUNDS = {"connected": 8, "tree": 16, "unicyclic": 12, "block": 12}


def _check_bound(kind: str, n: int) -> None:
    bound = BOUNDS[kind]
    env = os.environ.get("ISOLATIONLAB_MAXN")
    if env:
        bound = min(bound, int(env))
    if n > bound:
        raise UnsupportedSize(f"{kind} enumeration supports n <= {bound}, got {n}")
    if n < 1:
        raise ValueError("order must be at least 1")


def _canonical_pair(g: Graph) -> tuple[bytes, Graph]:
    key, order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return key, g.relabel(perm)


def _dedup(candidates: Iterable[Graph]) -> tuple[Graph, ...]:
    found: dict[bytes, Graph] = {}
    for g in candidates:
        key, rep = _canonical_pair(g)
        if key not in found:
            found[key] = rep
    return tuple(found[k] for k in sorted(found))


def _sorted_unique(graphs: Iterable[Graph]) -> tuple[Graph, ...]:
    """Canonicalize graphs already known to be pairwise non-isomorphic."""
    pairs = sorted(_canonical_pair(g) for g in graphs)
    return tuple(g for _, g in pairs)


# connected graphs

@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)

    # every connected graph has a vertex whose deletion keeps it connected
    def children():
        for parent in _connected(n - 1):
            for nbrs in range(1, 1 << (n - 1)):
                yield parent.add_vertex(nbrs)

    return _dedup(children())


def connected_graphs(n: int) -> Iterator[Graph]:
    _check_bound("connected", n)
    return iter(_connected(n))


# trees

def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    # first subtree of the root, and the rest of the tree
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    first = [x - 1 for x in levels[1:m]]
    rest = [0] + levels[m:]
    return first, rest


def _next_free(levels: list[int]) -> list[int] | None:
    first, rest = _split(levels)
    hf, hr = max(first), max(rest)
    ok = hr > hf or (hr == hf and (len(first) < len(rest) or (len(first) == len(rest) and first <= rest)))
    if ok:
        return levels
    p = len(first)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        new_first, _ = _split(nxt)
        suffix = list(range(1, max(new_first) + 2))
        nxt[-len(suffix):] = suffix
    return nxt


def _levels_to_graph(levels: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for i, lev in enumerate(levels):
        while stack and levels[stack[-1]] >= lev:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph.from_edges(len(levels), edges)


def level_sequences(n: int) -> Iterator[list[int]]:
    """Free trees on ``n`` vertices as canonical level sequences, each once.

    Wright-Richmond-Odlyzko-McKay successor rule over Beyer-Hedetniemi
    rooted-tree steps, rooted at a center.
    """
    if n <= 2:
        yield list(range(n))
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is not None:
            yield levels
            levels = _next_rooted(levels)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    return _sorted_unique(_levels_to_graph(seq) for seq in level_sequences(n))


def trees(n: int) -> Iterator[Graph]:
    _check_bound("tree", n)
    return iter(_trees(n))


# unicyclic graphs

@lru_cache(maxsize=None)
def _unicyclic(n: int) -> tuple[Graph, ...]:
    def children():
        for t in _trees(n):
            for u in range(n):
                for v in range(u + 1, n):
                    if not t.has_edge(u, v):
                        yield t.with_edge(u, v)

    return _dedup(children())


def unicyclic_graphs(n: int) -> Iterator[Graph]:
    _check_bound("unicyclic", n)
    if n < 3:
        return iter(())
    return iter(_unicyclic(n))


# block graphs

@lru_cache(maxsize=None)
def _block(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)

    # deleting a simplicial vertex of an end-block leaves a block graph, and a
    # new vertex keeps the graph a block graph iff its neighborhood is a whole
    # block or a single vertex
    def children():
        for parent in _block(n - 1):
            for v in range(parent.n):
                yield parent.add_vertex(1 << v)
            for b in block_decomposition(parent).blocks:
                if b.bit_count() >= 2:
                    yield parent.add_vertex(b)

    return _dedup(children())


def block_graphs(n: int) -> Iterator[Graph]:
    _check_bound("block", n)
    return iter(_block(n))


def block_graphs_by_filter(n: int) -> Iterator[Graph]:
    """Block graphs obtained by filtering the connected stream (n <= 8)."""
    return (g for g in connected_graphs(n) if is_block_graph(g))


GENERATORS: dict[str, Callable[[int], Iterator[Graph]]] = {
    "connected": connected_graphs,
    "tree": trees,
    "unicyclic": unicyclic_graphs,
    "block": block_graphs,
}


def stream(kind: str, orders: Iterable[int]) -> Iterator[Graph]:
    try:
        gen = GENERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown graph class {kind!r}; choose from {sorted(GENERATORS)}") from None
    for n in orders:
        yield from gen(n)


def graphs_from_file(path: str, assume_distinct: bool = False) -> Iterator[Graph]:
    """Graphs from a graph6 file, dropping isomorphic repeats unless told not to."""
    with open(path) as fh:
        lines = fh.readlines()
    seen: set[bytes] = set()
    for g in read_graph6_lines(lines):
        if not assume_distinct:
            key, _ = canonical_labeling(g)
            if key in seen:
                continue
            seen.add(key)
        yield g


__all__ = [
    "BOUNDS",
    "block_graphs",
    "block_graphs_by_filter",
    "connected_graphs",
    "graphs_from_file",
    "level_sequences",
    "stream",
    "trees",
    "unicyclic_graphs",
]
