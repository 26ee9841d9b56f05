"""Canonical labeling by equitable refinement plus individualization.

The canonical key of a graph is the smallest relabelled adjacency code over
all leaves of the individualization tree.  Subtrees that are images of an
explored subtree under an automorphism already discovered (and fixing the
current individualized prefix) are skipped.
"""
from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .graph import Graph, UnsupportedSize, iter_bits

MAX_CANON_N = 16

CanonicalForm = bytes


def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    while True:
        out = []
        split = False
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                row = adj[v]
                sig = tuple((row & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | 1 << v
            if len(groups) > 1:
                split = True
                out.extend(groups[sig] for sig in sorted(groups))
            else:
                out.append(cell)
        if not split:
            return out
        cells = out


def _code(adj: Sequence[int], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _orbits(n: int, gens: list[tuple[int, ...]], domain: int) -> dict[int, int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for v in iter_bits(domain):
            a, b = find(v), find(p[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in iter_bits(domain)}


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] = []
        self.first: tuple[int, ...] | None = None
        self.first_order: list[int] = []
        self.autos: list[tuple[int, ...]] = []
        self.fixed: list[int] = []

    def _record_auto(self, order: list[int], ref: list[int]):
        perm = [0] * self.g.n
        for a, b in zip(order, ref):
            perm[a] = b
        perm = tuple(perm)
        fixed = sum(1 << v for v in range(self.g.n) if perm[v] == v)
        if fixed != self.g.vertices:
            self.autos.append(perm)
            self.fixed.append(fixed)

    def run(self, cells: list[int], prefix: int):
        adj = self.g.adj
        cells = _refine(adj, cells)
        if len(cells) == self.g.n:
            order = [c.bit_length() - 1 for c in cells]
            code = _code(adj, order)
            if self.first is None:
                self.first, self.first_order = code, order
            elif code == self.first:
                self._record_auto(order, self.first_order)
            if self.best is None or code < self.best:
                self.best, self.best_order = code, order
            elif code == self.best:
                self._record_auto(order, self.best_order)
            return

        target = min(
            (i for i, c in enumerate(cells) if c & (c - 1)),
            key=lambda i: (cells[i].bit_count(), i),
        )
        cell = cells[target]
        tried: list[int] = []
        seen_autos = 0
        orbit: dict[int, int] = {}
        for v in iter_bits(cell):
            if tried:
                if len(self.autos) != seen_autos:
                    seen_autos = len(self.autos)
                    fixing = [p for p, f in zip(self.autos, self.fixed) if prefix & ~f == 0]
                    orbit = _orbits(self.g.n, fixing, cell) if fixing else {}
                if orbit and any(orbit[v] == orbit[t] for t in tried):
                    continue
            child = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:]
            self.run(child, prefix | 1 << v)
            tried.append(v)


def _initial_cells(n: int, colors: Sequence[int] | None) -> list[int]:
    if colors is None:
        return [(1 << n) - 1] if n else []
    classes: dict[int, int] = {}
    for v, c in enumerate(colors):
        classes[c] = classes.get(c, 0) | 1 << v
    return [classes[c] for c in sorted(classes)]


def _pack(n: int, cells: list[int], rows: tuple[int, ...]) -> bytes:
    width = max(1, (n + 7) // 8)
    head = bytes([n, len(cells)] + [c.bit_count() for c in cells])
    return head + b"".join(r.to_bytes(width, "big") for r in rows)


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> tuple[CanonicalForm, list[int]]:
    """Canonical key and the canonical order (position -> vertex).

    ``colors`` gives an optional vertex coloring that isomorphisms must
    respect; color values are compared by their natural order.
    """
    if g.n > MAX_CANON_N:
        raise UnsupportedSize(f"canonical labeling supports n <= {MAX_CANON_N}, got {g.n}")
    cells = _initial_cells(g.n, colors)
    if g.n == 0:
        return _pack(0, [], ()), []
    search = _Search(g)
    search.run(cells, 0)
    return _pack(g.n, cells, search.best), search.best_order


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> CanonicalForm:
    return canonical_labeling(g, colors)[0]


def canonical_graph(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class carried by its key."""
    _, order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def rooted_form(g: Graph, root: int) -> CanonicalForm:
    return canonical_form(g, [0 if v == root else 1 for v in range(g.n)])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and canonical_form(g) == canonical_form(h)


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation-exhaustive isomorphism test; only sensible for small n."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(map(int.bit_count, g.adj)) != sorted(map(int.bit_count, h.adj)):
        return False
    return any(g.relabel(list(p)).adj == h.adj for p in permutations(range(g.n)))


def brute_force_rooted_isomorphic(g: Graph, gr: int, h: Graph, hr: int) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    for p in permutations(range(g.n)):
        if p[gr] == hr and g.relabel(list(p)).adj == h.adj:
            return True
    return False


def automorphism_count(g: Graph) -> int:
    """Brute-force automorphism count, for tests on small graphs."""
    return sum(g.relabel(list(p)).adj == g.adj for p in permutations(range(g.n)))


__all__ = [
    "CanonicalForm",
    "MAX_CANON_N",
    "automorphism_count",
    "brute_force_isomorphic",
    "brute_force_rooted_isomorphic",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "is_isomorphic",
    "rooted_form",
]
