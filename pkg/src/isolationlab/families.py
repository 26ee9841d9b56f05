"""Gadget attachment families and their recognizers.

A member of the family G is built from a connected base graph by gluing one
rooted gadget onto every base vertex.  Trees, unicyclic graphs and block
graphs in G form the subfamilies T, U and B.

Recognition exploits that the gadget pieces partition the vertex set and that
a gadget's non-root vertices see nothing outside their own gadget: candidate
pieces are found locally and an exact cover is searched by backtracking.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Optional, Sequence

from .canon import brute_force_rooted_isomorphic, rooted_form
from .generate import connected_graphs
from .graph import (
    Graph,
    VertexSet,
    components,
    complete_graph,
    cycle_vertices,
    is_block_graph,
    is_connected,
    is_tree,
    is_unicyclic,
    iter_bits,
    leaves,
    members,
    parse_graph6,
    path_graph,
    support_vertices,
    vset,
    write_graph6,
)
from .solver import iota

P3, C3, H6_1, H6_2A, H6_2B, H6_3 = "P3", "C3", "H6_1", "H6_2a", "H6_2b", "H6_3"
KINDS = (P3, C3, H6_1, H6_2A, H6_2B, H6_3)
H6_KINDS = (H6_1, H6_2A, H6_2B, H6_3)


@dataclass(frozen=True)
class RootedGadget:
    kind: str
    graph: Graph
    root: int = 0

    @property
    def order(self) -> int:
        return self.graph.n

    def min_hits(self) -> int:
        """Least number of gadget vertices any isolating set must contain."""
        return 1 if self.graph.n == 3 else 2


_CYCLE5 = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]


def _h6(root_nbrs: Sequence[int]) -> Graph:
    return Graph.from_edges(6, _CYCLE5 + [(0, v) for v in root_nbrs])


# Root neighborhoods on the 5-cycle 1-2-3-4-5, as produced by
# derive_h6_gadgets(); test_families regenerates and compares them.
H6_ROOT_NEIGHBORS = {
    H6_1: (1,),
    H6_2A: (1, 2),
    H6_2B: (1, 3),
    H6_3: (1, 2, 3),
}


@lru_cache(maxsize=None)
def gadget_catalog() -> tuple[RootedGadget, ...]:
    out = [
        RootedGadget(P3, path_graph(3), 0),
        RootedGadget(C3, complete_graph(3), 0),
    ]
    out += [RootedGadget(k, _h6(H6_ROOT_NEIGHBORS[k]), 0) for k in H6_KINDS]
    return tuple(out)


def gadget(kind: str) -> RootedGadget:
    for gd in gadget_catalog():
        if gd.kind == kind:
            return gd
    raise ValueError(f"unknown gadget kind {kind!r}; choose from {list(KINDS)}")


@lru_cache(maxsize=None)
def _kind_by_rooted_form() -> dict[bytes, str]:
    return {rooted_form(gd.graph, gd.root): gd.kind for gd in gadget_catalog()}


SMALL_BASES = (complete_graph(1), complete_graph(2), path_graph(3), complete_graph(3))


def _qualifies(candidate: RootedGadget) -> bool:
    for base in SMALL_BASES:
        g, _ = _attach_gadgets(base, [candidate] * base.n)
        if 3 * iota(g) != g.n:
            return False
    return True


def derive_h6_gadgets() -> list[RootedGadget]:
    """Rooted 6-vertex gadgets (root plus an induced 5-cycle) that stay extremal.

    Every nonempty root neighborhood on the 5-cycle is tried, one per rooted
    isomorphism class, and kept when attaching one copy to every vertex of
    each connected base of order at most 3 gives isolation number n/3.
    Results are ordered by root degree, then by the sorted neighborhood.
    """
    seen: set[bytes] = set()
    kept = []
    for size in range(1, 6):
        for nbrs in combinations(range(1, 6), size):
            g = _h6(nbrs)
            key = rooted_form(g, 0)
            if key in seen:
                continue
            seen.add(key)
            cand = RootedGadget("H6?", g, 0)
            if _qualifies(cand):
                kept.append((size, nbrs, cand))
    return [c for _, _, c in kept]


# construction

@dataclass(frozen=True)
class Placement:
    root: int
    kind: str
    vertices: tuple[int, ...]  # gadget vertex i -> vertex of the full graph


@dataclass(frozen=True)
class Decomposition:
    base: Graph
    base_vertices: VertexSet
    assignment: tuple[Placement, ...]

    def kinds(self) -> list[str]:
        return [p.kind for p in self.assignment]

    def to_json(self) -> dict:
        return {
            "base_g6": write_graph6(self.base),
            "base_vertices": members(self.base_vertices),
            "assignment": [
                {"root": p.root, "kind": p.kind, "vertices": list(p.vertices)} for p in self.assignment
            ],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> Decomposition:
        if isinstance(data, str):
            data = json.loads(data)
        assignment = tuple(Placement(a["root"], a["kind"], tuple(a["vertices"])) for a in data["assignment"])
        base_vertices = vset(data.get("base_vertices", [p.root for p in assignment]))
        return cls(parse_graph6(data["base_g6"]), base_vertices, assignment)


def _attach_gadgets(base: Graph, gadgets: Sequence[RootedGadget]) -> tuple[Graph, Decomposition]:
    n = base.n + sum(gd.order - 1 for gd in gadgets)
    edges = base.edges()
    placements = []
    nxt = base.n
    for v, gd in enumerate(gadgets):
        emb = [0] * gd.order
        emb[gd.root] = v
        for i in range(gd.order):
            if i != gd.root:
                emb[i] = nxt
                nxt += 1
        edges += [(emb[a], emb[b]) for a, b in gd.graph.edges()]
        placements.append(Placement(v, gd.kind, tuple(emb)))
    return Graph.from_edges(n, edges), Decomposition(base, base.vertices, tuple(placements))


def attach(base: Graph, kinds: Sequence[str]) -> tuple[Graph, Decomposition]:
    """Glue gadget ``kinds[v]`` onto base vertex ``v`` by its root.

    Base vertices keep their indices; gadget vertices follow in base order.
    """
    if base.n < 1 or not is_connected(base):
        raise ValueError("the base graph must be connected and nonempty")
    if len(kinds) != base.n:
        raise ValueError(f"need one gadget kind per base vertex ({base.n}), got {len(kinds)}")
    return _attach_gadgets(base, [gadget(k) for k in kinds])


def reattach(dec: Decomposition) -> Graph:
    return attach(dec.base, dec.kinds())[0]


def check_decomposition(g: Graph, dec: Decomposition) -> list[str]:
    """Invariant violations of ``dec`` as a witness for ``g``; empty when valid."""
    problems = []
    seen = 0
    roots = 0
    for p in dec.assignment:
        gd = gadget(p.kind)
        pv = vset(p.vertices)
        if len(p.vertices) != gd.order or pv.bit_count() != gd.order:
            problems.append(f"gadget at {p.root} has a malformed embedding")
            continue
        if p.vertices[gd.root] != p.root:
            problems.append(f"gadget at {p.root} is not rooted there")
        if pv & seen:
            problems.append(f"gadget at {p.root} overlaps another gadget")
        seen |= pv
        roots |= 1 << p.root
        for i in range(gd.order):
            for j in range(i + 1, gd.order):
                if gd.graph.has_edge(i, j) != g.has_edge(p.vertices[i], p.vertices[j]):
                    problems.append(f"gadget at {p.root} does not induce {p.kind}")
                    break
        for i, v in enumerate(p.vertices):
            if i != gd.root and g.adj[v] & ~pv:
                problems.append(f"non-root vertex {v} of gadget at {p.root} leaves its gadget")
    if seen != g.vertices:
        problems.append("gadgets do not cover the vertex set")
    if roots != dec.base_vertices:
        problems.append("gadget roots differ from the base vertices")
    induced, _ = g.induced(dec.base_vertices)
    if not is_connected(induced) or dec.base_vertices == 0:
        problems.append("base is not connected")
    elif induced.adj != dec.base.adj:
        problems.append("stored base differs from the induced base")
    return problems


# recognition

@dataclass(frozen=True)
class _Piece:
    mask: int
    root: int
    kind: str
    body: tuple[int, ...]


def _five_cycles(g: Graph, allowed: int) -> list[tuple[int, ...]]:
    """Induced 5-cycles inside ``allowed``, each once, as vertex sequences."""
    out = []
    for s in iter_bits(allowed):
        higher = allowed & ~((2 << s) - 1)

        def walk(path: list[int], used: int):
            last = path[-1]
            if len(path) == 5:
                if g.adj[last] >> s & 1 and path[1] < path[4]:
                    out.append(tuple(path))
                return
            for w in iter_bits(g.adj[last] & higher & ~used):
                walk(path + [w], used | 1 << w)

        walk([s], 1 << s)
    induced = []
    for cyc in out:
        mask = vset(cyc)
        if all((g.adj[v] & mask).bit_count() == 2 for v in cyc):
            induced.append(cyc)
    return induced


def _candidate_pieces(g: Graph) -> list[_Piece]:
    pieces = []
    kinds = _kind_by_rooted_form()
    for a in range(g.n):
        for b in iter_bits(g.adj[a] & ~((2 << a) - 1)):
            body = 1 << a | 1 << b
            ext = (g.adj[a] | g.adj[b]) & ~body
            if ext and ext & (ext - 1) == 0:
                r = ext.bit_length() - 1
                kind = C3 if g.adj[r] & body == body else P3
                pieces.append(_Piece(body | ext, r, kind, (a, b)))
    low_degree = vset(v for v in range(g.n) if 2 <= g.adj[v].bit_count() <= 3)
    for cyc in _five_cycles(g, low_degree):
        body = vset(cyc)
        ext = 0
        for v in cyc:
            ext |= g.adj[v]
        ext &= ~body
        if ext and ext & (ext - 1) == 0:
            r = ext.bit_length() - 1
            sub, old = g.induced(body | ext)
            kind = kinds.get(rooted_form(sub, old.index(r)))
            if kind is not None:
                pieces.append(_Piece(body | ext, r, kind, cyc))
    return pieces


def _covers(g: Graph, pieces: list[_Piece]) -> list[list[_Piece]]:
    by_vertex: list[list[_Piece]] = [[] for _ in range(g.n)]
    for p in pieces:
        for v in iter_bits(p.mask):
            by_vertex[v].append(p)
    out = []

    def search(covered: int, chosen: list[_Piece]):
        if covered == g.vertices:
            out.append(list(chosen))
            return
        free = g.vertices & ~covered
        v = (free & -free).bit_length() - 1
        for p in by_vertex[v]:
            if not p.mask & covered:
                chosen.append(p)
                search(covered | p.mask, chosen)
                chosen.pop()

    search(0, [])
    return out


def _placement(g: Graph, piece: _Piece) -> Placement:
    gd = gadget(piece.kind)
    body = vset(piece.body)
    if piece.kind in (P3, C3):
        a, b = piece.body
        if piece.kind == P3 and not g.has_edge(piece.root, a):
            a, b = b, a
        return Placement(piece.root, piece.kind, (piece.root, a, b))
    # align the 5-cycle so that the root's neighbors land where the catalog has them
    cyc = list(piece.body)
    want = vset(H6_ROOT_NEIGHBORS[piece.kind])
    for shift in range(5):
        for seq in (cyc[shift:] + cyc[:shift], list(reversed(cyc[shift:] + cyc[:shift]))):
            emb = (piece.root, *seq)
            got = vset(i for i in range(1, 6) if g.has_edge(piece.root, emb[i]))
            if got == want:
                return Placement(piece.root, piece.kind, emb)
    raise AssertionError(f"no alignment of {piece} with {gd.kind}; body {body:#x}")


def _decomposition(g: Graph, cover: list[_Piece]) -> Decomposition:
    cover = sorted(cover, key=lambda p: p.root)
    base_vertices = vset(p.root for p in cover)
    base, _ = g.induced(base_vertices)
    return Decomposition(base, base_vertices, tuple(_placement(g, p) for p in cover))


def _base_order_key(cover: list[_Piece]) -> list[int]:
    return sorted(p.root for p in cover)


def recognize_G(g: Graph) -> Optional[Decomposition]:
    """A gadget decomposition of ``g`` with the lexicographically least base, or None."""
    if g.n < 3 or g.n % 3 or not is_connected(g):
        return None
    covers = _covers(g, _candidate_pieces(g))
    if not covers:
        return None
    return _decomposition(g, min(covers, key=_base_order_key))


def recognize_T(g: Graph) -> Optional[Decomposition]:
    if not is_tree(g):
        return None
    dec = recognize_G(g)
    if dec is None or any(k != P3 for k in dec.kinds()):
        return None
    return dec


def recognize_U(g: Graph) -> Optional[Decomposition]:
    return recognize_G(g) if is_unicyclic(g) else None


def recognize_B(g: Graph) -> Optional[Decomposition]:
    if not is_block_graph(g):
        return None
    dec = recognize_G(g)
    if dec is None or any(k not in (P3, C3) for k in dec.kinds()):
        return None
    return dec


def unicyclic_case(dec: Decomposition) -> str:
    """Which of the three unicyclic shapes a decomposition has.

    "cycle-base": all P3 over a unicyclic base; "C3" or "H6_1": exactly one
    such gadget over a tree base with P3 elsewhere; "other" otherwise.
    """
    kinds = dec.kinds()
    others = [k for k in kinds if k != P3]
    if not others and is_unicyclic(dec.base):
        return "cycle-base"
    if len(others) == 1 and others[0] in (C3, H6_1) and is_tree(dec.base):
        return others[0]
    return "other"


def brute_force_decomposable(g: Graph) -> Optional[VertexSet]:
    """Least base (as a sorted tuple) over all vertex subsets, or None.

    Independent of the piece search: every subset is tried as the base, the
    components of the rest must each hang from one base vertex, and each piece
    is matched to the catalog by permutation-exhaustive rooted isomorphism.
    """
    if g.n < 3 or not is_connected(g):
        return None
    catalog = gadget_catalog()
    best = None
    for k in range(1, g.n // 3 + 1):
        for base in combinations(range(g.n), k):
            bmask = vset(base)
            induced_base, _ = g.induced(bmask)
            if not is_connected(induced_base):
                continue
            owner: dict[int, int] = {}
            ok = True
            for comp in components(g, g.vertices & ~bmask):
                touch = 0
                for v in iter_bits(comp):
                    touch |= g.adj[v]
                touch &= bmask
                if touch.bit_count() != 1:
                    ok = False
                    break
                r = touch.bit_length() - 1
                if r in owner:
                    ok = False
                    break
                owner[r] = comp
            if not ok or len(owner) != k:
                continue
            for r, comp in owner.items():
                sub, old = g.induced(comp | 1 << r)
                root = old.index(r)
                if not any(
                    gd.order == sub.n and brute_force_rooted_isomorphic(sub, root, gd.graph, gd.root)
                    for gd in catalog
                ):
                    ok = False
                    break
            if ok and (best is None or list(base) < best):
                best = list(base)
    return None if best is None else vset(best)


# trees in T

@dataclass(frozen=True)
class TreePartition:
    a_set: VertexSet
    s_set: VertexSet
    l_set: VertexSet
    three_sets: tuple[tuple[int, int, int], ...]  # (a, s, leaf) per 3-set

    def three_set_of(self, v: int) -> tuple[int, int, int]:
        for t in self.three_sets:
            if v in t:
                return t
        raise ValueError(f"vertex {v} is in no 3-set")


def tree_partition(t: Graph) -> TreePartition:
    """Leaf / support / remaining partition of a tree in T and its 3-sets.

    For the 3-vertex path the smaller-indexed leaf is the L vertex, the other
    leaf the A vertex, and the center is taken as the support.
    """
    if recognize_T(t) is None:
        raise ValueError("tree is not in the family T")
    if t.n == 3:
        center = next(v for v in range(3) if t.degree(v) == 2)
        first, other = [v for v in range(3) if v != center]
        return TreePartition(1 << other, 1 << center, 1 << first, ((other, center, first),))
    l_set = leaves(t)
    s_set = support_vertices(t)
    a_set = t.vertices & ~l_set & ~s_set
    triples = []
    for leaf in iter_bits(l_set):
        s = t.adj[leaf].bit_length() - 1
        a_near = t.adj[s] & a_set
        if a_near.bit_count() != 1:
            raise AssertionError("support vertex in T must have exactly one A neighbor")
        triples.append((a_near.bit_length() - 1, s, leaf))
    triples.sort()
    return TreePartition(a_set, s_set, l_set, tuple(triples))


# unicyclic structure

def hanging_tree(g: Graph, u: int) -> VertexSet:
    cyc = cycle_vertices(g)
    if u not in cyc:
        raise ValueError(f"vertex {u} is not on the cycle")
    on_cycle = vset(cyc)
    trimmed = g
    for w in iter_bits(g.adj[u] & on_cycle):
        trimmed = trimmed.without_edge(u, w)
    for comp in components(trimmed):
        if comp >> u & 1:
            return comp
    raise AssertionError("unreachable")


# named members used throughout the checks

def h6_prime() -> Graph:
    """The 5-cycle with one pendant vertex (H6_1 glued onto a single vertex)."""
    return attach(complete_graph(1), [H6_1])[0]


def triangle_with_tail() -> Graph:
    return attach(complete_graph(2), [C3, P3])[0]


def all_attachments(base: Graph, kinds: Sequence[str] = KINDS):
    for combo in product(kinds, repeat=base.n):
        yield attach(base, list(combo))


def connected_bases(max_order: int):
    for k in range(1, max_order + 1):
        yield from connected_graphs(k)


__all__ = [
    "C3",
    "Decomposition",
    "H6_1",
    "H6_2A",
    "H6_2B",
    "H6_3",
    "H6_KINDS",
    "H6_ROOT_NEIGHBORS",
    "KINDS",
    "P3",
    "Placement",
    "RootedGadget",
    "TreePartition",
    "all_attachments",
    "attach",
    "brute_force_decomposable",
    "check_decomposition",
    "connected_bases",
    "derive_h6_gadgets",
    "gadget",
    "gadget_catalog",
    "h6_prime",
    "hanging_tree",
    "reattach",
    "recognize_B",
    "recognize_G",
    "recognize_T",
    "recognize_U",
    "tree_partition",
    "triangle_with_tail",
    "unicyclic_case",
]
