"""Immutable small graphs over bitmask adjacency rows.

Vertices are the dense indices ``0..n-1``.  A vertex set is a plain ``int``
whose bit ``v`` is set when ``v`` is a member; every set-valued operation in
the package speaks this currency.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_VERTICES = 64

VertexSet = int


class UnsupportedSize(ValueError):
    """Input exceeds a documented size bound of an operation."""


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message} (byte {offset})")
        self.message = message
        self.offset = offset
        self.line = line


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise UnsupportedSize(f"graphs are capped at {MAX_VERTICES} vertices, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        degree_sum = 0
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} names a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
            degree_sum += row.bit_count()
        object.__setattr__(self, "edge_count", degree_sum // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def check_set(self, s: VertexSet) -> None:
        if s < 0 or s >> self.n:
            raise ValueError(f"vertex set {s:#x} has members outside 0..{self.n - 1}")

    def induced(self, s: VertexSet) -> tuple[Graph, list[int]]:
        """Subgraph induced on ``s``, relabelled densely; also returns new->old."""
        old = members(s)
        pos = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            rows.append(vset(pos[u] for u in iter_bits(self.adj[v] & s)))
        return Graph(len(old), tuple(rows)), old

    def remove(self, s: VertexSet) -> tuple[Graph, list[int]]:
        return self.induced(self.vertices & ~s)

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = vset(perm[u] for u in iter_bits(self.adj[v]))
        return Graph(self.n, tuple(rows))

    def add_vertex(self, neighbors: VertexSet) -> Graph:
        rows = list(self.adj)
        new = self.n
        for u in iter_bits(neighbors):
            rows[u] |= 1 << new
        rows.append(neighbors)
        return Graph(self.n + 1, tuple(rows))

    def with_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# named graphs

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def corona(g: Graph) -> Graph:
    """``g`` with one pendant vertex hung on every vertex."""
    edges = g.edges() + [(v, g.n + v) for v in range(g.n)]
    return Graph.from_edges(2 * g.n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# neighborhoods and simple classes

def closed_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    g.check_set(s)
    out = s
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


def is_independent(g: Graph, s: VertexSet) -> bool:
    g.check_set(s)
    return all(not g.adj[v] & s for v in iter_bits(s))


def is_clique(g: Graph, s: VertexSet) -> bool:
    return all((g.adj[v] | 1 << v) & s == s for v in iter_bits(s))


def components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of the subgraph induced on ``within``."""
    rest = g.vertices if within is None else within
    out = []
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & rest & ~seen
            seen |= frontier
        out.append(seen)
        rest &= ~seen
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.n >= 3 and g.edge_count == g.n and is_connected(g)


def leaves(g: Graph) -> VertexSet:
    return vset(v for v in range(g.n) if g.adj[v].bit_count() == 1)


def support_vertices(g: Graph) -> VertexSet:
    out = 0
    for v in iter_bits(leaves(g)):
        out |= g.adj[v]
    return out


def simplicial_vertices(g: Graph) -> VertexSet:
    return vset(v for v in range(g.n) if is_clique(g, g.adj[v] | 1 << v))


# blocks

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[VertexSet, ...]
    cut_vertices: VertexSet
    block_of_edge: dict[tuple[int, int], int]

    def end_blocks(self) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if (b & self.cut_vertices).bit_count() <= 1]

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if b >> v & 1]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components by an iterative Hopcroft-Tarjan edge-stack walk."""
    if not is_connected(g):
        raise ValueError("block decomposition needs a connected graph")
    if g.n == 0:
        return BlockDecomposition((), 0, {})
    if g.n == 1:
        return BlockDecomposition((1,), 0, {})

    disc = [-1] * g.n
    low = [0] * g.n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[VertexSet] = []
    block_of_edge: dict[tuple[int, int], int] = {}
    counter = 0

    disc[0] = low[0] = counter
    counter += 1
    stack = [(0, -1, iter(members(g.adj[0])))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, v, iter(members(g.adj[w]))))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent < 0:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            index = len(blocks)
            mask = 0
            while True:
                a, b = edge_stack.pop()
                mask |= 1 << a | 1 << b
                block_of_edge[(min(a, b), max(a, b))] = index
                if (a, b) == (parent, v):
                    break
            blocks.append(mask)

    cuts = 0
    seen_once = 0
    for b in blocks:
        cuts |= seen_once & b
        seen_once |= b
    return BlockDecomposition(tuple(blocks), cuts, block_of_edge)


def cut_vertices(g: Graph) -> VertexSet:
    return block_decomposition(g).cut_vertices


def is_block_graph(g: Graph) -> bool:
    if g.n == 0 or not is_connected(g):
        return False
    return all(is_clique(g, b) for b in block_decomposition(g).blocks)


def cycle_vertices(g: Graph) -> list[int]:
    """Vertices of the unique cycle of a unicyclic graph, in cyclic order."""
    if not is_unicyclic(g):
        raise ValueError("graph is not unicyclic")
    degree = [g.adj[v].bit_count() for v in range(g.n)]
    alive = g.vertices
    stripped = [v for v in range(g.n) if degree[v] == 1]
    while stripped:
        v = stripped.pop()
        alive &= ~(1 << v)
        for u in iter_bits(g.adj[v] & alive):
            degree[u] -= 1
            if degree[u] == 1:
                stripped.append(u)
    start = (alive & -alive).bit_length() - 1
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = [u for u in iter_bits(g.adj[cur] & alive) if u != prev]
        step = min(nxt) if prev < 0 else nxt[0]
        if step == start:
            break
        order.append(step)
        prev, cur = cur, step
    return order


# graph6

def _n_header(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise UnsupportedSize(f"graph6 cannot encode n={n} with the supported headers")


def write_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5])
        for k in range(0, len(bits), 6)
    )
    return (_n_header(g.n) + body).decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    start = 0
    if data.startswith(b">>graph6<<"):
        start = 10
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 line", start)
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside the printable graph6 range", start + i)
    if data[0] < 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 4 and data[1] < 126:
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
    elif len(data) >= 8 and data[1] == 126:
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        pos = 8
    else:
        raise Graph6Error("truncated size header", start + len(data))
    if n > MAX_VERTICES:
        raise UnsupportedSize(f"graph6 header declares n={n}, above the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}", start + pos + min(len(body), need))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and (body[-1] - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise Graph6Error("nonzero padding bits", start + pos + need - 1)
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one graph per non-blank line; errors carry the 1-based line number."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(exc.message, exc.offset, lineno) from exc
        except UnsupportedSize as exc:
            raise UnsupportedSize(f"line {lineno}: {exc}") from exc
        yield g


def format_edge_list(g: Graph) -> str:
    return f"{g.n}: " + " ".join(f"{u}-{v}" for u, v in g.edges())
