"""Exact isolation and domination numbers with certificates.

Both problems are hitting problems over closed neighborhoods.  A set ``D`` is
isolating when no edge survives outside ``N[D]``; any isolating set must
therefore contain a vertex of ``N[u] | N[v]`` for every edge ``uv`` left
outside ``N[D]``.  Domination is the same search with single undominated
vertices in place of edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, Optional

from .graph import Graph, UnsupportedSize, VertexSet, closed_neighborhood, is_independent, iter_bits, vset

MAX_ALL_MIN_N = 14


@dataclass(frozen=True)
class IsolationCertificate:
    value: int
    witness: VertexSet
    exhaustive: bool = True


@dataclass(frozen=True)
class DominationCertificate:
    value: int
    witness: VertexSet
    exhaustive: bool = True


def is_isolating(g: Graph, d: VertexSet) -> bool:
    return is_independent(g, g.vertices & ~closed_neighborhood(g, d))


def is_dominating(g: Graph, d: VertexSet) -> bool:
    return closed_neighborhood(g, d) == g.vertices


class _Hitting:
    """Search state shared by the value search and the lex-ordered enumeration.

    ``demands(covered)`` returns the candidate sets of every unmet constraint
    given the current closed neighborhood ``covered``; an empty list means
    the current set is feasible.
    """

    def __init__(self, g: Graph, demands: Callable[[int], list[int]], allowed: int | None = None):
        self.g = g
        self.closed = [row | 1 << v for v, row in enumerate(g.adj)]
        self.allowed = g.vertices if allowed is None else allowed
        self.demands = demands

    def _lower_bound(self, needs: list[int]) -> int:
        # pairwise disjoint demand sets each need their own vertex
        used = 0
        count = 0
        for cand in sorted(needs, key=int.bit_count):
            if not cand & used:
                used |= cand
                count += 1
        return count

    def feasible(self, covered: int, budget: int) -> bool:
        needs = self.demands(covered)
        if not needs:
            return True
        if budget == 0:
            return False
        needs = [c & self.allowed for c in needs]
        if not all(needs) or self._lower_bound(needs) > budget:
            return False
        cand = min(needs, key=int.bit_count)
        for w in iter_bits(cand):
            if self.feasible(covered | self.closed[w], budget - 1):
                return True
        return False

    def minimum(self, cap: int | None = None) -> Optional[int]:
        """Least feasible size, or None when nothing of size <= cap works."""
        top = self.allowed.bit_count() if cap is None else cap
        for k in range(top + 1):
            if self.feasible(0, k):
                return k
        return None

    def lex_solutions(self, k: int) -> Iterator[VertexSet]:
        """All feasible sets of size ``k`` in lexicographic order of sorted tuples.

        Correct for the minimum ``k``: no feasible set there is smaller than
        ``k``, so no branch can close early.
        """
        n = self.g.n

        def walk(chosen: int, covered: int, start: int, budget: int):
            needs = self.demands(covered)
            if not needs:
                if budget == 0:
                    yield chosen
                return
            if budget == 0:
                return
            allowed = self.allowed >> start << start
            limit = n - 1
            restricted = []
            for cand in needs:
                c = cand & allowed
                if not c:
                    return
                restricted.append(c)
                # the next chosen vertex is at most the largest member of c
                limit = min(limit, c.bit_length() - 1)
            if self._lower_bound(restricted) > budget:
                return
            for x in iter_bits(allowed & ((2 << limit) - 1)):
                yield from walk(chosen | 1 << x, covered | self.closed[x], x + 1, budget - 1)

        yield from walk(0, 0, 0, k)


def _isolation_demands(g: Graph) -> Callable[[int], list[int]]:
    adj = g.adj
    closed = [row | 1 << v for v, row in enumerate(adj)]
    full = g.vertices

    def demands(covered: int) -> list[int]:
        free = full & ~covered
        out = []
        for u in iter_bits(free):
            for v in iter_bits(adj[u] & free & ~((2 << u) - 1)):
                out.append(closed[u] | closed[v])
        return out

    return demands


def _domination_demands(g: Graph) -> Callable[[int], list[int]]:
    closed = [row | 1 << v for v, row in enumerate(g.adj)]
    full = g.vertices

    def demands(covered: int) -> list[int]:
        return [closed[u] for u in iter_bits(full & ~covered)]

    return demands


def _require_vertices(g: Graph) -> None:
    if g.n < 1:
        raise ValueError("the graph needs at least one vertex")


def isolation_number(g: Graph) -> IsolationCertificate:
    """Exact isolation number with the lexicographically smallest minimum witness."""
    _require_vertices(g)
    search = _Hitting(g, _isolation_demands(g))
    k = search.minimum()
    witness = next(search.lex_solutions(k))
    return IsolationCertificate(k, witness)


def iota(g: Graph) -> int:
    _require_vertices(g)
    return _Hitting(g, _isolation_demands(g)).minimum()


def all_min_isolating_sets(g: Graph) -> list[VertexSet]:
    _require_vertices(g)
    if g.n > MAX_ALL_MIN_N:
        raise UnsupportedSize(f"minimum isolating set enumeration supports n <= {MAX_ALL_MIN_N}, got {g.n}")
    search = _Hitting(g, _isolation_demands(g))
    return list(search.lex_solutions(search.minimum()))


def domination_number(g: Graph) -> DominationCertificate:
    _require_vertices(g)
    search = _Hitting(g, _domination_demands(g))
    k = search.minimum()
    return DominationCertificate(k, next(search.lex_solutions(k)))


def naive_isolation_number(g: Graph) -> int:
    """Smallest k such that some k-subset isolates, by plain subset enumeration."""
    for k in range(g.n + 1):
        if any(is_isolating(g, vset(c)) for c in combinations(range(g.n), k)):
            return k
    raise AssertionError("the full vertex set always isolates")


def naive_min_isolating_sets(g: Graph) -> list[VertexSet]:
    for k in range(g.n + 1):
        found = [vset(c) for c in combinations(range(g.n), k) if is_isolating(g, vset(c))]
        if found:
            return found
    raise AssertionError("the full vertex set always isolates")


def naive_domination_number(g: Graph) -> int:
    for k in range(g.n + 1):
        if any(is_dominating(g, vset(c)) for c in combinations(range(g.n), k)):
            return k
    raise AssertionError("the full vertex set always dominates")


def check_certificate(g: Graph, cert: IsolationCertificate | DominationCertificate) -> bool:
    ok = is_isolating if isinstance(cert, IsolationCertificate) else is_dominating
    return cert.witness.bit_count() == cert.value and ok(g, cert.witness)


def min_isolating_set_avoiding(g: Graph, avoid: VertexSet) -> Optional[VertexSet]:
    """Lexicographically least minimum isolating set disjoint from ``avoid``, or None."""
    _require_vertices(g)
    k = iota(g)
    search = _Hitting(g, _isolation_demands(g), allowed=g.vertices & ~avoid)
    if search.minimum(cap=k) is None:
        return None
    return next(search.lex_solutions(k))
