"""Executable checks of the extremal characterizations over graph streams.

Each check walks a stream, classifies every graph as a substantive pass, a
vacuous pass (hypothesis not met), a recorded exception, a flagged input, or
a violation, and returns a :class:`VerificationReport`.  Per-graph work is in
module-level functions so that ``jobs > 1`` can fan it out to processes.
"""
from __future__ import annotations

import json
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Optional

from .canon import MAX_CANON_N, canonical_form
from .families import (
    C3,
    KINDS,
    P3,
    attach,
    derive_h6_gadgets,
    gadget_catalog,
    h6_prime,
    hanging_tree,
    recognize_B,
    recognize_G,
    recognize_T,
    recognize_U,
    unicyclic_case,
)
from .generate import block_graphs, connected_graphs, trees, unicyclic_graphs
from .graph import (
    Graph,
    block_decomposition,
    closed_neighborhood,
    corona,
    cycle_graph,
    cycle_vertices,
    is_block_graph,
    is_clique,
    is_connected,
    is_unicyclic,
    iter_bits,
    members,
    leaves,
    parse_graph6,
    simplicial_vertices,
    vset,
    write_graph6,
)
from .solver import (
    all_min_isolating_sets,
    domination_number,
    iota,
    is_isolating,
    min_isolating_set_avoiding,
)

# outcome statuses for one graph
PASS, VACUOUS, EXCEPTION, FLAGGED, FAIL = "pass", "vacuous", "exception", "flagged", "fail"


@dataclass
class Outcome:
    status: str
    detail: str = ""
    tags: dict[str, int] = field(default_factory=dict)


@dataclass
class VerificationReport:
    claim_id: str
    universe: str
    checked: int = 0
    substantive: int = 0
    vacuous: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)
    exceptions: list[tuple[str, str]] = field(default_factory=list)
    flagged: list[tuple[str, str]] = field(default_factory=list)
    tallies: dict[str, int] = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if not self.violations else "fail"

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        pairs = lambda xs: [{"graph6": g6, "detail": d} for g6, d in xs]  # noqa: E731
        return {
            "claim_id": self.claim_id,
            "universe": self.universe,
            "checked": self.checked,
            "substantive": self.substantive,
            "vacuous": self.vacuous,
            "verdict": self.verdict,
            "violations": pairs(self.violations),
            "exceptions": pairs(self.exceptions),
            "flagged": pairs(self.flagged),
            "tallies": dict(sorted(self.tallies.items())),
            "notes": self.notes,
        }

    def table_row(self) -> str:
        extra = f" exceptions={','.join(g for g, _ in self.exceptions)}" if self.exceptions else ""
        return (
            f"{self.claim_id:<20} {self.verdict.upper():<5} checked={self.checked} "
            f"substantive={self.substantive} vacuous={self.vacuous} "
            f"violations={len(self.violations)}{extra}  [{self.universe}]"
        )


def _sort_key(g6: str):
    g = parse_graph6(g6)
    return (g.n, canonical_form(g) if g.n <= MAX_CANON_N else g6.encode())


def _apply(fn_name: str, g6: str) -> Outcome:
    return CHECKS[fn_name](parse_graph6(g6))


def _assemble(claim_id: str, universe: str, graphs: Iterable[Graph], fn_name: str, jobs: int = 1) -> VerificationReport:
    report = VerificationReport(claim_id, universe)
    codes = [write_graph6(g) for g in graphs]
    if jobs > 1 and len(codes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_apply, [fn_name] * len(codes), codes, chunksize=max(1, len(codes) // (8 * jobs))))
    else:
        fn = CHECKS[fn_name]
        outcomes = [fn(parse_graph6(c)) for c in codes]
    tallies: Counter = Counter()
    for g6, out in zip(codes, outcomes):
        report.checked += 1
        tallies.update(out.tags)
        if out.status == PASS:
            report.substantive += 1
        elif out.status == VACUOUS:
            report.vacuous += 1
        elif out.status == EXCEPTION:
            report.exceptions.append((g6, out.detail))
        elif out.status == FLAGGED:
            report.flagged.append((g6, out.detail))
        else:
            report.violations.append((g6, out.detail))
    for bucket in (report.violations, report.exceptions, report.flagged):
        bucket.sort(key=lambda item: _sort_key(item[0]))
    report.tallies = dict(tallies)
    return report


def _extremal(g: Graph) -> bool:
    return 3 * iota(g) == g.n


def _is_c5(g: Graph) -> bool:
    return g.n == 5 and all(row.bit_count() == 2 for row in g.adj) and is_connected(g)


# Theorem: iota <= n/3 for connected graphs other than C5

def _caro(g: Graph) -> Outcome:
    if g.n < 3 or not is_connected(g):
        return Outcome(FLAGGED, "needs a connected graph with at least 3 vertices")
    i = iota(g)
    if _is_c5(g):
        return Outcome(EXCEPTION, f"C5: iota={i} > 5/3", {"c5_iota": i})
    if 3 * i > g.n:
        return Outcome(FAIL, f"iota={i} > n/3 with n={g.n}")
    return Outcome(PASS, tags={"equality": int(3 * i == g.n)})


def check_caro_bound(graphs: Iterable[Graph], universe: str = "supplied stream", jobs: int = 1) -> VerificationReport:
    return _assemble("thm-caro", universe, graphs, "caro", jobs)


# characterizations

def _iff(extremal: bool, member: bool, what: str) -> Outcome:
    tags = {
        "member": int(member),
        "extremal": int(extremal),
        "if_direction_checked": int(member),
        "only_if_direction_checked": int(extremal),
        "if_direction_violations": int(member and not extremal),
        "only_if_direction_violations": int(extremal and not member),
    }
    if extremal != member:
        side = f"in {what} but not extremal" if member else f"extremal but not in {what}"
        return Outcome(FAIL, side, tags)
    return Outcome(PASS, tags=tags)


def _tree_char(g: Graph) -> Outcome:
    return _iff(_extremal(g), recognize_T(g) is not None, "T")


@lru_cache(maxsize=None)
def _exceptional_cycles() -> dict[bytes, str]:
    return {canonical_form(cycle_graph(6)): "C6", canonical_form(cycle_graph(9)): "C9"}


def _unicyclic_char(g: Graph) -> Outcome:
    dec = recognize_U(g)
    special = _exceptional_cycles().get(canonical_form(g)) if g.n in (6, 9) else None
    out = _iff(_extremal(g), dec is not None or special is not None, "U or {C6, C9}")
    if special is not None:
        out.tags[f"{special}_extremal"] = int(_extremal(g))
        out.tags[f"{special}_in_G"] = int(recognize_G(g) is not None)
    if dec is not None:
        case = unicyclic_case(dec)
        out.tags[f"case_{case}"] = 1
        if case == "other" and out.status == PASS:
            return Outcome(FAIL, "member of U outside the three listed shapes", out.tags)
    return out


def _block_char(g: Graph) -> Outcome:
    return _iff(_extremal(g), recognize_B(g) is not None, "B")


def check_tree_characterization(n_max: int = 12, jobs: int = 1, n_min: int = 1) -> VerificationReport:
    graphs = [g for n in range(n_min, n_max + 1) for g in trees(n)]
    return _assemble("thm-tree", f"all trees {n_min}<=n<={n_max}", graphs, "tree", jobs)


def check_unicyclic_characterization(n_max: int = 12, jobs: int = 1, n_min: int = 3) -> VerificationReport:
    graphs = [g for n in range(max(3, n_min), n_max + 1) for g in unicyclic_graphs(n)]
    report = _assemble("thm-unicyclic", f"all unicyclic graphs {max(3, n_min)}<=n<={n_max}", graphs, "unicyclic", jobs)
    report.notes["C6_in_G"] = recognize_G(cycle_graph(6)) is not None
    report.notes["C9_in_G"] = recognize_G(cycle_graph(9)) is not None
    report.notes["H6_prime_in_U"] = recognize_U(h6_prime()) is not None
    return report


def check_block_characterization(n_max: int = 9, jobs: int = 1, n_min: int = 1) -> VerificationReport:
    graphs = [g for n in range(n_min, n_max + 1) for g in block_graphs(n)]
    return _assemble("thm-block", f"all block graphs {n_min}<=n<={n_max}", graphs, "block", jobs)


def check_characterization_stream(kind: str, graphs: Iterable[Graph], universe: str, jobs: int = 1) -> VerificationReport:
    """Run one of the three characterizations over an arbitrary stream.

    Graphs outside the class are flagged rather than judged.
    """
    claim = {"tree": "thm-tree", "unicyclic": "thm-unicyclic", "block": "thm-block"}[kind]
    return _assemble(claim, universe, graphs, f"{kind}_guarded", jobs)


def _guarded(pred: Callable[[Graph], bool], inner: Callable[[Graph], Outcome], what: str):
    def run(g: Graph) -> Outcome:
        if not pred(g):
            return Outcome(FLAGGED, f"not a {what}")
        return inner(g)

    return run


# censuses of order 6

def two_p3_unicyclic_family() -> list[Graph]:
    """Unicyclic graphs from two disjoint 3-paths joined by two edges, up to isomorphism."""
    cross = [(i, j) for i in range(3) for j in range(3, 6)]
    found: dict[bytes, Graph] = {}
    for pair in combinations(cross, 2):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), *pair])
        if is_unicyclic(g):
            found.setdefault(canonical_form(g), g)
    return [found[k] for k in sorted(found)]


def order6_censuses() -> dict:
    blocks = [g for g in block_graphs(6) if g.max_degree() <= 3]
    block_ext = [g for g in blocks if _extremal(g)]
    outside = [g for g in connected_graphs(6) if iota(g) == 2 and recognize_G(g) is None]
    family = two_p3_unicyclic_family()
    fam_ext = [g for g in family if iota(g) == 2]
    return {
        "block_max_deg3": len(blocks),
        "block_max_deg3_extremal": len(block_ext),
        "block_max_deg3_extremal_in_B": sum(recognize_B(g) is not None for g in block_ext),
        "connected_iota2_not_in_G": len(outside),
        "connected_iota2_not_in_G_graph6": [write_graph6(g) for g in outside],
        "two_p3_family_size": len(family),
        "two_p3_family_iota1": sum(iota(g) == 1 for g in family),
        "two_p3_family_iota2_graph6": [write_graph6(g) for g in fam_ext],
        "two_p3_family_iota2_is_C6_H6prime": sorted(canonical_form(g) for g in fam_ext)
        == sorted([canonical_form(cycle_graph(6)), canonical_form(h6_prime())]),
    }


def check_order6_censuses() -> VerificationReport:
    c = order6_censuses()
    report = VerificationReport("census-order6", "order-6 censuses (block max-degree 3, outside G, two-P3 unicyclic)")
    expectations = [
        ("block graphs of order 6 with max degree <= 3", c["block_max_deg3"], 9),
        ("extremal among them", c["block_max_deg3_extremal"], 3),
        ("extremal among them lying in B", c["block_max_deg3_extremal_in_B"], 3),
        ("connected order-6 graphs with iota 2 outside G", c["connected_iota2_not_in_G"], 3),
        ("two-P3 unicyclic graphs with iota 2 equal {C6, H6'}", int(c["two_p3_family_iota2_is_C6_H6prime"]), 1),
    ]
    for label, got, want in expectations:
        report.checked += 1
        if got == want:
            report.substantive += 1
        else:
            report.violations.append(("", f"{label}: got {got}, expected {want}"))
    report.notes = c
    return report


# lemmas on unicyclic graphs

def qualifying_leaf_pairs(g: Graph) -> list[tuple[int, int]]:
    """(leaf, support) pairs where the support has degree 2."""
    out = []
    for u in iter_bits(leaves(g)):
        v = g.adj[u].bit_length() - 1
        if g.degree(v) == 2:
            out.append((u, v))
    return out


def _isolating_leaf(g: Graph) -> Outcome:
    pairs = qualifying_leaf_pairs(g)
    if not pairs:
        return Outcome(VACUOUS, "no leaf with a degree-2 support")
    for u, v in pairs:
        if min_isolating_set_avoiding(g, 1 << u | 1 << v) is None:
            return Outcome(FAIL, f"every minimum isolating set meets {{{u}, {v}}}")
    return Outcome(PASS, tags={"pairs": len(pairs)})


def check_lemma_isolating_leaf(graphs: Iterable[Graph], universe: str = "supplied stream", jobs: int = 1) -> VerificationReport:
    return _assemble("lem-isolating-leaf", universe, graphs, "isolating_leaf", jobs)


@dataclass(frozen=True)
class LemmaT1T2Witness:
    x_set: tuple[int, ...]
    total: int


def t1t2_witness(g: Graph) -> Optional[LemmaT1T2Witness]:
    """First window of 1, 2 or 3 consecutive cycle vertices whose hanging trees total 0 mod 3."""
    cyc = cycle_vertices(g)
    sizes = {u: hanging_tree(g, u).bit_count() for u in cyc}
    c = len(cyc)
    for length in range(1, min(3, c) + 1):
        for start in range(c):
            window = tuple(cyc[(start + i) % c] for i in range(length))
            total = sum(sizes[u] for u in window)
            if total % 3 == 0:
                return LemmaT1T2Witness(window, total)
    return None


def _t1t2(g: Graph) -> Outcome:
    if not is_unicyclic(g) or g.n % 3:
        return Outcome(VACUOUS, "not a unicyclic graph of order divisible by 3")
    w = t1t2_witness(g)
    if w is None:
        return Outcome(FAIL, "no window of at most 3 consecutive cycle vertices works")
    return Outcome(PASS, f"X={list(w.x_set)} total={w.total}", {f"window_{len(w.x_set)}": 1, "whole_cycle": int(len(w.x_set) == len(cycle_vertices(g)))})


def check_lemma_T1T2(graphs: Iterable[Graph], universe: str = "supplied stream", jobs: int = 1) -> VerificationReport:
    return _assemble("lem-T1T2", universe, graphs, "t1t2", jobs)


# block graph propositions

def _block_props(g: Graph) -> Outcome:
    if not is_block_graph(g):
        return Outcome(FLAGGED, "not a block graph")
    tags: Counter = Counter()
    complete = is_clique(g, g.vertices)
    bd = block_decomposition(g)
    simp = simplicial_vertices(g)
    problems = []

    if complete:
        tags["no_simplicial_vacuous"] += 1
    else:
        tags["no_simplicial_checked"] += 1
        if min_isolating_set_avoiding(g, simp) is None:
            problems.append("no minimum isolating set avoids the simplicial vertices")

    extremal = _extremal(g)
    if complete or not extremal:
        tags["two_simplicial_vacuous"] += 1
        tags["end_block_order_vacuous"] += 1
    else:
        tags["two_simplicial_checked"] += 1
        tags["end_block_order_checked"] += 1
        for b in bd.blocks:
            if (b & simp).bit_count() > 2:
                problems.append(f"block {members(b)} has more than two simplicial vertices")
        for i in bd.end_blocks():
            if bd.blocks[i].bit_count() > 3:
                problems.append(f"end-block {members(bd.blocks[i])} has more than three vertices")

    is_p3 = g.n == 3 and g.edge_count == 2
    if is_p3 or not extremal:
        tags["cut_vertex_vacuous"] += 1
    else:
        tags["cut_vertex_checked"] += 1
        ends = [bd.blocks[i] for i in bd.end_blocks()]
        for v in iter_bits(bd.cut_vertices):
            if sum(b >> v & 1 for b in ends) > 1:
                problems.append(f"cut vertex {v} lies in more than one end-block")

    if problems:
        return Outcome(FAIL, "; ".join(problems), dict(tags))
    substantive = any(k.endswith("_checked") for k in tags)
    return Outcome(PASS if substantive else VACUOUS, tags=dict(tags))


def check_block_propositions(graphs: Iterable[Graph], universe: str = "supplied stream", jobs: int = 1) -> VerificationReport:
    return _assemble("prop-block", universe, graphs, "block_props", jobs)


# vertex-removal lemma and edge re-insertion

def _remove_lemma(g: Graph, r_max: int = 2) -> Outcome:
    if g.n < 3 or g.n % 3 or not is_connected(g):
        return Outcome(VACUOUS, "needs a connected graph of order divisible by 3")
    tags: Counter = Counter()
    problems = []
    literal = []
    i_g = iota(g)

    for r in range(1, r_max + 1):
        for removed in combinations(range(g.n), r):
            rest_mask = g.vertices & ~vset(removed)
            if not rest_mask:
                continue
            h, old = g.induced(rest_mask)
            lifted = [vset(old[v] for v in iter_bits(d)) for d in all_min_isolating_sets(h)]
            if any(is_isolating(g, d) for d in lifted):
                # the bound iota(G - U) <= (n - r)/3 needs G - U connected, of order >= 3, not C5
                bounded = h.n >= 3 and is_connected(h) and not _is_c5(h)
                tags["antecedent_held" if bounded else "antecedent_held_unbounded_rest"] += 1
                if 3 * i_g >= g.n:
                    if bounded:
                        problems.append(f"removing {list(removed)} satisfies the antecedent yet iota = n/3")
                    else:
                        literal.append(f"removing {list(removed)} leaves a graph outside the n/3 bound")
            else:
                tags["antecedent_failed"] += 1

    # edge re-insertion: an isolating set of G - e that reaches an end of e still isolates G
    for u, v in g.edges():
        h = g.without_edge(u, v)
        for d in all_min_isolating_sets(h):
            reach = closed_neighborhood(h, d)
            if reach >> u & 1 or reach >> v & 1:
                tags["edge_reinsertion_checked"] += 1
                if not is_isolating(g, d):
                    problems.append(f"edge {u}-{v}: isolating set {members(d)} of G-e fails in G")

    if problems:
        return Outcome(FAIL, "; ".join(problems[:3]), dict(tags))
    if literal:
        tags["literal_counterexample"] += 1
        return Outcome(EXCEPTION, "; ".join(literal[:3]), dict(tags))
    return Outcome(PASS if tags["antecedent_held"] else VACUOUS, tags=dict(tags))


def check_remove_lemma_consistency(graphs: Iterable[Graph], universe: str = "supplied stream", jobs: int = 1) -> VerificationReport:
    return _assemble("lem-remove", universe, graphs, "remove_lemma", jobs)


# corona graphs and domination

def _corona(g: Graph) -> Outcome:
    if g.n < 1 or not is_connected(g):
        return Outcome(FLAGGED, "needs a connected graph")
    h = corona(g)
    gamma = domination_number(h).value
    if 2 * gamma != h.n:
        return Outcome(FAIL, f"gamma(G o K1) = {gamma}, order {h.n}")
    return Outcome(PASS)


def check_corona_domination(graphs: Iterable[Graph], universe: str = "supplied stream", jobs: int = 1) -> VerificationReport:
    report = _assemble("rem-corona", universe, graphs, "corona", jobs)
    c4 = domination_number(cycle_graph(4)).value
    report.checked += 1
    report.notes["gamma_C4"] = c4
    if c4 == 2:
        report.substantive += 1
    else:
        report.violations.append((write_graph6(cycle_graph(4)), f"gamma(C4) = {c4}"))
    return report


# gadget family

def _family_member(g: Graph) -> Outcome:
    if not _extremal(g):
        return Outcome(FAIL, f"attachment output with iota != n/3 (n={g.n})")
    if recognize_G(g) is None:
        return Outcome(FAIL, "attachment output not recognized")
    return Outcome(PASS)


def attachment_sample(count: int = 500, seed: int = 0, max_order: int = 24) -> list[Graph]:
    """Seeded random attachment outputs of order at most ``max_order``."""
    rng = random.Random(seed)
    bases = {k: list(connected_graphs(k)) for k in range(1, 8)}
    out = []
    while len(out) < count:
        k = rng.randint(1, min(7, max_order // 3))
        base = rng.choice(bases[k])
        kinds = [rng.choice(KINDS) for _ in range(k)]
        order = sum(6 if kind.startswith("H6") else 3 for kind in kinds)
        while order > max_order:
            i = rng.randrange(k)
            if kinds[i].startswith("H6"):
                kinds[i] = rng.choice((P3, C3))
                order -= 3
        out.append(attach(base, kinds)[0])
    return out


def small_base_attachments(max_base: int = 3) -> list[Graph]:
    """Every gadget assignment on every connected base of order at most ``max_base``."""
    from itertools import product

    out = []
    for k in range(1, max_base + 1):
        for base in connected_graphs(k):
            for kinds in product(KINDS, repeat=k):
                out.append(attach(base, list(kinds))[0])
    return out


def check_family_extremal(graphs: Iterable[Graph], universe: str = "supplied stream", jobs: int = 1) -> VerificationReport:
    return _assemble("prop-family", universe, graphs, "family", jobs)


def check_gadget_derivation() -> VerificationReport:
    from .canon import rooted_form

    report = VerificationReport("gadgets", "rooted 6-vertex graphs: root plus induced C5")
    derived = derive_h6_gadgets()
    report.checked = 2
    derived_keys = sorted(rooted_form(gd.graph, gd.root) for gd in derived)
    catalog_keys = sorted(rooted_form(gd.graph, gd.root) for gd in gadget_catalog() if gd.order == 6)
    if len(derived) == 4:
        report.substantive += 1
    else:
        report.violations.append(("", f"derived {len(derived)} qualifying gadgets, expected 4"))
    if derived_keys == catalog_keys:
        report.substantive += 1
    else:
        report.violations.append(("", "derived gadgets differ from the frozen catalog"))
    report.notes["root_neighbors"] = [members(gd.graph.adj[gd.root]) for gd in derived]
    return report


CHECKS: dict[str, Callable[[Graph], Outcome]] = {
    "caro": _caro,
    "tree": _tree_char,
    "unicyclic": _unicyclic_char,
    "block": _block_char,
    "tree_guarded": _guarded(lambda g: g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g), _tree_char, "tree"),
    "unicyclic_guarded": _guarded(is_unicyclic, _unicyclic_char, "unicyclic graph"),
    "block_guarded": _guarded(is_block_graph, _block_char, "block graph"),
    "isolating_leaf": _isolating_leaf,
    "t1t2": _t1t2,
    "block_props": _block_props,
    "remove_lemma": _remove_lemma,
    "corona": _corona,
    "family": _family_member,
}


CLAIM_IDS = (
    "thm-caro",
    "thm-tree",
    "thm-unicyclic",
    "thm-block",
    "prop-family",
    "gadgets",
    "census-order6",
    "lem-isolating-leaf",
    "lem-T1T2",
    "prop-block",
    "lem-remove",
    "rem-corona",
)


@dataclass
class Bounds:
    """Default orders for ``verify all``."""

    connected: int = 8
    tree: int = 12
    unicyclic: int = 12
    block: int = 9
    leaf_lemma_trees: int = 10
    remove_lemma: int = 6
    corona_base: int = 5


def run_claim(claim_id: str, bounds: Bounds | None = None, jobs: int = 1, seed: int = 0) -> VerificationReport:
    b = bounds or Bounds()
    if claim_id == "thm-caro":
        graphs = [g for n in range(3, b.connected + 1) for g in connected_graphs(n)]
        return check_caro_bound(graphs, f"all connected graphs 3<=n<={b.connected}", jobs)
    if claim_id == "thm-tree":
        return check_tree_characterization(b.tree, jobs)
    if claim_id == "thm-unicyclic":
        return check_unicyclic_characterization(b.unicyclic, jobs)
    if claim_id == "thm-block":
        return check_block_characterization(b.block, jobs)
    if claim_id == "prop-family":
        graphs = small_base_attachments(3) + attachment_sample(500, seed)
        return check_family_extremal(graphs, f"all assignments on bases of order <=3 plus 500 seeded samples (seed {seed})", jobs)
    if claim_id == "gadgets":
        return check_gadget_derivation()
    if claim_id == "census-order6":
        return check_order6_censuses()
    if claim_id == "lem-isolating-leaf":
        graphs = [g for n in range(1, b.leaf_lemma_trees + 1) for g in trees(n)]
        return check_lemma_isolating_leaf(graphs, f"all trees n<={b.leaf_lemma_trees}", jobs)
    if claim_id == "lem-T1T2":
        orders = [n for n in (6, 9, 12) if n <= b.unicyclic]
        graphs = [g for n in orders for g in unicyclic_graphs(n)]
        return check_lemma_T1T2(graphs, f"all unicyclic graphs n in {orders}", jobs)
    if claim_id == "prop-block":
        graphs = [g for n in range(1, b.block + 1) for g in block_graphs(n)]
        return check_block_propositions(graphs, f"all block graphs n<={b.block}", jobs)
    if claim_id == "lem-remove":
        graphs = [g for n in range(3, b.remove_lemma + 1, 3) for g in connected_graphs(n)]
        return check_remove_lemma_consistency(graphs, f"all connected graphs n in 3..{b.remove_lemma} divisible by 3", jobs)
    if claim_id == "rem-corona":
        graphs = [g for n in range(2, b.corona_base + 1) for g in connected_graphs(n)]
        return check_corona_domination(graphs, f"coronas of all connected graphs 2<=n<={b.corona_base}", jobs)
    raise KeyError(claim_id)


def run_claim_on_stream(claim_id: str, graphs: Iterable[Graph], universe: str, jobs: int = 1) -> VerificationReport:
    """Run a stream-shaped claim over caller-supplied graphs."""
    runners = {
        "thm-caro": check_caro_bound,
        "lem-isolating-leaf": check_lemma_isolating_leaf,
        "lem-T1T2": check_lemma_T1T2,
        "prop-block": check_block_propositions,
        "lem-remove": check_remove_lemma_consistency,
        "rem-corona": check_corona_domination,
        "prop-family": check_family_extremal,
    }
    if claim_id in runners:
        return runners[claim_id](graphs, universe, jobs)
    kinds = {"thm-tree": "tree", "thm-unicyclic": "unicyclic", "thm-block": "block"}
    if claim_id in kinds:
        return check_characterization_stream(kinds[claim_id], graphs, universe, jobs)
    raise ValueError(f"claim {claim_id} does not take a graph stream")


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=False)


__all__ = [
    "Bounds",
    "CLAIM_IDS",
    "LemmaT1T2Witness",
    "Outcome",
    "VerificationReport",
    "attachment_sample",
    "check_block_characterization",
    "check_block_propositions",
    "check_caro_bound",
    "check_corona_domination",
    "check_family_extremal",
    "check_gadget_derivation",
    "check_lemma_T1T2",
    "check_lemma_isolating_leaf",
    "check_order6_censuses",
    "check_remove_lemma_consistency",
    "check_tree_characterization",
    "check_unicyclic_characterization",
    "order6_censuses",
    "qualifying_leaf_pairs",
    "run_claim",
    "run_claim_on_stream",
    "small_base_attachments",
    "t1t2_witness",
    "two_p3_unicyclic_family",
]
