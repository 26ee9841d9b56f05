"""Acceptance criteria 1-10, each at its stated scale and tolerance.

Run under pytest for a summary section listing every criterion, or directly
with ``python tests/test_acceptance.py`` to print one PASS/FAIL line each.
"""
from __future__ import annotations

import random
import sys
import time

import pytest

from isolationlab.canon import brute_force_isomorphic, canonical_form, rooted_form
from isolationlab.families import brute_force_decomposable, derive_h6_gadgets, gadget_catalog, recognize_G
from isolationlab.generate import block_graphs, connected_graphs
from isolationlab.graph import Graph, complete_graph, cycle_graph, parse_graph6, write_graph6
from isolationlab.solver import iota, naive_isolation_number
from isolationlab.verify import (
    check_block_characterization,
    check_block_propositions,
    check_caro_bound,
    check_corona_domination,
    check_family_extremal,
    check_lemma_isolating_leaf,
    check_lemma_T1T2,
    check_order6_censuses,
    check_tree_characterization,
    check_unicyclic_characterization,
    small_base_attachments,
)
from isolationlab.generate import trees, unicyclic_graphs


def criterion_1():
    got = {
        "C6": iota(cycle_graph(6)),
        "C9": iota(cycle_graph(9)),
        "C5 (naive)": naive_isolation_number(cycle_graph(5)),
    }
    ok = got == {"C6": 2, "C9": 3, "C5 (naive)": 2}
    ok &= iota(cycle_graph(5)) == 2
    km = [iota(complete_graph(m)) for m in range(2, 9)]
    ok &= km == [1] * 7
    return ok, f"{got} iota(K2..K8)={km}"


def criterion_2():
    graphs = [g for n in range(3, 9) for g in connected_graphs(n)]
    rep = check_caro_bound(graphs, "connected 3..8")
    excs = [g for g, _ in rep.exceptions]
    c5 = canonical_form(cycle_graph(5))
    ok = rep.passed and len(excs) == 1 and canonical_form(parse_graph6(excs[0])) == c5 and not rep.flagged
    return ok, f"checked={rep.checked} violations={len(rep.violations)} exceptions={excs}"


def _iff_summary(rep):
    t = rep.tallies
    return (f"checked={rep.checked} extremal={t.get('extremal', 0)} members={t.get('member', 0)} "
            f"if-violations={t.get('if_direction_violations', 0)} "
            f"only-if-violations={t.get('only_if_direction_violations', 0)}")


def criterion_3():
    rep = check_tree_characterization(12)
    return rep.passed, _iff_summary(rep)


def criterion_4():
    rep = check_unicyclic_characterization(12)
    t = rep.tallies
    ok = rep.passed and not rep.flagged
    ok &= t.get("C6_extremal") == 1 and t.get("C9_extremal") == 1
    ok &= t.get("C6_in_G") == 0 and t.get("C9_in_G") == 0
    return ok, _iff_summary(rep) + " (C6, C9 extremal and outside U)"


def criterion_5():
    small = check_block_characterization(9)
    graphs = [g for n in range(10, 13) for g in block_graphs(n)]
    from isolationlab.verify import check_characterization_stream

    large = check_characterization_stream("block", graphs, "block graphs 10..12")
    ok = small.passed and large.passed and not large.flagged
    return ok, f"n<=9: {_iff_summary(small)}; 10<=n<=12: {_iff_summary(large)}"


def criterion_6():
    rep = check_order6_censuses()
    c = rep.notes
    detail = (f"block deg<=3: {c['block_max_deg3']} ({c['block_max_deg3_extremal']} extremal); "
              f"iota=2 outside G: {c['connected_iota2_not_in_G']}; "
              f"two-P3 family iota=2 is {{C6, H6'}}: {c['two_p3_family_iota2_is_C6_H6prime']}")
    return rep.passed, detail


def criterion_7():
    derived = derive_h6_gadgets()
    keys = {rooted_form(gd.graph, gd.root) for gd in derived}
    catalog = {rooted_form(gd.graph, gd.root) for gd in gadget_catalog() if gd.order == 6}
    rep = check_family_extremal(small_base_attachments(3), "all assignments on bases of order <= 3")
    ok = len(derived) == 4 and len(keys) == 4 and keys == catalog and rep.passed
    return ok, f"derived={len(derived)} matches catalog={keys == catalog}; attachments checked={rep.checked} violations={len(rep.violations)}"


def criterion_8():
    leaf = check_lemma_isolating_leaf([g for n in range(1, 11) for g in trees(n)], "trees <= 10")
    t12 = check_lemma_T1T2([g for n in (6, 9, 12) for g in unicyclic_graphs(n)], "unicyclic 6, 9, 12")
    blk = check_block_propositions([g for n in range(1, 10) for g in block_graphs(n)], "block <= 9")
    ok = leaf.passed and leaf.substantive > 0
    ok &= t12.passed and t12.vacuous == 0 and t12.substantive == t12.checked
    ok &= blk.passed and not blk.flagged
    return ok, (f"leaf: {leaf.substantive} substantive/{leaf.checked}, {len(leaf.violations)} violations; "
                f"T1T2: {t12.substantive}/{t12.checked} with witness; "
                f"block props: {blk.substantive} substantive, {len(blk.violations)} violations")


def criterion_9():
    solver_bad = [write_graph6(g) for n in range(1, 8) for g in connected_graphs(n) if iota(g) != naive_isolation_number(g)]

    rng = random.Random(99)
    canon_bad = 0
    iso_pairs = 0
    for _ in range(1000):
        n = rng.randint(1, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph.from_edges(n, [p for p in pairs if rng.random() < 0.5])
        if rng.random() < 0.5:
            perm = list(range(n))
            rng.shuffle(perm)
            h = g.relabel(perm)
        else:
            h = Graph.from_edges(n, rng.sample(pairs, g.edge_count))
        same = brute_force_isomorphic(g, h)
        iso_pairs += same
        canon_bad += (canonical_form(g) == canonical_form(h)) != same

    recog_bad = []
    for n in range(1, 9):
        for g in connected_graphs(n):
            dec = recognize_G(g)
            brute = brute_force_decomposable(g)
            if (dec is None) != (brute is None) or (dec is not None and dec.base_vertices != brute):
                recog_bad.append(write_graph6(g))
    ok = not solver_bad and canon_bad == 0 and not recog_bad
    return ok, (f"solver mismatches={len(solver_bad)}; canonical mismatches={canon_bad}/1000 "
                f"({iso_pairs} isomorphic pairs); recognizer mismatches={len(recog_bad)}")


def criterion_10():
    graphs = [g for n in range(2, 6) for g in connected_graphs(n)]
    rep = check_corona_domination(graphs, "coronas of connected 2..5")
    return rep.passed and rep.notes["gamma_C4"] == 2, f"checked={rep.checked} violations={len(rep.violations)} gamma(C4)={rep.notes['gamma_C4']}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(k: int, ok: bool, detail: str, seconds: float) -> str:
    return f"CRITERION {k}: {'PASS' if ok else 'FAIL'} ({seconds:.1f}s) {detail}"


@pytest.mark.parametrize("k", range(1, 11))
def test_criterion(k, acceptance_log):
    start = time.perf_counter()
    ok, detail = CRITERIA[k - 1]()
    line = _line(k, ok, detail, time.perf_counter() - start)
    acceptance_log.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failures = 0
    for k, fn in enumerate(CRITERIA, 1):
        start = time.perf_counter()
        ok, detail = fn()
        failures += not ok
        print(_line(k, ok, detail, time.perf_counter() - start), flush=True)
    sys.exit(1 if failures else 0)
