"""Order-6 censuses: block graphs of max degree 3, extremal graphs outside G, two-P3 unicyclic graphs."""
from __future__ import annotations

import argparse
import json

from isolationlab.families import recognize_B, recognize_G
from isolationlab.generate import block_graphs
from isolationlab.graph import format_edge_list, parse_graph6, write_graph6
from isolationlab.solver import isolation_number
from isolationlab.verify import order6_censuses, two_p3_unicyclic_family


def show(g, tag=""):
    cert = isolation_number(g)
    print(f"  {write_graph6(g):<8} iota={cert.value} in_G={recognize_G(g) is not None} {tag}  {format_edge_list(g)}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", help="print the raw census dictionary")
    args = ap.parse_args()

    c = order6_censuses()
    if args.json:
        print(json.dumps(c, indent=2))
        return

    print(f"block graphs of order 6 with max degree <= 3: {c['block_max_deg3']}")
    for g in block_graphs(6):
        if g.max_degree() <= 3:
            show(g, f"in_B={recognize_B(g) is not None}")
    print(f"connected order-6 graphs with iota 2 outside G: {c['connected_iota2_not_in_G']}")
    for code in c["connected_iota2_not_in_G_graph6"]:
        show(parse_graph6(code))
    print("two disjoint P3 plus two edges, unicyclic:")
    for g in two_p3_unicyclic_family():
        show(g)


if __name__ == "__main__":
    main()
