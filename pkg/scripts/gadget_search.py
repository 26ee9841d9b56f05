"""Search rooted 6-vertex gadgets (root plus induced C5) that keep every attachment extremal.

Prints each root neighborhood on the 5-cycle, whether it survives the small-base
test, and how the survivors compare with the frozen catalog.
"""
from __future__ import annotations

import argparse
from itertools import combinations

from isolationlab.canon import rooted_form
from isolationlab.families import H6_ROOT_NEIGHBORS, _h6, derive_h6_gadgets, gadget


def main() -> None:
    argparse.ArgumentParser(description=__doc__.splitlines()[0]).parse_args()
    catalog = {rooted_form(gadget(k).graph, 0): k for k in H6_ROOT_NEIGHBORS}
    survivors = {rooted_form(gd.graph, gd.root) for gd in derive_h6_gadgets()}
    seen = set()
    for size in range(1, 6):
        for nbrs in combinations(range(1, 6), size):
            key = rooted_form(_h6(nbrs), 0)
            if key in seen:
                continue
            seen.add(key)
            verdict = "kept" if key in survivors else "rejected"
            print(f"root ~ {list(nbrs)!s:<16} {verdict:<9} {catalog.get(key, '')}")
    print(f"{len(seen)} rooted classes tried, {len(survivors)} kept")


if __name__ == "__main__":
    main()
