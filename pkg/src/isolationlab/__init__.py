"""Isolation numbers of small graphs and the extremal families that attain n/3."""
from __future__ import annotations

from .canon import canonical_form, is_isomorphic, rooted_form
from .families import Decomposition, attach, gadget_catalog, recognize_B, recognize_G, recognize_T, recognize_U
from .generate import block_graphs, connected_graphs, trees, unicyclic_graphs
from .graph import Graph, Graph6Error, UnsupportedSize, parse_graph6, write_graph6
from .solver import all_min_isolating_sets, domination_number, iota, isolation_number
from .verify import CLAIM_IDS, Bounds, VerificationReport, run_claim

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "CLAIM_IDS",
    "Decomposition",
    "Graph",
    "Graph6Error",
    "UnsupportedSize",
    "VerificationReport",
    "all_min_isolating_sets",
    "attach",
    "block_graphs",
    "canonical_form",
    "connected_graphs",
    "domination_number",
    "gadget_catalog",
    "iota",
    "is_isomorphic",
    "isolation_number",
    "parse_graph6",
    "recognize_B",
    "recognize_G",
    "recognize_T",
    "recognize_U",
    "rooted_form",
    "run_claim",
    "trees",
    "unicyclic_graphs",
    "write_graph6",
]
