"""Command-line front end.

    isolationlab iota --input graphs.g6
    isolationlab verify thm-caro --class connected --n 3..8
    isolationlab gen-family --family U --class tree --n 1..3 | isolationlab recognize --input -

Exit status: 0 on success, 1 when a verification fails, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence, TextIO

from .canon import MAX_CANON_N, canonical_form
from .families import (
    C3,
    H6_1,
    KINDS,
    P3,
    attach,
    recognize_B,
    recognize_G,
    recognize_T,
    recognize_U,
)
from .generate import GENERATORS, graphs_from_file, stream
from .graph import (
    Graph,
    is_block_graph,
    is_tree,
    is_unicyclic,
    members,
    parse_graph6,
    read_graph6_lines,
    write_graph6,
)
from .solver import domination_number, isolation_number
from .verify import CLAIM_IDS, Bounds, VerificationReport, run_claim, run_claim_on_stream

DEFAULT_SEED = 20240601
FAMILIES = ("G", "T", "U", "B")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    input_path: Optional[str] = None
    graph_class: Optional[str] = None
    orders: list[int] = field(default_factory=list)
    fmt: str = "table"
    jobs: int = 1
    seed: int = DEFAULT_SEED
    assume_distinct: bool = False

    def __post_init__(self):
        if self.input_path and self.graph_class:
            raise UsageError("give either --input or --class/--n, not both")
        if self.graph_class and not self.orders:
            raise UsageError("--class needs --n")
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")

    @property
    def has_source(self) -> bool:
        return bool(self.input_path or self.graph_class)


def parse_range(text: str) -> list[int]:
    """``"5"`` or ``"3..8"`` as a list of orders."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"empty or invalid order range {text!r}")
    return list(range(a, b + 1))


def _graphs(cfg: RunConfig, stdin: TextIO) -> Iterator[Graph]:
    if cfg.input_path == "-":
        return read_graph6_lines(stdin)
    if cfg.input_path:
        return graphs_from_file(cfg.input_path, cfg.assume_distinct)
    if cfg.graph_class:
        return stream(cfg.graph_class, cfg.orders)
    return read_graph6_lines(stdin)


def _universe(cfg: RunConfig) -> str:
    if cfg.input_path:
        return f"graph6 file {cfg.input_path}"
    if cfg.graph_class:
        return f"{cfg.graph_class} graphs n={cfg.orders[0]}..{cfg.orders[-1]}"
    return "graph6 from stdin"


def _emit_rows(rows: list[dict], cfg: RunConfig, out: TextIO, table_fields: Sequence[str]):
    if cfg.fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    elif cfg.fmt == "graph6":
        for r in rows:
            out.write(r["graph6"] + "\n")
    else:
        for r in rows:
            out.write("\t".join(_cell(r[f]) for f in table_fields) + "\n")


def _cell(value) -> str:
    if isinstance(value, list):
        return "{" + ",".join(map(str, value)) + "}"
    return str(value)


def cmd_iota(cfg: RunConfig, out: TextIO, stdin: TextIO) -> int:
    rows = []
    for g in _graphs(cfg, stdin):
        cert = isolation_number(g)
        rows.append({"graph6": write_graph6(g), "n": g.n, "iota": cert.value, "witness": members(cert.witness)})
    _emit_rows(rows, cfg, out, ("iota", "witness", "graph6"))
    return 0


def cmd_gamma(cfg: RunConfig, out: TextIO, stdin: TextIO) -> int:
    rows = []
    for g in _graphs(cfg, stdin):
        cert = domination_number(g)
        rows.append({"graph6": write_graph6(g), "n": g.n, "gamma": cert.value, "witness": members(cert.witness)})
    _emit_rows(rows, cfg, out, ("gamma", "witness", "graph6"))
    return 0


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def recognition_record(g: Graph) -> dict:
    cert = isolation_number(g)
    extremal = 3 * cert.value == g.n
    dec = recognize_G(g)
    tree, uni, block = is_tree(g), is_unicyclic(g), is_block_graph(g)
    exceptional = False
    if uni and g.n in (6, 9) and all(row.bit_count() == 2 for row in g.adj):
        exceptional = True
    return {
        "graph6": write_graph6(g),
        "n": g.n,
        "iota": cert.value,
        "extremal": extremal,
        "exceptional": exceptional and extremal,
        "tree": tree,
        "unicyclic": uni,
        "block": block,
        "in_G": dec is not None,
        "in_T": recognize_T(g) is not None,
        "in_U": recognize_U(g) is not None,
        "in_B": recognize_B(g) is not None,
        "decomposition": dec.to_json() if dec is not None else None,
    }


def _recognition_line(r: dict) -> str:
    parts = []
    if r["tree"]:
        parts.append(f"tree: yes; in 𝒯: {_yes(r['in_T'])}")
    if r["unicyclic"]:
        parts.append(f"unicyclic: yes; in 𝒰: {_yes(r['in_U'])}")
    if r["block"]:
        parts.append(f"block graph: yes; in ℬ: {_yes(r['in_B'])}")
    parts.append(f"in 𝒢: {_yes(r['in_G'])}")
    ext = _yes(r["extremal"]) + (" (exceptional)" if r["exceptional"] else "")
    parts.append(f"extremal: {ext}")
    line = f"{r['graph6']}\t" + "; ".join(parts)
    if r["decomposition"] is not None:
        line += "\t" + json.dumps(r["decomposition"], separators=(",", ":"))
    return line


def cmd_recognize(cfg: RunConfig, out: TextIO, stdin: TextIO) -> int:
    rows = [recognition_record(g) for g in _graphs(cfg, stdin)]
    if cfg.fmt == "table":
        for r in rows:
            out.write(_recognition_line(r) + "\n")
    else:
        _emit_rows(rows, cfg, out, ())
    return 0


def family_kind_choices(family: str, base: Graph) -> Iterable[list[str]]:
    """Gadget assignments on ``base`` whose result lies in ``family``."""
    n = base.n
    if family == "G":
        yield from (list(c) for c in product(KINDS, repeat=n))
    elif family == "T":
        if is_tree(base):
            yield [P3] * n
    elif family == "U":
        if is_unicyclic(base):
            yield [P3] * n
        elif is_tree(base):
            for special in (C3, H6_1):
                for v in range(n):
                    kinds = [P3] * n
                    kinds[v] = special
                    yield kinds
    elif family == "B":
        if is_block_graph(base):
            yield from (list(c) for c in product((P3, C3), repeat=n))
    else:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def cmd_gen_family(cfg: RunConfig, args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    if args.base:
        bases: Iterable[Graph] = [parse_graph6(args.base)]
    else:
        bases = _graphs(cfg, stdin)
    explicit = args.kinds.split(",") if args.kinds else None
    if explicit:
        bad = [k for k in explicit if k not in KINDS]
        if bad:
            raise UsageError(f"unknown gadget kind(s) {bad}; choose from {', '.join(KINDS)}")
    seen: set = set()
    rows = []
    for base in bases:
        choices = [explicit] if explicit else family_kind_choices(args.family, base)
        for kinds in choices:
            g, dec = attach(base, kinds)
            key = canonical_form(g) if g.n <= MAX_CANON_N else write_graph6(g)
            if key in seen:
                continue
            seen.add(key)
            rows.append({"graph6": write_graph6(g), "kinds": kinds, "decomposition": dec.to_json()})
    if cfg.fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        for r in rows:
            out.write(r["graph6"] + "\n")
    return 0


def cmd_enumerate(cfg: RunConfig, out: TextIO, stdin: TextIO) -> int:
    if not cfg.has_source:
        raise UsageError("enumerate needs --class and --n (or --input)")
    for g in _graphs(cfg, stdin):
        out.write(write_graph6(g) + "\n")
    return 0


def _bounds(args: argparse.Namespace) -> Bounds:
    b = Bounds()
    for name in ("connected", "tree", "unicyclic", "block"):
        value = getattr(args, f"max_{name}")
        if value is not None:
            setattr(b, name, value)
    return b


def cmd_verify(cfg: RunConfig, args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    claim = args.claim
    if claim != "all" and claim not in CLAIM_IDS:
        raise UsageError(f"unknown claim {claim!r}; valid ids: all, {', '.join(CLAIM_IDS)}")
    reports: list[VerificationReport] = []
    if claim == "all":
        if cfg.has_source:
            raise UsageError("verify all runs its own universes; drop --input/--class")
        for cid in CLAIM_IDS:
            reports.append(run_claim(cid, _bounds(args), cfg.jobs, cfg.seed))
    elif cfg.has_source:
        try:
            reports.append(run_claim_on_stream(claim, list(_graphs(cfg, stdin)), _universe(cfg), cfg.jobs))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        reports.append(run_claim(claim, _bounds(args), cfg.jobs, cfg.seed))

    if cfg.fmt == "json":
        out.write(json.dumps([r.to_json() for r in reports], indent=2) + "\n")
    else:
        for r in reports:
            out.write(r.table_row() + "\n")
            for g6, detail in r.violations[:20]:
                out.write(f"    violation {g6}: {detail}\n")
            for g6, detail in r.exceptions[:20]:
                out.write(f"    exception {g6}: {detail}\n")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--input", "--from-file", dest="input", metavar="PATH", help="graph6 file, one graph per line ('-' for stdin)")
    src.add_argument("--class", dest="graph_class", choices=sorted(GENERATORS), help="generated graph class")
    src.add_argument("--n", type=parse_range, metavar="A..B", help="orders for --class")
    src.add_argument("--assume-distinct", action="store_true", help="skip isomorphism dedup of --input")
    common.add_argument("--format", choices=("json", "table", "graph6"), default="table")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = argparse.ArgumentParser(prog="isolationlab", description="Isolation number tools for small graphs.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("iota", parents=[common], help="isolation number and witness per graph")
    sub.add_parser("gamma", parents=[common], help="domination number and witness per graph")
    sub.add_parser("recognize", parents=[common], help="family membership and decomposition")
    gen = sub.add_parser("gen-family", parents=[common], help="emit members of G, T, U or B over given bases")
    gen.add_argument("--family", choices=FAMILIES, default="G")
    gen.add_argument("--base", metavar="GRAPH6", help="single base graph")
    gen.add_argument("--kinds", help="comma-separated gadget kinds, one per base vertex")
    sub.add_parser("enumerate", parents=[common], help="emit a generated class as graph6")
    ver = sub.add_parser("verify", parents=[common], help="run verification checks")
    ver.add_argument("claim", help="claim id or 'all'")
    for name in ("connected", "tree", "unicyclic", "block"):
        ver.add_argument(f"--max-{name}", type=int, default=None, help=f"largest {name} order for 'verify all'")
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO | None = None, err: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(
            subcommand=args.subcommand,
            input_path=args.input,
            graph_class=args.graph_class,
            orders=args.n or [],
            fmt=args.format,
            jobs=args.jobs,
            seed=args.seed,
            assume_distinct=args.assume_distinct,
        )
        if args.subcommand == "iota":
            return cmd_iota(cfg, out, stdin)
        if args.subcommand == "gamma":
            return cmd_gamma(cfg, out, stdin)
        if args.subcommand == "recognize":
            return cmd_recognize(cfg, out, stdin)
        if args.subcommand == "gen-family":
            return cmd_gen_family(cfg, args, out, stdin)
        if args.subcommand == "enumerate":
            return cmd_enumerate(cfg, out, stdin)
        return cmd_verify(cfg, args, out, stdin)
    except UsageError as exc:
        err.write(f"isolationlab: {exc}\n")
        return 2
    except (ValueError, OSError) as exc:
        err.write(f"isolationlab: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
