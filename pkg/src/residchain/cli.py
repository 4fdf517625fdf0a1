"""Command-line front end.

Exit status: 0 when every check passes, 1 when violations are found, 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import bunch as bn
from .dsl import BunchDocument, DslError, parse_bunch_dsl, print_bunch_dsl
from .flechain import Chain, ChainError, FiniteChainTable, TableChain, classify_parity, run_law_suite
from .ogroup import DEFAULT_RADIUS, DEFAULT_SAMPLES
from .oracle import OracleError, SearchConfig, cross_check, enumerate_finite_chains, summary_lines
from .report import Report

DEFAULT_EMIT_RADIUS = 2


class UsageError(Exception):
    pass


def emit_table(c: Chain, window: int | None = None) -> str:
    """The carrier (or its window slice) in ascending order with layer, tau
    and complement, followed by the product table in table-file format.

    Products that leave the slice are printed as bracketed elements instead
    of positions.
    """
    elems = c.elements()
    if elems is None:
        if window is None:
            raise ValueError("an infinite chain needs a window")
        elems = c.window(window)
    if not elems:
        raise ValueError("empty window")
    elems = c.sorted(elems)
    pos = {x: i for i, x in enumerate(elems)}
    fmt = c.format_element

    def ref(x):
        return str(pos[x]) if x in pos else f"[{fmt(x)}]"

    lines = ["# pos element layer tau complement"]
    for i, x in enumerate(elems):
        tau = c.tau(x)
        layer = x.layer if isinstance(x, bn.ChainElement) else fmt(tau)
        lines.append(f"# {i} {fmt(x)} {layer} {ref(tau)} {ref(c.complement(x))}")
    lines.append(f"{len(elems)} {ref(c.t)} {ref(c.f)}")
    for x in elems:
        lines.append(" ".join(ref(c.mul(x, y)) for y in elems))
    return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _load_bunch(path: str) -> tuple[BunchDocument, bn.BunchOfLayerGroups]:
    doc = parse_bunch_dsl(_read(path))
    return doc, doc.to_bunch()


def _emit(report: Report, out) -> bool:
    print(report.format(), file=out)
    return report.ok


def cmd_check(args, out) -> int:
    _, g = _load_bunch(args.file)
    kw = dict(radius=args.window or DEFAULT_RADIUS, samples=args.samples, seed=args.seed)
    ok = _emit(bn.validate_bunch_groups(g, **kw), out)
    if ok:
        a = bn.groups_to_algebras(g, args.samples, args.seed)
        ok = _emit(bn.validate_bunch_algebras(a, **kw), out) and ok
        ok = _emit(run_law_suite(bn.derive_chain(a), **kw), out) and ok
    return 0 if ok else 1


def cmd_derive(args, out) -> int:
    _, g = _load_bunch(args.file)
    v = bn.validate_bunch_groups(g, args.window or DEFAULT_RADIUS, args.samples, args.seed)
    if not v.ok:
        _emit(v, out)
        return 1
    c = bn.derive_chain(bn.groups_to_algebras(g, args.samples, args.seed))
    print(f"# chain {c!r}", file=out)
    print(f"# parity {classify_parity(c).value}", file=out)
    if args.emit_table:
        print(emit_table(c, args.window if args.window is not None else DEFAULT_EMIT_RADIUS), end="", file=out)
    return 0


def trivial_document(a: bn.BunchOfLayerAlgebras) -> BunchDocument:
    """Bunch description of a finite chain's decomposition (one-element groups)."""
    labels = ["t"] + [f"p{u}" for u in a.index.labels[1:]]
    name = dict(zip(a.index.labels, labels))
    doc = BunchDocument(xi=a.index.xi, kappa=labels)
    for u in a.index.labels:
        doc.groups[name[u]] = 0
    for u, cls in a.index.classes.items():
        doc.classes[name[u]] = cls
    for u in a.index.theta:
        doc.subgroups[name[u]] = ("trivial", None)
    for u, v in a.index.pairs():
        doc.homs[name[u], name[v]] = ("trivial", None)
    return doc


def cmd_decompose(args, out) -> int:
    try:
        table = FiniteChainTable.from_text(_read(args.file))
    except ChainError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    c = TableChain(table)
    try:
        a = bn.decompose_chain(c, samples=args.samples, seed=args.seed)
    except ChainError as exc:
        print(f"cannot decompose: {exc}", file=out)
        print(f"FAIL decompose 1", file=out)
        return 1
    idx = a.index
    print(f"# xi {idx.xi.value}", file=out)
    for u in idx.labels:
        layer = a.layers[u]
        cls = "" if u == idx.t else f" class {idx.classes[u]}"
        print(f"# layer {u} ({idx.role(u)}{cls}): elements {layer.elements()}, falsum {layer.f}", file=out)
    if args.emit_dsl:
        print(print_bunch_dsl(trivial_document(a)), end="", file=out)
    r = bn.validate_bunch_algebras(a, samples=args.samples, seed=args.seed)
    r.merge(bn.roundtrip_chain(c, samples=args.samples, seed=args.seed), "roundtrip")
    return 0 if _emit(r, out) else 1


def cmd_enumerate(args, out) -> int:
    try:
        cfg = SearchConfig(args.n, args.parity)
    except OracleError as exc:
        raise UsageError(str(exc)) from None
    tables = enumerate_finite_chains(cfg)
    for line in summary_lines(cfg, tables):
        print(line, file=out)
    if args.tables:
        for tb in tables:
            print(tb.to_text(), end="", file=out)
    if args.cross_check:
        return 0 if _emit(cross_check(cfg, tables), out) else 1
    return 0


def cmd_roundtrip(args, out) -> int:
    _, g = _load_bunch(args.file)
    kw = dict(radius=args.window or DEFAULT_RADIUS, samples=args.samples, seed=args.seed)
    r = bn.verify_main_theorem(g, **kw)
    if r.ok:
        a = bn.groups_to_algebras(g, args.samples, args.seed)
        r.merge(bn.roundtrip_groups(g, **kw), "groups")
        r.merge(bn.roundtrip_layer_algebras(a, **kw), "algebras")
        r.merge(bn.roundtrip_algebras(a, **kw), "bunch")
        r.merge(bn.roundtrip_chain(bn.derive_chain(a), **kw), "chain")
    return 0 if _emit(r, out) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    common.add_argument("--window", type=int, default=None,
                        help=f"coordinate radius (sampling default {DEFAULT_RADIUS}, table default {DEFAULT_EMIT_RADIUS})")
    ap = argparse.ArgumentParser(prog="residchain", description="build and check involutive FL_e-chains")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="validate a bunch and its derived chain")
    p.add_argument("file")
    p.set_defaults(run=cmd_check)
    p = sub.add_parser("derive", parents=[common], help="derive the chain of a bunch")
    p.add_argument("file")
    p.add_argument("--emit-table", action="store_true")
    p.set_defaults(run=cmd_derive)
    p = sub.add_parser("decompose", parents=[common], help="decompose a finite chain table")
    p.add_argument("file")
    p.add_argument("--emit-dsl", action="store_true")
    p.set_defaults(run=cmd_decompose)
    p = sub.add_parser("enumerate", parents=[common], help="enumerate finite chains")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parity", choices=["odd", "even-idempotent-f", "even-nonidempotent-f", "any"], default="any")
    p.add_argument("--tables", action="store_true")
    p.add_argument("--cross-check", action="store_true")
    p.set_defaults(run=cmd_enumerate)
    p = sub.add_parser("roundtrip", parents=[common], help="verify every round trip for a bunch")
    p.add_argument("file")
    p.set_defaults(run=cmd_roundtrip)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    if getattr(args, "parity", None) == "any":
        args.parity = None
    if args.samples < 1 or (args.window is not None and args.window < 1):
        print("error: --samples and --window must be positive", file=sys.stderr)
        return 2
    try:
        return args.run(args, out)
    except (DslError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
