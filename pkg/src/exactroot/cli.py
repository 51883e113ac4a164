"""Command-line front end: batch in, certificate out.

Exit codes: 0 = yes / success with witness, 1 = definite no, 2 = error.
Payloads go to stdout, diagnostics to stderr. Input files use graph6 or edge
list; "-" reads stdin and the format is auto-detected from the first byte
(digits start an edge list) unless --format overrides it.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import formats, oracle
from .anyroot import recognize_any_root
from .cliquedual import (
    CliqueCover,
    bipartite_root_to_cover,
    bruteforce_clique_collection,
    cover_to_bipartite_root,
    gadget_Gk,
    triangle_free_root_from_collection,
    verify_triangle_free_collection,
    TriangleFreeCollection,
)
from .formats import CertificateDocument, ParseError
from .generators import gen_GS, gen_TL, random_tree
from .graphs import Graph, VertexMapping, bipartition, exact_square
from .treeroot import recognize_tree_root


class _CliError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc.strerror}") from None


def _detect_format(text: str) -> str:
    stripped = text.lstrip()
    if not stripped:
        raise _CliError("empty input")
    first = stripped[0]
    return "edgelist" if first.isdigit() else "graph6"


def _load_graph(path: str, fmt: str = "auto") -> Graph:
    text = _read_text(path)
    if fmt == "auto":
        fmt = _detect_format(text)
    if fmt == "graph6":
        return formats.parse_graph6(text.strip().splitlines()[0])
    if fmt == "edgelist":
        return formats.parse_edge_list(text)
    raise _CliError(f"unknown input format {fmt!r}")


def _emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return formats.emit_graph6(g) + "\n"
    if fmt == "edgelist":
        return formats.emit_edge_list(g)
    if fmt == "dot":
        return formats.emit_dot(g)
    raise _CliError(f"unknown output format {fmt!r}")


def _budget(default: int) -> int:
    raw = os.environ.get("EXACTROOT_BUDGET", "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise _CliError(f"EXACTROOT_BUDGET must be an integer, got {raw!r}") from None
    return max(default, value)


def _parse_seq(raw: str) -> list[int]:
    try:
        return [int(x) for x in raw.split(",") if x != ""]
    except ValueError:
        raise _CliError(f"expected a comma-separated integer list, got {raw!r}") from None


def _print_certificate(cert: CertificateDocument, dot_graph: Graph | None,
                       dot: bool):
    sys.stdout.write(formats.emit_certificate_json(cert))
    if dot and dot_graph is not None:
        sys.stdout.write(formats.emit_dot(dot_graph, cert.mapping))


def _build_parser() -> argparse.ArgumentParser:
    # the shared options are declared twice: with real defaults on the top
    # parser and with SUPPRESS on a parent of every leaf subcommand, so they
    # may be written before or after the subcommand words
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("auto", "graph6", "edgelist"),
                        default=argparse.SUPPRESS,
                        help="input format (default: auto-detect)")
    common.add_argument("--out-format", choices=("graph6", "edgelist", "dot"),
                        default=argparse.SUPPRESS,
                        help="graph output format")
    common.add_argument("--dot", action="store_true", default=argparse.SUPPRESS,
                        help="additionally emit DOT with certificate highlighting")
    common.add_argument("--no-verify", action="store_true",
                        default=argparse.SUPPRESS,
                        help="skip certificate re-verification before emission")
    parents = [common]

    top = argparse.ArgumentParser(prog="exactroot", description=__doc__)
    top.set_defaults(format="auto", out_format="graph6", dot=False,
                     no_verify=False)
    top.add_argument("--format", choices=("auto", "graph6", "edgelist"),
                     help="input format (default: auto-detect)")
    top.add_argument("--out-format", choices=("graph6", "edgelist", "dot"),
                     help="graph output format")
    top.add_argument("--dot", action="store_true", default=argparse.SUPPRESS)
    top.add_argument("--no-verify", action="store_true",
                     default=argparse.SUPPRESS)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("square", parents=parents,
                       help="emit the exact-distance square")
    p.add_argument("input")

    root = sub.add_parser("root", help="root recognition and verification")
    rsub = root.add_subparsers(dest="root_command", required=True)
    p = rsub.add_parser("any", parents=parents,
                        help="complement-characterization check")
    p.add_argument("input")
    p = rsub.add_parser("tree", parents=parents,
                        help="tree-root recognition with certificate")
    p.add_argument("input")
    p = rsub.add_parser("bipartite", help="bipartite-root certificate tools")
    bsub = p.add_subparsers(dest="verify_command", required=True)
    q = bsub.add_parser("verify", parents=parents,
                        help="verify a bipartite-root certificate")
    q.add_argument("input")
    q.add_argument("certificate")
    p = rsub.add_parser("trianglefree", help="triangle-free-root certificate tools")
    tsub = p.add_subparsers(dest="verify_command", required=True)
    q = tsub.add_parser("verify", parents=parents,
                        help="verify a triangle-free-root certificate")
    q.add_argument("input")
    q.add_argument("certificate")
    p = rsub.add_parser("bruteforce", parents=parents,
                        help="oracle search with budget guard")
    p.add_argument("kind", choices=("any", "tree", "trianglefree"))
    p.add_argument("input")

    gadget = sub.add_parser("gadget", help="reduction gadget and witness conversion")
    gsub = gadget.add_subparsers(dest="gadget_command", required=True)
    p = gsub.add_parser("build", parents=parents, help="emit the gadget graph")
    p.add_argument("input")
    p.add_argument("-k", type=int, required=True)
    p = gsub.add_parser("cover-to-root", parents=parents,
                        help="clique cover -> bipartite root")
    p.add_argument("input")
    p.add_argument("certificate")
    p = gsub.add_parser("root-to-cover", parents=parents,
                        help="bipartite root -> clique cover")
    p.add_argument("gadget_input")
    p.add_argument("root_input")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)

    gen = sub.add_parser("gen", help="instance generators")
    gensub = gen.add_subparsers(dest="gen_command", required=True)
    p = gensub.add_parser("gs", parents=parents,
                          help="two-component witness family")
    p.add_argument("--seq", required=True)
    p = gensub.add_parser("tl", parents=parents,
                          help="tree roots of the witness family")
    p.add_argument("--seq", required=True)
    p.add_argument("--perm", required=True)
    p = gensub.add_parser("tree", parents=parents,
                          help="seeded random labeled tree")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("convert", parents=parents,
                       help="convert between formats")
    p.add_argument("--from", dest="from_format",
                   choices=("auto", "graph6", "edgelist"), default="auto")
    p.add_argument("--to", dest="to_format",
                   choices=("graph6", "edgelist", "dot"), default="graph6")
    p.add_argument("input")

    return top


def _cmd_square(args) -> int:
    g = _load_graph(args.input, args.format)
    sq = exact_square(g)
    sys.stdout.write(_emit_graph(sq, args.out_format))
    if args.dot and args.out_format != "dot":
        sys.stdout.write(formats.emit_dot(sq))
    return 0


def _cmd_root_any(args) -> int:
    g = _load_graph(args.input, args.format)
    root = recognize_any_root(g)
    if root is None:
        print("no exact-distance square root", file=sys.stderr)
        return 1
    if not args.no_verify:
        assert exact_square(root) == g
    sys.stdout.write(_emit_graph(root, args.out_format))
    cert = CertificateDocument(kind="any-root", root=root,
                               verified=not args.no_verify)
    _print_certificate(cert, root, args.dot)
    return 0


def _cmd_root_tree(args) -> int:
    g = _load_graph(args.input, args.format)
    ans = recognize_tree_root(g)
    if not ans.decision:
        print("no tree exact-distance square root", file=sys.stderr)
        return 1
    if not args.no_verify:
        assert exact_square(ans.root) == g
    sys.stdout.write(_emit_graph(ans.root, args.out_format))
    cert = CertificateDocument(kind="tree-root", root=ans.root,
                               mapping=ans.iso_to_input,
                               verified=not args.no_verify)
    _print_certificate(cert, ans.root, args.dot)
    return 0


def _cmd_root_verify(args, kind: str) -> int:
    g = _load_graph(args.input, args.format)
    cert = formats.parse_certificate_json(_read_text(args.certificate))
    if cert.kind != kind:
        raise _CliError(f"certificate kind {cert.kind!r} does not match {kind!r}")
    root = cert.root
    if root.n != g.n:
        print("certificate root has wrong vertex count", file=sys.stderr)
        return 1
    if kind == "bipartite-root":
        if bipartition(root) is None:
            print("certificate root is not bipartite", file=sys.stderr)
            return 1
    else:
        for u, v in root.edges:
            if set(root.neighbors(u)) & set(root.neighbors(v)):
                print("certificate root contains a triangle", file=sys.stderr)
                return 1
        if cert.cliques is not None:
            coll = TriangleFreeCollection(cert.cliques)
            if not verify_triangle_free_collection(g, coll):
                print("certificate collection does not verify", file=sys.stderr)
                return 1
    if exact_square(root) != g:
        print("certificate root's exact square differs from the input",
              file=sys.stderr)
        return 1
    out = CertificateDocument(kind=kind, root=root, cliques=cert.cliques,
                              verified=True)
    _print_certificate(out, root, args.dot)
    return 0


def _cmd_root_bruteforce(args) -> int:
    g = _load_graph(args.input, args.format)
    if args.kind == "any":
        root = oracle.bruteforce_any_root(g, limit=_budget(5))
        if root is None:
            print("no exact-distance square root", file=sys.stderr)
            return 1
        sys.stdout.write(_emit_graph(root, args.out_format))
        _print_certificate(
            CertificateDocument(kind="any-root", root=root, verified=True),
            root, args.dot)
        return 0
    if args.kind == "tree":
        roots = oracle.bruteforce_tree_roots(g, limit=_budget(9))
        if not roots:
            print("no tree exact-distance square root", file=sys.stderr)
            return 1
        root = roots[0]
        sq = exact_square(root)
        iso = oracle.small_graph_isomorphic(sq, g, limit=max(12, g.n))
        sys.stdout.write(_emit_graph(root, args.out_format))
        _print_certificate(
            CertificateDocument(kind="tree-root", root=root,
                                mapping=iso, verified=True),
            root, args.dot)
        return 0
    coll = bruteforce_clique_collection(g, limit_n=_budget(7))
    if coll is None:
        print("no triangle-free exact-distance square root", file=sys.stderr)
        return 1
    root = triangle_free_root_from_collection(g, coll)
    sys.stdout.write(_emit_graph(root, args.out_format))
    _print_certificate(
        CertificateDocument(kind="triangle-free-root", root=root,
                            cliques=tuple(tuple(sorted(c)) for c in coll.cliques),
                            verified=True),
        root, args.dot)
    return 0


def _cmd_gadget(args) -> int:
    if args.gadget_command == "build":
        g = _load_graph(args.input, args.format)
        sys.stdout.write(_emit_graph(gadget_Gk(g, args.k), args.out_format))
        return 0
    if args.gadget_command == "cover-to-root":
        g = _load_graph(args.input, args.format)
        cert = formats.parse_certificate_json(_read_text(args.certificate))
        if cert.kind != "clique-cover":
            raise _CliError("expected a clique-cover certificate")
        b = cover_to_bipartite_root(g, CliqueCover(cert.cliques))
        sys.stdout.write(_emit_graph(b, args.out_format))
        _print_certificate(
            CertificateDocument(kind="bipartite-root", root=b, verified=True),
            b, args.dot)
        return 0
    gk = _load_graph(args.gadget_input, args.format)
    b = _load_graph(args.root_input, args.format)
    cover = bipartite_root_to_cover(gk, b, args.n, args.k)
    _print_certificate(
        CertificateDocument(
            kind="clique-cover",
            cliques=tuple(tuple(sorted(c)) for c in cover.cliques),
            verified=True,
        ),
        None, False)
    return 0


def _cmd_gen(args) -> int:
    if args.gen_command == "gs":
        g = gen_GS(_parse_seq(args.seq))
    elif args.gen_command == "tl":
        g = gen_TL(_parse_seq(args.seq), _parse_seq(args.perm))
    else:
        g = random_tree(args.n, args.seed)
    sys.stdout.write(_emit_graph(g, args.out_format))
    return 0


def _cmd_convert(args) -> int:
    g = _load_graph(args.input, args.from_format)
    sys.stdout.write(_emit_graph(g, args.to_format))
    return 0


def run(argv) -> int:
    """Entry point used by tests; returns the process exit code."""
    argv = list(argv)
    # `gadget <in> -k K` is shorthand for `gadget build <in> -k K`
    if argv and argv[0] == "gadget" and len(argv) > 1 and argv[1] not in (
        "build", "cover-to-root", "root-to-cover", "-h", "--help"
    ):
        argv.insert(1, "build")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return 0 if exc.code in (None, 0) else 2
    try:
        if args.command == "square":
            return _cmd_square(args)
        if args.command == "root":
            if args.root_command == "any":
                return _cmd_root_any(args)
            if args.root_command == "tree":
                return _cmd_root_tree(args)
            if args.root_command == "bipartite":
                return _cmd_root_verify(args, "bipartite-root")
            if args.root_command == "trianglefree":
                return _cmd_root_verify(args, "triangle-free-root")
            return _cmd_root_bruteforce(args)
        if args.command == "gadget":
            return _cmd_gadget(args)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "convert":
            return _cmd_convert(args)
        raise _CliError(f"unknown command {args.command!r}")
    except (_CliError, ParseError, ValueError, oracle.BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
