"""Command-line front end.

Exit codes: ``check`` returns 0 when the arrangement is supersolvable and 1
when it is not.  Every command returns 2 on bad input, 3 when a lattice
would exceed ``--max-flats``, and 4 if the two supersolvability tests ever
disagree.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .analysis import (
    describe_roots,
    explicit_modular_chain,
    exponents_from_order,
    is_modular_maximal_chain,
    scan,
)
from .arrangement import build_affine, cone
from .instance import InstanceError, dump_instance, load_instance, parse_rational
from .lattice import (
    DEFAULT_MAX_FLATS,
    LatticeTooLarge,
    characteristic_polynomial,
    intersection_poset,
    modular_maximal_chain,
    to_dot,
)
from .polynomial import format_factored, integer_root_factorization
from .psi_graph import (
    Chordal,
    PsiGraph,
    chordality,
    elimination_stall,
    nonfree_edge_witness,
    psi_elimination_order,
)

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_TOO_LARGE, EXIT_MISMATCH = 0, 1, 2, 3, 4


def _labels(s) -> str:
    return "{" + ", ".join(str(a) for a in sorted(s)) + "}"


def _names(g: PsiGraph, vs) -> str:
    return " ".join(g.names[v] for v in vs)


def _load(args) -> PsiGraph:
    g = load_instance(args.file)
    if getattr(args, "emit_normalized", None):
        Path(args.emit_normalized).write_text(dump_instance(g), encoding="utf-8")
    return g


def cmd_check(args, out) -> int:
    g = _load(args)
    print(f"instance: {g.n} vertices, {len(g.edges)} edges, "
          f"{sum(len(s) for s in g.psi)} labels", file=out)
    ch = chordality(g)
    if isinstance(ch, Chordal):
        print(f"chordal: yes (elimination order {_names(g, ch.order)})", file=out)
    else:
        print(f"chordal: no (chordless cycle {_names(g, ch.cycle)})", file=out)

    cert = psi_elimination_order(g)
    if cert is not None:
        print(f"certificate: {_names(g, cert.order)}", file=out)
        for step in cert.steps:
            line = f"  {g.names[step.vertex]}: labels {_labels(g.psi[step.vertex])}"
            if step.earlier_neighbors:
                earlier = _names(g, sorted(step.earlier_neighbors))
                line += f"; earlier neighbours {earlier} form a clique and contain these labels"
            print(line, file=out)
    else:
        stuck = sorted(elimination_stall(g))
        print(f"certificate: none; elimination stalls with {_names(g, stuck)} remaining", file=out)
    witness = nonfree_edge_witness(g)
    if witness is not None:
        u, v = witness
        print(f"incomparable edge {g.names[u]}-{g.names[v]}: "
              f"{_labels(g.psi[u])} vs {_labels(g.psi[v])} (not free)", file=out)
    print(f"supersolvable: {'yes' if cert else 'no'}", file=out)
    if cert is not None:
        rep = exponents_from_order(g, cert)
        print(f"exponents: {' '.join(map(str, rep.multiset))} "
              f"(characteristic polynomial {'matches' if rep.polynomial_match else 'DOES NOT match'})",
              file=out)

    if args.oracle:
        L = intersection_poset(cone(build_affine(g)), args.max_flats)
        chain = modular_maximal_chain(L)
        print(f"oracle: {len(L)} flats in the cone lattice; modular maximal chain "
              f"{'found' if chain else 'absent'}", file=out)
        if cert is not None:
            pi, _ = explicit_modular_chain(L, cert.order)
            ok = pi is not None and is_modular_maximal_chain(L, pi)
            print(f"oracle: chain from the certificate order is "
                  f"{'a modular maximal chain' if ok else 'NOT a modular maximal chain'}", file=out)
        if (chain is None) != (cert is None):
            print("oracle: DISAGREES with the certificate search", file=out)
            return EXIT_MISMATCH
        print("oracle: agrees", file=out)
    return EXIT_YES if cert else EXIT_NO


def cmd_charpoly(args, out) -> int:
    g = _load(args)
    a = build_affine(g)
    if args.cone:
        a = cone(a)
    chi = characteristic_polynomial(a, args.max_flats)
    roots = integer_root_factorization(chi)
    text = str(chi)
    if roots is not None and format_factored(roots) != text:
        text += f" = {format_factored(roots)}"
    print(text, file=out)
    print("coefficients: " + " ".join(str(c) for c in reversed(chi.coefficients)), file=out)
    if roots is None:
        print(f"factorization: {describe_roots(roots)}", file=out)
    return 0


def cmd_lattice(args, out) -> int:
    g = _load(args)
    L = intersection_poset(cone(build_affine(g)), args.max_flats)
    dot = to_dot(L)
    if args.dot:
        Path(args.dot).write_text(dot, encoding="utf-8")
        print(f"{len(L)} flats, {len(L.covers)} cover relations, rank {L.rank[L.top]}; "
              f"wrote {args.dot}", file=out)
    else:
        out.write(dot)
    return 0


def _pool(text: str) -> list[Fraction]:
    try:
        values = [parse_rational(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if len(set(values)) != len(values):
        raise argparse.ArgumentTypeError("duplicate values in pool")
    return values


def cmd_scan(args, out) -> int:
    if args.max_n < 1 or args.max_psi < 0 or args.workers < 1:
        print("error: need --max-n >= 1, --max-psi >= 0, --workers >= 1", file=sys.stderr)
        return EXIT_INPUT
    report = scan(args.max_n, args.pool, args.max_psi, workers=args.workers,
                  max_flats=args.max_flats)
    if args.out:
        dest = Path(args.out)
        dest.mkdir(parents=True, exist_ok=True)
        (dest / "scan.json").write_text(report.to_json(), encoding="utf-8")
        (dest / "scan.txt").write_text(report.table(), encoding="utf-8")
        print(f"wrote {dest / 'scan.json'} and {dest / 'scan.txt'}", file=out)
        for tag, k in report.counts.items():
            print(f"{tag}: {k}", file=out)
    else:
        out.write(report.table())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psiarr",
        description="Supersolvability and freeness checks for arrangements of labelled graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-flats", type=int, default=DEFAULT_MAX_FLATS,
                        help="refuse lattices with more flats than this")

    inst = argparse.ArgumentParser(add_help=False, parents=[common])
    inst.add_argument("file", help="JSON instance file")
    inst.add_argument("--emit-normalized", metavar="PATH",
                      help="also write the parsed instance in normalized form")

    p = sub.add_parser("check", parents=[inst], help="decide supersolvability")
    p.add_argument("--oracle", action="store_true",
                   help="also search the cone lattice for a modular maximal chain")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("charpoly", parents=[inst], help="characteristic polynomial")
    p.add_argument("--cone", action="store_true", help="use the coned arrangement")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("lattice", parents=[inst], help="Hasse diagram of the cone lattice")
    p.add_argument("--dot", metavar="OUT", help="write DOT here instead of stdout")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("scan", parents=[common], help="classify all small instances")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--pool", type=_pool, required=True, help="comma-separated label values")
    p.add_argument("--max-psi", type=int, required=True)
    p.add_argument("--out", metavar="DIR", help="write scan.json and scan.txt here")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        return args.func(args, out)
    except InstanceError as exc:
        for line in exc.problems:
            print(f"error: {line}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LatticeTooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())
