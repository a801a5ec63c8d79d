"""Command line entry point: ``cameronlab <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Sequence

from .algebra import check_psi_identities, psi
from .core import ALL_CATEGORIES, Category, Morphism, factorize
from .mutation import build_mutation_graph, export_dot
from .report import SUITES, SuiteConfig
from .reps import ext_dim_fa, ext_dim_standard, hom_dim_standard


def _category(value: str) -> Category:
    try:
        return Category.parse(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown category {value!r}; choose from FA, OA, CA, BA, SA") from None


def _categories(value: str) -> tuple[Category, ...]:
    if value.lower() == "all":
        return ALL_CATEGORIES
    return tuple(_category(v) for v in value.split(","))


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cameronlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--category", type=_categories, default=ALL_CATEGORIES,
                   help="FA, OA, CA, BA, SA, a comma-separated list, or all (default)")
    p.add_argument("--max-n", type=_positive, default=6)
    p.add_argument("--fa-max-n", type=_positive, default=5)
    p.add_argument("--max-t", type=_positive, default=None)
    p.add_argument("--fa-ext-cutoff", type=_positive, default=None)
    p.add_argument("--suite", action="append", choices=SUITES,
                   help="repeatable; default runs every suite")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--dot", help="directory for DOT files of the Gamma_{n-1,n} graphs")
    p.add_argument("--threads", type=_positive, default=None)

    p = sub.add_parser("hom", help="dim Hom(Delta_m, Delta_n)")
    p.add_argument("--category", type=_category, required=True)
    p.add_argument("--from", dest="m", type=_positive, required=True)
    p.add_argument("--to", dest="n", type=_positive, required=True)

    p = sub.add_parser("ext", help="dim Ext^1(Delta_m, Delta_n) for CA, SA (m >= 3) or FA (m = n + 1)")
    p.add_argument("--category", type=_category, required=True)
    p.add_argument("--from", dest="m", type=_positive, required=True)
    p.add_argument("--to", dest="n", type=_positive, required=True)
    p.add_argument("--cutoff", type=_positive, default=None, help="degree cutoff for FA")

    p = sub.add_parser("psi", help="the normalisation idempotent Psi_n")
    p.add_argument("--category", type=_category, required=True)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--check", action="store_true", help="check idempotency and the kill identities")

    p = sub.add_parser("factorize", help="surjection-injection factorisation of a morphism")
    p.add_argument("--category", type=_category, default=None)
    p.add_argument("--map", required=True, help='e.g. "3->3:[2,2,3]" or "FA 3->3 [2,2,3]"')

    p = sub.add_parser("mutation-graph", help="build Gamma_{m,n}")
    p.add_argument("--category", type=_category, required=True)
    p.add_argument("-m", type=_positive, required=True)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--dot", help="write DOT here ('-' for stdout)")

    p = sub.add_parser("table", help="CSV table of dim Hom(Delta_m, Delta_n)")
    p.add_argument("--category", type=_category, required=True)
    p.add_argument("--max-n", type=_positive, default=5)
    return parser


def _emit(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args: argparse.Namespace) -> int:
    from .suite import run_suite

    cfg = SuiteConfig(
        categories=args.category,
        suites=tuple(args.suite) if args.suite else SUITES,
        n_max=args.max_n,
        fa_n_max=args.fa_max_n,
        t_max=args.max_t,
        fa_ext_cutoff=args.fa_ext_cutoff,
        output_format=args.format,
        dot_path=args.dot,
        threads=args.threads,
    )
    report = run_suite(cfg)
    if args.format == "json":
        text = report.to_json() + "\n"
    elif args.format == "csv":
        text = report.to_csv()
    else:
        text = report.to_text() + "\n"
    _emit(text, args.output)
    if args.dot:
        import os

        os.makedirs(args.dot, exist_ok=True)
        for cat in cfg.categories:
            for n in range(2, cfg.max_n(cat) + 1):
                g = build_mutation_graph(cat, n - 1, n)
                with open(os.path.join(args.dot, f"{cat.value}_{n - 1}_{n}.dot"), "w", encoding="utf-8") as fh:
                    fh.write(export_dot(g))
    s = report.summary()
    print(f"{s['passed']} passed, {s['failed']} failed, {s['inconclusive']} inconclusive", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_hom(args: argparse.Namespace) -> int:
    print(hom_dim_standard(args.category, args.m, args.n))
    return 0


def cmd_ext(args: argparse.Namespace) -> int:
    if args.category is Category.FA:
        if args.m != args.n + 1:
            raise ValueError("FA Ext is computed for Ext^1(Delta_n, Delta_{n-1}) only")
        res = ext_dim_fa(args.m, args.cutoff)
        print(res.dim if res.stabilized else f"{res.dim} (inconclusive: not stable at cutoff {res.cutoff})")
        return 0
    if args.category not in (Category.CA, Category.SA):
        raise ValueError("Ext is computed for CA, SA and FA")
    print(ext_dim_standard(args.category, args.m, args.n))
    return 0


def cmd_psi(args: argparse.Namespace) -> int:
    print(psi(args.category, args.n))
    if args.check:
        if args.n < 2:
            print("Psi_1 is the identity; nothing to check")
            return 0
        rep = check_psi_identities(args.category, args.n)
        print(rep.to_text())
        return 0 if rep.ok else 1
    return 0


def cmd_factorize(args: argparse.Namespace) -> int:
    f = Morphism.parse(args.map, args.category)
    fac = factorize(f)
    print(f"surjective: {fac.surjective_part}")
    print(f"injective:  {fac.injective_part}")
    return 0


def cmd_mutation_graph(args: argparse.Namespace) -> int:
    g = build_mutation_graph(args.category, args.m, args.n)
    if args.dot:
        _emit(export_dot(g), args.dot)
        if args.dot != "-":
            print(f"wrote {len(g.vertices)} vertices, {len(g.edges)} edges to {args.dot}")
    else:
        print(f"{args.category} Gamma_({args.m},{args.n}): {len(g.vertices)} vertices, "
              f"{len(g.edges)} edges, {g.component_count} components")
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["m\\n"] + list(range(1, args.max_n + 1)))
    for m in range(1, args.max_n + 1):
        w.writerow([m] + [hom_dim_standard(args.category, m, n) for n in range(1, args.max_n + 1)])
    sys.stdout.write(buf.getvalue())
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "hom": cmd_hom,
    "ext": cmd_ext,
    "psi": cmd_psi,
    "factorize": cmd_factorize,
    "mutation-graph": cmd_mutation_graph,
    "table": cmd_table,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        parser.error(str(exc))  # exits with status 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
