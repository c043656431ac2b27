"""Command-line interface.

Exit codes: 0 success, 1 a verification did not match, 2 usage or input
error, 3 internal or capacity error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import families as fam
from . import indexmath as im
from . import verify as vf
from .graph import CapacityError, GraphError, chromatic_number, edge_connectivity, independence_number, is_connected, pendant_count
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .report import envelope, write_json
from .sweep import FIGURE_NS, FIGURE_RANGES, clamp_range, sweep, write_csv
from .svg import ChartSpec, render_svg

log = logging.getLogger("abcindex")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

THEOREMS = ("independence", "pendant", "edgeconn", "bipartite", "edge-addition")
FAMILY_CHOICES = ("independence", "pendant", "edgeconn", "turan", "bipartite")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")


def _family_spec(family: str, n: int, param: int | None) -> fam.FamilySpec:
    if family == "bipartite":
        return fam.FamilySpec("turan", n, 2)
    if param is None:
        raise ValueError(f"family {family} needs --param")
    return fam.FamilySpec(family, n, param)


# -- subcommands -----------------------------------------------------------------


def cmd_compute(args) -> int:
    g = parse_graph6(args.graph6)
    print(f"{im.abc_index(g):.12f}")
    return EXIT_OK


def cmd_build(args) -> int:
    spec = _family_spec(args.family, args.n, args.param)
    g = spec.build()
    if args.summary:
        fields = [
            ("family", args.family),
            ("n", g.n),
            ("edges", g.num_edges),
            ("degrees", " ".join(map(str, g.degrees()))),
            ("connected", is_connected(g)),
            ("independence", independence_number(g)),
            ("pendant", pendant_count(g)),
            ("edge_conn", edge_connectivity(g)),
            ("chromatic", chromatic_number(g)),
            ("abc", f"{im.abc_index(g):.12f}"),
            ("formula", f"{spec.formula():.12f}"),
            ("graph6", write_graph6(g)),
        ]
        for name, value in fields:
            print(f"{name:<13}{value}")
    else:
        print(write_graph6(g))
    return EXIT_OK


def cmd_formula(args) -> int:
    spec = _family_spec(args.family, args.n, args.param)
    print(f"{spec.formula():.12f}")
    return EXIT_OK


def _emit_reports(args, command: str, inputs: dict, results: list) -> None:
    if args.json:
        write_json(args.json, envelope(command, inputs, results))


def cmd_verify(args) -> int:
    n, shards, large = args.n, args.shards, args.allow_large
    if args.theorem == "edge-addition":
        bad = vf.edge_addition_violations(n)
        print(f"edge addition on connected graphs, n={n}: {'strictly increasing' if not bad else f'{len(bad)} violations'}")
        if args.json:
            res = im.GridCheckResult("ABC(G) < ABC(G+xy) for connected G", {"n": n}, bad)
            _emit_reports(args, "verify", vars_for_json(args), [res])
        return EXIT_OK if not bad else EXIT_MISMATCH
    if args.theorem == "bipartite":
        reports = [vf.verify_chromatic_bipartite(n, shards, large)]
    else:
        fn = {"independence": vf.verify_independence, "pendant": vf.verify_pendant,
              "edgeconn": vf.verify_edgeconn}[args.theorem]
        reports = fn(n, shards, large)
    for r in reports:
        tag = "INFO" if r.informational else ("PASS" if r.unique_and_matches else "FAIL")
        formula = "-" if r.formula_value is None else f"{r.formula_value:.12f}"
        best = "-" if r.max_value is None else f"{r.max_value:.12f}"
        print(f"{tag} n={r.n} {r.constraint} class={r.class_size} max={best} formula={formula} "
              f"iso_classes={len(r.maximizer_iso_classes)}")
    _emit_reports(args, "verify", vars_for_json(args), reports)
    return EXIT_OK if vf.all_verified(reports) else EXIT_MISMATCH


def cmd_conjecture(args) -> int:
    if args.which == "chromatic":
        chis = [args.chi] if args.chi else list(range(3, args.n + 1))
        results = [vf.check_chromatic_conjecture(args.n, c, args.shards, args.allow_large) for c in chis]
        for r in results:
            best = "-" if r.brute_max is None else f"{r.brute_max:.12f}"
            print(f"{'holds' if r.holds else 'FAILS'} n={r.n} chi={r.chi} brute_max={best} turan={r.turan_value:.12f}")
        failures = [r for r in results if not r.holds]
        if failures and args.witness:
            with open(args.witness, "w", encoding="utf-8") as fh:
                for r in failures:
                    for g in r.witness:
                        fh.write(f"{write_graph6(g)} n={r.n} chi={r.chi}\n")
            print(f"witnesses written to {args.witness}")
    else:
        res = vf.check_bridge_monotonicity(args.n_max)
        print(f"bridge function decreasing for 6 <= n <= {args.n_max}: "
              f"{'yes' if res.passed else f'{len(res.violations)} violations'} ({res.checked} points)")
        for v in res.violations[:20]:
            print(f"  violation n={v[0]} x={v[1]} diff={v[2]:.3e}")
        results = [res]
    _emit_reports(args, "conjecture", vars_for_json(args), results)
    return EXIT_OK


def _sweep_rows(families: list[str], ns: list[int], value_range: tuple[int, int] | None):
    rows = []
    for kind in families:
        lo, hi = value_range or FIGURE_RANGES[kind]
        for n in ns:
            clo, chi = clamp_range(kind, n, lo, hi)
            if (clo, chi) != (lo, hi):
                print(f"note: {kind} range clamped to [{clo}, {chi}] for n={n}", file=sys.stderr)
            rows.extend(sweep([n], kind, (clo, chi)))
    return rows


def cmd_sweep(args) -> int:
    rows = _sweep_rows(args.families, args.n, args.range)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_csv(rows, fh)
    else:
        write_csv(rows, sys.stdout)
    if args.svg:
        Path(args.svg).write_text(render_svg(rows, ChartSpec()), encoding="utf-8")
    if args.figure:
        from .plotting import plot_sweep

        plot_sweep(rows, args.figure)
    return EXIT_OK


FIGURES = {
    "figure1": (["beta"], list(FIGURE_NS), "Maximum ABC index vs independence number"),
    "figure2": (["p"], list(FIGURE_NS), "Maximum ABC index vs pendant vertices"),
    "figure3": (["k"], list(FIGURE_NS), "Maximum ABC index vs edge-connectivity"),
    "figure4": (["beta", "p", "k"], [200], "Maximum ABC index, n = 200"),
}


def cmd_figures(args) -> int:
    from .plotting import plot_sweep

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, (kinds, ns, title) in FIGURES.items():
        rows = _sweep_rows(kinds, ns, None)
        with open(out / f"{name}.csv", "w", encoding="utf-8", newline="") as fh:
            write_csv(rows, fh)
        (out / f"{name}.svg").write_text(render_svg(rows, ChartSpec(title=title)), encoding="utf-8")
        plot_sweep(rows, out / f"{name}.{args.format}", title=title)
        print(f"wrote {name}.csv, {name}.svg, {name}.{args.format}")
    return EXIT_OK


def cmd_claim_grid(args) -> int:
    res = im.claim_grid(args.n_min, args.n_max)
    print(f"claim inequality, {args.n_min} <= n <= {args.n_max}: {res.checked} points, "
          f"{len(res.violations)} violations")
    for n, k, n1, margin in res.violations:
        print(f"  violation n={n} k={k} n1={n1} margin={margin:.6f}")
    results = [res, im.big_h_grid()]
    if res.violations:
        fallback = vf.check_cut_cases(points=[v[:3] for v in res.violations])
        print(f"unsimplified cut comparison at violating points: {'holds' if fallback.passed else 'FAILS'}")
        results.append(fallback)
    hres = results[1]
    print(f"H(n,k) > 0 for 20 <= n <= 23: {'yes' if hres.passed else hres.violations}")
    _emit_reports(args, "claim-grid", vars_for_json(args), results)
    return EXIT_OK if res.passed and hres.passed else EXIT_MISMATCH


def vars_for_json(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("func",) and not callable(v)}


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="abcindex", description="ABC index extremal graphs and brute-force verification")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compute", help="ABC index of a graph6-encoded graph")
    s.add_argument("graph6")
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("build", help="emit an extremal graph")
    s.add_argument("family", choices=FAMILY_CHOICES)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--param", type=int)
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--graph6", action="store_true", help="graph6 output (default)")
    fmt.add_argument("--summary", action="store_true", help="invariant summary")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("formula", help="closed-form maximum")
    s.add_argument("family", choices=FAMILY_CHOICES)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--param", type=int)
    s.set_defaults(func=cmd_formula)

    s = sub.add_parser("verify", help="brute-force check of an extremal result")
    s.add_argument("theorem", choices=THEOREMS)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--allow-large", action="store_true", help="permit n=8 (2^28 masks)")
    s.add_argument("--json", metavar="PATH")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("conjecture", help="explore a conjecture (reports, never fails)")
    csub = s.add_subparsers(dest="which", required=True)
    c = csub.add_parser("chromatic")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--chi", type=int)
    c.add_argument("--shards", type=int, default=1)
    c.add_argument("--allow-large", action="store_true")
    c.add_argument("--witness", metavar="PATH", help="write graph6 witnesses of any failure here")
    c.add_argument("--json", metavar="PATH")
    c.set_defaults(func=cmd_conjecture)
    c = csub.add_parser("bridge")
    c.add_argument("--n-max", type=int, default=200)
    c.add_argument("--json", metavar="PATH")
    c.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("sweep", help="formula sweep as CSV (figure data)")
    s.add_argument("--families", type=lambda t: t.split(","), default=["beta", "p", "k"])
    s.add_argument("--n", type=_int_list, default=list(FIGURE_NS))
    s.add_argument("--range", type=_range, help="LO:HI parameter range (default: figure ranges, clamped)")
    s.add_argument("--csv", metavar="PATH")
    s.add_argument("--svg", metavar="PATH")
    s.add_argument("--figure", metavar="PATH", help="matplotlib figure (png/pdf/svg by suffix)")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("figures", help="write CSV, SVG and matplotlib output for all four figures")
    s.add_argument("--out-dir", default="figures")
    s.add_argument("--format", default="png", choices=("png", "pdf", "svg"))
    s.set_defaults(func=cmd_figures)

    s = sub.add_parser("claim-grid", help="scan the two-clique inequality for edge cuts")
    s.add_argument("--n-min", type=int, default=10)
    s.add_argument("--n-max", type=int, default=300)
    s.add_argument("--json", metavar="PATH")
    s.set_defaults(func=cmd_claim_grid)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "families", None):
        bad = [k for k in args.families if k not in FIGURE_RANGES]
        if bad:
            parser.error(f"unknown families {bad}; choose from beta, p, k")
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (Graph6Error, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        log.exception("internal error")
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
