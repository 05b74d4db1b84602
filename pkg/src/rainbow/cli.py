"""``rainbow`` command-line front end.

Exit codes: 0 success or verified, 1 a finding (violation or certified
absence), 2 usage or input error, 3 indeterminate (budget exhausted).
Machine-readable output goes to stdout; everything else goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .audit import audit_path
from .campaign import default_template, dumps_report, run_campaign
from .colordeg import color_degree_table
from .detectors import (
    Indeterminate,
    find_rainbow_c4,
    find_rainbow_triangle,
    rainbow_c4_through,
    rainbow_triangle_through,
    search_longest_rainbow_path,
    search_rainbow_cycle,
)
from .errors import NoEdges, RainbowError
from .generators import FAMILIES, GenSpec, generate
from .graph import parse_ecg, serialize_ecg
from .mining import mine_counterexamples
from .theorems import TheoremId, get_theorem, min_delta

EXIT_OK, EXIT_FINDING, EXIT_USAGE, EXIT_INDETERMINATE = 0, 1, 2, 3
DEFAULT_CAMPAIGN_BUDGET = 10**7


class _UsageError(Exception):
    pass


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_ecg(text)


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("RAINBOW_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError as exc:
        raise _UsageError(f"RAINBOW_SEED must be an integer, got {env!r}") from exc


def _theorem_params(args) -> dict:
    return {name: getattr(args, name) for name in ("k", "t", "d") if getattr(args, name) is not None}


# ------------------------------------------------------------- subcommands

def cmd_check(args) -> int:
    G = _load(args.graph)
    table = color_degree_table(G)
    print(f"n {G.n}")
    print(f"m {G.m}")
    print(f"delta {table.min_color_degree}")
    for v, d in enumerate(table.degrees):
        print(f"{v} {d}")
    return EXIT_OK


def _print_witness(w) -> None:
    print(" ".join(map(str, w.vertices)))
    _err("colors: " + " ".join(map(str, w.colors)))


def cmd_find(args) -> int:
    G = _load(args.graph)
    what = args.what
    if args.through is not None and what not in ("triangle", "c4"):
        raise _UsageError("--through applies to triangle and c4 only")
    if what == "cycle" and args.k is None:
        raise _UsageError("find --what cycle needs --k")
    if args.through is not None:
        G._check(args.through)
    if what == "triangle":
        w = find_rainbow_triangle(G) if args.through is None else rainbow_triangle_through(G, args.through)
    elif what == "c4":
        w = find_rainbow_c4(G) if args.through is None else rainbow_c4_through(G, args.through)
    elif what == "path":
        try:
            w, nodes = search_longest_rainbow_path(G, args.budget)
        except NoEdges:
            w = None
    else:
        w, nodes = search_rainbow_cycle(G, args.k, args.budget)
    if isinstance(w, Indeterminate):
        print("indeterminate")
        if w.best is not None:
            _err("best so far: " + " ".join(map(str, w.best.vertices)))
        _err(f"budget exhausted after {w.nodes} nodes")
        return EXIT_INDETERMINATE
    if w is None:
        print("certified absent")
        return EXIT_FINDING
    _print_witness(w)
    return EXIT_OK


def cmd_audit(args) -> int:
    G = _load(args.graph)
    try:
        path = [int(tok) for tok in args.path.split(",") if tok.strip()]
    except ValueError as exc:
        raise _UsageError(f"--path must be comma-separated integers: {args.path!r}") from exc
    report = audit_path(G, path, args.k, args.budget)
    sys.stdout.write(dumps_report(report.as_dict()))
    for flag in report.flags:
        _err(f"note: {flag}")
    if report.failures():
        return EXIT_FINDING
    if report.cycle_free is None or report.path_is_longest is None:
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GenSpec(
        args.family, n=args.n, p=args.p, palette=args.palette,
        target_delta=args.target_delta, seed=_seed(args),
    )
    _emit(serialize_ecg(generate(spec)), args.output)
    return EXIT_OK


def default_order(theorem, params) -> int:
    """Instance order used by ``verify`` when ``--n`` is not given."""
    th = get_theorem(theorem)
    n = max(12, th.min_order)
    if th.id is TheoremId.MAIN_COMPLETE:
        n = max(n, 8 * params["k"] - 18)
    if "t" in th.required:
        n = max(n, params["t"] + 1)
    if "d" in th.required:
        n = max(n, params["d"] + 1)
    return n


def _campaign_exit(hyp_violations: int, indeterminate: int) -> int:
    if hyp_violations:
        return EXIT_FINDING
    if indeterminate:
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_verify(args) -> int:
    params = _theorem_params(args)
    th = get_theorem(args.theorem)
    for name in th.required:
        if name not in params:
            raise _UsageError(f"{th.id.value} needs --{name}")
    n = args.n if args.n is not None else default_order(th.id, params)
    seed = _seed(args)
    if args.family is None:
        gen = default_template(th.id, n, params, seed)
    else:
        t = args.target_delta
        if t is None:
            t = max(1, min(n - 1, min_delta(th.id, n, params)))
        gen = GenSpec(args.family, n=n, p=args.p, palette=args.palette, target_delta=t, seed=seed)
    report = run_campaign(th.id, params, gen, args.trials, args.budget, jobs=args.jobs, timing=args.timing)
    _emit(report.to_json(), args.output)
    _err(
        f"{th.id.value}: {report.hypothesis_met}/{report.trials} met the hypothesis; "
        f"{report.verified} verified, {report.indeterminate} indeterminate, "
        f"{len(report.violations)} violations"
    )
    return _campaign_exit(len(report.violations), report.indeterminate)


def cmd_mine(args) -> int:
    params = _theorem_params(args)
    th = get_theorem(args.theorem)
    for name in th.required:
        if name not in params:
            raise _UsageError(f"{th.id.value} needs --{name}")
    report = mine_counterexamples(
        th.id, params, (args.n_min, args.n_max), args.palette, args.mode, args.budget,
        samples=args.samples, seed=_seed(args), jobs=args.jobs,
        tightness=not args.no_tightness, timing=args.timing,
    )
    _emit(report.to_json(), args.output)
    _err(
        f"{th.id.value}: examined {report.examined}, {report.hypothesis_met} met the hypothesis, "
        f"{len(report.violations)} violations"
    )
    return _campaign_exit(len(report.violations), report.indeterminate)


# ------------------------------------------------------------------ parser

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _theorem_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--seed", type=int, help="base seed (default: $RAINBOW_SEED or 0)")
    p.add_argument("--budget", type=_positive, default=DEFAULT_CAMPAIGN_BUDGET,
                   help="node budget per search (default 10^7)")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("-o", "--output")
    p.add_argument("--timing", action="store_true", help="record wall time in the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbow", description="Rainbow substructures in edge-colored graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="color degrees")
    p.add_argument("graph", help=".ecg file or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("find", help="search for a rainbow structure")
    p.add_argument("graph")
    p.add_argument("--what", required=True, choices=["triangle", "c4", "path", "cycle"])
    p.add_argument("--through", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--budget", type=_positive)
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("audit", help="audit a longest rainbow path")
    p.add_argument("graph")
    p.add_argument("--path", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=_positive)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--palette", type=_positive, default=1)
    p.add_argument("--target-delta", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="seeded campaign for one theorem")
    _theorem_flags(p)
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--n", type=int)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--palette", type=_positive, default=1)
    p.add_argument("--target-delta", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mine", help="counterexample and tightness mining")
    _theorem_flags(p)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--palette", type=_positive, default=3)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--samples", type=_positive, default=1000)
    p.add_argument("--no-tightness", action="store_true")
    p.set_defaults(func=cmd_mine)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (_UsageError, RainbowError) as exc:
        _err(f"rainbow {args.command}: {exc}")
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
