"""Command-line interface.

Every command prints one JSON document (or DOT text for ``export-dot``) to
stdout.  Exit codes: 0 success, 1 I/O or schema trouble, 2 validation
failures (the printed document carries the violation list).  Randomized
generation sits behind ``--seed``, with the LINKAGE_SEED environment variable
as fallback.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bramble as bramble_mod
from . import bruteforce, generators, jsonio, matroids
from .linkage import DDPInstance, check_outcome, route
from .menger import menger
from .minmax import (
    build_aux_d,
    build_aux_r,
    build_aux_t,
    solve_dpaths,
    solve_rpaths,
    solve_tpaths,
)
from .report import ScaleError


def _emit(doc: dict) -> None:
    sys.stdout.write(jsonio.dumps_canonical(doc))


def _fail_validation(violations) -> int:
    _emit({"kind": "verify", "agree": False, "violations": sorted(violations)})
    return 2


def _parse_ids(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def _cmd_menger(args) -> int:
    g = jsonio.load_instance(args.graph)
    if not hasattr(g, "successors"):
        raise jsonio.SchemaError("the menger command needs a digraph instance")
    try:
        cert = menger(g, _parse_ids(getattr(args, "from")), _parse_ids(args.to))
    except ValueError as exc:
        return _fail_validation([str(exc)])
    _emit(jsonio.menger_result(cert))
    return 0


def _cmd_solve(args) -> int:
    inst = jsonio.load_instance(args.instance)
    if not isinstance(inst, jsonio.SequenceInstance):
        raise jsonio.SchemaError("the solve command needs a sequence instance")
    try:
        if args.mode == "d":
            if inst.b is None:
                return _fail_validation(["mode d needs a 'b' field in the instance"])
            paths, cut = solve_dpaths(inst.seq, inst.b)
        elif args.mode == "t":
            if inst.bags is None:
                return _fail_validation(["mode t needs a 'bags' field in the instance"])
            paths, cut = solve_tpaths(inst.seq, inst.bags)
        else:
            if inst.bags is None:
                return _fail_validation(["mode r needs a 'bags' field in the instance"])
            paths, cut = solve_rpaths(inst.seq, inst.bags)
    except ValueError as exc:
        return _fail_validation([str(exc)])
    _emit(jsonio.minmax_result(args.mode, paths, cut))
    return 0


def _cmd_route(args) -> int:
    inst = jsonio.load_instance(args.instance)
    if not isinstance(inst, DDPInstance):
        raise jsonio.SchemaError("the route command needs a ddp instance")
    try:
        outcome = route(inst)
    except ValueError as exc:
        return _fail_validation([str(exc)])
    report = check_outcome(inst, outcome)
    if not report:
        return _fail_validation(report.violations)
    _emit(jsonio.routing_result(outcome))
    return 0


def _cmd_check_bramble(args) -> int:
    inst = jsonio.load_instance(args.instance)
    if not isinstance(inst, jsonio.BrambleInstance):
        raise jsonio.SchemaError("the check-bramble command needs a bramble instance")
    report = bramble_mod.validate(inst.graph, inst.bags)
    doc = {
        "kind": "verify",
        "agree": report.ok,
        "violations": sorted(report.violations),
    }
    if report.ok and len(inst.bags):
        doc["congestion"] = bramble_mod.congestion(inst.bags)
    _emit(doc)
    return 0 if report.ok else 2


def _cmd_verify(args) -> int:
    inst = jsonio.load_instance(args.instance)
    if not isinstance(inst, jsonio.SequenceInstance):
        raise jsonio.SchemaError("the verify command needs a sequence instance")
    routes = ["brute", "matroid"] if args.route == "both" else [args.route]
    solvers = {"d": solve_dpaths, "t": solve_tpaths, "r": solve_rpaths}
    matroid_routes = {
        "d": matroids.dpaths_value_via_matroids,
        "t": matroids.tpaths_value_via_matroids,
        "r": matroids.rpaths_value_via_matroids,
    }
    variants: dict[str, dict] = {}
    for variant in ("d", "t", "r"):
        target = inst.b if variant == "d" else inst.bags
        if target is None:
            continue
        paths, cut = solvers[variant](inst.seq, target)
        row: dict = {"solver": paths.size(), "order": cut.order()}
        try:
            if "brute" in routes:
                row["brute"] = bruteforce.brute_max_paths(inst.seq, target, variant)[0]
                row["brute_cut"] = bruteforce.brute_min_cut(inst.seq, target, variant)[0]
            if "matroid" in routes:
                row["matroid"] = matroid_routes[variant](inst.seq, target)
        except ScaleError as exc:
            return _fail_validation([f"{variant}: {exc}"])
        row["agree"] = len(set(row.values())) == 1
        variants[variant] = row
    doc = jsonio.verify_result(routes, variants)
    _emit(doc)
    return 0 if doc["agree"] else 2


def _cmd_gen(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("LINKAGE_SEED", "0"))
    try:
        doc = generators.generate(args.model, args.n, args.p, seed, k=args.k, c=args.c)
    except ValueError as exc:
        return _fail_validation([str(exc)])
    _emit(doc)
    return 0


def _cmd_export_dot(args) -> int:
    inst = jsonio.load_instance(args.instance)
    if isinstance(inst, jsonio.SequenceInstance):
        if args.aux is None:
            raise jsonio.SchemaError("sequence instances need --aux d|t|r")
        if args.aux == "d":
            if inst.b is None:
                return _fail_validation(["aux mode d needs a 'b' field"])
            aux = build_aux_d(inst.seq, inst.b)
        elif args.aux == "t":
            if inst.bags is None:
                return _fail_validation(["aux mode t needs a 'bags' field"])
            aux = build_aux_t(inst.seq, inst.bags)
        else:
            if inst.bags is None:
                return _fail_validation(["aux mode r needs a 'bags' field"])
            aux = build_aux_r(inst.seq, inst.bags)
        sys.stdout.write(jsonio.aux_to_dot(aux))
        return 0
    if isinstance(inst, jsonio.BrambleInstance):
        sys.stdout.write(jsonio.digraph_to_dot(inst.graph))
        return 0
    if isinstance(inst, DDPInstance):
        sys.stdout.write(jsonio.digraph_to_dot(inst.graph))
        return 0
    sys.stdout.write(jsonio.digraph_to_dot(inst))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bramblelink",
        description="Path/cut dualities in digraphs and bramble-based congested routing",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("menger", help="maximum disjoint paths and minimum separator")
    p.add_argument("--graph", required=True)
    p.add_argument("--from", required=True, help="comma-separated vertex ids")
    p.add_argument("--to", required=True, help="comma-separated vertex ids")
    p.set_defaults(func=_cmd_menger)

    p = sub.add_parser("solve", help="run one of the three path/cut dualities")
    p.add_argument("--mode", choices=("d", "t", "r"), required=True)
    p.add_argument("--instance", required=True)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("route", help="solve or separate a terminal-pairs instance")
    p.add_argument("--instance", required=True)
    p.set_defaults(func=_cmd_route)

    p = sub.add_parser("check-bramble", help="validate a bag family against its digraph")
    p.add_argument("--instance", required=True)
    p.set_defaults(func=_cmd_check_bramble)

    p = sub.add_parser("verify", help="cross-check solver values against oracle routes")
    p.add_argument("--instance", required=True)
    p.add_argument("--route", choices=("brute", "matroid", "both"), default="both")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="emit a deterministic instance")
    p.add_argument("--model", choices=generators.MODELS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--c", type=int, default=2)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("export-dot", help="emit DOT text for an instance or aux digraph")
    p.add_argument("--instance", required=True)
    p.add_argument("--aux", choices=("d", "t", "r"), default=None)
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (jsonio.SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
