"""Command-line interface.

Exit codes: 0 on success, 2 for configuration or usage errors, 3 for
runtime failures.  Subcommands that take a JSON config accept the schema
described in ``experiments.load_config``; file outputs honor --output-dir,
then the config's ``output_dir``, then $HSPLEARN_OUTPUT_DIR.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

import numpy as np

from .experiments import (
    PRESET_NAMES,
    ConfigError,
    default_nuisance_config,
    NuisanceConfig,
    load_config,
    nuisance_report_json,
    preset_description,
    run_experiment,
    run_nuisance_demo,
    run_preset,
)
from .dao import lambda_window, sweep_lambda
from .groups import Group, subgroup_from_generators
from .pac import conjecture_audit, sample_complexity, vc_report
from .serialize import SCHEMA_VERSION, solver_run_json, subgroup_json
from .solver import recommended_samples, solve_hsp

__all__ = ["main", "entry"]


def _parse_factors(text: str) -> Group:
    try:
        parts = [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError as exc:
        raise ConfigError(f"cannot parse factors {text!r}: {exc}") from exc
    if not parts:
        raise ConfigError("factors list is empty")
    try:
        return Group(parts)
    except ValueError as exc:
        raise ConfigError(f"invalid factors {text!r}: {exc}") from exc


def _parse_generators(text: str, group: Group):
    gens = []
    if text.strip():
        for chunk in text.split(";"):
            try:
                residues = [int(p) for p in chunk.split(",")]
            except ValueError as exc:
                raise ConfigError(f"cannot parse generator {chunk!r}: {exc}") from exc
            if len(residues) != len(group.factors):
                raise ConfigError(
                    f"generator {chunk!r} needs {len(group.factors)} residues"
                )
            gens.append(residues)
    try:
        return subgroup_from_generators(group, gens)
    except ValueError as exc:
        raise ConfigError(f"invalid generators {text!r}: {exc}") from exc


def _emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _cmd_solve_hsp(args) -> int:
    group = _parse_factors(args.factors)
    hidden = _parse_generators(args.hidden, group)
    runs = args.runs
    successes = 0
    last = None
    for i in range(runs):
        rng = np.random.default_rng(np.random.SeedSequence((args.seed, i)))
        last = solve_hsp(
            group,
            hidden,
            rng,
            c=args.c,
            max_steps=args.max_steps,
            method=args.method,
            record_steps=runs == 1,
        )
        successes += bool(last.success)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "group_factors": list(group.factors),
        "hidden": subgroup_json(hidden),
        "c": args.c,
        "runs": runs,
        "successes": successes,
        "success_rate": successes / runs,
        "recommended_samples_half": recommended_samples(group.order, 0.5),
        "last_run": solver_run_json(last),
    }
    _emit(payload)
    return 0


def _cmd_infer(args) -> int:
    config = load_config(args.config)
    result = run_experiment(config, args.output_dir)
    _emit(result.summary)
    return 0


def _cmd_dao_scan(args) -> int:
    config = load_config(args.config)
    result = run_experiment(config, args.output_dir)
    grid = config.lambda_grid
    if grid is None:
        grid = tuple(float(v) for v in np.logspace(-6.0, 0.0, 25))
    sweep = sweep_lambda(result.training, lambdas=grid)
    hidden = config.hidden()
    window = lambda_window(sweep, hidden)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "lambda_grid": list(grid),
        "winners": [
            {
                "lam": point.lam,
                "winner_elements": list(point.result.winner.elements),
                "winner_order": point.result.winner.order,
            }
            for point in sweep
        ],
        "hidden": subgroup_json(hidden),
        "hidden_window": None if window is None else [window[0], window[1]],
    }
    _emit(payload)
    return 0


def _cmd_leakage(args) -> int:
    config = load_config(args.config)
    result = run_experiment(config, args.output_dir)
    _emit(result.summary["leakage"])
    return 0


def _cmd_vc(args) -> int:
    group = _parse_factors(args.factors)
    report = vc_report(group, brute_force=args.brute)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "group_factors": list(group.factors),
        "vc_dimension": report.closed_form,
        "decomposition": [list(pair) for pair in report.decomposition],
        "brute_force": report.brute_force,
        "agree": report.agree,
    }
    if args.audit is not None:
        rows = conjecture_audit(args.audit)
        payload["audit"] = [
            {
                "factors": list(row.factors),
                "closed_form": row.closed_form,
                "brute_force": row.brute_force,
                "agree": row.agree,
                "cyclic_part_sum": row.cyclic_part_sum,
                "additive": row.additive,
            }
            for row in rows
        ]
        payload["audit_all_agree"] = all(row.agree for row in rows)
    _emit(payload)
    return 0


def _cmd_sample_complexity(args) -> int:
    group = _parse_factors(args.factors)
    try:
        result = sample_complexity(group, args.epsilon, args.delta, args.constant)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    _emit(
        {
            "schema_version": SCHEMA_VERSION,
            "group_factors": list(group.factors),
            "epsilon": args.epsilon,
            "delta": args.delta,
            "constant": args.constant,
            "n_binary": result.n_binary,
            "n_labeled": result.n_labeled,
        }
    )
    return 0


def _cmd_demo_nuisance(args) -> int:
    base = default_nuisance_config(seed=args.seed)
    queries = None
    if args.queries:
        try:
            queries = tuple(int(q) for q in args.queries.split(","))
        except ValueError as exc:
            raise ConfigError(f"cannot parse queries {args.queries!r}: {exc}") from exc
    config = NuisanceConfig(
        scores=base.scores,
        prior_factors=base.prior_factors,
        n_flips=args.flips,
        threshold=args.threshold,
        queries=queries,
        seed=args.seed,
    )
    report = run_nuisance_demo(config)
    _emit(nuisance_report_json(report))
    return 0


def _cmd_preset(args) -> int:
    if args.list:
        _emit(
            {
                "presets": [
                    {"name": name, "description": preset_description(name)}
                    for name in PRESET_NAMES
                ]
            }
        )
        return 0
    if not args.name:
        raise ConfigError("preset name required (or use --list)")
    result = run_preset(args.name, args.output_dir)
    if isinstance(result, dict):
        _emit({"preset": args.name, "paths": result.get("paths", {})})
    else:
        _emit(
            {
                "preset": args.name,
                "paths": result.paths,
                "winner_elements": list(result.inference.winner.elements),
            }
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsplearn",
        description="Hidden-subgroup simulation and inference over finite abelian groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve-hsp", help="run the kernel-intersection solver")
    p.add_argument("--factors", required=True, help="comma-separated cyclic factors, e.g. 12 or 2,2,3")
    p.add_argument("--hidden", default="", help="generators 'r1,r2;r1,r2'; empty for trivial")
    p.add_argument("--c", type=int, default=8, help="stabilization threshold")
    p.add_argument("--max-steps", type=int, default=256)
    p.add_argument("--method", choices=["direct", "simulate"], default="direct")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--runs", type=int, default=1)
    p.set_defaults(func=_cmd_solve_hsp)

    p = sub.add_parser("infer", help="run the full pipeline from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--output-dir", default=None)
    p.set_defaults(func=_cmd_infer)

    p = sub.add_parser("dao-scan", help="winner versus penalty weight over a lambda grid")
    p.add_argument("--config", required=True)
    p.add_argument("--output-dir", default=None)
    p.set_defaults(func=_cmd_dao_scan)

    p = sub.add_parser("leakage", help="annihilator mass and false-signal table")
    p.add_argument("--config", required=True)
    p.add_argument("--output-dir", default=None)
    p.set_defaults(func=_cmd_leakage)

    p = sub.add_parser("vc", help="VC dimension, optional brute-force audit")
    p.add_argument("--factors", required=True)
    p.add_argument("--brute", action="store_true", help="also run the exhaustive search")
    p.add_argument("--audit", type=int, default=None, metavar="MAX_ORDER",
                   help="audit the closed form over all groups up to this order")
    p.set_defaults(func=_cmd_vc)

    p = sub.add_parser("sample-complexity", help="PAC sample-size estimate")
    p.add_argument("--factors", required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--constant", type=float, default=1.0)
    p.set_defaults(func=_cmd_sample_complexity)

    p = sub.add_parser("demo-nuisance", help="nuisance-structure discovery demo")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--flips", type=int, default=10_000)
    p.add_argument("--threshold", type=float, default=0.05)
    p.add_argument("--queries", default="", help="comma-separated world states; default all")
    p.set_defaults(func=_cmd_demo_nuisance)

    p = sub.add_parser("preset", help="run a named preset scenario")
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--list", action="store_true")
    p.add_argument("--output-dir", default=None)
    p.set_defaults(func=_cmd_preset)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # runtime failure, distinct from bad input
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())
