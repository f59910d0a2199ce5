"""Command-line interface.

Commands: nset, classes, verify, socle-scan, construct.  Exit codes:
0 success (verify: all requested reports pass), 1 verification failure,
2 usage or parse error, 3 resource-bound refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .config import RunConfig, load_config
from .constructions import (
    a6_extensions,
    alternating,
    direct_product,
    pgammal_2_9,
    symmetric,
)
from .errors import (
    CosetIndexBoundError,
    EnumerationBoundError,
    GroupError,
    GroupExprError,
)
from .group import PermutationGroup, trivial_group
from .groupexpr import format_expr, parse, evaluate
from .instance_checks import (
    commuting_pair_report,
    coprime_action_report,
    index_lemma_report,
    normal_divisibility_report,
    wreath_involution_report,
)
from .permutation import element_order, format_cycles
from .replay import (
    ReplayContext,
    replay_5e,
    replay_O2,
    replay_O3,
    replay_O5,
    replay_final,
    replay_socle,
    socle_scan,
)
from .report import LemmaReport

VERIFY_IDS = (
    "big1",
    "big2",
    "gor",
    "wreath",
    "index",
    "5e",
    "O5",
    "O3",
    "O2",
    "socle",
    "final",
)

_LABELED_NAMES = ("M10", "PGL(2,9)")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to a key = value config file")
    common.add_argument("--format", choices=("text", "json"), dest="format")
    common.add_argument("--bound", type=int, help="element enumeration bound")
    common.add_argument("--workers", type=int, help="parallel verification workers")
    common.add_argument("--seed", type=int, help="seed for randomized property checks")
    common.add_argument("--out-dir", dest="out_dir", help="report output directory")

    parser = argparse.ArgumentParser(
        prog="permclass",
        description="permutation groups, class-size sets, and class-size "
        "argument replays",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "nset", help="print the set of conjugacy class sizes", parents=[common]
    )
    p.add_argument("groupspec")

    p = sub.add_parser(
        "classes", help="print the table of conjugacy classes", parents=[common]
    )
    p.add_argument("groupspec")

    p = sub.add_parser(
        "verify", help="run a verification report (or all)", parents=[common]
    )
    p.add_argument("lemma", help="one of %s or 'all'" % ", ".join(VERIFY_IDS))

    p = sub.add_parser("socle-scan", help="scan candidate socles", parents=[common])
    p.add_argument("--kmax", type=int, default=3, help="maximum number of factors")

    p = sub.add_parser(
        "construct", help="print the generators of a group", parents=[common]
    )
    p.add_argument("groupspec")

    return parser


def _group_from_spec(text: str) -> tuple[str, PermutationGroup]:
    expr = parse(text)
    return format_expr(expr), evaluate(expr)


def _labeling_note(spec_text: str) -> str | None:
    if any(name in spec_text for name in _LABELED_NAMES):
        return a6_extensions().rule
    return None


def cmd_nset(args, cfg: RunConfig) -> int:
    name, group = _group_from_spec(args.groupspec)
    sizes = group.class_sizes(bound=cfg.bound)
    if cfg.format == "json":
        obj = {"group": name, "order": group.order.value, **sizes.to_json_obj()}
        note = _labeling_note(name)
        if note:
            obj["labeling_rule"] = note
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(f"N({name}) over order {group.order.value} = {group.order}")
        for member in sizes:
            print(f"  {member.value} = {member}")
        note = _labeling_note(name)
        if note:
            print(f"# {note}")
    return 0


def cmd_classes(args, cfg: RunConfig) -> int:
    name, group = _group_from_spec(args.groupspec)
    partition = group.class_partition(bound=cfg.bound)
    rows = [
        {
            "representative": format_cycles(c.representative),
            "size": c.size.value,
            "element_order": element_order(c.representative).value,
        }
        for c in partition
    ]
    if cfg.format == "json":
        obj = {
            "group": name,
            "order": group.order.value,
            "classes": rows,
        }
        note = _labeling_note(name)
        if note:
            obj["labeling_rule"] = note
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(f"classes of {name} (order {group.order.value})")
        width = max(
            len("representative"), max(len(r["representative"]) for r in rows)
        )
        print(f"  {'representative'.ljust(width)}  {'size':>8}  order")
        for r in rows:
            print(
                f"  {r['representative'].ljust(width)}  {r['size']:>8}  "
                f"{r['element_order']}"
            )
        note = _labeling_note(name)
        if note:
            print(f"# {note}")
    return 0


def _verify_one(lemma: str, ctx: ReplayContext, cfg: RunConfig) -> LemmaReport:
    if lemma == "big1":
        a6 = alternating(6)
        semilinear = pgammal_2_9()
        return normal_divisibility_report(
            [
                ("A6 normal in S6", symmetric(6), a6),
                (
                    "A6 x 1 normal in A6 x A6",
                    ctx.a6xa6,
                    direct_product(a6, trivial_group(6)),
                ),
                (
                    "the socle normal in PGammaL(2,9)",
                    semilinear.group,
                    semilinear.socle,
                ),
            ]
        )
    if lemma == "big2":
        return commuting_pair_report(
            ctx.a6xa6,
            "A6 x A6",
            pair_count=10_000,
            seed=cfg.seed,
            exact_subsample=10,
            exhaustive_group=symmetric(6),
        )
    if lemma == "gor":
        return coprime_action_report()
    if lemma == "wreath":
        return wreath_involution_report()
    if lemma == "index":
        return index_lemma_report(
            [("A6", alternating(6)), ("S6", symmetric(6)), ("A6 x A6", ctx.a6xa6)]
        )
    replays = {
        "5e": replay_5e,
        "O5": replay_O5,
        "O3": replay_O3,
        "O2": replay_O2,
        "socle": replay_socle,
        "final": replay_final,
    }
    return replays[lemma](ctx)


def run_verifications(
    ids: list[str], cfg: RunConfig, ctx: ReplayContext | None = None
) -> dict[str, LemmaReport]:
    ctx = ctx or ReplayContext()
    ctx.prepare()
    reports: dict[str, LemmaReport] = {}
    if cfg.workers > 1 and len(ids) > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            futures = {lemma: pool.submit(_verify_one, lemma, ctx, cfg) for lemma in ids}
            for lemma in ids:
                reports[lemma] = futures[lemma].result()
    else:
        for lemma in ids:
            reports[lemma] = _verify_one(lemma, ctx, cfg)
    return reports


def cmd_verify(args, cfg: RunConfig) -> int:
    if args.lemma == "all":
        ids = list(VERIFY_IDS)
    elif args.lemma in VERIFY_IDS:
        ids = [args.lemma]
    else:
        print(
            f"unknown verification id {args.lemma!r}; choose from "
            f"{', '.join(VERIFY_IDS)} or 'all'",
            file=sys.stderr,
        )
        return 2
    reports = run_verifications(ids, cfg)
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    all_pass = True
    for lemma in ids:  # output ordering is by id, not completion time
        report = reports[lemma]
        (out_dir / f"{lemma}.json").write_text(report.to_json(), encoding="utf-8")
        (out_dir / f"{lemma}.txt").write_text(report.to_text(), encoding="utf-8")
        if cfg.format == "json":
            print(json.dumps({"lemma": lemma, "verdict": report.verdict}))
        else:
            print(f"{lemma}: {report.verdict}")
        all_pass = all_pass and report.passed
    return 0 if all_pass else 1


def cmd_socle_scan(args, cfg: RunConfig) -> int:
    if not 1 <= args.kmax <= 3:
        print("--kmax must be between 1 and 3", file=sys.stderr)
        return 2
    ctx = ReplayContext()
    candidates = socle_scan(ctx, args.kmax)
    survivors = [" x ".join(c.factors) for c in candidates if c.verdict == "survives"]
    if cfg.format == "json":
        obj = {
            "kmax": args.kmax,
            "candidates": [
                {
                    "factors": list(c.factors),
                    "verdict": c.verdict,
                    "rule": c.rule,
                    "detail": c.detail,
                }
                for c in candidates
            ],
            "survivors": survivors,
        }
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(f"socle scan, up to {args.kmax} simple factors")
        for c in candidates:
            name = " x ".join(c.factors)
            if c.verdict == "survives":
                print(f"  {name}: survives")
            else:
                print(f"  {name}: eliminated ({c.rule}) {c.detail}")
        print(f"survivors: {survivors if survivors else '(none)'}")
    return 0


def cmd_construct(args, cfg: RunConfig) -> int:
    name, group = _group_from_spec(args.groupspec)
    gens = [format_cycles(g) for g in group.generators]
    if cfg.format == "json":
        obj = {
            "group": name,
            "degree": group.degree,
            "order": group.order.value,
            "generators": gens,
        }
        note = _labeling_note(name)
        if note:
            obj["labeling_rule"] = note
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(f"group: {name}")
        print(f"degree: {group.degree}")
        print(f"order: {group.order.value} = {group.order}")
        print("generators:")
        for g in gens:
            print(f"  {g}")
        note = _labeling_note(name)
        if note:
            print(f"# {note}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(
            config_path=args.config,
            format=args.format,
            bound=args.bound,
            workers=args.workers,
            seed=args.seed,
            out_dir=args.out_dir,
        )
    except (ValueError, OSError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    commands = {
        "nset": cmd_nset,
        "classes": cmd_classes,
        "verify": cmd_verify,
        "socle-scan": cmd_socle_scan,
        "construct": cmd_construct,
    }
    try:
        return commands[args.command](args, cfg)
    except (EnumerationBoundError, CosetIndexBoundError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except GroupExprError as exc:
        print(f"group expression error: {exc}", file=sys.stderr)
        return 2
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
