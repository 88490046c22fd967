"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 an impossible automorphism pattern
(a bug, reported separately so CI can tell the two apart).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .autdetect import is_relator_auto
from .classify import classify_out, candidate_parameters, report_as_dict
from .errors import InputError, TheoryViolation
from .maps import parse_map
from .normalize import Branch, balance_relator, detect_branch, expected_b_sum
from .oracle import (
    OracleConfig,
    enumerate_family_auts,
    random_relators,
    scan_power_crosscheck,
    verify_candidate_ranges,
)
from .presentations import GroupPresentation
from .smallcancel import classify_sc_out, max_piece_length, parse_presentation, satisfies_metric, symmetrize
from .validation import check_exponent
from .words import format_word, parse_word


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(data, ensure_ascii=False, indent=2))
    else:
        print("\n".join(lines))


def _pres_line(label: str, p: Optional[GroupPresentation]) -> list[str]:
    if p is None:
        return []
    return [f"{label}: {p}", f"  ≅ {p.iso_label}"]


def cmd_classify(args) -> int:
    report = classify_out(parse_word(args.relator), check_exponent(args.n))
    data = report_as_dict(report)
    lines = [
        f"relator: {format_word(report.balanced.original)}  n = {report.balanced.n}",
        f"balanced: {data['balanced']['s']}  (basis change {data['balanced']['basis_change']})",
        f"branch: {report.branch.value}",
        f"Out(G): {data['out_class']}",
        "witnesses: " + ", ".join(f"{k}={v}" for k, v in data["witnesses"].items()),
    ]
    if report.scan is not None:
        lines.append("scan: " + ", ".join(f"{k}={v}" for k, v in data["scan"].items()))
    lines += _pres_line("Out presentation", report.out_presentation)
    lines += _pres_line("Aut presentation", report.aut_presentation)
    lines += [f"note: {x}" for x in report.notes]
    if args.trace:
        lines.append("trace:")
        lines += [f"  {json.dumps(t, ensure_ascii=False)}" for t in report.trace]
    _emit(args, data, lines)
    return 0


def cmd_check_map(args) -> int:
    n = check_exponent(args.n)
    bp = balance_relator(parse_word(args.relator), n)
    m = parse_map(args.map)
    verdict = is_relator_auto(bp.s, m)
    data = {"relator": format_word(bp.s), "n": n, "map": str(m), "tag": m.tag, "verdict": verdict.value}
    lines = [f"map {m} on relator {format_word(bp.s)}: {verdict.value}"]
    if bp.basis_change.tag != "delta(0)":
        note = f"the relator was balanced first; the map acts in the basis {bp.basis_change}"
        data["note"] = note
        lines.append(f"note: {note}")
    _emit(args, data, lines)
    return 0


def cmd_balance(args) -> int:
    r = parse_word(args.relator)
    bp = balance_relator(r, check_exponent(args.n))
    g = expected_b_sum(r)
    data = {
        "s": format_word(bp.s),
        "n": bp.n,
        "basis_change": str(bp.basis_change),
        "steps": list(bp.steps),
        "flags": bp.flags.as_dict(),
        "branch": detect_branch(bp).value,
        "gcd": g,
    }
    lines = [
        f"s = {data['s']}",
        f"exponent sums of s: a = {bp.s.exponent_sum('a')}, b = {bp.s.exponent_sum('b')} "
        f"(|b| = gcd of the input sums = {g})",
        f"basis change: {data['basis_change']}",
        f"flags: primitive={bp.flags.primitive}, in_derived={bp.flags.in_derived}",
        f"branch: {data['branch']}",
    ]
    _emit(args, data, lines)
    return 0


def _oracle_one(s, widen: int, window: Optional[int]) -> dict:
    report = classify_out(s, 2)
    if report.branch is not Branch.GENERIC:
        raise InputError(f"the oracle needs a relator in the generic branch, got {report.branch.value}")
    s = report.balanced.s
    bound = window if window is not None else len(s) + 5
    passes = enumerate_family_auts(s, (-bound, bound))
    if report.scan is not None:
        alphas, betas = candidate_parameters(report.scan)
        ranges_ok = verify_candidate_ranges(s, widen)
    else:
        alphas, betas, ranges_ok = [0], [0], None
    agree = passes.to_witnesses(alphas, betas) == report.witnesses
    return {
        "s": format_word(s),
        "window": [-bound, bound],
        "passes": {k: sorted(v) for k, v in passes.passes.items()},
        "classifier": report.witnesses.as_dict(),
        "agrees": agree,
        "candidate_ranges_ok": ranges_ok,
        "scan_crosscheck": scan_power_crosscheck(s),
    }


def cmd_oracle(args) -> int:
    if args.relator:
        data = _oracle_one(parse_word(args.relator), args.widen, args.window)
        lines = [f"s = {data['s']}  window {data['window']}"]
        lines += [f"  {k} passes at k in {v}" for k, v in data["passes"].items()]
        lines += [
            f"classifier witnesses: {data['classifier']}",
            f"oracle agrees with classifier: {data['agrees']}",
            f"candidate ranges sound (widen {args.widen}): {data['candidate_ranges_ok']}",
            f"scan equals literal scan of s^2: {data['scan_crosscheck']}",
        ]
        ok = data["agrees"] and data["candidate_ranges_ok"] is not False and data["scan_crosscheck"]
    else:
        cfg = OracleConfig(max_word_len=args.max_len, sample_count=args.samples, rng_seed=args.seed)
        finite = random_relators(cfg, finite_branch=True)
        infinite = random_relators(OracleConfig(max_word_len=args.max_len, sample_count=args.samples,
                                                rng_seed=args.seed + 1), finite_branch=False)
        results = [_oracle_one(s, args.widen, args.window) for s in finite + infinite]
        bad = [r["s"] for r in results if not (r["agrees"] and r["candidate_ranges_ok"] is not False
                                               and r["scan_crosscheck"])]
        data = {"samples": len(results), "seed": args.seed, "disagreements": bad}
        lines = [f"checked {len(results)} random relators (seed {args.seed}): {len(bad)} disagreements"]
        lines += [f"  {s}" for s in bad]
        ok = not bad
    _emit(args, data, lines)
    return 0 if ok else 2


def cmd_sc_check(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        p = parse_presentation(fh.read())
    ss = symmetrize(p.relators)
    piece = max_piece_length(ss) if len(ss) > 1 else 0
    metric = {
        "max_piece": piece,
        "shortest_relator": min(len(r) for r in p.relators),
        "C'(1/6)": satisfies_metric(ss, "1/6"),
        "C'(1/24)": satisfies_metric(ss, "1/24"),
    }
    report = classify_sc_out(p)
    data = {"metric": metric, "report": report.as_dict()}
    lines = [f"{k}: {v}" for k, v in metric.items()]
    lines += [f"status: {report.status}", report.message]
    lines += [f"  {k}: {v}" for k, v in report.witnesses.items()]
    _emit(args, data, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="onerel", description="Out(G) for G = <a, b ; R^n>")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_n=True, n_default=None):
        p.add_argument("--json", action="store_true", help="emit JSON")
        if needs_n:
            p.add_argument("-n", type=int, default=n_default, required=n_default is None,
                           help="exponent of the relator")

    p = sub.add_parser("classify", help="classify Out(G) and print presentations")
    p.add_argument("-r", "--relator", required=True)
    p.add_argument("--trace", action="store_true", help="print the decision trace")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check-map", help="test whether a map induces an automorphism")
    p.add_argument("-r", "--relator", required=True)
    p.add_argument("-m", "--map", required=True, help="'a -> w; b -> w' or alpha(k), beta(k), ...")
    common(p)
    p.set_defaults(func=cmd_check_map)

    p = sub.add_parser("balance", help="rewrite the relator with zero exponent sum in a")
    p.add_argument("-r", "--relator", required=True)
    common(p, n_default=2)
    p.set_defaults(func=cmd_balance)

    p = sub.add_parser("oracle", help="cross-check the classifier by brute force")
    p.add_argument("-r", "--relator", help="relator to check; omit to sample at random")
    p.add_argument("--widen", type=int, default=10)
    p.add_argument("--window", type=int, default=None, help="half-width of the k scan")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--max-len", type=int, default=24)
    common(p, needs_n=False)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sc-check", help="small-cancellation analysis of a presentation file")
    p.add_argument("file")
    common(p, needs_n=False)
    p.set_defaults(func=cmd_sc_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TheoryViolation as exc:
        print(f"theory violation: {exc}", file=sys.stderr)
        return 2
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
