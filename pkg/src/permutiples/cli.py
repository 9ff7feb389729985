"""Command line front end: every pipeline stage, as table, JSON, or DOT."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .digits import DigitVec, Params, PermutipleWitness, value, verify_witness
from .errors import (
    BudgetExceededError,
    CapExceededError,
    DigitAlignmentError,
    NotAnLWalkError,
    PermutipleError,
    RejectedPairError,
    UnknownCycleIndexError,
)
from .euler import (
    DEFAULT_MAX_STRINGS,
    ALLOW_LEADING_ZERO,
    FORBID_LEADING_ZERO,
    LABEL_DISTINCT,
    NUMERICALLY_DISTINCT,
    EnumerationOptions,
    condition_report,
    count_circuits,
    enumerate_strings,
)
from .mothergraph import (
    DEFAULT_MAX_CYCLES,
    build_mother_graph,
    enumerate_cycles,
    graph_to_dot,
)
from .oracle import (
    DEFAULT_MAX_SCAN,
    brute_force_search,
    equivalence_check,
    palintiple_count,
)
from .statemachine import (
    CycleMultiset,
    build_hs_multigraph,
    multigraph_to_dot,
    string_to_witness,
    union_images,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_DOMAIN = 4


def _exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (BudgetExceededError, CapExceededError)):
        return EXIT_BUDGET
    if isinstance(exc, (NotAnLWalkError, RejectedPairError, DigitAlignmentError)):
        return EXIT_DOMAIN
    return EXIT_USAGE


def _json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _params(args) -> Params:
    return Params(args.n, args.b)


def _params_payload(p: Params) -> dict:
    return {"n": p.n, "b": p.b}


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"{what} must be comma-separated integers, got {text!r}") from None


def _no_dot(args) -> None:
    if args.format == "dot":
        raise ValueError(f"DOT output is not available for '{args.command}'")


def _multigraph_payload(g) -> dict:
    rows = []
    occurrence: dict = {}
    for e in g.multiedges:
        copy = occurrence.get(e, 0)
        occurrence[e] = copy + 1
        rows.append(
            {"from": e.c1, "to": e.c2, "label": [e.label.d1, e.label.d2], "copy": copy}
        )
    return {
        "params": _params_payload(g.params),
        "states": list(g.active_states()),
        "multiedges": rows,
    }


def _multigraph_table(g, heading: str) -> str:
    lines = [f"{heading}: {len(g.multiedges)} multiedges, states {list(g.active_states())}"]
    for e in g.multiedges:
        lines.append(f"  {e.c1} -({e.label.d1},{e.label.d2})-> {e.c2}")
    return "\n".join(lines) + "\n"


def _witness_payload(w: PermutipleWitness) -> dict:
    return {
        "digits": list(w.digits.msd),
        "permuted": list(w.permuted.msd),
        "value": value(w.digits),
        "multiplicand": value(w.permuted),
    }


def _witness_row(w: PermutipleWitness) -> str:
    return f"{value(w.digits)} = {w.params.n} * {value(w.permuted)}    {w}"


def _inventory(args, p: Params):
    return enumerate_cycles(build_mother_graph(p), max_cycles=args.max_cycles)


def _handle_mother(args) -> str:
    p = _params(args)
    g = build_mother_graph(p)
    if args.format == "dot":
        return graph_to_dot(g, name="mother_graph")
    if args.format == "json":
        return _json(
            {
                "params": _params_payload(p),
                "edge_count": len(g.edges),
                "edges": [[e.d1, e.d2] for e in g.edges],
            }
        )
    lines = [f"mother graph for {p}: {len(g.edges)} edges"]
    lines += [f"  {e.d1} -> {e.d2}" for e in g.edges]
    return "\n".join(lines) + "\n"


def _handle_cycles(args) -> str:
    _no_dot(args)
    p = _params(args)
    inventory = _inventory(args, p)
    if args.format == "json":
        return _json(
            {
                "params": _params_payload(p),
                "cycle_count": len(inventory),
                "cycles": [
                    {"index": i, "length": len(c.edges), "edges": [[e.d1, e.d2] for e in c.edges]}
                    for i, c in enumerate(inventory)
                ],
            }
        )
    lines = [f"cycle inventory for {p}: {len(inventory)} cycles"]
    lines += [f"  {i}: {c}" for i, c in enumerate(inventory)]
    return "\n".join(lines) + "\n"


def _handle_multigraph(args) -> str:
    p = _params(args)
    g = build_hs_multigraph(p)
    if args.format == "dot":
        return multigraph_to_dot(g)
    if args.format == "json":
        return _json(_multigraph_payload(g))
    return _multigraph_table(g, f"carry multigraph for {p}")


def _handle_image(args) -> str:
    p = _params(args)
    inventory = _inventory(args, p)
    g = union_images(CycleMultiset.from_indices([args.cycle]), p, inventory)
    if args.format == "dot":
        return multigraph_to_dot(g, name=f"cycle_image_{args.cycle}")
    if args.format == "json":
        payload = _multigraph_payload(g)
        payload["cycle"] = args.cycle
        return _json(payload)
    return _multigraph_table(g, f"image of cycle {args.cycle} for {p}")


def _cycle_multiset(args) -> CycleMultiset:
    return CycleMultiset.from_indices(_parse_int_list(args.cycles, "--cycles"))


def _handle_check(args) -> str:
    _no_dot(args)
    p = _params(args)
    ms = _cycle_multiset(args)
    g = union_images(ms, p, _inventory(args, p))
    report = condition_report(g)
    counts = count_circuits(g)
    if args.format == "json":
        return _json(
            {
                "params": _params_payload(p),
                "cycles": [[i, m] for i, m in ms.items()],
                "contains_zero": report.contains_zero,
                "strongly_connected": report.strongly_connected,
                "balanced": report.balanced,
                "degree_deltas": [[s, d] for s, d in report.degree_deltas],
                "verdict": report.verdict,
                "edge_sequences_from_zero": counts.edge_sequences_from_zero,
                "label_distinct_circuits": counts.label_distinct,
            }
        )
    lines = [
        f"cycle multiset {ms} over {p}: {len(g.multiedges)} multiedges",
        f"  contains_zero:      {_yesno(report.contains_zero)}",
        f"  strongly_connected: {_yesno(report.strongly_connected)}",
        f"  balanced:           {_yesno(report.balanced)}",
        "  degree deltas:      "
        + (" ".join(f"{s}:{d:+d}" for s, d in report.degree_deltas) or "(none)"),
        f"  verdict:            {'accepted' if report.verdict else 'rejected'}",
        f"  circuits:           {counts.label_distinct} label-distinct, "
        f"{counts.edge_sequences_from_zero} edge sequences from state 0",
    ]
    return "\n".join(lines) + "\n"


def _enum_options(args) -> EnumerationOptions:
    dedup = NUMERICALLY_DISTINCT if args.dedup == "numeric" else LABEL_DISTINCT
    leading = FORBID_LEADING_ZERO if args.forbid_leading_zero else ALLOW_LEADING_ZERO
    return EnumerationOptions(dedup=dedup, leading_zero=leading, cap=args.max_strings)


def _handle_strings(args) -> str:
    _no_dot(args)
    p = _params(args)
    ms = _cycle_multiset(args)
    g = union_images(ms, p, _inventory(args, p))
    strings = enumerate_strings(g, _enum_options(args))
    witnesses = [string_to_witness(s, p) for s in strings]
    if args.format == "json":
        return _json(
            {
                "params": _params_payload(p),
                "cycles": [[i, m] for i, m in ms.items()],
                "count": len(strings),
                "strings": [
                    dict(pairs=[[e.d1, e.d2] for e in s.pairs], **_witness_payload(w))
                    for s, w in zip(strings, witnesses)
                ],
            }
        )
    lines = [f"strings for cycle multiset {ms} over {p}: {len(strings)}"]
    for s, w in zip(strings, witnesses):
        lines.append(f"  {s}    {w}    {value(w.digits)} = {p.n} * {value(w.permuted)}")
    return "\n".join(lines) + "\n"


def _handle_verify(args) -> str:
    _no_dot(args)
    p = _params(args)
    digits = DigitVec.from_msd(_parse_int_list(args.digits, "--digits"), p.b)
    permuted = DigitVec.from_msd(_parse_int_list(args.permuted, "--permuted"), p.b)
    w = PermutipleWitness.build(p, digits, permuted, find_sigma=True)
    report = verify_witness(w)
    if args.format == "json":
        return _json(
            {
                "params": _params_payload(p),
                **_witness_payload(w),
                "multisets_equal": report.multisets_equal,
                "value_relation": report.value_relation,
                "carries_consistent": report.carries_consistent,
                "final_carry_zero": report.final_carry_zero,
                "carries_bounded": report.carries_bounded,
                "sigma_consistent": report.sigma_consistent,
                "is_permutiple": report.is_permutiple,
            }
        )
    lines = [
        f"claim: {w}",
        f"  multisets_equal:    {_yesno(report.multisets_equal)}",
        f"  value_relation:     {_yesno(report.value_relation)}",
        f"  carries_consistent: {_yesno(report.carries_consistent)}",
        f"  final_carry_zero:   {_yesno(report.final_carry_zero)}",
        f"  carries_bounded:    {_yesno(report.carries_bounded)}",
        f"  sigma_consistent:   {_yesno(report.sigma_consistent)}",
        f"  is_permutiple:      {_yesno(report.is_permutiple)}",
    ]
    return "\n".join(lines) + "\n"


def _handle_search(args) -> str:
    _no_dot(args)
    p = _params(args)
    witnesses = brute_force_search(p, args.length, max_scan=args.max_scan)
    if args.format == "json":
        return _json(
            {
                "params": _params_payload(p),
                "length": args.length,
                "count": len(witnesses),
                "witnesses": [_witness_payload(w) for w in witnesses],
            }
        )
    lines = [f"{len(witnesses)} permutiples with {args.length} base-{p.b} digits for n={p.n}"]
    lines += [f"  {_witness_row(w)}" for w in witnesses]
    return "\n".join(lines) + "\n"


def _handle_palintiples(args) -> str:
    _no_dot(args)
    p = _params(args)
    count = palintiple_count(p, args.length, max_scan=args.max_scan)
    if args.format == "json":
        return _json({"params": _params_payload(p), "length": args.length, "count": count})
    return f"{count} palintiples with {args.length} base-{p.b} digits for n={p.n}\n"


def _handle_equiv(args) -> str:
    _no_dot(args)
    p = _params(args)
    report = equivalence_check(
        p,
        args.length,
        max_scan=args.max_scan,
        max_strings=args.max_strings,
        max_cycles=args.max_cycles,
    )
    if args.format == "json":
        return _json(
            {
                "params": _params_payload(p),
                "length": args.length,
                "match": report.match,
                "pipeline_count": len(report.pipeline_values),
                "brute_count": len(report.brute_values),
                "only_pipeline": list(report.only_pipeline),
                "only_brute": list(report.only_brute),
                "values": list(report.brute_values),
            }
        )
    lines = [
        f"equivalence for {p}, length {args.length}: "
        f"{'MATCH' if report.match else 'MISMATCH'}",
        f"  pipeline: {len(report.pipeline_values)} values",
        f"  scan:     {len(report.brute_values)} values",
    ]
    if report.only_pipeline:
        lines.append("  only pipeline: " + ", ".join(map(str, report.only_pipeline)))
    if report.only_brute:
        lines.append("  only scan:     " + ", ".join(map(str, report.only_brute)))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permutiples",
        description="Recognize, generate, and enumerate permutiple numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(handler=handler)
        sp.add_argument("--n", type=int, required=True, help="digit multiplier, 1 < n < b")
        sp.add_argument("--b", type=int, required=True, help="base, at least 2")
        sp.add_argument(
            "--format",
            choices=["table", "json", "dot"],
            default="table",
            help="output format (dot only for graph-shaped commands)",
        )
        return sp

    add("mother", _handle_mother, "all allowed digit pairs for (n, b)")

    sp = add("cycles", _handle_cycles, "canonical cycle inventory of the mother graph")
    sp.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)

    add("multigraph", _handle_multigraph, "the labeled carry-state multigraph")

    sp = add("image", _handle_image, "carry-machine image of one cycle")
    sp.add_argument("--cycle", type=int, required=True, help="canonical cycle index")
    sp.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)

    sp = add("check", _handle_check, "acceptance conditions for a cycle multiset")
    sp.add_argument("--cycles", required=True, help="cycle indices, e.g. 3,3,5")
    sp.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)

    sp = add("strings", _handle_strings, "enumerate strings of a cycle multiset")
    sp.add_argument("--cycles", required=True, help="cycle indices, e.g. 3,3,5")
    sp.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)
    sp.add_argument("--max-strings", type=int, default=DEFAULT_MAX_STRINGS)
    sp.add_argument("--forbid-leading-zero", action="store_true")
    sp.add_argument("--dedup", choices=["label", "numeric"], default="label")

    sp = add("verify", _handle_verify, "check one claimed digits = n * permuted relation")
    sp.add_argument("--digits", required=True, help="product digits, most significant first")
    sp.add_argument("--permuted", required=True, help="multiplicand digits, most significant first")

    sp = add("search", _handle_search, "brute-force scan for permutiples of one length")
    sp.add_argument("--len", dest="length", type=int, required=True)
    sp.add_argument("--max-scan", type=int, default=DEFAULT_MAX_SCAN)

    sp = add("palintiples", _handle_palintiples, "count reversal permutiples of one length")
    sp.add_argument("--len", dest="length", type=int, required=True)
    sp.add_argument("--max-scan", type=int, default=DEFAULT_MAX_SCAN)

    sp = add("equiv", _handle_equiv, "pipeline vs brute-force agreement for one length")
    sp.add_argument("--len", dest="length", type=int, required=True)
    sp.add_argument("--max-scan", type=int, default=DEFAULT_MAX_SCAN)
    sp.add_argument("--max-strings", type=int, default=DEFAULT_MAX_STRINGS)
    sp.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        out = args.handler(args)
    except (PermutipleError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code_for(exc)
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
