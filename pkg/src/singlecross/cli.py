"""Command-line front end.

Exit codes: 0 accept/success, 1 reject (a witness is printed), 2 bad usage
or unreadable input, 3 an internal self-check failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from singlecross.colorful_graph import Orientation, build_colorful_graph
from singlecross.dot import colorful_graph_to_dot, formula_graph_to_dot
from singlecross.errors import InternalInvariantError
from singlecross.extend import (
    NotSeeminglySingleCrossingError,
    extend_to_single_crossing,
    find_ssc_violation,
)
from singlecross.formula_graph import (
    ComplementClash,
    build_formula_graph,
    complementary_pairs_partition,
)
from singlecross.lemma_lab import TEMPLATES, enumerate_lemma_cases
from singlecross.nb import (
    DEFAULT_BRUTE_FORCE_CAP,
    Axis,
    CapExceededError,
    brute_force_solve,
    extract_nb_constraints,
    parse_nb_instance,
)
from singlecross.orient import DEFAULT_FPT_CAP, solve_nb_fpt
from singlecross.pipeline import (
    DEFAULT_PSC_BRUTE_FORCE_CAP,
    Accept,
    RecognitionOutcome,
    brute_force_psc,
    recognize_psc,
)
from singlecross.profile import (
    ApprovalProfile,
    generate_cycle_profile,
    generate_sc_positive,
    parse_approval_matrix,
)

EXIT_OK, EXIT_REJECT, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
BRUTE_CAP_ENV = "SINGLECROSS_BRUTE_CAP"


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_profile(path: str) -> ApprovalProfile:
    try:
        return parse_approval_matrix(_read(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _parse_axis(text: str, n: int) -> Axis:
    try:
        axis = Axis.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if axis.n != n:
        raise InputError(f"axis lists {axis.n} voters, profile has {n}")
    return axis


def _brute_cap(default: int) -> int:
    raw = os.environ.get(BRUTE_CAP_ENV)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{BRUTE_CAP_ENV} must be an integer, got {raw!r}") from None


def _pairs(path) -> list[list[int]]:
    return [list(u) for u in path]


def outcome_record(outcome: RecognitionOutcome) -> dict:
    """Plain-data form of a recognition result; both output formats render this."""
    if isinstance(outcome, Accept):
        return {
            "outcome": "accept",
            "axis": list(outcome.axis.order),
            "linear_profile": [list(r) for r in outcome.linear_profile.rankings],
        }
    reason = outcome.reason
    if isinstance(reason, ComplementClash):
        witness = {
            "kind": "complement_clash",
            "vertex": list(reason.vertex),
            "path": _pairs(reason.path),
        }
    else:
        witness = {
            "kind": "monochromatic_cycle",
            "color": reason.color,
            "cycle": list(reason.cycle),
        }
    return {"outcome": "reject", "witness": witness}


def _fmt_pair(u) -> str:
    return f"({u[0]},{u[1]})"


def record_to_text(rec: dict) -> str:
    lines = [f"outcome: {rec['outcome']}"]
    if rec["outcome"] == "accept":
        lines.append("axis: " + ",".join(map(str, rec["axis"])))
        lines.append("linear_profile:")
        for v, r in enumerate(rec["linear_profile"], 1):
            lines.append(f"  voter {v}: " + " ".join(map(str, r)))
    else:
        w = rec["witness"]
        lines.append(f"witness: {w['kind']}")
        if w["kind"] == "complement_clash":
            lines.append("vertex: " + _fmt_pair(w["vertex"]))
            lines.append("path: " + " ".join(_fmt_pair(u) for u in w["path"]))
        else:
            lines.append(f"color: {w['color']}")
            lines.append("cycle: " + " -> ".join(map(str, w["cycle"] + w["cycle"][:1])))
    return "\n".join(lines) + "\n"


def cmd_recognize(args) -> int:
    outcome = recognize_psc(_load_profile(args.file))
    rec = outcome_record(outcome)
    if args.json:
        print(json.dumps(rec, sort_keys=True))
    elif (args.emit_axis or args.emit_profile) and outcome.accepted:
        if args.emit_axis:
            print(outcome.axis)
        if args.emit_profile:
            sys.stdout.write(outcome.linear_profile.to_text())
    else:
        sys.stdout.write(record_to_text(rec))
    return EXIT_OK if outcome.accepted else EXIT_REJECT


def cmd_extend(args) -> int:
    p = _load_profile(args.file)
    axis = _parse_axis(args.axis, p.n)
    try:
        linear = extend_to_single_crossing(p, axis)
    except NotSeeminglySingleCrossingError as exc:
        print(f"not single-crossing: {exc.violation}")
        return EXIT_REJECT
    sys.stdout.write(linear.to_text())
    return EXIT_OK


def cmd_check_ssc(args) -> int:
    p = _load_profile(args.file)
    violation = find_ssc_violation(p, _parse_axis(args.axis, p.n))
    if violation is None:
        print("ssc: yes")
        return EXIT_OK
    print("ssc: no")
    print(f"violation: {violation}")
    return EXIT_REJECT


def cmd_solve_nb(args) -> int:
    try:
        inst = parse_nb_instance(_read(args.file))
    except ValueError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    if args.brute:
        axis = brute_force_solve(inst, _brute_cap(DEFAULT_BRUTE_FORCE_CAP))
    else:
        axis = solve_nb_fpt(inst, DEFAULT_FPT_CAP)
    if axis is None:
        print("unsatisfiable")
        return EXIT_REJECT
    print(f"axis: {axis}")
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        if args.family == "cycle":
            p = generate_cycle_profile(args.n)
        else:
            p = generate_sc_positive(args.n, args.m, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(p.to_text())
    return EXIT_OK


def cmd_oracle_compare(args) -> int:
    p = _load_profile(args.file)
    fast = recognize_psc(p)
    slow = brute_force_psc(p, _brute_cap(DEFAULT_PSC_BRUTE_FORCE_CAP))
    verdict = "accept" if fast.accepted else "reject"
    if fast.accepted == (slow is not None):
        print(f"AGREE {verdict}")
        return EXIT_OK
    print(f"DISAGREE recognize={verdict} brute_force={'accept' if slow else 'reject'}")
    return EXIT_INTERNAL


def cmd_lemma_check(args) -> int:
    report = enumerate_lemma_cases(args.template)
    print(report.summary())
    return EXIT_OK if report.violations == 0 else EXIT_REJECT


def cmd_export_dot(args) -> int:
    if args.nb:
        try:
            inst = parse_nb_instance(_read(args.file))
        except ValueError as exc:
            raise InputError(f"{args.file}: {exc}") from None
    else:
        inst = extract_nb_constraints(_load_profile(args.file))
    graph = build_formula_graph(inst)
    part = complementary_pairs_partition(graph)
    if args.graph == "formula":
        if args.orientation is not None:
            raise InputError("--orientation only applies to --graph colorful")
        sys.stdout.write(formula_graph_to_dot(graph, None if isinstance(part, ComplementClash) else part))
        return EXIT_OK
    if isinstance(part, ComplementClash):
        print(f"no colourful graph: {_fmt_pair(part.vertex)} and its reverse are connected", file=sys.stderr)
        return EXIT_REJECT
    g = build_colorful_graph(part)
    o = None
    if args.orientation is not None:
        try:
            o = Orientation.from_bits(args.orientation)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if len(o) != g.num_colors:
            raise InputError(f"orientation has {len(o)} bits, graph has {g.num_colors} colors")
    sys.stdout.write(colorful_graph_to_dot(g, o))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singlecross",
        description="Recognise approval profiles that extend to single-crossing rankings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide and, on success, complete the profile")
    p.add_argument("file", help="approval matrix file, '-' for stdin")
    p.add_argument("--emit-axis", action="store_true", help="print only the axis")
    p.add_argument("--emit-profile", action="store_true", help="print only the rankings")
    p.add_argument("--json", action="store_true", help="print the full record as JSON")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("extend", help="complete ballots along a given axis")
    p.add_argument("file")
    p.add_argument("--axis", required=True, help="voter order, e.g. 2,1,3")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("check-ssc", help="test the single-crossing condition along an axis")
    p.add_argument("file")
    p.add_argument("--axis", required=True)
    p.set_defaults(func=cmd_check_ssc)

    p = sub.add_parser("solve-nb", help="solve a non-betweenness instance")
    p.add_argument("file", help="file with 'n' then one 'i j k' per line")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--brute", action="store_true", help="try every order")
    mode.add_argument("--fpt", action="store_true", help="search colour orientations (default)")
    p.set_defaults(func=cmd_solve_nb)

    p = sub.add_parser("generate", help="write a generated approval matrix")
    gen = p.add_subparsers(dest="family", required=True)
    g = gen.add_parser("cycle", help="the cyclic family with two ones per row and column")
    g.add_argument("n", type=int)
    g = gen.add_parser("sc-positive", help="approval cut of random single-crossing rankings")
    g.add_argument("n", type=int, help="voters")
    g.add_argument("m", type=int, help="candidates")
    g.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle-compare", help="cross-check recognition against brute force")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle_compare)

    p = sub.add_parser("lemma-check", help="run an exhaustive matrix case check")
    p.add_argument("template", choices=sorted(TEMPLATES))
    p.set_defaults(func=cmd_lemma_check)

    p = sub.add_parser("export-dot", help="write the formula or colourful graph as DOT")
    p.add_argument("file")
    p.add_argument("--graph", choices=("formula", "colorful"), required=True)
    p.add_argument("--orientation", help="one 0/1 flip bit per colour")
    p.add_argument("--nb", action="store_true", help="input is a non-betweenness instance")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
