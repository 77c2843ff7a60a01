"""Command line front end.

Subcommands: check (symmetry laws at a finite scope), enumerate (terms with
a given inflation factor), extrapolate (long-list output from sublist data),
amal (reassemble a keyed collection), demo (worked tour).

Exit codes: 0 success or pass, 1 a check or reconstruction failed, 2 bad
usage or malformed input.
"""

import argparse
import json
import sys

from .amalgamation import (
    AmalgamationOutcome,
    Collection,
    amal,
    extrapolate_fe,
    extrapolate_nfe_from_doubleton,
    square_multiplicity,
    two_unique_sublists,
)
from .errors import MissingSublistError
from .equivariance import (
    Scope,
    check_filter_equivariant,
    check_map_equivariant,
    check_tail_equivariant,
)
from .errors import FilterEqError
from .functions import Builtin, NfeFunction, function_from_json
from .lists import as_tuple
from .nfe import blocks_to_nfe, count_k_nfes, enumerate_k_nfes, interpret_nfe


class SystemExit2(Exception):
    """Usage-level error, turned into exit code 2."""


def _parse_scope(text):
    try:
        a, l = (int(part) for part in text.split(","))
        return Scope(a, l)
    except ValueError as e:
        raise SystemExit2("scope must look like '3,5' with positive bounds (%s)" % e)


def _load_json_arg(text):
    """Inline JSON if it parses, otherwise a path to a JSON file."""
    text = text.strip()
    if text == "-":
        return json.load(sys.stdin)
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        try:
            with open(text) as fh:
                return json.load(fh)
        except OSError:
            raise SystemExit2("%r is neither JSON nor a readable file" % (text,))
        except json.JSONDecodeError as e:
            raise SystemExit2("file %r holds malformed JSON: %s" % (text, e))


def _fe_table_from_json(obj):
    if not isinstance(obj, list):
        raise SystemExit2("expected a JSON array of {keep, output} rows")
    table = {}
    for row in obj:
        try:
            keep = frozenset(row["keep"])
            out = as_tuple(row["output"])
        except (TypeError, KeyError):
            raise SystemExit2("each row needs 'keep' and 'output'")
        if len(keep) != 2:
            raise SystemExit2("'keep' must name two distinct values")
        table[keep] = out
    return table


def _cmd_check(args):
    try:
        fn = function_from_json(_load_json_arg(args.fn))
    except (ValueError, KeyError, TypeError) as e:
        raise SystemExit2("bad function descriptor: %s" % e)
    scope = _parse_scope(args.scope)
    laws = ("map", "filter", "tail") if args.law == "all" else (args.law,)
    checkers = {
        "map": check_map_equivariant,
        "filter": check_filter_equivariant,
        "tail": check_tail_equivariant,
    }
    reports = [checkers[law](fn, scope) for law in laws]
    if args.format == "json":
        payload = {
            "ok": all(r.passed for r in reports),
            "reports": [r.to_json_dict() for r in reports],
        }
        print(json.dumps(payload))
    else:
        for r in reports:
            line = "law %s: %s [checked %d]" % (r.law, r.verdict, r.checked)
            if not r.passed:
                w = r.witnesses[0]
                line += " first witness: xs=%s transform=%s lhs=%s rhs=%s (%d total)" % (
                    list(w.xs),
                    w.transform,
                    list(w.lhs),
                    list(w.rhs),
                    len(r.witnesses),
                )
            print(line)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_enumerate(args):
    if args.k < 0:
        raise SystemExit2("k must be non-negative")
    terms = enumerate_k_nfes(args.k)
    assert len(terms) == count_k_nfes(args.k)
    if args.format == "json":
        print(json.dumps({"k": args.k, "count": len(terms),
                          "terms": [t.to_json_dict() for t in terms]}))
    else:
        print("%d terms with inflation factor %d" % (len(terms), args.k))
        for t in terms:
            print("  " + (" ".join("%s%d" % b for b in t.blocks) or "Z"))
    return 0


def _print_outcome(outcome, fmt):
    if fmt == "json":
        print(json.dumps(outcome.to_json_dict()))
    elif outcome.ok:
        print("output: %s" % (list(outcome.result),))
    else:
        print("failed: %s (%s)" % (outcome.reason, outcome.detail))
    return 0 if outcome.ok else 1


def _cmd_extrapolate(args):
    xs = _load_json_arg(args.input)
    if not isinstance(xs, list):
        raise SystemExit2("--input must be a JSON array")
    examples = _load_json_arg(args.examples)
    if args.mode == "nfe":
        if not isinstance(examples, dict) or "input" not in examples or "output" not in examples:
            raise SystemExit2("nfe mode expects {'input': [x, y], 'output': [...]}")
        outcome = extrapolate_nfe_from_doubleton(
            examples["input"], examples["output"], xs
        )
    else:
        # an incomplete table is a checked failure (exit 1), not a usage error
        try:
            outcome = extrapolate_fe(_fe_table_from_json(examples), xs)
        except MissingSublistError as e:
            outcome = AmalgamationOutcome.failure("MissingSublist", str(e))
    return _print_outcome(outcome, args.format)


def _cmd_amal(args):
    obj = _load_json_arg(args.examples)
    try:
        entries = {}
        for row in obj["entries"]:
            key = row["remove"]
            if isinstance(key, list):
                key = frozenset(key)
            entries[key] = as_tuple(row["list"])
        chi = Collection(frozenset(obj["universe"]), entries)
    except (KeyError, TypeError, ValueError) as e:
        raise SystemExit2("bad collection: %s" % e)
    return _print_outcome(amal(chi), args.format)


def _cmd_demo(args):
    print("Terms with inflation factor 2 (expect 6):")
    for t in enumerate_k_nfes(2):
        word = " ".join("%s%d" % b for b in t.blocks)
        print("  %-6s on [1,2] -> %s" % (word, list(interpret_nfe(t, (1, 2)))))

    print("\nExtrapolating from a single two-element example:")
    rev = extrapolate_nfe_from_doubleton((1, 2), (2, 1), (0, 1, 2, 3))
    print("  example [1, 2] -> [2, 1], applied to [0, 1, 2, 3] gives %s"
          % (list(rev.result),))
    ok0 = rev.result == (3, 2, 1, 0)
    example_in, example_out = (1, 2), (2, 1, 2, 1)
    target = (5, 6, 7)
    got = extrapolate_nfe_from_doubleton(example_in, example_out, target)
    term = blocks_to_nfe([["N", 1], ["N", 1]])
    print("  example %s -> %s, applied to %s gives %s" % (
        list(example_in), list(example_out), list(target), list(got.result)))
    ok1 = ok0 and got.result == interpret_nfe(term, target)

    print("\nReassembling a sort from its two-unique-value sublists:")
    xs = (3, 2, 1, 2)
    sort = Builtin("sort")
    table = {pair: sort(sub) for pair, sub in two_unique_sublists(xs).items()}
    for pair, out in sorted(table.items(), key=lambda kv: sorted(kv[0])):
        print("  keep %s: %s" % (sorted(pair), list(out)))
    got2 = extrapolate_fe(table, xs)
    print("  reassembled f%s = %s" % (list(xs), list(got2.result)))
    ok2 = got2.result == sort(xs)

    print("\nWhy one example is not enough without relabelling symmetry:")
    yys = (4, 7, 4, 7, 8)
    print("  square-multiplicity on %s = %s" % (list(yys), list(square_multiplicity(yys))))
    print("  it agrees with the identity on every two-distinct-value list,")
    print("  so a single doubleton example cannot tell them apart.")
    return 0 if (ok1 and ok2 and got2.ok) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="filtereq",
        description="Check, enumerate, and extrapolate filter-commuting list functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run symmetry checks at a finite scope")
    p.add_argument("--fn", required=True, help="function descriptor: JSON or a file path")
    p.add_argument("--law", choices=["map", "filter", "tail", "all"], default="all")
    p.add_argument("--scope", default="3,5", help="alphabet size and max length, e.g. 3,5")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enumerate", help="list every term with inflation factor k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("extrapolate", help="compute a long-list output from examples")
    p.add_argument("--examples", required=True,
                   help="JSON, a file path, or - for stdin; fe mode: [{keep, output}, ...], "
                        "nfe mode: {input, output}")
    p.add_argument("--input", required=True, help="target list as a JSON array")
    p.add_argument("--mode", choices=["fe", "nfe"], default="fe")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_extrapolate)

    p = sub.add_parser("amal", help="reassemble a keyed collection of sublists")
    p.add_argument("--examples", required=True,
                   help="JSON with {universe, entries: [{remove, list}, ...]}")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_amal)

    p = sub.add_parser("demo", help="worked tour of the main operations")
    p.set_defaults(func=_cmd_demo)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit2 as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except FilterEqError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


def console_main():
    sys.exit(main(sys.argv[1:]))
