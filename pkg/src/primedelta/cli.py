"""Command-line front end.

Every successful invocation prints exactly one result document on stdout
(a JSON envelope by default); diagnostics and errors go to stderr. Exit
status: 0 success (a non-admissible verdict is still success), 1 domain
error (with a stable machine-readable error code), 2 usage error. All
commands are deterministic. Witness output is finite evidence below the
given bound, never a statement about infinitely many occurrences.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from .bounds import delta_r_bound
from .diffsets import (
    DEFAULT_PAIR_CAP,
    difference_set,
    max_gap,
    prime_pairs_with_difference,
    realized_differences,
)
from .errors import ExtractionFailedError, InsufficientSetError, NoWitnessError, PrimeDeltaError
from .extraction import IntegerSet, extract_admissible_set
from .formats import read_integers, write_integer_set
from .primes import sieve_primes
from .tuples import KTuple, is_admissible
from .witness import delta_r_star_demo, scan_tuple_witnesses


@dataclass
class Outcome:
    parameters: dict
    payload: dict
    primary: object
    text: str
    csv: str = ""


def _csv(header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(str(v) for v in row) for row in rows)
    return "\n".join(lines)


def cmd_primes(args):
    table = sieve_primes(args.limit)
    ps = table.primes()
    text = f"{len(ps)} primes <= {args.limit}"
    if ps:
        text += "\n" + " ".join(str(p) for p in ps)
    return Outcome(
        parameters={"limit": args.limit},
        payload={"limit": args.limit, "count": len(ps), "primes": ps},
        primary=len(ps),
        text=text,
        csv=_csv(["p"], [[p] for p in ps]),
    )


def cmd_check(args):
    tup = KTuple.from_values(args.offsets)
    verdict = is_admissible(tup)
    if verdict:
        text = f"admissible ({tup.k}-tuple)"
    else:
        text = (
            f"not admissible: the tuple occupies every residue class "
            f"mod {verdict.obstruction}"
        )
    payload = {"tuple": list(tup), "k": tup.k}
    payload.update(verdict.to_json())
    return Outcome(
        parameters={"offsets": list(tup)},
        payload=payload,
        primary=str(verdict.admissible).lower(),
        text=text,
        csv=_csv(
            ["k", "admissible", "obstruction"],
            [[tup.k, verdict.admissible, verdict.obstruction]],
        ),
    )


def cmd_extract(args):
    values = read_integers(args.input)
    result = extract_admissible_set(
        IntegerSet.from_iterable(values), args.k, args.mode, force=args.force
    )
    payload = result.to_json()
    if args.output:
        write_integer_set(
            args.output,
            result.survivors,
            comment=f"survivors of extraction with k={args.k}, mode={args.mode}",
        )
        payload["written_to"] = args.output
    lines = [
        f"input {len(values)} elements, {len(result.trace)} removal steps, "
        f"{len(result.survivors)} survivors"
    ]
    for step in result.trace:
        verb = "skipped" if step.skipped else "removed"
        lines.append(
            f"  p={step.p}: {verb} class {step.b} mod {step.p} "
            f"({step.removed} elements, {step.remaining} remain)"
        )
    lines.append("survivors: " + " ".join(str(g) for g in result.survivors))
    lines.append("tuple: " + " ".join(str(h) for h in result.tuple))
    return Outcome(
        parameters={
            "input": args.input,
            "k": args.k,
            "mode": args.mode,
            "force": args.force,
        },
        payload=payload,
        primary=" ".join(str(h) for h in result.tuple),
        text="\n".join(lines),
        csv=_csv(
            ["p", "b", "removed", "remaining", "skipped"],
            [[s.p, s.b, s.removed, s.remaining, s.skipped] for s in result.trace],
        ),
    )


def cmd_bound(args):
    report = delta_r_bound(args.c)
    payload = report.to_json(args.decimals)
    decimal = payload["threshold_decimal"]
    text = (
        f"C={args.c}: r_min = {report.r_min} "
        f"(threshold {decimal}, product over {len(report.primes)} primes)"
    )
    return Outcome(
        parameters={"c": args.c, "decimals": args.decimals},
        payload=payload,
        primary=report.r_min,
        text=text,
        csv=_csv(
            ["C", "r_min", "threshold_decimal", "exact"],
            [[args.c, report.r_min, decimal, report.exact]],
        ),
    )


def cmd_delta(args):
    values = read_integers(args.input)
    s = IntegerSet.from_iterable(values)
    diffs = difference_set(s)
    payload = {
        "input_size": len(s),
        "count": len(diffs),
        "differences": list(diffs),
    }
    if args.output:
        write_integer_set(args.output, diffs, comment=f"difference set of {args.input}")
        payload["written_to"] = args.output
    return Outcome(
        parameters={"input": args.input},
        payload=payload,
        primary=len(diffs),
        text=" ".join(str(d) for d in diffs) if len(diffs) else "(empty)",
        csv=_csv(["d"], [[d] for d in diffs]),
    )


def cmd_pairs(args):
    report = prime_pairs_with_difference(args.d, args.n, cap=args.max_pairs)
    lines = [
        f"{report.count} prime pairs with difference {args.d} below {args.n}"
        + (" (list truncated)" if report.truncated else "")
    ]
    lines.extend(f"  {q} {q2}" for q, q2 in report.pairs)
    return Outcome(
        parameters={"d": args.d, "n": args.n, "max_pairs": args.max_pairs},
        payload=report.to_json(),
        primary=report.count,
        text="\n".join(lines),
        csv=_csv(["q", "q_plus_d"], [[q, q2] for q, q2 in report.pairs]),
    )


def cmd_realized(args):
    table = sieve_primes(args.n)
    realized = realized_differences(args.n, args.max_d, table=table)
    payload = {
        "N": args.n,
        "max_d": args.max_d,
        "count": len(realized),
        "differences": list(realized),
    }
    lines = [f"{len(realized)} differences <= {args.max_d} realized below {args.n}"]
    lines.append(" ".join(str(d) for d in realized) if len(realized) else "(none)")
    if args.gaps:
        evens = IntegerSet(tuple(d for d in realized if d % 2 == 0))
        gaps = {
            "max_gap": max_gap(realized, args.max_d) if len(realized) else None,
            "max_gap_even": max_gap(evens, args.max_d) if len(evens) else None,
        }
        payload["gaps"] = gaps
        lines.append(
            f"max gap {gaps['max_gap']} (all), {gaps['max_gap_even']} (even only), "
            f"both relative to 0..{args.max_d}"
        )
    return Outcome(
        parameters={"n": args.n, "max_d": args.max_d, "gaps": args.gaps},
        payload=payload,
        primary=len(realized),
        text="\n".join(lines),
        csv=_csv(["d"], [[d] for d in realized]),
    )


def cmd_scan(args):
    tup = KTuple.from_values(read_integers(args.tuple))
    hits = scan_tuple_witnesses(tup, args.n, args.min_hits)
    lines = [f"{len(hits)} hits for tuple {' '.join(str(h) for h in tup)} with n <= {args.n}"]
    for hit in hits:
        lines.append(
            f"  n={hit.n}: primes {' '.join(str(p) for p in hit.primes)}"
        )
    return Outcome(
        parameters={"tuple": args.tuple, "n": args.n, "min_hits": args.min_hits},
        payload={
            "tuple": list(tup),
            "N": args.n,
            "min_hits": args.min_hits,
            "hit_count": len(hits),
            "hits": [hit.to_json() for hit in hits],
        },
        primary=len(hits),
        text="\n".join(lines),
        csv=_csv(
            ["n", "offsets", "primes"],
            [
                [
                    hit.n,
                    ";".join(str(i) for i in hit.prime_offsets),
                    ";".join(str(p) for p in hit.primes),
                ]
                for hit in hits
            ],
        ),
    )


def cmd_demo(args):
    values = read_integers(args.input)
    report = delta_r_star_demo(IntegerSet.from_iterable(values), args.c, args.n)
    q, q2 = report.witness_pair
    text = "\n".join(
        [
            f"input set: {report.input_size} elements",
            f"extracted admissible {report.k}-tuple: "
            + " ".join(str(h) for h in report.tuple),
            f"first hit at n={report.hit.n} with primes "
            + " ".join(str(p) for p in report.hit.primes),
            f"difference {report.realized_difference} of the input set is realized "
            f"by the prime pair ({q}, {q2})  [evidence below {args.n}, not a proof "
            "of infinitude]",
        ]
    )
    return Outcome(
        parameters={"input": args.input, "c": args.c, "n": args.n},
        payload=report.to_json(),
        primary=report.realized_difference,
        text=text,
        csv=_csv(
            ["k", "n", "realized_difference", "q", "q_plus_d"],
            [[report.k, report.hit.n, report.realized_difference, q, q2]],
        ),
    )


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "text", "csv"),
        default="json",
        help="output rendering (default: json envelope)",
    )
    common.add_argument(
        "--quiet",
        action="store_true",
        help="print only the primary result value",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        metavar="T",
        help="cap on worker threads (current kernels are single-threaded, "
        "so any cap >= 1 is honored)",
    )
    parser = argparse.ArgumentParser(
        prog="primedelta",
        description="Admissible k-tuples, residue-class extraction, exact "
        "Mertens-product bounds, and prime-difference scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("primes", parents=[common], help="list primes up to a limit")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("check", parents=[common], help="admissibility verdict for a tuple")
    p.add_argument("offsets", type=int, nargs="+", metavar="H")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("extract", parents=[common], help="extract an admissible k-tuple from a set")
    p.add_argument("--input", required=True, help="integer-set file ('-' for stdin)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("strict", "optimized"), default="strict")
    p.add_argument("--force", action="store_true", help="skip the cardinality precondition")
    p.add_argument("--output", help="also write the survivors as an integer-set file")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("bound", parents=[common], help="minimal r for a given constant C")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--decimals", type=int, default=2)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("delta", parents=[common], help="difference set of an integer set")
    p.add_argument("--input", required=True, help="integer-set file ('-' for stdin)")
    p.add_argument("--output", help="also write the differences as an integer-set file")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser(
        "pairs",
        parents=[common],
        help="prime pairs with a given difference",
        description="List prime pairs (q, q+d) with q+d <= N. Odd d is "
        "allowed; any witness pair must then contain the prime 2, so there "
        "is at most one. Results are finite evidence below N.",
    )
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="scan bound (q + d <= N)")
    p.add_argument("--max-pairs", type=int, default=DEFAULT_PAIR_CAP,
                   help="cap on listed pairs; the count is always exact")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("realized", parents=[common],
                       help="differences realized by prime pairs below a bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-d", type=int, required=True)
    p.add_argument("--gaps", action="store_true", help="include max-gap analysis")
    p.set_defaults(func=cmd_realized)

    p = sub.add_parser("scan", parents=[common], help="find n with two of n+h_i prime")
    p.add_argument("--tuple", required=True, help="tuple file ('-' for stdin)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-hits", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("demo", parents=[common],
                       help="extract a C-tuple, then realize a difference of the "
                       "input set as a difference of primes")
    p.add_argument("--input", required=True, help="integer-set file ('-' for stdin)")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="witness scan bound")
    p.set_defaults(func=cmd_demo)
    return parser


def _error_document(exc):
    if isinstance(exc, PrimeDeltaError):
        doc = {"error": exc.code, "message": str(exc)}
        if isinstance(exc, InsufficientSetError):
            doc.update(size=exc.size, required=exc.required, k=exc.k)
        elif isinstance(exc, ExtractionFailedError):
            doc["steps"] = exc.trace.to_json()
        elif isinstance(exc, NoWitnessError):
            doc["tuple"] = list(exc.tuple)
        return doc
    if isinstance(exc, OverflowError):
        return {"error": "overflow", "message": str(exc)}
    if isinstance(exc, FileNotFoundError):
        return {"error": "file-not-found", "message": str(exc)}
    if isinstance(exc, OSError):
        return {"error": "io-error", "message": str(exc)}
    return {"error": "invalid-argument", "message": str(exc)}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    if args.threads < 1:
        print(json.dumps({"error": "invalid-argument",
                          "message": "--threads must be >= 1"}), file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        outcome = args.func(args)
    except (PrimeDeltaError, ValueError, OverflowError, OSError) as exc:
        print(json.dumps(_error_document(exc)), file=sys.stderr)
        return 1
    elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    if args.quiet:
        print(outcome.primary)
    elif args.format == "json":
        envelope = {
            "command": args.command,
            "parameters": outcome.parameters,
            "result": outcome.payload,
            "elapsed_ms": elapsed_ms,
        }
        print(json.dumps(envelope))
    elif args.format == "text":
        print(outcome.text)
    else:
        print(outcome.csv)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
