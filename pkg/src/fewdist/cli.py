"""Command-line driver.

Exit codes: 0 success, 2 usage or parse error, 3 search stopped by its time
limit, 4 a verification check failed.  Integers in JSON output are decimal
strings (code sizes can exceed 64 bits).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from typing import Sequence

from . import __version__
from .bounds import best_bounds, bound_theorem1, bound_theorem2, bound_two_distance
from .constructions import construct_constant_weight, construct_golay_blocks
from .core import (Code, CodeParseError, DistanceSet, EmptyDistanceSetError, InvalidInputError,
                   ResourceLimitError, Word, distance_set_of, parse_code, serialize_code)
from .polymethod import (DEFAULT_SIZE_GUARD, PreconditionError, build_P, check_guard,
                         even_formula_agreement, evaluation_matrix, symmetrized_even_span_check,
                         verify_linear_independence)
from .search import DEFAULT_MAX_LENGTH, max_code

EXIT_OK, EXIT_USAGE, EXIT_INCOMPLETE, EXIT_FAILED = 0, 2, 3, 4

BOUND_COLUMNS = ("name", "value", "applicable", "notes")
TABLE_COLUMNS = ("n", "s", "theorem1", "theorem2", "two_distance")


class UsageError(Exception):
    pass


def parse_distances(text: str) -> DistanceSet:
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"distances must be a comma-separated list of integers: {text!r}")
    try:
        return DistanceSet(tuple(values))
    except InvalidInputError as exc:
        raise UsageError(str(exc))


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"length range must look like 6..10: {text!r}")
    if a < 1 or b < a:
        raise UsageError(f"empty or non-positive length range {text!r}")
    return range(a, b + 1)


def _distances_for(n: int, text: str) -> DistanceSet:
    D = parse_distances(text)
    if n < 1:
        raise UsageError(f"length must be positive, got {n}")
    if D.max > n:
        raise UsageError(f"distance {D.max} exceeds length {n}")
    return D


def _big(x):
    return None if x is None else str(x)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _aligned(rows: Sequence[Sequence[object]]) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells if i < len(r)) for i in range(len(cells[0]))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cells)


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------- bound

def cmd_bound(args, out) -> int:
    D = _distances_for(args.length, args.distances)
    result = best_bounds(args.length, D)
    if args.format == "json":
        out.write(_dump({
            "command": "bound",
            "n": args.length,
            "distances": list(D),
            "bounds": [{"name": r.name, "applicable": r.applicable, "value": _big(r.value),
                        "notes": r.notes} for r in result.reports],
            "min": str(result.minimum),
            "min_from": result.best_names(),
        }))
        return EXIT_OK
    rows = [BOUND_COLUMNS]
    for r in result.reports:
        rows.append((r.name, "" if r.value is None else r.value, _bool(r.applicable), r.notes))
    rows.append(("min", result.minimum, "true", " ".join(result.best_names())))
    out.write(_csv(rows) if args.format == "csv" else _aligned(rows))
    return EXIT_OK


# ---------------------------------------------------------------- table

def table_rows(lengths: range, s: int) -> list[dict]:
    rows = []
    for n in lengths:
        two = None
        if s == 2:
            # The two-distance bound ignores the actual distances; any pair will do.
            two = bound_two_distance(n, DistanceSet.of(1, 2)).value
        rows.append({"n": n, "s": s, "theorem1": bound_theorem1(n, s),
                     "theorem2": bound_theorem2(n, s), "two_distance": two})
    return rows


def cmd_table(args, out) -> int:
    lengths = parse_range(args.length)
    if not 1 <= args.num_distances <= lengths.start:
        raise UsageError(f"need 1 <= s <= {lengths.start}, got s={args.num_distances}")
    rows = table_rows(lengths, args.num_distances)
    if args.format == "json":
        out.write(_dump({"command": "table", "s": args.num_distances,
                         "rows": [{k: _big(v) if k not in ("n", "s") else v
                                   for k, v in row.items()} for row in rows]}))
        return EXIT_OK
    body = [TABLE_COLUMNS] + [tuple("" if row[c] is None else row[c] for c in TABLE_COLUMNS)
                              for row in rows]
    out.write(_csv(body) if args.format == "csv" else _aligned(body))
    return EXIT_OK


# ---------------------------------------------------------------- search

def cmd_search(args, out) -> int:
    D = _distances_for(args.length, args.distances)
    if args.threads < 1:
        raise UsageError(f"--threads must be positive, got {args.threads}")
    try:
        result = max_code(args.length, D, args.time_limit, args.threads)
    except ResourceLimitError as exc:
        raise UsageError(str(exc))
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(serialize_code(result.witness))
    if args.format == "json":
        doc = {"command": "search", "n": args.length, "distances": list(D),
               "value": str(result.value), "complete": result.complete,
               "nodes": result.nodes, "elapsed_ms": round(result.elapsed, 3)}
        if args.emit_witness:
            doc["witness"] = [str(w) for w in result.witness.sorted()]
        out.write(_dump(doc))
    else:
        fields = [("value", result.value), ("complete", _bool(result.complete)),
                  ("nodes", result.nodes), ("elapsed_ms", f"{result.elapsed:.3f}")]
        if args.format == "csv":
            out.write(_csv([[k for k, _ in fields], [v for _, v in fields]]))
        else:
            # Summary lines are comments, so with --emit-witness the whole
            # output is itself a valid code file.
            out.write("".join(f"# {k} {v}\n" for k, v in fields))
        if args.emit_witness:
            out.write(serialize_code(result.witness).decode())
    return EXIT_OK if result.complete else EXIT_INCOMPLETE


# ---------------------------------------------------------------- construct

def cmd_construct(args, out, err) -> int:
    if args.kind == "golay23":
        code = construct_golay_blocks()
    else:
        if args.length is None or args.num_distances is None:
            raise UsageError("constant-weight needs -n and -s")
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            try:
                code = construct_constant_weight(args.length, args.num_distances, args.adjoin_zero)
            except InvalidInputError as exc:
                raise UsageError(str(exc))
        for w in caught:
            err.write(f"warning: {w.message}\n")
    data = serialize_code(code)
    dist = str(distance_set_of(code)) if len(code) > 1 else ""
    summary = f"size {len(code)} length {code.n} distances {{{dist}}}\n"
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
        out.write(summary)
    else:
        out.write(data.decode())
        err.write(summary)
    return EXIT_OK


# ---------------------------------------------------------------- verify

def verify_code(code: Code, D: DistanceSet | None, max_terms: int) -> list[dict]:
    """Run every check; each entry has name, status (pass/fail/skip) and detail."""
    checks = []

    def add(name, status, detail):
        checks.append({"name": name, "status": status, "detail": detail})

    try:
        actual = distance_set_of(code)
        add("distance_set", "pass", f"{{{actual}}}")
    except EmptyDistanceSetError:
        actual = None
        add("distance_set", "skip", "fewer than two words")
    if D is not None:
        if D.max > code.n:
            add("containment", "fail", f"distance {D.max} exceeds length {code.n}")
            return checks
        offending = None
        try:
            M = evaluation_matrix(code, D)
        except PreconditionError as exc:
            offending = exc
        if offending is not None:
            add("containment", "fail", str(offending))
            return checks
        add("containment", "pass", f"all distances in {{{D}}}")
    else:
        D = actual
        if D is None:
            add("lemma1_evaluation", "skip", "no distance set")
            add("lemma2_rank", "skip", "no distance set")
            add("bounds", "skip", "no distance set")
            return checks
        M = evaluation_matrix(code, D)

    prod = 1
    for d in D:
        prod *= d
    size = len(M)
    bad = [(i, j) for i in range(size) for j in range(size)
           if M[i][j] != (prod if i == j else 0)]
    add("lemma1_evaluation", "fail" if bad else "pass",
        f"{len(bad)} bad entries" if bad else f"P_u(v) = {prod} * identity ({size}x{size})")

    try:
        check_guard(code.n, D.s, max_terms)
    except ResourceLimitError as exc:
        add("lemma2_rank", "skip", str(exc))
    else:
        res = verify_linear_independence(code, D, max_terms)
        add("lemma2_rank", "pass" if res.independent else "fail",
            f"rank {res.rank} of {res.size} (dim V = {res.dimension})")

    bb = best_bounds(code.n, D)
    add("bounds", "pass" if len(code) <= bb.minimum else "fail",
        f"size {len(code)} <= min bound {bb.minimum} ({' '.join(bb.best_names())})"
        if len(code) <= bb.minimum else f"size {len(code)} exceeds bound {bb.minimum}")
    return checks


def cmd_verify(args, out) -> int:
    try:
        with open(args.code_path, "rb") as fh:
            code = parse_code(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.code_path}: {exc.strerror}")
    except (CodeParseError, UnicodeDecodeError) as exc:
        raise UsageError(f"{args.code_path}: {exc}")
    D = None
    if args.distances:
        D = parse_distances(args.distances)
    checks = verify_code(code, D, args.max_terms)
    failed = any(c["status"] == "fail" for c in checks)
    if args.format == "json":
        out.write(_dump({"command": "verify", "path": args.code_path, "n": code.n,
                         "size": str(len(code)), "ok": not failed, "checks": checks}))
    else:
        rows = [("check", "status", "detail")] + [(c["name"], c["status"], c["detail"])
                                                  for c in checks]
        out.write(_csv(rows) if args.format == "csv" else _aligned(rows))
    return EXIT_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------- expand

def format_exponent(e) -> str:
    return "()" if not any(e) else "(" + ",".join(map(str, e)) + ")"


def cmd_expand(args, out) -> int:
    D = _distances_for(args.length, args.distances)
    if len(args.word) != args.length:
        raise UsageError(f"--word has length {len(args.word)}, expected {args.length}")
    try:
        v = Word.from_str(args.word)
    except InvalidInputError as exc:
        raise UsageError(str(exc))
    try:
        poly = build_P(v, D, args.max_terms)
    except ResourceLimitError as exc:
        raise UsageError(f"{exc}; raise --max-terms to at least the required count")
    terms = poly.sorted_terms()
    symmetric = symmetrized_even_span_check(v, D, poly=poly)
    agree = not even_formula_agreement(v, D, poly=poly)
    if args.format == "json":
        out.write(_dump({"command": "expand", "n": args.length, "distances": list(D),
                         "word": args.word,
                         "terms": [{"exponent": list(e), "coefficient": str(c)} for e, c in terms],
                         "even_symmetric": symmetric, "even_formula_agrees": agree}))
    elif args.format == "csv":
        out.write(_csv([("exponent", "coefficient")] + [(format_exponent(e), c) for e, c in terms]))
    else:
        out.write("".join(f"{format_exponent(e)} {c}\n" for e, c in terms))
        out.write(f"# even_symmetric {_bool(symmetric)}\n# even_formula_agrees {_bool(agree)}\n")
    return EXIT_OK if symmetric and agree else EXIT_FAILED


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("table", "json", "csv"), default="table")
    fmt.add_argument("--seed", type=int, default=None,
                     help="reserved; no code path is randomized")

    p = argparse.ArgumentParser(prog="fewdist",
                                description="Bounds, constructions and exact search for "
                                            "binary codes with few distances.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", parents=[fmt], help="all upper bounds on A2(n, D)")
    b.add_argument("-n", "--length", type=int, required=True)
    b.add_argument("-d", "--distances", required=True, help="e.g. 2,4")

    t = sub.add_parser("table", parents=[fmt], help="theorem1/theorem2 bounds over a range of n")
    t.add_argument("-n", "--length", required=True, help="n or lo..hi")
    t.add_argument("-s", "--num-distances", type=int, required=True)

    s = sub.add_parser("search", parents=[fmt], help="exact A2(n, D) by clique search")
    s.add_argument("-n", "--length", type=int, required=True)
    s.add_argument("-d", "--distances", required=True)
    s.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--emit-witness", action="store_true")
    s.add_argument("-o", "--output", help="also write the witness code file here")
    s.set_defaults(max_length=DEFAULT_MAX_LENGTH)

    c = sub.add_parser("construct", parents=[fmt], help="write a constructed code file")
    c.add_argument("kind", choices=("constant-weight", "golay23"))
    c.add_argument("-n", "--length", type=int)
    c.add_argument("-s", "--num-distances", type=int)
    c.add_argument("--adjoin-zero", action="store_true")
    c.add_argument("-o", "--output")

    v = sub.add_parser("verify", parents=[fmt], help="check a code file against the lemmas "
                                                     "and bounds")
    v.add_argument("code_path")
    v.add_argument("-d", "--distances")
    v.add_argument("--max-terms", type=int, default=DEFAULT_SIZE_GUARD)

    e = sub.add_parser("expand", parents=[fmt], help="expand P_v into monomials")
    e.add_argument("-n", "--length", type=int, required=True)
    e.add_argument("-d", "--distances", required=True)
    e.add_argument("--word", required=True, help="the word v, e.g. 0110")
    e.add_argument("--max-terms", type=int, default=DEFAULT_SIZE_GUARD)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "bound":
            return cmd_bound(args, out)
        if args.command == "table":
            return cmd_table(args, out)
        if args.command == "search":
            return cmd_search(args, out)
        if args.command == "construct":
            return cmd_construct(args, out, err)
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_expand(args, out)
    except UsageError as exc:
        err.write(f"fewdist {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
