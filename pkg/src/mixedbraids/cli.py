"""Command-line interface.

Braid words are whitespace-separated signed generator indices ("1 2 -1" is
sigma_1 sigma_2 sigma_1^-1). Permutations use cycle notation, "(1 2)(3 4)".
Group specs: --pure | --full | --mixed A,B | --gens "(1 2)(3 4);(1 2 3)".

Exit status: 0 on success, 1 on a domain error (one line on stderr,
"error: <kind>: <message>"), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from mixedbraids import kernels
from mixedbraids.bounds import analyze, bounds_table, tc_bounds, to_csv
from mixedbraids.braid import BraidWord, invert, permutation_of, product
from mixedbraids.equivalence import StepBudgetExceeded, equals, is_pure
from mixedbraids.linking import linking_matrix
from mixedbraids.permutations import GroupSpec, GroupTooLargeError
from mixedbraids.torsion import torsion_report, torsion_witness
from mixedbraids.verification import SUITES, run_suite


class DomainError(Exception):
    pass


def _int_range(text: str) -> list[int]:
    """"3", "3-8", "3..8" or "2,4,6"."""
    out: list[int] = []
    try:
        for chunk in text.split(","):
            chunk = chunk.strip().replace("..", "-")
            if "-" in chunk[1:]:
                a, b = chunk.split("-", 1) if not chunk.startswith("-") else (chunk, "")
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(chunk))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer range {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return out


def _blocks(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--mixed expects A,B, got {text!r}") from None
    return a, b


def _add_group_args(p: argparse.ArgumentParser, with_k: bool = False):
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--pure", action="store_true", help="G trivial (pure braids)")
    grp.add_argument("--full", action="store_true", help="G = S_n")
    grp.add_argument("--mixed", type=_blocks, metavar="A,B", help="G = S_A x S_B")
    grp.add_argument("--gens", metavar="PERMS", help='generators, e.g. "(1 2)(3 4);(1 2 3)"')
    if with_k:
        grp.add_argument("--k", type=_int_range, metavar="RANGE", help="G = S_{n-k} x S_k for each k")


def _group(args, n: int) -> GroupSpec:
    if args.pure:
        return GroupSpec.pure(n)
    if args.full:
        return GroupSpec.full(n)
    if args.mixed:
        a, b = args.mixed
        if a + b != n:
            raise DomainError(f"--mixed {a},{b} does not partition n={n}")
        return GroupSpec.mixed(a, b)
    return GroupSpec.parse_generators(n, args.gens)


def _word(n: int, text: str) -> BraidWord:
    return BraidWord.parse(n, text)


def _emit(out, fmt: str, text: str, payload, csv_text: str | None = None):
    if fmt == "json":
        out.write(json.dumps(payload) + "\n")
    elif fmt == "csv" and csv_text is not None:
        out.write(csv_text)
    else:
        out.write(text + "\n")


def cmd_bounds(args, out):
    g = _group(args, args.n)
    r = tc_bounds(args.n, g, args.m)
    kind = "TC" if r.m == 2 else f"TC_{r.m}"
    lines = [f"{kind}(B_{r.n}^G), G = {g.describe()}: "
             + (f"= {r.lower}" if r.exact else f"in [{r.lower}, {r.upper}]") + f"  (cd = {r.cd})"]
    lines += [f"  {e['bound']}: {e['quote']}" + (f"  [{e['note']}]" if e.get("note") else "")
              for e in r.provenance]
    _emit(out, args.format, "\n".join(lines), r.to_dict(), to_csv([r]))


def cmd_table(args, out):
    rows = []
    for n in args.n:
        for m in args.m:
            if args.k:
                for k in args.k:
                    if not 1 <= k <= n - 1:
                        raise DomainError(f"k={k} outside 1..{n - 1} for n={n}")
                    rows.append((n, GroupSpec.mixed(n - k, k), m))
            else:
                rows.append((n, _group(args, n), m))
    reports = bounds_table(rows)
    text = "\n".join(f"n={r.n:<3} m={r.m:<2} {r.group:<14} [{r.lower}, {r.upper}]"
                     + ("  exact" if r.exact else "") for r in reports)
    _emit(out, args.format, text, [r.to_dict(with_group=True) for r in reports], to_csv(reports))


def cmd_torsion(args, out):
    rep = torsion_report(args.n, args.k)
    a, b, c = rep.gcds
    if rep.torsion_free:
        text = f"torsion: no (gcd({args.n},{args.k})={a}, gcd({args.n - 1},{args.k})={b}, " \
               f"gcd({args.n - 1},{args.k - 1})={c})"
    else:
        failing = [f"gcd({x},{y})={v}" for (x, y), v in
                   zip(((args.n, args.k), (args.n - 1, args.k), (args.n - 1, args.k - 1)), rep.gcds) if v != 1]
        w = rep.witness
        text = (f"torsion: yes ({', '.join(failing)})\n"
                f"witness: {w.word}\n"
                f"source: {w.source}^{w.exponent}; witness^{w.order[0]} = Delta^{w.order[1]}")
    _emit(out, args.format, text, rep.to_dict())


def cmd_witness(args, out):
    try:
        rep = torsion_witness(args.n, args.k)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    w = rep.witness
    text = f"{w.word}\nsource: {w.source}^{w.exponent}; witness^{w.order[0]} = Delta^{w.order[1]}"
    _emit(out, args.format, text, rep.to_dict())


def cmd_braid(args, out):
    n = args.n
    words = [_word(n, t) for t in args.words]
    op = args.op
    need = {"multiply": None, "invert": 1, "perm": 1, "linking": 1, "is-pure": 1, "equal": 2}[op]
    if need is not None and len(words) != need:
        raise DomainError(f"braid {op} takes {need} word(s), got {len(words)}")
    if op == "multiply":
        w = product(n, words)
        _emit(out, args.format, str(w), {"n": n, "word": list(w.letters)})
    elif op == "invert":
        w = invert(words[0])
        _emit(out, args.format, str(w), {"n": n, "word": list(w.letters)})
    elif op == "perm":
        p = permutation_of(words[0])
        _emit(out, args.format, p.cycle_notation(),
              {"n": n, "cycles": p.cycle_notation(), "images": [p(i) for i in range(1, n + 1)]})
    elif op == "linking":
        prof = linking_matrix(words[0])
        text = "\n".join(" ".join(f"{x:>3}" for x in row) for row in prof.matrix)
        header = "components: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in prof.components)
        csv_text = "\n".join(",".join(map(str, row)) for row in prof.matrix) + "\n"
        _emit(out, args.format, header + "\n" + text,
              {"n": n, "components": [list(c) for c in prof.components], "matrix": prof.as_lists()}, csv_text)
    elif op == "is-pure":
        ok = is_pure(words[0])
        _emit(out, args.format, "pure" if ok else "not pure", {"n": n, "pure": ok})
    else:
        v = equals(words[0], words[1], args.budget)
        _emit(out, args.format, "equal" if v.equal else "not equal",
              {"n": n, "equal": v.equal, "effort": v.effort})


def cmd_verify(args, out, parser):
    name = args.suite_opt or args.suite or "all"
    names = list(SUITES) if name == "all" else [name]
    if any(x not in SUITES for x in names):
        parser.error(f"unknown suite {name!r}; choose from: all, {', '.join(SUITES)}")
    results = [run_suite(x, args.seed) for x in names]
    if args.format == "json":
        payload = [{"suite": r.name, "passed": r.passed, "checks": r.checks,
                    "failures": r.failures} for r in results]
        out.write(json.dumps(payload) + "\n")
    else:
        for r in results:
            out.write(r.summary().rsplit(" (", 1)[0] + "\n")
            for f in r.failures[:10]:
                out.write(f"  {f}\n")
    return 0 if all(r.passed for r in results) else 1


def cmd_analyze(args, out):
    info = analyze(_group(args, args.n))
    payload = {
        "n": info.degree,
        "orbits": [list(o) for o in info.orbits],
        "fixed_points": info.fixed_points,
        "bipartitions": [{"blocks": [b.first, b.k], "gcds": list(b.gcds), "coprime": b.coprime}
                         for b in info.bipartitions],
    }
    text = (f"orbits: {' '.join('{' + ','.join(map(str, o)) + '}' for o in info.orbits)}\n"
            f"fixed points: {info.fixed_points}\n"
            + "\n".join(f"blocks ({b.first},{b.k}) gcds {b.gcds}" + ("  coprime" if b.coprime else "")
                        for b in info.bipartitions))
    _emit(out, args.format, text, payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixedbraids", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json", "csv")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("bounds", help="interval for TC_m(B_n^G)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=2)
    _add_group_args(p)
    fmt(p)

    p = sub.add_parser("table", help="bounds for ranges of n, m and groups")
    p.add_argument("--n", type=_int_range, required=True, metavar="RANGE")
    p.add_argument("--m", type=_int_range, default=[2], metavar="RANGE")
    _add_group_args(p, with_k=True)
    fmt(p)

    p = sub.add_parser("analyze", help="orbits and block structure of a group spec")
    p.add_argument("--n", type=int, required=True)
    _add_group_args(p)
    fmt(p, ("text", "json"))

    for name, helptext in (("torsion", "torsion in B_{n-k,k} modulo its centre"),
                           ("witness", "explicit torsion witness")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        fmt(p, ("text", "json"))

    p = sub.add_parser("braid", help="braid word operations")
    p.add_argument("op", choices=["multiply", "invert", "perm", "linking", "is-pure", "equal"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("words", nargs="+", metavar="WORD")
    p.add_argument("--budget", type=int, default=10**6, help="step budget for equal")
    fmt(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", nargs="?", help=f"all, {', '.join(SUITES)}")
    p.add_argument("--suite", dest="suite_opt")
    p.add_argument("--seed", type=int, default=0)
    fmt(p, ("text", "json"))
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "bounds": cmd_bounds,
        "table": cmd_table,
        "analyze": cmd_analyze,
        "torsion": cmd_torsion,
        "witness": cmd_witness,
        "braid": cmd_braid,
    }
    try:
        if args.command == "verify":
            return cmd_verify(args, out, parser)
        handlers[args.command](args, out)
    except (DomainError, ValueError, StepBudgetExceeded, GroupTooLargeError) as exc:
        kind = "budget" if isinstance(exc, StepBudgetExceeded) else \
            "group-too-large" if isinstance(exc, GroupTooLargeError) else "domain"
        print(f"error: {kind}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
