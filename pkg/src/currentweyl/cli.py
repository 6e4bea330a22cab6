"""Command line: characters, verification suites and closed-form tables.

Exit status: 0 all pass, 1 verification failure, 2 usage error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, isqrt
from typing import Callable

from . import combinat
from .coinvariants import DEFAULT_MAX_DEGREE, DegreeCapExceeded, RankConfig, coinvariant_dims, engine
from .exactla import DEFAULT_PRIMES, RankProvenance
from .symfunc import parking_weight_character
from .uea import martini_check
from .weylmod import (ROUTES, PointMultiset, UnsupportedConfiguration, WeightCharacter,
                      origin_weyl_character, points_weyl_character, truncation_stability_check,
                      verify_tensor_factorization)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
SUITES = ("catalan", "narayana", "higher-catalan", "three-way", "tensor", "martini",
          "conjecture", "chevalley")
TABLES = ("catalan", "narayana", "higher-catalan", "hoggatt")


class UsageError(ValueError):
    pass


class ResourceCap(RuntimeError):
    pass


@dataclass
class Report:
    command: str
    inputs: dict
    body: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    timing: float | None = None
    exit_code: int = EXIT_PASS
    # (header, rows) for csv output
    table: tuple[list[str], list[list]] = ([], [])

    def to_json(self) -> dict:
        out = {"command": self.command, "inputs": self.inputs, **self.body,
               "provenance": self.provenance}
        if self.timing is not None:
            out["timing"] = {"seconds": round(self.timing, 3)}
        return out


def _big(x: int) -> str:
    # counts can exceed 2**53, so they travel as decimal strings
    return str(x)


# -- configuration -------------------------------------------------------------

def _rank_config(args) -> RankConfig:
    p1, p2 = args.primes
    if p1 == p2:
        raise UsageError("--primes needs two distinct primes")
    for p in (p1, p2):
        if p < 3 or any(p % q == 0 for q in range(2, isqrt(p) + 1)):
            raise UsageError(f"{p} is not an odd prime")
    return RankConfig(primes=(p1, p2), exact=args.exact)


def _provenance(cfg: RankConfig, provs: list[RankProvenance]) -> dict:
    return {
        "rank_mode": "rational" if cfg.exact else "two-prime",
        "primes": [] if cfg.exact else list(cfg.primes),
        "rank_calls": sum(p.calls for p in provs),
        "escalated": any(p.escalated for p in provs),
    }


def _origin(n, d, r, cfg, max_degree, provs) -> WeightCharacter:
    try:
        ch = origin_weyl_character(n, d, r, cfg, max_degree)
    except DegreeCapExceeded as exc:
        raise ResourceCap(str(exc)) from exc
    provs.append(engine(n, d, cfg, max_degree).provenance)
    return ch


def _character_rows(ch: WeightCharacter) -> list[dict]:
    return [{"composition": list(c), "weight": list(w), "dim": _big(v)} for c, w, v in ch.rows()]


# -- character -----------------------------------------------------------------

def cmd_character(args) -> Report:
    cfg = _rank_config(args)
    provs: list[RankProvenance] = []
    if args.points is not None:
        if args.d != 1:
            raise UsageError(f"point multisets are realized only for d=1 (got --d {args.d}); "
                             "for d >= 2 only the origin is supported")
        pts = PointMultiset.of(args.points)
        if args.n is not None and args.n != pts.n:
            raise UsageError(f"--n {args.n} disagrees with {pts.n} points")
        N = args.N if args.N is not None else pts.n
        if N < pts.n:
            raise UsageError(f"--N {N} is below the number of points {pts.n}")
        prov = RankProvenance(cfg.primes)
        provs.append(prov)
        ch = points_weyl_character(pts, args.r, N, args.route, cfg, prov)
        inputs = {"points": [str(p[0]) for p in pts.points], "d": 1, "r": args.r, "N": N,
                  "route": args.route}
    else:
        if args.n is None:
            raise UsageError("--n is required without --points")
        ch = _origin(args.n, args.d, args.r, cfg, args.max_degree, provs)
        inputs = {"n": args.n, "d": args.d, "r": args.r, "max_degree": args.max_degree}
    rows = _character_rows(ch)
    return Report("character", inputs,
                  {"character": rows, "total": _big(ch.total)},
                  _provenance(cfg, provs),
                  table=(["composition", "weight", "dim"],
                         [[_tup(r["composition"]), _tup(r["weight"]), r["dim"]] for r in rows]))


def _tup(xs) -> str:
    return " ".join(str(x) for x in xs)


# -- verify --------------------------------------------------------------------

def _case(name: str, lhs, rhs, ok: bool | None = None, soft: bool = False) -> dict:
    """One verdict; without ``ok`` the two sides are compared."""
    if ok is None:
        ok = str(lhs) == str(rhs)
    status = ("match" if ok else "mismatch") if soft else ("pass" if ok else "fail")
    return {"case": name, "lhs": str(lhs), "rhs": str(rhs), "status": status}


def _char_str(ch: dict) -> str:
    return ";".join(f"{_tup(c)}:{v}" for c, v in sorted(ch.items(), reverse=True) if v)


def _upto(args, default: int) -> range:
    n = default if args.n is None else args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    return range(0, n + 1)


def suite_catalan(args, cfg, provs):
    return [_case(f"n={n}", _origin(n, 2, 1, cfg, args.max_degree, provs).total,
                  combinat.catalan(n)) for n in _upto(args, 3)]


def suite_narayana(args, cfg, provs):
    cases = []
    for n in _upto(args, 3):
        ch = _origin(n, 2, 1, cfg, args.max_degree, provs)
        for i in range(n + 1):
            cases.append(_case(f"n={n} i={i}", ch[(n - i, i)], combinat.narayana(n, i)))
    return cases


def suite_higher_catalan(args, cfg, provs):
    return [_case(f"n={n} r={args.r}", _origin(n, 2, args.r, cfg, args.max_degree, provs).total,
                  combinat.higher_catalan(n, args.r)) for n in _upto(args, 2)]


def suite_three_way(args, cfg, provs):
    cases = []
    for n in _upto(args, 3):
        a = _origin(n, 2, args.r, cfg, args.max_degree, provs).entries
        b = combinat.raney_weight_census(n, args.r)
        c = parking_weight_character(n, args.r)
        cases.append(_case(f"n={n} r={args.r} coinvariant vs raney", _char_str(a), _char_str(b)))
        cases.append(_case(f"n={n} r={args.r} raney vs frobenius", _char_str(b), _char_str(c)))
    return cases


def suite_tensor(args, cfg, provs):
    if args.points is not None:
        multisets = [tuple(args.points)]
    else:
        top = 3 if args.n is None else args.n
        multisets = [ms for n in range(1, top + 1)
                     for ms in itertools.combinations_with_replacement([0, 1, 2], n)]
    cases = []
    for ms in multisets:
        pts = PointMultiset.of(ms)
        rep = verify_tensor_factorization(pts, args.r, args.N, args.route, cfg)
        label = "points=" + ",".join(str(p[0]) for p in pts.points)
        factors = "*".join(str(f.total) for f in rep.factors)
        cases.append(_case(f"{label} total", rep.whole.total, factors + f"={rep.product.total}",
                           rep.total_factorizes))
        cases.append(_case(f"{label} character", _char_str(rep.whole.entries),
                           _char_str(rep.product.entries), rep.passed))
        N = pts.n if args.N is None else args.N
        stable = truncation_stability_check(pts, args.r, N, args.route, cfg)
        cases.append(_case(f"{label} truncation N={N} vs {N + 1}", "stable" if stable else "changed",
                           "stable", stable))
    return cases


def suite_martini(args, cfg, provs):
    n = 2 if args.n is None else args.n
    m = args.m
    if n < 0 or m < 0:
        raise UsageError("--n and --m must be nonnegative")
    if n + m > args.max_size:
        raise ResourceCap(f"n + m = {n + m} exceeds --max-size {args.max_size}")
    rep = martini_check(m, n)
    sign = "+" if n % 2 == 0 else "-"
    cases = [_case(f"n={n} m={m} support", len(rep.table) + len(rep.stray),
                   f"{len(rep.table)} servings", rep.support_ok)]
    for s, c in rep.table.items():
        ok = c != 0 and (m == 0 or (-1) ** n * c > 0)
        cases.append(_case(f"c({s or 'empty'})", c, f"sign {sign}" if m else "nonzero", ok))
    return cases


def suite_conjecture(args, cfg, provs):
    d = 3 if args.d is None else args.d
    n = 2 if args.n is None else args.n
    if n < 1:
        raise UsageError("--n must be positive")
    ch = _origin(n, d, 1, cfg, args.max_degree, provs)
    return [_case(f"n={n} d={d} weight {n - 2 * i}", ch[(n - i, i)],
                  combinat.hoggatt_conjecture_dim(n, i, d), soft=True) for i in range(n + 1)]


def suite_chevalley(args, cfg, provs):
    cases = []
    for n in _upto(args, 4):
        try:
            dims = coinvariant_dims(n, 1, cfg, args.max_degree)
        except DegreeCapExceeded as exc:
            raise ResourceCap(str(exc)) from exc
        provs.append(engine(n, 1, cfg, args.max_degree).provenance)
        expect = combinat.q_factorial(n)
        cases.append(_case(f"n={n} graded", _tup(dims.by_degree()), _tup(expect)))
        cases.append(_case(f"n={n} total", dims.total, factorial(n)))
    return cases


SUITE_FUNCS: dict[str, Callable] = {
    "catalan": suite_catalan, "narayana": suite_narayana, "higher-catalan": suite_higher_catalan,
    "three-way": suite_three_way, "tensor": suite_tensor, "martini": suite_martini,
    "conjecture": suite_conjecture, "chevalley": suite_chevalley,
}


def cmd_verify(args) -> Report:
    cfg = _rank_config(args)
    if args.points is not None and args.suite != "tensor":
        raise UsageError("--points applies only to the tensor suite")
    if args.d is not None and args.suite != "conjecture":
        raise UsageError("--d applies only to the conjecture suite")
    if args.points is not None:
        pts = PointMultiset.of(args.points)
        if args.N is not None and args.N < pts.n:
            raise UsageError(f"--N {args.N} is below the number of points {pts.n}")
    provs: list[RankProvenance] = []
    cases = SUITE_FUNCS[args.suite](args, cfg, provs)
    if args.suite == "conjecture":
        # an open conjecture: report agreement, never fail
        status = "match" if all(c["status"] == "match" for c in cases) else "mismatch"
        code = EXIT_PASS
    else:
        status = "pass" if all(c["status"] == "pass" for c in cases) else "fail"
        code = EXIT_PASS if status == "pass" else EXIT_FAIL
    inputs = {k: v for k, v in (("suite", args.suite), ("n", args.n), ("m", args.m), ("r", args.r),
                                ("d", args.d), ("N", args.N),
                                ("points", None if args.points is None else [str(p) for p in args.points]))
              if v is not None}
    return Report("verify", inputs, {"cases": cases, "status": status}, _provenance(cfg, provs),
                  exit_code=code,
                  table=(["case", "lhs", "rhs", "status"],
                         [[c["case"], c["lhs"], c["rhs"], c["status"]] for c in cases]))


# -- table ---------------------------------------------------------------------

def cmd_table(args) -> Report:
    ns = range(args.min_n, args.max_n + 1)
    if args.kind == "catalan":
        header = ["n", "value"]
        rows = [[n, combinat.catalan(n)] for n in ns]
    elif args.kind == "narayana":
        header = ["n", "i", "value"]
        rows = [[n, i, combinat.narayana(n, i)] for n in ns for i in range(n + 1)]
    elif args.kind == "higher-catalan":
        header = ["n", "r", "value"]
        rows = [[n, args.r, combinat.higher_catalan(n, args.r)] for n in ns]
    else:
        d = 3 if args.d is None else args.d
        header = ["n", "d", "i", "value"]
        rows = [[n, d, i, combinat.hoggatt_conjecture_dim(n, i, d)] for n in ns if n >= 1
                for i in range(n + 1)]
    json_rows = [dict(zip(header, row[:-1] + [_big(row[-1])])) for row in rows]
    inputs = {"kind": args.kind, "min_n": args.min_n, "max_n": args.max_n}
    if args.kind == "higher-catalan":
        inputs["r"] = args.r
    if args.kind == "hoggatt":
        inputs["d"] = 3 if args.d is None else args.d
    return Report("table", inputs, {"columns": header, "rows": json_rows}, {},
                  table=(header, [[str(x) for x in row] for row in rows]))


# -- output --------------------------------------------------------------------

def render(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.to_json(), indent=2, sort_keys=False) + "\n"
    header, rows = rep.table
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    lines = [f"{rep.command}: " + ", ".join(f"{k}={v}" for k, v in rep.inputs.items())]
    widths = [max([len(str(h))] + [len(str(r[i])) for r in rows]) for i, h in enumerate(header)]
    lines.append("  ".join(str(h).ljust(w) for h, w in zip(header, widths)))
    for r in rows:
        lines.append("  ".join(str(x).ljust(w) for x, w in zip(r, widths)))
    for key in ("total", "status"):
        if key in rep.body:
            lines.append(f"{key}: {rep.body[key]}")
    if rep.provenance:
        lines.append("rank: " + ", ".join(f"{k}={v}" for k, v in rep.provenance.items()))
    return "\n".join(lines) + "\n"


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{s!r} is not a rational number")


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    common.add_argument("--primes", type=int, nargs=2, default=list(DEFAULT_PRIMES),
                        metavar=("P1", "P2"), help="primes for the two-prime rank crosscheck")
    common.add_argument("--exact", action="store_true", help="rational elimination only")
    common.add_argument("--max-degree", type=_positive, default=DEFAULT_MAX_DEGREE,
                        help="cap on the total degree explored in the coinvariant quotient")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field")

    parser = argparse.ArgumentParser(prog="currentweyl",
                                     description="Local Weyl modules for sl(r+1) currents.")
    sub = parser.add_subparsers(dest="command", required=True)

    ch = sub.add_parser("character", parents=[common], help="weight character of a local Weyl module")
    ch.add_argument("--n", type=_nonneg)
    ch.add_argument("--d", type=_positive, default=1)
    ch.add_argument("--r", type=_positive, default=1)
    ch.add_argument("--points", type=_rational, nargs="*", help="point multiset on the line")
    ch.add_argument("--N", type=_nonneg, help="truncation order (default: number of points)")
    ch.add_argument("--route", choices=ROUTES, default="block")

    ve = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ve.add_argument("suite", choices=SUITES)
    ve.add_argument("--n", type=int)
    ve.add_argument("--m", type=_nonneg, default=1)
    ve.add_argument("--r", type=_positive, default=1)
    ve.add_argument("--d", type=_positive)
    ve.add_argument("--points", type=_rational, nargs="+")
    ve.add_argument("--N", type=_nonneg)
    ve.add_argument("--route", choices=ROUTES, default="block")
    ve.add_argument("--max-size", type=_nonneg, default=7, help="cap on n + m for the martini suite")

    ta = sub.add_parser("table", parents=[common], help="closed-form count tables")
    ta.add_argument("kind", choices=TABLES)
    ta.add_argument("--min-n", type=int, default=0)
    ta.add_argument("--max-n", type=int, default=4)
    ta.add_argument("--r", type=_positive, default=2)
    ta.add_argument("--d", type=_positive)
    return parser


COMMANDS = {"character": cmd_character, "verify": cmd_verify, "table": cmd_table}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        rep = COMMANDS[args.command](args)
    except (UsageError, UnsupportedConfiguration) as exc:
        print(f"currentweyl {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCap as exc:
        rep = Report(args.command, {"argv": list(sys.argv[1:] if argv is None else argv)},
                     {"status": "aborted", "reason": str(exc)}, exit_code=EXIT_CAP,
                     table=(["status", "reason"], [["aborted", str(exc)]]))
        print(f"currentweyl {args.command}: resource cap: {exc}", file=sys.stderr)
    if not args.no_timing:
        rep.timing = time.perf_counter() - start
    sys.stdout.write(render(rep, args.format))
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
