"""Command-line front end.

    parabolic-avoid count --l 2 --m 2 --n 4
    parabolic-avoid series --l 2 --m 2 --N 6 --format bfile
    parabolic-avoid enumerate --l 1 --m 2 --a 0 --n 3
    parabolic-avoid verify --suite lemma26 --s-max 8
    parabolic-avoid asympt --l 2 --m 2
    parabolic-avoid bdpp --k 3 --N 8

JSON is the default output.  Big integers are written as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Iterable, Sequence

from . import asympt, counting, gfengine, permcore, polyalg
from .counting import Check
from .permcore import AvoidanceClass

SUITES = (
    "lemma22",
    "theorem23",
    "lemma24",
    "theorem25",
    "lemma26",
    "rook_laguerre",
    "main_theorem",
    "a_independence",
    "bdpp",
)


# -- output helpers -----------------------------------------------------------


def format_bfile(values: Sequence[int], offset: int = 0) -> str:
    return "".join(f"{i} {v}\n" for i, v in enumerate(values, offset))


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse ``n a(n)`` lines; blank lines and ``#`` comments are skipped."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, v = line.split()
        out.append((int(n), int(v)))
    return out


def format_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([str(x) for x in row])
    return buf.getvalue()


def format_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _series_output(values: Sequence[int], fmt: str, meta: dict) -> str:
    if fmt == "bfile":
        return format_bfile(values)
    if fmt == "csv":
        return format_csv(["n", "value"], enumerate(values))
    return format_json({**meta, "coefficients": [str(v) for v in values]})


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands -----------------------------------------------------------------


def cmd_count(args) -> int:
    cls = AvoidanceClass(args.l, args.m, args.a)
    record: dict = {"l": cls.l, "m": cls.m, "a": cls.a, "n": args.n}
    fast = brute = None
    if args.method in ("recurrence", "both"):
        fast = counting.f_fast(cls.l, cls.m, args.n)
    if args.method in ("brute", "both"):
        brute = counting.f_brute(cls, args.n, ceiling=args.bf_ceiling)
    value = fast if fast is not None else brute
    record["value"] = str(value)
    record["method"] = args.method
    if fast is not None and brute is not None:
        record["brute_force"] = str(brute)
        record["agree"] = fast == brute
    if args.format == "csv":
        keys = list(record)
        text = format_csv(keys, [[record[k] for k in keys]])
    elif args.format == "bfile":
        raise ValueError("count has no b-file form; use series")
    else:
        text = format_json(record)
    _emit(text, args.output)
    return 0 if record.get("agree", True) else 1


def cmd_series(args) -> int:
    if args.N < 0:
        raise ValueError("N must be non-negative")
    gf = gfengine.main_theorem_gf(args.l, args.m)
    values = gfengine.gf_coefficients(gf, args.N).as_integers()
    meta = {
        "l": args.l,
        "m": args.m,
        "N": args.N,
        "numerator": [str(c) for c in gf.numerator.coeffs],
        "denominator": [str(c) for c in gf.denominator.coeffs],
    }
    _emit(_series_output(values, args.format, meta), args.output)
    return 0


def cmd_enumerate(args) -> int:
    cls = AvoidanceClass(args.l, args.m, args.a)
    counting.require_within_ceiling(args.n, args.bf_ceiling)
    T = permcore.parabolic_coset(cls)
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        for w in permcore.iter_avoiders(args.n, T):
            out.write(" ".join(map(str, w)) + "\n")
    finally:
        if args.output:
            out.close()
    return 0


def cmd_asympt(args) -> int:
    est = asympt.growth_estimate(args.l, args.m, Fraction(args.tol))
    doc = est.as_dict()
    doc["gamma_interval_width"] = str(est.gamma_interval[1] - est.gamma_interval[0])
    doc["gamma_le_bound"] = est.gamma <= est.il_bound
    _emit(format_json(doc), args.output)
    return 0


def bdpp_report(k: int, N: int, n_check: int, ceiling: int | None = None) -> dict:
    formula = gfengine.bdpp_coefficients(k, N).as_integers()
    T = permcore.parabolic_subgroup(k, [1, 2])
    counting.require_within_ceiling(n_check, ceiling)
    brute = [permcore.enumerate_avoiders(n, T) for n in range(min(N, n_check) + 1)]
    first = gfengine.first_agreement_index(formula, brute)
    return {
        "k": k,
        "N": N,
        "coefficients": [str(v) for v in formula],
        "brute_force": [str(v) for v in brute],
        "first_agreement_index": first,
        "mismatches": [n for n in range(len(brute)) if brute[n] != formula[n]],
    }


def cmd_bdpp(args) -> int:
    rep = bdpp_report(args.k, args.N, args.n_check, args.bf_ceiling)
    if args.format == "bfile":
        text = format_bfile([int(v) for v in rep["coefficients"]])
    elif args.format == "csv":
        brute = rep["brute_force"]
        rows = ((n, v, brute[n] if n < len(brute) else "") for n, v in enumerate(rep["coefficients"]))
        text = format_csv(["n", "formula", "brute_force"], rows)
    else:
        text = format_json(rep)
    if args.format != "json":
        print(f"first agreement index: {rep['first_agreement_index']}", file=sys.stderr)
    _emit(text, args.output)
    return 0


# -- verification suites ------------------------------------------------------


def _classes(k_max: int, *, a_le_m: bool) -> Iterable[AvoidanceClass]:
    for k in range(2, k_max + 1):
        for l in range(1, k):  # noqa: E741
            m = k - l
            for a in range(k):
                if a_le_m and a > m:
                    continue
                yield AvoidanceClass(l, m, a)


def _suite_cases(suite: str, args) -> Iterable[Check]:
    k_max, n_max, s_max, ceil = args.k_max, args.n_max, args.s_max, args.bf_ceiling
    if suite == "lemma22":
        for cls in _classes(k_max, a_le_m=True):
            for n in range(cls.k, n_max + 1):
                yield counting.verify_lemma22(cls, n, ceiling=ceil)
    elif suite == "theorem23":
        for cls in _classes(k_max, a_le_m=True):
            for n in range(cls.k + 1, n_max + 1):
                for d in range(1, cls.l):
                    yield counting.verify_theorem23(cls, n, d, ceiling=ceil)
    elif suite == "lemma24":
        for cls in _classes(k_max, a_le_m=True):
            for n in range(cls.k, n_max + 1):
                for d in range(1, cls.l + 1):
                    yield counting.verify_lemma24(cls, n, d, ceiling=ceil)
    elif suite == "theorem25":
        for cls in _classes(k_max, a_le_m=True):
            for d in range(cls.l + 1):
                yield counting.verify_boundary_A(cls, d, ceiling=ceil)
            for n in range(cls.k, n_max + 1):
                yield counting.verify_theorem25(cls, n, ceiling=ceil)
    elif suite == "lemma26":
        for s in range(1, s_max + 1):
            for t in range(s, s_max + 1):
                for n in range(s, 2 * (s + t) + 1):
                    inputs = {"s": s, "t": t, "n": n}
                    yield counting.check_equal("lemma26", inputs, counting.M_direct(s, t, n), counting.M_closed(s, t, n))
        for k in range(2, 2 * s_max + 1):
            for l in range(1, k):  # noqa: E741
                for d in range(1, l + 1):
                    yield counting.verify_reduction_identity(l, k - l, d)
    elif suite == "rook_laguerre":
        for s in range(s_max + 1):
            for t in range(s, s_max + 1):
                ok = polyalg.check_rook_laguerre(s, t)
                yield Check("rook_laguerre", {"s": s, "t": t}, ok, True, ok)
        for s in range(min(s_max, 5) + 1):
            for t in range(min(s_max, 5) + 1):
                rook = [int(c) for c in polyalg.rook_poly(s, t).coeffs]
                yield counting.check_equal("rook_brute", {"s": s, "t": t}, rook, polyalg.rook_placements_brute(s, t))
    elif suite in ("main_theorem", "a_independence"):
        for k in range(2, k_max + 1):
            for l in range(1, k):  # noqa: E741
                m = k - l
                series = gfengine.gf_coefficients(gfengine.main_theorem_gf(l, m), n_max).as_integers()
                fast = counting.f_sequence(l, m, n_max)
                for n in range(n_max + 1):
                    brute = [counting.f_brute(AvoidanceClass(l, m, a), n, ceiling=ceil) for a in range(k)]
                    inputs = {"l": l, "m": m, "n": n}
                    if suite == "main_theorem":
                        for a, b in enumerate(brute):
                            ok = b == series[n] == fast[n]
                            yield Check("main_theorem", {**inputs, "a": a}, b, series[n], ok, {"recurrence": fast[n]})
                    else:
                        yield Check("a_independence", inputs, brute, brute[0], len(set(brute)) == 1)
    elif suite == "bdpp":
        for k in range(3, max(k_max, 3) + 1):
            rep = bdpp_report(k, n_max, n_max, ceil)
            first = rep["first_agreement_index"]
            detail = {"mismatches": rep["mismatches"]}
            if k == 3:
                catalan = [polyalg.binomial(2 * n, n) // (n + 1) for n in range(n_max + 1)]
                tail_ok = all(int(rep["coefficients"][n]) == catalan[n] for n in range(first, n_max + 1))
                detail["catalan_tail"] = tail_ok
            else:
                tail_ok = True
            yield Check("bdpp", {"k": k}, first, f"<= {k}", first <= k and tail_ok, detail)
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


def run_suite(suite: str, args) -> dict:
    # keyed on sorted inputs so the order matches the key-sorted JSON
    cases = sorted(_suite_cases(suite, args), key=lambda c: (c.name, tuple(sorted(c.inputs.items()))))
    failed = [c for c in cases if not c.ok]
    return {
        "suite": suite,
        "bounds": {"k_max": args.k_max, "n_max": args.n_max, "s_max": args.s_max},
        "total": len(cases),
        "failed": len(failed),
        "passed": not failed,
        "cases": [c.as_dict() for c in cases],
    }


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args)
    _emit(format_json(report), args.output)
    return 0 if report["passed"] else 1


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parabolic-avoid",
        description="Count and enumerate permutations avoiding cosets of maximal parabolic subgroups.",
    )
    parser.add_argument(
        "--bf-ceiling",
        type=int,
        default=None,
        help="largest n accepted by brute-force oracles (default: $PARABOLIC_AVOID_BF_CEILING or 12)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def lm(p, with_a=False):
        p.add_argument("--l", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        if with_a:
            p.add_argument("--a", type=int, default=0)

    def out(p, formats=("json", "csv", "bfile")):
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--output", "-o", default=None, help="write to a file instead of stdout")

    p = sub.add_parser("count", help="f_{l,m}^a(n)")
    lm(p, with_a=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("recurrence", "brute", "both"), default="recurrence")
    out(p, ("json", "csv"))
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", help="generating-function coefficients 0..N")
    lm(p)
    p.add_argument("--N", type=int, required=True)
    out(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("enumerate", help="list the avoiders in S_n, one per line")
    lm(p, with_a=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run an identity sweep; exit 0 iff every case passes")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--s-max", type=int, default=8)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asympt", help="growth rate, leading constant and upper bound")
    lm(p)
    p.add_argument("--tol", type=str, default="1e-12", help="interval width for gamma")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_asympt)

    p = sub.add_parser("bdpp", help="coefficients of the F_{1,1,k-2} closed form")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n-check", type=int, default=8, help="brute-force comparison up to this n")
    out(p)
    p.set_defaults(func=cmd_bdpp)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
