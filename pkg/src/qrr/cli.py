"""Command-line front end.

Subcommands mirror the library: single-identity verification over a
parameter grid, a full-registry sweep, Bailey pair/chain demonstrations,
the telescoping certificates, the q -> 1 binomial checks, and the
degenerate specialisation that refutes the two over-claimed bilateral
transformations.

Exit codes: 0 when every check agrees (for ``counterexample``: when the
disagreement is reproduced), 1 when a comparison fails, 2 for
configuration errors (unknown identity, malformed ranges, violated
preconditions).

JSON reports are deterministic: the same command line produces the same
bytes, so timing is reported as 0.0 there (the text format shows real
timings).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .bailey import (
    chain_reproduce,
    lattice_seed_pair,
    unit_bilateral_x1,
    unit_bilateral_xq,
    unit_pair_x1,
    verify_pair,
)
from .binomial import (
    bino4_sides,
    bino5_sides,
    cor57_sides,
    cor58a_sides,
    cor58b_sides,
    divisibility_check,
    general_divisibility_check,
)
from .identities import (
    EngineError,
    UnknownIdentity,
    VerificationReport,
    get_record,
    list_identities,
    liu_counterexample,
    verify_grid,
)
from .pochhammer import PochProduct, sum_terms
from .telescoping import verify_quartic_identity, verify_sk_tk, verify_telescoping

ARTIFACT_VERSION = 1

CHAIN_TARGETS = ("ABCDE1", "ABCDE2", "ABCDE3")


# ---------------------------------------------------------------------------
# small parsers
# ---------------------------------------------------------------------------


def parse_ranges(spec: str) -> dict:
    """``"l=0..3,m=0..3"`` -> {"l": (0, 3), "m": (0, 3)}.

    A bare ``name=4`` means the single value 4.
    """
    out = {}
    for piece in spec.split(","):
        piece = piece.strip()
        if not piece:
            continue
        name, eq, span = piece.partition("=")
        name = name.strip()
        span = span.strip()
        if not eq or not name or not span:
            raise ValueError(f"range piece {piece!r} is not name=lo..hi")
        if ".." in span:
            lo_s, _, hi_s = span.partition("..")
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(span)
        if hi < lo:
            raise ValueError(f"range for {name!r} runs backwards: {span}")
        out[name] = (lo, hi)
    if not out:
        raise ValueError("empty range specification")
    return out


def parse_int_list(spec: str, count: int | None = None, flag: str = "") -> list:
    try:
        values = [int(p) for p in spec.split(",") if p.strip() != ""]
    except ValueError:
        raise ValueError(f"{flag or 'list'} must be comma-separated integers, got {spec!r}")
    if count is not None and len(values) != count:
        raise ValueError(f"{flag or 'list'} needs exactly {count} integers, got {len(values)}")
    return values


def resolve_trunc(flag_value: int | None) -> int | None:
    """--trunc beats QRR_TRUNC beats each record's default (returned as None)."""
    if flag_value is not None:
        if flag_value < 1:
            raise ValueError("--trunc must be >= 1")
        return flag_value
    raw = os.environ.get("QRR_TRUNC")
    if raw is not None:
        value = int(raw)
        if value < 1:
            raise ValueError("QRR_TRUNC must be >= 1")
        return value
    return None


# ---------------------------------------------------------------------------
# report serialisation
# ---------------------------------------------------------------------------


def _frac_str(c) -> str:
    f = Fraction(c)
    return f"{f.numerator}/{f.denominator}"


def _window_json(win) -> list:
    return [[e, _frac_str(c)] for e, c in win]


def report_to_dict(rep) -> dict:
    """Schema shared by VerificationReport and TelescopeReport."""
    ident = getattr(rep, "ident", None) or getattr(rep, "label", "?")
    d = {
        "id": ident,
        "params": {k: rep.params[k] for k in sorted(rep.params)},
        "trunc": rep.trunc,
        "verdict": rep.verdict,
    }
    if getattr(rep, "mismatch_index", None) is not None:
        d["mismatch_index"] = rep.mismatch_index
        d["lhs_window"] = _window_json(rep.lhs_window)
        d["rhs_window"] = _window_json(rep.rhs_window)
    if getattr(rep, "checks", None):
        d["checks"] = [[name, verdict] for name, verdict in rep.checks]
    if getattr(rep, "detail", ""):
        d["detail"] = rep.detail
    d["millis"] = 0.0
    return d


def emit(command: str, config: dict, reports: list, passed: int,
         fmt: str, out_path: str | None, text_lines: list) -> None:
    if fmt == "json":
        doc = {
            "artifact_version": ARTIFACT_VERSION,
            "command": command,
            "config": config,
            "reports": [report_to_dict(r) for r in reports],
            "summary": {
                "total": len(reports),
                "passed": passed,
                "failed": len(reports) - passed,
            },
        }
        payload = json.dumps(doc, indent=2) + "\n"
    else:
        payload = "\n".join(text_lines) + "\n" if text_lines else ""
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _poly_str(offset: int, coeffs: list) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        e = offset + i
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "q" if e == 1 else f"q^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def _fmt_params(params: dict) -> str:
    return " ".join(f"{k}={params[k]}" for k in sorted(params))


def _mismatch_lines(rep) -> list:
    lines = [
        f"  MISMATCH {rep.ident if hasattr(rep, 'ident') else rep.label} "
        f"{_fmt_params(rep.params)}  first differing exponent {rep.mismatch_index}"
    ]
    if rep.lhs_window:
        lines.append("    lhs " + " ".join(f"q^{e}:{c}" for e, c in rep.lhs_window))
        lines.append("    rhs " + " ".join(f"q^{e}:{c}" for e, c in rep.rhs_window))
    return lines


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_list(args) -> int:
    for ident in list_identities():
        rec = get_record(ident)
        if args.grids:
            cells = " ".join(f"{n}={lo}..{hi}" for n, lo, hi in rec.default_grid)
            tail = "  (counterexample target)" if rec.expect != "equal" else ""
            print(f"{ident:<12} {cells}  T={rec.default_trunc}{tail}")
        else:
            print(ident)
    return 0


def _grid_summary(ident: str, reports: list, text_lines: list) -> int:
    ok = sum(1 for r in reports if r.equal)
    millis = sum(r.millis for r in reports)
    line = f"{ident:<12} {ok}/{len(reports)} equal   T={reports[0].trunc}   {millis:.1f} ms"
    text_lines.append(line)
    for rep in reports:
        if not rep.equal:
            text_lines.extend(_mismatch_lines(rep))
    return ok


def cmd_verify(args) -> int:
    ident = args.id.upper()
    rec = get_record(ident)          # unknown id -> exit 2 before any work
    ranges = parse_ranges(args.range) if args.range else None
    trunc = resolve_trunc(args.trunc)
    reports = verify_grid(rec.ident, ranges, trunc, jobs=args.jobs)
    text_lines: list = []
    passed = _grid_summary(rec.ident, reports, text_lines)
    config = {
        "id": rec.ident,
        "ranges": {k: list(v) for k, v in ranges.items()} if ranges else None,
        "trunc": trunc,
        "jobs": args.jobs,
    }
    emit("verify", config, reports, passed, args.format, args.out, text_lines)
    return 0 if passed == len(reports) else 1


def cmd_verify_all(args) -> int:
    trunc = resolve_trunc(args.trunc)
    all_reports: list = []
    text_lines: list = []
    passed = 0
    for ident in list_identities():
        reports = verify_grid(ident, None, trunc, jobs=args.jobs)
        passed += _grid_summary(ident, reports, text_lines)
        all_reports.extend(reports)
    verdict = "all equal" if passed == len(all_reports) else "MISMATCHES FOUND"
    text_lines.append(
        f"total: {len(list_identities())} identities, {len(all_reports)} points, {verdict}"
    )
    config = {"trunc": trunc, "jobs": args.jobs}
    emit("verify-all", config, all_reports, passed, args.format, args.out, text_lines)
    return 0 if passed == len(all_reports) else 1


def _stock_pairs() -> list:
    return [unit_pair_x1(), unit_bilateral_x1(), unit_bilateral_xq(), lattice_seed_pair()]


def cmd_bailey(args) -> int:
    trunc = resolve_trunc(args.trunc)
    reports: list = []
    text_lines: list = []
    if args.chain:
        target = args.chain.upper()
        exps = parse_int_list(args.exps, 4, "--exps") if args.exps else [1, 1, 1, 1]
        rep = chain_reproduce(target, args.n, *exps, trunc=trunc)
        reports.append(rep)
        text_lines.append(
            f"{rep.ident:<14} {_fmt_params(rep.params)}  T={rep.trunc}  {rep.verdict}"
        )
        if not rep.equal:
            text_lines.extend(_mismatch_lines(rep))
    else:
        for pair in _stock_pairs():
            pair_reports = verify_pair(pair, n_max=args.n_max, trunc=trunc)
            reports.extend(pair_reports)
            ok = sum(1 for r in pair_reports if r.equal)
            text_lines.append(
                f"{pair.label:<18} relation holds for n=0..{args.n_max}: "
                f"{ok}/{len(pair_reports)}"
            )
            for rep in pair_reports:
                if not rep.equal:
                    text_lines.extend(_mismatch_lines(rep))
        for target in CHAIN_TARGETS:
            for n in range(args.n + 1):
                rep = chain_reproduce(target, n, trunc=trunc)
                reports.append(rep)
                if not rep.equal:
                    text_lines.extend(_mismatch_lines(rep))
            text_lines.append(f"chain({target})  reproduced for N=0..{args.n}")
    passed = sum(1 for r in reports if r.equal)
    config = {
        "chain": args.chain.upper() if args.chain else None,
        "n": args.n,
        "exps": args.exps,
        "n_max": args.n_max,
        "trunc": trunc,
    }
    emit("bailey", config, reports, passed, args.format, args.out, text_lines)
    return 0 if passed == len(reports) else 1


def cmd_telescope(args) -> int:
    if not args.params and not args.quartic:
        raise ValueError("telescope needs --params l,m,n,u,v (or --quartic)")
    trunc = resolve_trunc(args.trunc)
    reports: list = []
    text_lines: list = []
    if args.params:
        l, m, n, u, v = parse_int_list(args.params, 5, "--params")
        for rep in (verify_telescoping(l, m, n, u, v, trunc),
                    verify_sk_tk(l, m, n, u, v, trunc)):
            reports.append(rep)
            text_lines.append(f"{rep.label}  {_fmt_params(rep.params)}  {rep.verdict}")
            for name, verdict in rep.checks:
                text_lines.append(f"    {name:<24} {verdict}")
            if rep.detail:
                text_lines.append(f"    {rep.detail}")
        if any(r.verdict == "PRECONDITION" for r in reports):
            # not a failed comparison: the point is outside the certificate's domain
            for line in text_lines:
                print(line, file=sys.stderr)
            return 2
    if args.quartic:
        ok = verify_quartic_identity()
        reports.append(VerificationReport("QUARTIC", {}, 0,
                                          "EQUAL" if ok else "MISMATCH"))
        text_lines.append(f"quartic polynomial identity on the 5^4 grid: "
                          f"{'EQUAL' if ok else 'MISMATCH'}")
    passed = sum(1 for r in reports if r.equal)
    config = {"params": args.params, "quartic": bool(args.quartic), "trunc": trunc}
    emit("telescope", config, reports, passed, args.format, args.out, text_lines)
    return 0 if passed == len(reports) else 1


def _binomial_report(name: str, params: dict, ok: bool) -> VerificationReport:
    return VerificationReport(name, params, 0, "EQUAL" if ok else "MISMATCH")


def cmd_binomial(args) -> int:
    reports: list = []
    text_lines: list = []
    chosen = any([args.bino5, args.bino4, args.divisibility, args.cor57,
                  args.cor58a, args.cor58b, args.general])
    if not chosen:
        raise ValueError("binomial needs at least one of --bino5/--bino4/"
                         "--divisibility/--cor57/--cor58a/--cor58b/--general")
    n_top = args.n if args.n is not None else 12
    if n_top < 0:
        raise ValueError("--n must be >= 0")
    if args.bino5:
        for n in range(n_top + 1):
            lhs, r1, r2 = bino5_sides(n)
            reports.append(_binomial_report("BINO5", {"n": n}, lhs == r1 == r2))
        text_lines.append(f"fifth-power alternating sums, n=0..{n_top}")
    if args.bino4:
        for n in range(n_top + 1):
            lhs, r1, r2 = bino4_sides(n)
            reports.append(_binomial_report("BINO4", {"n": n}, lhs == r1 == r2))
        text_lines.append(f"fourth-power alternating sums, n=0..{n_top}")
    if args.divisibility:
        for power in (4, 5):
            for n in range(n_top + 1):
                reports.append(_binomial_report(
                    f"DIV{power}", {"n": n}, divisibility_check(n, power)))
        text_lines.append(f"central-binomial divisibility, powers 4 and 5, n=0..{n_top}")
    if args.cor57:
        l, m, n, u, v = parse_int_list(args.cor57, 5, "--cor57")
        lhs, rhs = cor57_sides(l, m, n, u, v)
        reports.append(_binomial_report(
            "COR57", {"l": l, "m": m, "n": n, "u": u, "v": v}, lhs == rhs))
        text_lines.append(f"five-parameter factorial sum at {args.cor57}: {lhs} vs {rhs}")
    if args.cor58a:
        l, m, n, u = parse_int_list(args.cor58a, 4, "--cor58a")
        lhs, rhs = cor58a_sides(l, m, n, u)
        reports.append(_binomial_report(
            "COR58A", {"l": l, "m": m, "n": n, "u": u}, lhs == rhs))
        text_lines.append(f"four-parameter factorial sum at {args.cor58a}: {lhs} vs {rhs}")
    if args.cor58b:
        m, n, u, v = parse_int_list(args.cor58b, 4, "--cor58b")
        lhs, rhs = cor58b_sides(m, n, u, v)
        reports.append(_binomial_report(
            "COR58B", {"m": m, "n": n, "u": u, "v": v}, lhs == rhs))
        text_lines.append(f"four-parameter factorial sum at {args.cor58b}: {lhs} vs {rhs}")
    if args.general:
        entries = parse_int_list(args.general, None, "--general")
        if not entries:
            raise ValueError("--general needs at least one entry")
        ok = general_divisibility_check(entries)
        reports.append(_binomial_report(
            "GENERAL", {f"n{i}": e for i, e in enumerate(entries)}, ok))
        text_lines.append(f"cyclic alternating sum at {entries}: "
                          f"{'nonnegative and divisible' if ok else 'FAILED'}")
    passed = sum(1 for r in reports if r.equal)
    verdict = "all hold" if passed == len(reports) else "FAILURES"
    text_lines.append(f"{passed}/{len(reports)} checks hold ({verdict})")
    config = {
        "bino5": bool(args.bino5), "bino4": bool(args.bino4),
        "divisibility": bool(args.divisibility), "n": n_top,
        "cor57": args.cor57, "cor58a": args.cor58a, "cor58b": args.cor58b,
        "general": args.general,
    }
    emit("binomial", config, reports, passed, args.format, args.out, text_lines)
    return 0 if passed == len(reports) else 1


def cmd_counterexample(args) -> int:
    which = args.which.upper()
    trunc = resolve_trunc(args.trunc)
    rep = liu_counterexample(which, args.a_exp, trunc)
    # the left side collapses to the polynomial (q;q)_e with
    # e = a_exp-1 (first transformation) or a_exp (second)
    degree = args.a_exp - 1 if which == "LIU1" else args.a_exp
    off, coeffs = sum_terms([PochProduct().qn(degree)], rep.trunc)
    reproduced = rep.verdict == "MISMATCH"
    text_lines = [
        f"{which} at a = q^{args.a_exp} (T={rep.trunc})",
        f"LHS = {_poly_str(off, coeffs)}",
        "RHS = 0",
    ]
    if reproduced:
        text_lines.append(
            f"first mismatch at q^{rep.mismatch_index}: refutation reproduced")
    else:
        text_lines.append("sides agree -- refutation NOT reproduced")
    config = {"which": which, "a_exp": args.a_exp, "trunc": trunc}
    emit("counterexample", config, [rep], 1 if reproduced else 0,
         args.format, args.out, text_lines)
    return 0 if reproduced else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(sub, jobs: bool = False) -> None:
    sub.add_argument("--trunc", type=int, default=None,
                     help="truncation order T (default: per-record, or QRR_TRUNC)")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--out", default=None, help="write the report to this file")
    if jobs:
        sub.add_argument("--jobs", type=int, default=1,
                         help="worker processes for grid fan-out")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrr",
        description="Exact verification of finite Rogers-Ramanujan identities.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("list", help="registered identity ids")
    p.add_argument("--grids", action="store_true",
                   help="also show default grids and truncation orders")
    p.set_defaults(func=cmd_list)

    p = subs.add_parser("verify", help="verify one identity over a grid")
    p.add_argument("--id", required=True, help="identity id (case-insensitive)")
    p.add_argument("--range", default=None,
                   help="comma-separated name=lo..hi (default: the record's grid)")
    _add_common(p, jobs=True)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("verify-all", help="sweep every identity on its default grid")
    _add_common(p, jobs=True)
    p.set_defaults(func=cmd_verify_all)

    p = subs.add_parser("bailey", help="pair relations and chain reconstructions")
    p.add_argument("--chain", choices=[t.lower() for t in CHAIN_TARGETS] + list(CHAIN_TARGETS),
                   default=None, help="rebuild one target identity from a unit pair")
    p.add_argument("--n", type=int, default=2,
                   help="chain depth N (with --chain: exactly N; else 0..N)")
    p.add_argument("--exps", default=None,
                   help="with --chain: the four parameter exponents b,c,d,e")
    p.add_argument("--n-max", type=int, default=8,
                   help="check the defining relation for n=0..n_max")
    _add_common(p)
    p.set_defaults(func=cmd_bailey)

    p = subs.add_parser("telescope", help="telescoping and termwise certificates")
    p.add_argument("--params", default=None, help="five integers l,m,n,u,v")
    p.add_argument("--quartic", action="store_true",
                   help="also check the quartic polynomial identity")
    _add_common(p)
    p.set_defaults(func=cmd_telescope)

    p = subs.add_parser("binomial", help="q -> 1 binomial consequences")
    p.add_argument("--bino5", action="store_true")
    p.add_argument("--bino4", action="store_true")
    p.add_argument("--divisibility", action="store_true")
    p.add_argument("--n", type=int, default=None,
                   help="upper bound for --bino5/--bino4/--divisibility sweeps")
    p.add_argument("--cor57", default=None, help="five integers l,m,n,u,v")
    p.add_argument("--cor58a", default=None, help="four integers l,m,n,u")
    p.add_argument("--cor58b", default=None, help="four integers m,n,u,v")
    p.add_argument("--general", default=None, help="cycle entries n0,n1,...")
    _add_common(p)
    p.set_defaults(func=cmd_binomial)

    p = subs.add_parser("counterexample",
                        help="reproduce the degenerate refutation")
    p.add_argument("--which", required=True, help="liu1 or liu2 (case-insensitive)")
    p.add_argument("--a-exp", type=int, default=2,
                   help="first parameter is q^a_exp (a_exp >= 1)")
    _add_common(p)
    p.set_defaults(func=cmd_counterexample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownIdentity as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (EngineError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
