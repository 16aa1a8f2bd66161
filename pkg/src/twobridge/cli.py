"""Command-line front end.

Exit codes: 0 ok, 1 input error, 2 verification mismatch, 3 theorem inapplicable.
"""
from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction

from .alexander import alexander
from .apoly import ahat_degrees
from .casson import casson_invariant, exceptional_slopes, lambda_prime
from .golden import (
    GoldenFormatError,
    bundled_table_path,
    discover,
    knot_classes,
    read_rows,
    verify_rows,
)
from .knots import (
    DoubleTwistKnot,
    InvalidKnotError,
    SlopeParseError,
    as_two_bridge,
    canonical,
    classify,
    mirror,
    parse_knot,
    parse_slope,
)
from .seminorm import build_table, eval_seminorm, is_norm
from .surfaces import all_surfaces

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_INAPPLICABLE = 0, 1, 2, 3


def fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_json(x: Fraction) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def knot_json(k) -> dict:
    return {"alpha": k.alpha, "beta": k.beta}


def surfaces_json(surfaces) -> list[dict]:
    return [{
        "expansion": list(s.expansion.entries),
        "slope": s.boundary_slope,
        "doubled_weight": s.doubled_weight,
        "weight": rational_json(s.weight),
        "seifert": s.is_seifert,
    } for s in surfaces]


def terms_json(table) -> list[dict]:
    return [{"slope": n, "doubled_weight": w} for n, w in table.terms]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _resolve(spec: str):
    parsed = parse_knot(spec)
    return parsed, as_two_bridge(parsed)


def cmd_info(args, out) -> int:
    parsed, k = _resolve(args.knot)
    alex = alexander(k)
    table = build_table(k)
    deg = ahat_degrees(k, table)
    lp = lambda_prime(k)
    exc = sorted(exceptional_slopes(k), key=lambda s: s.p)
    if args.json:
        payload = {
            "knot": knot_json(k),
            "input": args.knot,
            "canonical": knot_json(canonical(k)),
            "mirror": knot_json(mirror(k)),
            "classification": classify(k),
            "alexander": list(alex.delta.coeffs),
            "fibered": alex.is_monic,
            "lambda_prime": rational_json(lp),
            "ahat_degrees": {"deg_M": deg.deg_M, "deg_L": deg.deg_L},
            "seminorm_terms": terms_json(table),
            "is_norm": is_norm(table),
            "exceptional_slopes": [str(s) for s in exc],
        }
        out.write(_dump(payload) + "\n")
        return EXIT_OK
    lines = [
        f"knot            {k}" + (f"  (from {parsed})" if isinstance(parsed, DoubleTwistKnot) else ""),
        f"alpha, beta     {k.alpha}, {k.beta}",
        f"canonical       {canonical(k)}",
        f"mirror          {mirror(k)}",
        f"class           {classify(k)}",
        f"Alexander       {alex.delta}",
        f"fibered         {'yes' if alex.is_monic else 'no'}",
        f"lambda'         {fmt_rational(lp)}",
        f"Ahat degrees    deg_M = {deg.deg_M}, deg_L = {deg.deg_L}",
        f"seminorm        {seminorm_display(table)}",
        f"norm            {'yes' if is_norm(table) else 'no'}",
        f"excluded slopes {{{', '.join(str(s.p) for s in exc)}}}",
    ]
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def seminorm_display(table) -> str:
    parts = []
    for n, w in table.terms:
        if w == 0:
            continue
        coef = fmt_rational(Fraction(w, 2))
        if n == 0:
            body = "|p|"
        else:
            body = f"|p {'-' if n > 0 else '+'} {abs(n)}q|"
        parts.append(body if coef == "1" else f"{coef}{body}")
    return " + ".join(parts) if parts else "0"


def cmd_surfaces(args, out) -> int:
    _, k = _resolve(args.knot)
    surfaces = all_surfaces(k)
    if args.json:
        out.write(_dump({"knot": knot_json(k), "surfaces": surfaces_json(surfaces)}) + "\n")
    elif args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["expansion", "slope", "weight", "seifert"])
        for s in surfaces:
            w.writerow([str(s.expansion), s.boundary_slope, fmt_rational(s.weight), int(s.is_seifert)])
    else:
        out.write(f"{k}: {len(surfaces)} surfaces\n")
        for s in surfaces:
            tag = "  seifert" if s.is_seifert else ""
            out.write(f"{str(s.expansion):<24} slope {s.boundary_slope:>5}  weight {fmt_rational(s.weight):>5}{tag}\n")
    return EXIT_OK


def cmd_seminorm(args, out) -> int:
    _, k = _resolve(args.knot)
    table = build_table(k)
    value = eval_seminorm(table, parse_slope(args.slope)) if args.slope else None
    if args.json:
        payload = {"knot": knot_json(k), "seminorm_terms": terms_json(table), "is_norm": is_norm(table)}
        if value is not None:
            payload["slope"] = args.slope
            payload["value"] = rational_json(value)
        out.write(_dump(payload) + "\n")
    else:
        out.write(f"||p/q||_T = {seminorm_display(table)}\n")
        if value is not None:
            out.write(f"||{parse_slope(args.slope)}||_T = {fmt_rational(value)}\n")
    return EXIT_OK


def cmd_casson(args, out) -> int:
    _, k = _resolve(args.knot)
    s = parse_slope(args.slope)
    res = casson_invariant(k, s)
    d = res.diagnostics
    if args.json:
        payload = {
            "knot": knot_json(k),
            "slope": {"p": s.p, "q": s.q},
            "casson": {
                "value": rational_json(res.value),
                "seminorm": rational_json(res.seminorm_value),
                "correction": rational_json(res.correction),
                "p_parity": res.p_parity,
                "applicable": res.applicable,
                "admissibility": {
                    "is_boundary_slope": d.is_boundary_slope,
                    "is_strict_boundary_slope": d.is_strict_boundary_slope,
                    "alexander_ok": d.alexander_ok,
                    "regular": d.regular,
                    "fibered": d.fibered,
                    "admissible": d.admissible,
                    "notes": list(d.notes),
                },
            },
        }
        text = _dump(payload) + "\n"
    else:
        text = "\n".join([
            f"knot           {k}",
            f"slope          {s}",
            f"lambda         {fmt_rational(res.value)}"
            + ("" if res.applicable else "  (formula value; theorem inapplicable)"),
            f"seminorm       {fmt_rational(res.seminorm_value)}",
            f"correction     {fmt_rational(res.correction)}  (p {res.p_parity})",
            f"boundary slope {'yes' if d.is_boundary_slope else 'no'}",
            f"strict         {d.is_strict_boundary_slope}",
            f"alexander ok   {'yes' if d.alexander_ok else 'no'}",
            f"admissible     {'yes' if d.admissible else 'no'}",
        ]) + "\n"
    if not res.applicable and not args.force:
        sys.stderr.write(f"{k}, slope {s}: surgery formula inapplicable "
                         f"(strict={d.is_strict_boundary_slope}, alexander_ok={d.alexander_ok}); "
                         "use --force to print the formula value\n")
        return EXIT_INAPPLICABLE
    out.write(text)
    return EXIT_OK


def cmd_exceptional(args, out) -> int:
    _, k = _resolve(args.knot)
    exc = sorted(exceptional_slopes(k), key=lambda s: s.p)
    if args.json:
        out.write(_dump({"knot": knot_json(k), "exceptional_slopes": [s.p for s in exc]}) + "\n")
    else:
        out.write("{" + ", ".join(str(s.p) for s in exc) + "}\n")
    return EXIT_OK


def cmd_verify_table(args, out) -> int:
    path = args.path or bundled_table_path()
    try:
        with open(path, encoding="utf-8") as fh:
            rows = read_rows(fh.read())
    except OSError as exc:
        raise GoldenFormatError(str(exc)) from exc
    if args.discover:
        return _discover(rows, args, out)
    results = verify_rows(rows)
    n_fail = sum(r.status == "FAIL" for r in results)
    n_known = sum(bool(r.known) for r in results)
    if args.json:
        out.write(_dump({"rows": [r.to_dict() for r in results],
                         "summary": {"rows": len(results), "fail": n_fail, "known_mismatch": n_known}}) + "\n")
    else:
        for r in results:
            k = f"K({r.row.alpha},{r.row.beta})"
            line = f"{r.status} {r.row.name:<5} {k:<10} surfaces={r.chirality or '-'} degrees[{r.degree_source}]=({r.computed_degrees[0]},{r.computed_degrees[1]})"
            for msg in r.known:
                line += f" KNOWN-MISMATCH {msg}"
            for msg in r.failures:
                line += f" | {msg}"
            for msg in r.notes:
                line += f" | note: {msg}"
            out.write(line + "\n")
        out.write(f"{len(results) - n_fail}/{len(results)} rows pass, {n_known} known mismatch(es), {n_fail} failure(s)\n")
    return EXIT_MISMATCH if n_fail else EXIT_OK


def _discover(rows, args, out) -> int:
    classes = knot_classes(args.max_alpha)
    report = []
    missing = 0
    for row in rows:
        disc = discover(row, args.max_alpha, classes)
        uniq = disc.unique
        if uniq is None:
            missing += 1
        report.append({
            "name": row.name,
            "unique": knot_json(uniq) if uniq else None,
            "matches": [{"knot": knot_json(k), "chirality": c} for k, c in disc.matches],
            "nearest": [{"knot": knot_json(k), "chirality": c, "distance": d} for k, c, d in disc.nearest[:3]],
        })
    if args.json:
        out.write(_dump({"discover": report, "max_alpha": args.max_alpha}) + "\n")
    else:
        for rec in report:
            if rec["unique"]:
                u = rec["unique"]
                ms = ", ".join(f"K({m['knot']['alpha']},{m['knot']['beta']}):{m['chirality']}" for m in rec["matches"])
                out.write(f"{rec['name']:<5} K({u['alpha']},{u['beta']})  [{ms}]\n")
            else:
                near = ", ".join(f"K({n['knot']['alpha']},{n['knot']['beta']}) d={n['distance']}" for n in rec["nearest"])
                out.write(f"{rec['name']:<5} NO MATCH  nearest: {near or '-'}\n")
    return EXIT_MISMATCH if missing else EXIT_OK


def cmd_worked_examples(args, out) -> int:
    from .worked_examples import run_worked_examples
    ok = run_worked_examples(out=out, subprocess_mode=args.subprocess)
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twobridge", description=(
        "Surfaces, Culler-Shalen seminorms, SL(2,C) Casson invariants and A-hat degrees "
        "of two-bridge knots. Knots: K(alpha,beta) or J(l,m); slopes: p/q."))
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="summary of a knot")
    p.add_argument("knot")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("surfaces", help="incompressible surfaces with slopes and weights")
    p.add_argument("knot")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true")
    g.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_surfaces)

    p = sub.add_parser("seminorm", help="total Culler-Shalen seminorm, optionally at a slope")
    p.add_argument("knot")
    p.add_argument("slope", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_seminorm)

    p = sub.add_parser("casson", help="SL(2,C) Casson invariant of p/q surgery")
    p.add_argument("knot")
    p.add_argument("slope")
    p.add_argument("--force", action="store_true", help="print the formula value even if inadmissible")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_casson)

    p = sub.add_parser("exceptional", help="excluded slopes of the nontriviality theorem")
    p.add_argument("knot")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_exceptional)

    p = sub.add_parser("verify-table", help="verify a golden TSV table (default: bundled table)")
    p.add_argument("path", nargs="?")
    p.add_argument("--format", choices=["tsv"], default="tsv")
    p.add_argument("--discover", action="store_true", help="identify each row's K(alpha,beta)")
    p.add_argument("--max-alpha", type=int, default=45)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("worked-examples", help="re-run the worked numbers (TAP output)")
    p.add_argument("--subprocess", action="store_true", help="drive a separate CLI process")
    p.set_defaults(func=cmd_worked_examples)
    return ap


_NEG_SLOPE = re.compile(r"^-\d+(/-?\d+)?$")


def _protect_negative_slopes(argv):
    # argparse would read "-4/1" as an option; a leading space keeps it positional
    argv = sys.argv[1:] if argv is None else list(argv)
    return [" " + a if _NEG_SLOPE.match(a) else a for a in argv]


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(_protect_negative_slopes(argv))
    try:
        return args.func(args, out)
    except (InvalidKnotError, SlopeParseError, GoldenFormatError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
