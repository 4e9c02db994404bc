"""Command line front end.

Exit codes: 0 when every check passes, 1 when any verification fails,
2 for usage or configuration errors (bad flags, caps exceeded).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import bijections, oracle, series, verify
from .oeis import KNOWN_IDS

log = logging.getLogger("cylkings")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _apply_caps(args) -> None:
    defaults = oracle.Caps()
    for flag, attr in (("brute_cap", "brute_force"), ("count_cap", "backtracking"),
                       ("order_cap", "series_order")):
        value = getattr(args, flag)
        if value is None:
            continue
        if value < 1:
            raise UsageError(f"--{flag.replace('_', '-')} must be positive")
        if value > getattr(defaults, attr):
            log.warning("raising the %s cap from %d to %d; expect long run times",
                        attr, getattr(defaults, attr), value)
        setattr(oracle.CAPS, attr, value)


# table

def table_rows(max_n: int, threads: int = 1) -> list[dict]:
    rows = []
    for r in oracle.count_table(max_n, threads=threads):
        ratio = Fraction(r.cyl_kings, r.kings) if r.kings else None
        rows.append({
            "n": r.n, "kings": str(r.kings), "cyl_kings": str(r.cyl_kings),
            "a_n": str(r.a_n), "cb1": None if r.cb1 is None else str(r.cb1),
            "ratio": None if ratio is None else str(ratio),
            "ratio_decimal": None if ratio is None else f"{float(ratio):.6f}",
        })
    return rows


TABLE_FIELDS = ["n", "kings", "cyl_kings", "a_n", "cb1", "ratio", "ratio_decimal"]


def cmd_table(args) -> int:
    max_n = args.max_n or 10
    rows = table_rows(max_n, args.threads)
    if args.format == "csv":
        out = _csv(TABLE_FIELDS, [["" if r[k] is None else r[k] for k in TABLE_FIELDS]
                                  for r in rows])
    else:
        out = _json({"rows": rows})
    sys.stdout.write(out)
    return EXIT_OK


# verify

def _render_reports(reports: list[verify.VerificationReport], fmt: str) -> str:
    if fmt == "csv":
        rows = []
        for r in reports:
            rows.append([r.subject, r.status, min(r.range, default=""),
                         max(r.range, default=""), len(r.failures),
                         "; ".join(f"n={f.n}: expected {f.expected}, got {f.actual}"
                                   for f in r.failures)])
        return _csv(["subject", "status", "n_min", "n_max", "failures", "detail"], rows)
    if len(reports) == 1:
        return _json(reports[0].to_dict())
    return _json({"reports": [r.to_dict() for r in reports]})


def cmd_verify(args) -> int:
    subjects = list(verify.SUBJECTS) if args.subject == "all" else [args.subject]
    reports = [verify.run(s, args.max_n) for s in subjects]
    sys.stdout.write(_render_reports(reports, args.format))
    return EXIT_OK if all(r.status == "pass" for r in reports) else EXIT_FAIL


# series

def series_payload(which: str, order: int) -> dict:
    if which in ("F", "H"):
        s = series.series_F(order) if which == "F" else series.series_H(order)
        return {"series": which, "order": order, "variable": "u",
                "coefficients": [c.render("u") for c in s.coeffs[1:]]}
    derived = series.series_CK(order)
    e1 = series.series_CK_printed(order, 1)
    e2 = series.series_CK_printed(order, 2)
    return {
        "series": "CK", "order": order,
        "coefficients": [str(x) for x in derived],
        "comparison": {
            "printed_exponent_1": [str(x) for x in e1],
            "printed_exponent_2": [str(x) for x in e2],
            "exponent_1_matches": e1 == derived,
            "exponent_2_matches": e2 == derived,
        },
    }


def cmd_series(args) -> int:
    order = args.order or args.max_n or 9
    if order < 1:
        raise UsageError("order must be >= 1")
    if order > oracle.CAPS.series_order:
        raise UsageError(f"order {order} exceeds the series cap of {oracle.CAPS.series_order}")
    payload = series_payload(args.which, order)
    if args.format == "csv":
        rows = [[n, c] for n, c in enumerate(payload["coefficients"], start=1)]
        out = _csv(["n", "coefficient"], rows)
        if args.which == "CK":
            cmp = payload["comparison"]
            out += _csv(["n", "printed_exponent_1", "printed_exponent_2"],
                        [[n, a, b] for n, (a, b) in enumerate(
                            zip(cmp["printed_exponent_1"], cmp["printed_exponent_2"]), start=1)])
    else:
        out = _json(payload)
    sys.stdout.write(out)
    return EXIT_OK


# bijections

def bijection_records(max_n: int) -> list[dict]:
    recs = []
    for n in range(5, max_n + 1):
        a = bijections.audit(n)
        recs.append({"n": n, **a.sizes, "A_n": a.a_n, "A_n-1": a.a_n1,
                     "A_n-2": a.a_n2, "CK_n-1": a.ck_n1, "K_n-1": a.k_n1,
                     "status": "pass" if a.ok else "fail", "failures": a.failures})
    return recs


def cmd_bijections(args) -> int:
    max_n = args.max_n or 9
    if max_n > oracle.CAPS.backtracking:
        raise oracle.CapError(f"max_n={max_n} exceeds the backtracking cap")
    recs = bijection_records(max_n)
    if args.format == "csv":
        keys = ["n", "B0", "B1", "B2", "B3", "A_n", "A_n-1", "A_n-2", "CK_n-1", "K_n-1", "status"]
        out = _csv(keys, [[r[k] for k in keys] for r in recs])
    else:
        out = _json({"records": recs})
    sys.stdout.write(out)
    return EXIT_OK if all(r["status"] == "pass" for r in recs) else EXIT_FAIL


# oeis

def cmd_oeis(args) -> int:
    if args.id not in KNOWN_IDS:
        raise UsageError(f"unknown sequence {args.id!r}; known: {', '.join(KNOWN_IDS)}")
    max_n = args.max_n or 12
    if max_n > oracle.CAPS.backtracking:
        raise oracle.CapError(f"max_n={max_n} exceeds the backtracking cap")
    rep = verify.oeis_report(args.id, max_n, offline=args.offline, cache_dir=args.cache_dir)
    sys.stdout.write(_render_reports([rep], args.format))
    return EXIT_OK if rep.status == "pass" else EXIT_FAIL


# export

def cmd_export(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    max_n = args.max_n or 10
    rows = table_rows(max_n, args.threads)
    (out / "table.json").write_text(_json({"rows": rows}))
    (out / "table.csv").write_text(
        _csv(TABLE_FIELDS, [["" if r[k] is None else r[k] for k in TABLE_FIELDS] for r in rows]))
    order = min(oracle.CAPS.series_order, 12)
    for which in ("F", "H", "CK"):
        (out / f"series_{which}.json").write_text(_json(series_payload(which, order)))
    reports = [verify.run(s) for s in verify.SUBJECTS]
    reports += [verify.oeis_report(i, 12, offline=args.offline, cache_dir=args.cache_dir)
                for i in KNOWN_IDS]
    (out / "verify.json").write_text(_render_reports(reports, "json"))
    (out / "verify.csv").write_text(_render_reports(reports, "csv"))
    (out / "bijections.json").write_text(_json({"records": bijection_records(9)}))
    ok = all(r.status == "pass" for r in reports)
    sys.stdout.write(f"wrote {out} ({'pass' if ok else 'fail'})\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--offline", action="store_true",
                        help="use embedded OEIS fixtures instead of the network")
    common.add_argument("--cache-dir", default=None,
                        help="b-file cache (default: $CYLKINGS_CACHE_DIR or ~/.cache/cylkings)")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--brute-cap", type=int, default=None)
    common.add_argument("--count-cap", type=int, default=None)
    common.add_argument("--order-cap", type=int, default=None)

    p = argparse.ArgumentParser(prog="cylkings",
                                description="King and cylindrical-king permutation counts and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("table", parents=[common], help="count table")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", parents=[common], help="check an identity")
    sp.add_argument("subject", choices=[*verify.SUBJECTS, "all"])
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("series", parents=[common], help="generating function coefficients")
    sp.add_argument("which", choices=("F", "H", "CK"))
    sp.add_argument("--order", type=int, default=None)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("bijections", parents=[common], help="audit the A_n maps")
    sp.set_defaults(func=cmd_bijections)

    sp = sub.add_parser("oeis", parents=[common], help="compare against OEIS")
    sp.add_argument("id")
    sp.set_defaults(func=cmd_oeis)

    sp = sub.add_parser("export", parents=[common], help="write all outputs to a directory")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    saved = oracle.Caps(**vars(oracle.CAPS))
    try:
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        if args.max_n is not None and args.max_n < 1:
            raise UsageError("--max-n must be >= 1")
        _apply_caps(args)
        return args.func(args)
    except (UsageError, oracle.CapError, KeyError) as exc:
        print(f"cylkings: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        oracle.CAPS.__dict__.update(vars(saved))


if __name__ == "__main__":
    sys.exit(main())
