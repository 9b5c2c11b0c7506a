# qverify/__main__.py
import argparse
import json
import logging
import signal
import sys

from termcolor import colored

from qverify.config import DEFAULT_ORDER, LOG_LEVEL
from qverify.errors import EvaluationError, QLangSyntaxError, QVerifyError
from qverify.i18n import setup_i18n, t

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

STATUS_COLORS = {"pass": "green", "fail": "red", "error": "yellow"}


def signal_handler(signum, frame):
    print(t("TERMINATION_SIGNAL"))
    sys.exit(EXIT_FAILED)


def parse_args(argv=None):
    parser = argparse.ArgumentParser(prog="qverify", description=t("CLI_DESCRIPTION"))
    parser.add_argument("--language", "-l", help=t("LANGUAGE_HELP"), choices=["en", "zh_CN"], default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", help=t("EXPAND_HELP"))
    expand.add_argument("expr", help=t("EXPR_HELP"))
    expand.add_argument("--order", type=int, default=DEFAULT_ORDER, help=t("ORDER_HELP"))
    expand.add_argument("--mod", type=int, default=0, help=t("MOD_HELP"))
    expand.add_argument("--json", action="store_true", help=t("JSON_HELP"))

    verify = sub.add_parser("verify", help=t("VERIFY_HELP"))
    verify.add_argument("record_id", nargs="?", help=t("RECORD_ID_HELP"))
    verify.add_argument("--all", action="store_true", help=t("ALL_HELP"))
    verify.add_argument("--order", type=int, default=None, help=t("ORDER_HELP"))
    verify.add_argument("--parallel", action="store_true", help=t("PARALLEL_HELP"))
    verify.add_argument("--audit", action="store_true", help=t("AUDIT_HELP"))
    verify.add_argument("--verbatim", action="store_true", help=t("VERBATIM_HELP"))
    verify.add_argument("--catalog", default=None, help=t("CATALOG_FILE_HELP"))
    verify.add_argument("--json", action="store_true", help=t("JSON_HELP"))
    verify.add_argument("--no-timings", action="store_true", help=t("NO_TIMINGS_HELP"))

    scan = sub.add_parser("scan", help=t("SCAN_HELP"))
    scan.add_argument("--step", type=int, required=True, help=t("STEP_HELP"))
    scan.add_argument("--offset", type=int, required=True, help=t("OFFSET_HELP"))
    scan.add_argument("--mod", type=int, required=True, help=t("MOD_HELP"))
    scan.add_argument("--nmax", type=int, required=True, help=t("NMAX_HELP"))
    scan.add_argument("--exact", action="store_true", help=t("EXACT_HELP"))
    scan.add_argument("--json", action="store_true", help=t("JSON_HELP"))

    oracle = sub.add_parser("oracle", help=t("ORACLE_HELP"))
    oracle.add_argument("--nmax", type=int, required=True, help=t("NMAX_HELP"))
    oracle.add_argument("--json", action="store_true", help=t("JSON_HELP"))

    cat = sub.add_parser("catalog", help=t("CATALOG_HELP"))
    cat.add_argument("--export", default=None, help=t("EXPORT_HELP"))

    pk = sub.add_parser("pk", help=t("PK_HELP"))
    pk.add_argument("--order", type=int, default=100, help=t("ORDER_HELP"))
    pk.add_argument("--json", action="store_true", help=t("JSON_HELP"))

    return parser.parse_args(argv)


def _print_json(data):
    print(json.dumps(data, ensure_ascii=False))


def _print_report(report):
    status = colored(t(f"STATUS_{report.status.upper()}"), STATUS_COLORS[report.status])
    line = t("REPORT_LINE", id=report.id, status=status, order=report.order_checked, ms=f"{report.elapsed_ms:.1f}")
    if report.first_mismatch is not None:
        m = report.first_mismatch
        line += " " + t("MISMATCH_DETAIL", exponent=m.exponent, lhs=m.lhs, rhs=m.rhs)
    if report.error:
        line += " " + t("ERROR_DETAIL", error=report.error)
    print(line)


def _print_syntax_error(text, exc):
    print(colored(t("PARSE_ERROR", error=exc.message, line=exc.line, column=exc.column), "red"), file=sys.stderr)
    print(exc.caret(text), file=sys.stderr)


def run_expand(args) -> int:
    from qverify.qlang import evaluate, parse

    try:
        expr = parse(args.expr)
    except QLangSyntaxError as exc:
        _print_syntax_error(args.expr, exc)
        return EXIT_USAGE
    try:
        value = evaluate(expr, args.order, args.mod)
    except EvaluationError as exc:
        print(colored(t("EVALUATION_ERROR", error=exc.message), "red"), file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        _print_json({"order": value.order, "modulus": value.modulus, "coefficients": value.coefficients()})
    else:
        print(t("EXPAND_RESULT", order=value.order, modulus=value.modulus))
        print(" ".join(str(c) for c in value.coefficients()))
    return EXIT_OK


def run_verify(args) -> int:
    from qverify.verifier.catalog import catalog, get_record, load_catalog
    from qverify.verifier.engine import summarize, verify_all

    if args.all == bool(args.record_id):
        print(t("VERIFY_TARGET_REQUIRED"), file=sys.stderr)
        return EXIT_USAGE
    try:
        records = load_catalog(args.catalog) if args.catalog else catalog()
        if args.record_id:
            records = [r for r in records if r.id == args.record_id] if args.catalog else [get_record(args.record_id)]
            if not records:
                raise KeyError(args.record_id)
    except KeyError:
        print(t("UNKNOWN_RECORD", id=args.record_id), file=sys.stderr)
        return EXIT_USAGE
    if args.verbatim:
        records = [r.as_verbatim() if r.verbatim_rhs is not None else r for r in records]

    try:
        reports = verify_all(order=args.order, parallel=args.parallel, audit=args.audit, records=records)
    except ValueError as exc:
        print(t("UNEXPECTED_ERROR", error=str(exc)), file=sys.stderr)
        return EXIT_USAGE

    if args.json:
        _print_json([r.to_json_dict(include_timings=not args.no_timings) for r in reports])
    else:
        for report in reports:
            _print_report(report)
        counts = summarize(reports)
        print(t("VERIFY_SUMMARY", passed=counts["pass"], failed=counts["fail"], errors=counts["error"]))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def run_scan(args) -> int:
    from pydantic import ValidationError

    from qverify.overpartitions import CongruenceClaim, scan_congruence

    try:
        claim = CongruenceClaim(a=args.step, b=args.offset, m=args.mod, n_max=args.nmax)
    except ValidationError as exc:
        print(t("INVALID_CLAIM", error=str(exc)), file=sys.stderr)
        return EXIT_USAGE
    violations = scan_congruence(claim, exact=args.exact)
    if args.json:
        _print_json([v.model_dump() for v in violations])
    elif violations:
        for v in violations:
            print(t("VIOLATION_LINE", n=v.n, a=claim.a, b=claim.b, residue=v.residue, m=claim.m))
    else:
        print(colored(t("SCAN_CLEAN", claim=str(claim)), "green"))
    return EXIT_FAILED if violations else EXIT_OK


def run_oracle(args) -> int:
    from qverify.overpartitions import overpartition_oracle

    if args.nmax < 0:
        print(t("NEGATIVE_NMAX"), file=sys.stderr)
        return EXIT_USAGE
    counts = overpartition_oracle(args.nmax)
    if args.json:
        _print_json(counts)
    else:
        for n, c in enumerate(counts):
            print(f"{n}\t{c}")
    return EXIT_OK


def run_catalog(args) -> int:
    from qverify.verifier.catalog import catalog, export_catalog

    records = catalog()
    if args.export:
        export_catalog(records, args.export)
        print(t("CATALOG_EXPORTED", total=len(records), file=args.export))
        return EXIT_OK
    for record in records:
        fidelity = colored(record.fidelity, "yellow") if record.fidelity == "corrected" else record.fidelity
        relation = "=" if record.relation == "eq" else f"== (mod {record.modulus})"
        print(t("CATALOG_LINE", id=record.id, anchor=record.anchor, relation=relation, fidelity=fidelity))
    return EXIT_OK


def run_pk(args) -> int:
    from qverify.pk_param import F_divisible_by, verify_integral_forms, verify_R7

    reports = verify_integral_forms(args.order) + [verify_R7(args.order)]
    divisible = F_divisible_by(5)
    if args.json:
        _print_json({"F_divisible_by_5": divisible, "reports": [r.to_json_dict() for r in reports]})
    else:
        print(t("F_DIVISIBLE" if divisible else "F_NOT_DIVISIBLE"))
        for report in reports:
            _print_report(report)
    return EXIT_OK if divisible and all(r.passed for r in reports) else EXIT_FAILED


COMMANDS = {
    "expand": run_expand,
    "verify": run_verify,
    "scan": run_scan,
    "oracle": run_oracle,
    "catalog": run_catalog,
    "pk": run_pk,
}


def main(argv=None) -> int:
    signal.signal(signal.SIGTERM, signal_handler)
    logging.basicConfig(level=LOG_LEVEL)

    setup_i18n()
    args = parse_args(argv)
    if args.language:
        setup_i18n(args.language)

    try:
        return COMMANDS[args.command](args)
    except KeyboardInterrupt:
        print(t("KEYBOARD_INTERRUPT"))
        return EXIT_FAILED
    except QVerifyError as e:
        print(t("UNEXPECTED_ERROR", error=str(e)), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
