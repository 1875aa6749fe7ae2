"""Command-line front end.

Every command builds a :class:`~quatcodes.report.ReportEnvelope`.  Exit status is 0
when the command ran and found nothing that disagrees with the stored printed
values (or ``--allow-discrepancies`` was given), 1 for discrepancies and
uncorrectable words, 2 for bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from .algebra import enumerate_residues
from .audit import (
    audit_diff,
    audit_min_distance,
    audit_search,
    audit_table,
    audit_verdict,
    cardinality_report,
)
from .bounds import (
    CASES,
    compare_formula_oracle,
    get_case,
    search_equality,
    sphere_by_weight,
    sphere_formula,
)
from .codes import (
    DEFAULT_BUDGET,
    ParityCheckCode,
    SyndromeCollision,
    Uncorrectable,
    build_syndrome_table,
    check_perfect,
    decode,
    error_patterns,
    read_code,
    syndrome,
    syndrome_elements,
)
from .grammar import ParseError, format_element, format_vector, parse_ring, parse_vector
from .metrics import DEFAULT_METRIC, MetricKind, applicable_metrics, build_weight_table
from .published import EXAMPLE_CODES, SYNDROME_TABLES, example_code
from .report import Discrepancy, ReportEnvelope, render

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE = 0, 1, 2

GLOBAL_DEFAULTS = {
    "format": None,
    "paper_mode": False,
    "allow_discrepancies": False,
    "budget": DEFAULT_BUDGET,
}

_PRESET_TABLE = {code: which for which, (code, _) in SYNDROME_TABLES.items()}


class CommandFailed(Exception):
    """A command ran but its result counts as a failure (e.g. uncorrectable word)."""

    def __init__(self, envelope: ReportEnvelope, message: str):
        self.envelope = envelope
        super().__init__(message)


def _load_code(target: str) -> ParityCheckCode:
    path = Path(target)
    if target in EXAMPLE_CODES and not path.exists():
        return example_code(target)
    if not path.exists():
        raise FileNotFoundError(f"no code file {target!r} (presets: {', '.join(EXAMPLE_CODES)})")
    return read_code(path)


def _inputs(args: argparse.Namespace) -> dict:
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "group", "subcommand")}
    # "codes decode" and "decode" record the same inputs
    if getattr(args, "subcommand", None):
        inputs["command"] = args.subcommand
    return inputs


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_tables(args) -> ReportEnvelope:
    summary, discrepancies = audit_table(args.which)
    return ReportEnvelope("tables", _inputs(args), summary, discrepancies)


def cmd_table(args) -> ReportEnvelope:
    if args.target in _PRESET_TABLE and not Path(args.target).exists():
        summary, discrepancies = audit_table(_PRESET_TABLE[args.target])
        return ReportEnvelope("table", _inputs(args), summary, discrepancies)
    code = _load_code(args.target)
    rows = []
    first: dict = {}
    for e in error_patterns(code.weight_table, code.n, code.t):
        s = syndrome(code, e)
        row = {
            "error": format_vector(e),
            "syndrome": _syndrome_text(code, e),
            "collides_with": first.get(s),
        }
        first.setdefault(s, row["error"])
        rows.append(row)
    distinct = all(r["collides_with"] is None for r in rows)
    summary = {
        "code": code.name,
        "ring": code.ring.name,
        "metric": code.metric.value,
        "n": code.n,
        "k": code.k,
        "t": code.t,
        "entries": len(rows),
        "syndromes_distinct": distinct,
        "rows": rows,
    }
    return ReportEnvelope("table", _inputs(args), summary)


def _syndrome_text(code: ParityCheckCode, e) -> str:
    return ",".join(format_element(x) for x in syndrome_elements(code, e))


def cmd_check_perfect(args) -> ReportEnvelope:
    code = _load_code(args.target)
    primary = check_perfect(code, paper_mode=args.paper_mode)
    reports = [primary]
    if code.ring.family.value == "H":
        reports.append(check_perfect(code, paper_mode=not args.paper_mode))
    rows = []
    for rep in sorted(reports, key=lambda r: r.paper_mode):
        d = rep.to_dict()
        d["mode"] = "paper" if rep.paper_mode else "oracle"
        d["notes"] = "; ".join(d["notes"])
        rows.append(d)
    discrepancies = audit_verdict(code.name, primary)
    summary = {
        "code": code.name,
        "ring": code.ring.name,
        "metric": code.metric.value,
        "n": code.n,
        "k": code.k,
        "t": code.t,
        "verdict": primary.verdict.value,
        "mode": "paper" if args.paper_mode else "oracle",
    }
    if code.name in EXAMPLE_CODES and not Path(args.target).exists():
        d, extra = audit_min_distance(code.name, args.budget)
        summary["min_distance"] = d
        discrepancies += extra
    summary["rows"] = rows
    return ReportEnvelope("check-perfect", _inputs(args), summary, discrepancies)


def cmd_decode(args) -> ReportEnvelope:
    code = _load_code(args.target)
    received = parse_vector(args.received, code.ring)
    if len(received) != code.n:
        raise ParseError(f"received word has {len(received)} symbols, code length is {code.n}",
                         args.received, 1)
    try:
        table = build_syndrome_table(code)
    except SyndromeCollision as exc:
        env = ReportEnvelope("decode", _inputs(args), {"status": "no-decoder", "reason": str(exc)})
        raise CommandFailed(env, str(exc)) from None
    try:
        corrected, error = decode(code, table, received)
    except Uncorrectable:
        env = ReportEnvelope("decode", _inputs(args), {
            "received": format_vector(received, ";")[1:-1],
            "syndrome": _syndrome_text(code, received),
            "status": "uncorrectable",
        })
        raise CommandFailed(env, "uncorrectable: syndrome not in the decoding table") from None
    summary = {
        "code": code.name,
        "received": format_vector(received, ";")[1:-1],
        "syndrome": _syndrome_text(code, received),
        "error": format_vector(error),
        "corrected": format_vector(corrected, ";")[1:-1],
        "status": "corrected" if any(not x.is_zero() for x in error) else "clean",
    }
    return ReportEnvelope("decode", _inputs(args), summary)


def cmd_search(args) -> ReportEnvelope:
    case = get_case(args.case)
    result = search_equality(case, args.p_max, args.n_max, args.r_max,
                             p_min=args.p_min, paper_mode=args.paper_mode)
    audit, discrepancies = audit_search(result)
    summary = {
        "case": case.id,
        "formula": case.formula,
        "coset_base": case.base.value,
        "paper_mode": args.paper_mode,
        "p_range": list(result.p_range),
        "primes_scanned": result.primes_scanned,
        "n_max": result.n_max,
        "r_max": result.r_max,
        "hit_count": len(result.hits),
        "feasible_count": len(result.feasible_hits),
        "overflows": result.overflows,
        **audit,
        "rows": [h.to_dict() for h in result.hits],
    }
    return ReportEnvelope("search", _inputs(args), summary, discrepancies)


def cmd_sphere(args) -> ReportEnvelope:
    ring = parse_ring(args.ring)
    metric = MetricKind.parse(args.metric) if args.metric else DEFAULT_METRIC[ring.family]
    by_weight = sphere_by_weight(ring, metric, args.n, args.t)
    summary = {
        "ring": ring.name,
        "metric": metric.value,
        "n": args.n,
        "t": args.t,
        "spectrum": list(build_weight_table(ring, metric).spectrum),
        "by_weight": by_weight,
        "oracle": sum(by_weight),
    }
    discrepancies = []
    if args.formula:
        case = get_case(args.formula)
        if case.t != args.t or case.metric is not metric:
            raise ValueError(f"case {case.id} is for {case.metric.value} weight <= {case.t}")
        value = sphere_formula(case, args.n)
        summary["formula"] = case.formula
        summary["formula_value"] = value
        summary["match"] = value == summary["oracle"]
        if not summary["match"]:
            discrepancies.append(Discrepancy(
                location=f"{case.id} at {ring.name}, n={args.n}",
                paper_value=f"{case.formula} = {value}",
                computed_value=str(summary["oracle"]),
                note=f"oracle minus formula = {summary['oracle'] - value}",
            ))
    return ReportEnvelope("sphere", _inputs(args), summary, discrepancies)


def cmd_diff(args) -> ReportEnvelope:
    case = get_case(args.case)
    rings = [parse_ring(args.ring)] if args.ring else [parse_ring(r) for r in case.rings]
    rows, discrepancies, spectra = [], [], {}
    for ring in rings:
        report = compare_formula_oracle(case, ring, range(1, args.n_max + 1))
        spectra[ring.name] = list(report.spectrum)
        for row in report.rows:
            rows.append({"ring": ring.name, **row.to_dict()})
        discrepancies += audit_diff(report)
    summary = {
        "case": case.id,
        "formula": case.formula,
        "metric": case.metric.value,
        "t": case.t,
        "spectra": spectra,
        "all_match": not discrepancies,
        "rows": rows,
    }
    return ReportEnvelope("diff", _inputs(args), summary, discrepancies)


def cmd_ring_info(args) -> ReportEnvelope:
    ring = parse_ring(args.ring)
    metrics = applicable_metrics(ring)
    metric = MetricKind.parse(args.metric) if args.metric else DEFAULT_METRIC[ring.family]
    if metric not in metrics:
        raise ValueError(f"{metric.value} metric is not defined on {ring.name}")
    card, discrepancies = cardinality_report(ring)
    summary = {
        "ring": ring.name,
        "family": ring.family.value,
        "p": ring.p,
        **card,
        "metric": metric.value,
        "spectrum": list(build_weight_table(ring, metric).spectrum),
        "spectra": {m.value: list(build_weight_table(ring, m).spectrum) for m in metrics},
    }
    if args.list:
        tables = {m: build_weight_table(ring, m) for m in metrics}
        system = enumerate_residues(ring)
        summary["rows"] = [
            {"key": list(key), "representative": format_element(rep),
             **{f"weight_{m.value}": tables[m].weights[key] for m in metrics}}
            for key, rep in zip(system.keys, system.representatives)
        ]
    return ReportEnvelope("ring-info", _inputs(args), summary, discrepancies)


def cmd_cases(args) -> ReportEnvelope:
    rows = [c.to_dict() for c in CASES.values()]
    for row in rows:
        row["primes"] = row["primes"] if isinstance(row["primes"], str) else \
            ",".join(map(str, row["primes"]))
        row["rings"] = ",".join(row["rings"])
    return ReportEnvelope("cases", _inputs(args), {"count": len(rows), "rows": rows})


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--format", choices=["text", "json", "jsonl", "csv"], default=argparse.SUPPRESS,
                   help="output format (default text; jsonl under the 'bounds' group)")
    g.add_argument("--paper-mode", action="store_true", default=argparse.SUPPRESS,
                   help="use printed cardinalities instead of enumerated ones")
    g.add_argument("--allow-discrepancies", action="store_true", default=argparse.SUPPRESS,
                   help="exit 0 even when results disagree with printed values")
    g.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                   help=f"max words enumerated by brute force (default {DEFAULT_BUDGET})")
    return p


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _register(sub, name: str, parent, group: str | None) -> None:
    def add(cmd: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(cmd, parents=[parent], help=help_text)
        sp.set_defaults(func=func, group=group)
        return sp

    if name == "tables":
        sp = add("tables", cmd_tables, "recompute a printed syndrome table")
        sp.add_argument("which", choices=sorted(SYNDROME_TABLES))
    elif name == "table":
        sp = add("table", cmd_table, "syndrome table of a code file or preset")
        sp.add_argument("target", help="code file or preset (ex1, ex2, ex3)")
    elif name == "check-perfect":
        sp = add("check-perfect", cmd_check_perfect, "perfectness verdict for a code")
        sp.add_argument("target", help="code file or preset (ex1, ex2, ex3)")
    elif name == "decode":
        sp = add("decode", cmd_decode, "syndrome-decode one received word")
        sp.add_argument("target", help="code file or preset (ex1, ex2, ex3)")
        sp.add_argument("--received", required=True, help='symbols separated by ";"')
    elif name == "search":
        sp = add("search", cmd_search, "parameters meeting a sphere-packing bound with equality")
        sp.add_argument("--case", required=True, choices=list(CASES))
        sp.add_argument("--p-max", type=_positive, default=None,
                        help="largest prime (default: largest p that can still hit)")
        sp.add_argument("--p-min", type=_positive, default=2)
        sp.add_argument("--n-max", type=_positive, default=1000)
        sp.add_argument("--r-max", type=_positive, default=23)
    elif name == "sphere":
        sp = add("sphere", cmd_sphere, "sphere size by the spectrum oracle")
        sp.add_argument("--ring", required=True)
        sp.add_argument("--metric", default=None, choices=[m.value for m in MetricKind])
        sp.add_argument("--n", type=_positive, required=True)
        sp.add_argument("--t", type=int, required=True)
        sp.add_argument("--formula", default=None, choices=list(CASES),
                        help="also evaluate this closed form")
    elif name == "diff":
        sp = add("diff", cmd_diff, "closed form against the oracle for n = 1..n-max")
        sp.add_argument("--case", required=True, choices=list(CASES))
        sp.add_argument("--ring", default=None, help="default: every ring the case names")
        sp.add_argument("--n-max", type=_positive, default=4)
    elif name == "ring-info":
        sp = add("ring-info", cmd_ring_info, "cardinality, certificate and weight spectra")
        sp.add_argument("ring")
        sp.add_argument("--metric", default=None, choices=[m.value for m in MetricKind])
        sp.add_argument("--list", action="store_true", help="list every class with its weights")
    elif name == "cases":
        add("cases", cmd_cases, "list the bound cases")
    else:  # pragma: no cover
        raise ValueError(name)


TOP_LEVEL = ("tables", "check-perfect", "decode", "table", "search", "sphere", "diff",
             "ring-info", "cases")
GROUPS = {
    "codes": ("check-perfect", "decode", "table"),
    "bounds": ("search", "sphere", "diff"),
}


def build_parser() -> argparse.ArgumentParser:
    parent = _global_flags()
    parser = argparse.ArgumentParser(
        prog="quatcodes",
        parents=[parent],
        description="Codes over Gaussian, Lipschitz and Hurwitz residue rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name in TOP_LEVEL:
        _register(sub, name, parent, None)
    for group, names in GROUPS.items():
        gp = sub.add_parser(group, parents=[parent], help=f"{', '.join(names)}")
        gsub = gp.add_subparsers(dest="subcommand", required=True, metavar="command")
        for name in names:
            _register(gsub, name, parent, group)
    return parser


def _emit(env: ReportEnvelope, fmt: str, out, err) -> None:
    out.write(render(env, fmt))
    if fmt == "csv" and env.discrepancies:
        for d in env.discrepancies:
            err.write(f"discrepancy: {d.location}: printed {d.paper_value}, "
                      f"computed {d.computed_value}\n")


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    if args.format is None:
        args.format = "jsonl" if args.group == "bounds" else "text"
    try:
        env = args.func(args)
    except CommandFailed as exc:
        _emit(exc.envelope, args.format, out, err)
        err.write(f"error: {exc}\n")
        return EXIT_DISCREPANCY
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, KeyError, FileNotFoundError, OverflowError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"error: {msg}\n")
        return EXIT_USAGE
    _emit(env, args.format, out, err)
    if env.discrepancies and not args.allow_discrepancies:
        return EXIT_DISCREPANCY
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
