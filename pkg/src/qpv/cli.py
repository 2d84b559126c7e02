"""Command-line front end: expansion, enumeration, and verification.

Exit codes: 0 all checks pass, 1 a mathematical discrepancy was found,
2 usage or configuration error (including malformed expressions and
truncation windows that cannot support the requested comparison).

Output is assembled in memory and written once, so identical invocations
produce byte-identical output.  All computation is deterministic and
sequential; the ``QPV_THREADS`` environment variable caps internal
parallelism (any value >= 1 is compatible with the sequential engines).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .cases import (
    IdentityCase,
    a_side_series,
    b_side_series,
    builtin_cases,
    load_case_file,
    product_side_series,
    verify_case,
)
from .errors import ConfigurationError, QpvError
from .partitions import (
    congruence_multidegree,
    congruence_partition_string,
    iter_admissible,
    iter_congruence,
    multidegree,
    partition_string,
    partition_weight,
)
from .recurrences import engine_check_suite, rogers_ramanujan_checks
from .reports import CheckReport
from .series import Series, invert_unit, monomial, pochhammer, series_to_json

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2

EXPAND_VARS = ("a", "c", "d")
DEFAULT_TRUNC = 30
DEFAULT_N_MAX = 24
RR_DEFAULT_TRUNC = 50

# pinned sizes of the full engine-agreement battery; a smaller --trunc or
# --nmax scales them down but never up
ENGINE_K_MAX = 12
ENGINE_TRUNC = 20
ENGINE_X_MAX = 20
ENGINE_X_EQUATION = 10
ENGINE_TERM_I_MAX = 6
ENGINE_STABILIZATION_N = 15


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation; all computation below is a pure function
    of these fields."""

    command: str
    trunc: int | None
    n_max: int | None
    n_exact: int | None
    case: str | None
    side: str
    fmt: str
    out: str | None
    count_only: bool
    expression: str | None
    target: str | None
    threads: int


# ----------------------------------------------------------------------
# product-expression parser


class ExpressionError(ConfigurationError):
    def __init__(self, message: str, position: int):
        super().__init__(f"parse error at position {position}: {message}")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if text.startswith("inf", i):
            tokens.append(("inf", "inf", i))
            i += 3
            continue
        if ch.isalpha():
            tokens.append(("name", ch, i))
            i += 1
            continue
        if ch in "();_^*/+-":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ExpressionError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


@dataclass(frozen=True)
class _Factor:
    kind: str  # "int" or "poch"
    value: int = 1
    sign: int = 1
    exps: tuple[tuple[str, int], ...] = ()
    ratio: int = 1
    count: int | None = None
    position: int = 0


class _ExpressionParser:
    """Recursive descent over ``factor (('*'|'/') factor)*`` where a
    factor is an integer or ``(sign mono; q^r)_count`` (missing count
    means the infinite product)."""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> tuple[str, object, int]:
        return self.tokens[self.i]

    def _next(self) -> tuple[str, object, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _expect(self, kind: str, what: str) -> tuple[str, object, int]:
        tok = self._next()
        if tok[0] != kind:
            raise ExpressionError(f"expected {what}", tok[2])
        return tok

    def parse(self) -> list[tuple[str, _Factor]]:
        items = [("*", self._factor())]
        while self._peek()[0] in ("*", "/"):
            op = self._next()[0]
            items.append((op, self._factor()))
        tok = self._peek()
        if tok[0] != "end":
            raise ExpressionError("expected '*', '/' or end of expression", tok[2])
        return items

    def _factor(self) -> _Factor:
        tok = self._peek()
        if tok[0] == "int":
            self._next()
            return _Factor("int", value=int(tok[1]), position=tok[2])
        if tok[0] == "(":
            return self._pochhammer()
        raise ExpressionError("expected an integer or '('", tok[2])

    def _pochhammer(self) -> _Factor:
        start = self._expect("(", "'('")[2]
        sign = 1
        if self._peek()[0] in ("+", "-"):
            sign = -1 if self._next()[0] == "-" else 1
        exps: dict[str, int] = {}
        saw_atom = False
        while self._peek()[0] == "name":
            name = str(self._next()[1])
            exp = 1
            if self._peek()[0] == "^":
                self._next()
                exp = int(self._expect("int", "an integer exponent")[1])
            exps[name] = exps.get(name, 0) + exp
            saw_atom = True
        if not saw_atom:
            raise ExpressionError("expected a monomial base", self._peek()[2])
        self._expect(";", "';'")
        base = self._expect("name", "'q'")
        if base[1] != "q":
            raise ExpressionError("the ratio base must be q", base[2])
        ratio = 1
        if self._peek()[0] == "^":
            self._next()
            ratio = int(self._expect("int", "an integer exponent")[1])
        self._expect(")", "')'")
        count: int | None = None
        if self._peek()[0] == "_":
            self._next()
            tok = self._next()
            if tok[0] == "int":
                count = int(tok[1])
            elif tok[0] == "inf":
                count = None
            else:
                raise ExpressionError("expected a count or 'inf'", tok[2])
        return _Factor(
            "poch",
            sign=sign,
            exps=tuple(sorted(exps.items())),
            ratio=ratio,
            count=count,
            position=start,
        )


def evaluate_expression(text: str, trunc: int, vars: tuple[str, ...] = EXPAND_VARS) -> Series:
    items = _ExpressionParser(text).parse()
    result = Series.one(trunc, vars)
    for op, factor in items:
        if factor.kind == "int":
            series = Series.one(trunc, vars) * factor.value
        elif factor.count == 0:
            series = Series.one(trunc, vars)  # empty product, base irrelevant
        else:
            exps = dict(factor.exps)
            q_exp = exps.pop("q", 0)
            unknown = set(exps) - set(vars)
            if unknown:
                raise ExpressionError(
                    f"unknown variable(s) {', '.join(sorted(unknown))}", factor.position
                )
            series = pochhammer(
                monomial(q_exp, vars, **exps), factor.ratio, factor.count, trunc, vars,
                sign=factor.sign,
            )
        result = result * series if op == "*" else result * invert_unit(series)
    return result


# ----------------------------------------------------------------------
# output formatting


def _format_series(series: Series, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(series_to_json(series), indent=2, sort_keys=True) + "\n"
    if fmt == "tsv":
        lines = ["\t".join(("q", *series.vars, "coef"))]
        for (q_exp, exps), coef in series.sorted_terms():
            lines.append("\t".join(str(v) for v in (q_exp, *exps, coef)))
        return "\n".join(lines) + "\n"
    return str(series) + "\n"


def _format_listing(rows: list[dict], vars: tuple[str, ...], fmt: str, header: str) -> str:
    if fmt == "json":
        return json.dumps({"listing": rows, "header": header}, indent=2, sort_keys=True) + "\n"
    if fmt == "tsv":
        lines = ["\t".join(("n", "partition", *vars))]
        for row in rows:
            stats = row["stats"]
            lines.append(
                "\t".join(
                    (str(row["n"]), row["partition"], *(str(stats[v]) for v in vars))
                )
            )
        return "\n".join(lines) + "\n"
    lines = [header]
    for row in rows:
        line = f"  {row['partition']}"
        if vars:
            line += "  (" + ", ".join(f"{v}={row['stats'][v]}" for v in vars) + ")"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _format_count_table(series: Series, fmt: str, n_filter: int | None, header: str) -> str:
    rows = []
    for (q_exp, exps), coef in series.sorted_terms():
        if n_filter is not None and q_exp != n_filter:
            continue
        row = {"n": q_exp, "count": str(coef)}
        for name, e in zip(series.vars, exps):
            row[name] = e
        rows.append(row)
    if fmt == "json":
        return json.dumps({"counts": rows, "header": header}, indent=2, sort_keys=True) + "\n"
    cols = ("n", *series.vars, "count")
    if fmt == "tsv":
        lines = ["\t".join(cols)]
        for row in rows:
            lines.append("\t".join(str(row[c]) for c in cols))
        return "\n".join(lines) + "\n"
    lines = [header, "  " + " ".join(f"{c:>5}" for c in cols)]
    for row in rows:
        lines.append("  " + " ".join(f"{str(row[c]):>5}" for c in cols))
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# commands


def _resolve_case(name_or_path: str) -> IdentityCase:
    cases = builtin_cases()
    if name_or_path in cases:
        return cases[name_or_path]
    path = Path(name_or_path)
    if name_or_path.endswith(".json") or path.exists():
        return load_case_file(path)
    raise ConfigurationError(
        f"unknown case {name_or_path!r}; built-ins: {', '.join(cases)}"
    )


def _cmd_expand(cfg: RunConfig) -> tuple[str, int]:
    trunc = DEFAULT_TRUNC if cfg.trunc is None else cfg.trunc
    series = evaluate_expression(cfg.expression or "", trunc)
    return _format_series(series, cfg.fmt), EXIT_OK


def _cmd_enumerate(cfg: RunConfig) -> tuple[str, int]:
    case = _resolve_case(cfg.case or "")
    if cfg.n_exact is not None:
        lo = hi = cfg.n_exact
    else:
        lo, hi = 0, cfg.n_max if cfg.n_max is not None else case.n_max_default
    header = f"case={case.name} side={cfg.side} n={lo}" + (f"..{hi}" if hi != lo else "")
    if cfg.count_only:
        if cfg.side == "A":
            series = a_side_series(case, hi)
        elif cfg.side == "B":
            b = b_side_series(case, hi)
            if b is None:
                raise ConfigurationError(f"case {case.name!r} defines no congruence side")
            series = b
        else:
            series = product_side_series(case, hi)
        n_filter = cfg.n_exact
        return _format_count_table(series, cfg.fmt, n_filter, header), EXIT_OK
    if cfg.side == "product":
        raise ConfigurationError(
            "the product side has no partition listing; use --count-only"
        )
    rows = []
    if cfg.side == "A":
        system = case.system()
        tracked = case.tracked_map()
        suffix = case.suffix_map()
        for parts in iter_admissible(system, hi):
            weight = partition_weight(parts)
            if weight < lo:
                continue
            exps = multidegree(parts, tracked, case.variables)
            rows.append(
                {
                    "n": weight,
                    "partition": partition_string(parts, suffix) or "()",
                    "stats": dict(zip(case.variables, exps)),
                }
            )
    else:
        if case.congruence is None:
            raise ConfigurationError(f"case {case.name!r} defines no congruence side")
        for partition in iter_congruence(case.congruence, hi):
            weight = sum(v for v, _ in partition)
            if weight < lo:
                continue
            exps = congruence_multidegree(partition, case.congruence, case.variables)
            rows.append(
                {
                    "n": weight,
                    "partition": congruence_partition_string(partition, case.congruence) or "()",
                    "stats": dict(zip(case.variables, exps)),
                }
            )
    rows.sort(key=lambda row: (row["n"], row["partition"]))
    header += f" count={len(rows)}"
    return _format_listing(rows, case.variables, cfg.fmt, header), EXIT_OK


def _engine_suite_scaled(trunc: int | None, n_max: int | None) -> tuple[dict, list[CheckReport]]:
    suite_trunc = ENGINE_TRUNC if trunc is None else min(ENGINE_TRUNC, trunc)
    suite_trunc = max(suite_trunc, 4)
    x_max = min(ENGINE_X_MAX, suite_trunc)
    params = {
        "k_max": min(ENGINE_K_MAX, suite_trunc),
        "trunc": suite_trunc,
        "x_max": x_max,
        "x_equation_max": min(ENGINE_X_EQUATION, x_max - 2),
        "term_i_max": ENGINE_TERM_I_MAX,
        "stabilization_n": min(ENGINE_STABILIZATION_N, suite_trunc),
    }
    return params, engine_check_suite(**params)


def _cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    target = cfg.target or "all"
    if cfg.n_max is not None and cfg.trunc is not None and cfg.n_max > cfg.trunc:
        raise ConfigurationError(
            f"truncation too small: n_max={cfg.n_max} exceeds trunc={cfg.trunc}"
        )
    cases = builtin_cases()
    units: list[str] = []
    if target == "all":
        units = [*cases, "engines", "rr"]
    elif target == "rr":
        units = ["rr"]
    elif target == "engines":
        units = ["engines"]
    elif target == "theorem-main":
        units = ["theorem-main", "engines"]
    else:
        units = [target]

    blocks: list[dict] = []
    lines: list[str] = []
    failures = 0
    for unit in units:
        if unit == "rr":
            trunc = RR_DEFAULT_TRUNC if cfg.trunc is None else cfg.trunc
            checks = rogers_ramanujan_checks(trunc)
            blocks.append(
                {"target": "rogers-ramanujan", "checks": [c.to_dict() for c in checks]}
            )
            lines.append(f"== rogers-ramanujan (trunc={trunc}) ==")
            for check in checks:
                failures += 0 if check.passed else 1
                lines.append(check.summary())
            continue
        if unit == "engines":
            params, checks = _engine_suite_scaled(cfg.trunc, cfg.n_max)
            blocks.append(
                {
                    "target": "engine-suite",
                    "parameters": params,
                    "checks": [c.to_dict() for c in checks],
                }
            )
            lines.append(
                "== engine-suite ("
                + " ".join(f"{k}={v}" for k, v in sorted(params.items()))
                + ") =="
            )
            for check in checks:
                failures += 0 if check.passed else 1
                lines.append(check.summary())
            continue
        case = cases.get(unit) or _resolve_case(unit)
        n_max = case.n_max_default if cfg.n_max is None else cfg.n_max
        trunc = cfg.trunc if cfg.trunc is not None else max(case.trunc_default, n_max)
        report = verify_case(case, n_max, trunc)
        blocks.append(report.to_dict())
        lines.append(f"== case {case.name} (n_max={n_max}, trunc={trunc}) ==")
        for check in report.checks:
            failures += 0 if check.passed else 1
            lines.append(check.summary())
        totals = "  n:a/b/product " + " ".join(
            "{n}:{a}/{b}/{p}".format(
                n=row["n"],
                a=row["a_side"],
                b="-" if row["b_side"] is None else row["b_side"],
                p=row["product"],
            )
            for row in report.per_weight
        )
        lines.append(totals)

    status = "pass" if failures == 0 else "fail"
    exit_code = EXIT_OK if failures == 0 else EXIT_DISCREPANCY
    if cfg.fmt == "json":
        doc = {"command": "verify", "status": status, "targets": blocks}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n", exit_code
    if cfg.fmt == "tsv":
        rows = ["target\tcheck\tstatus"]
        for block in blocks:
            name = block.get("case") or block.get("target")
            for check in block["checks"]:
                rows.append(f"{name}\t{check['check_id']}\t{check['status']}")
        return "\n".join(rows) + "\n", exit_code
    lines.append(f"summary: {status} ({failures} failing check(s))")
    return "\n".join(lines) + "\n", exit_code


# ----------------------------------------------------------------------
# argument parsing and entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpv",
        description="Exact verification of coloured-partition identities.",
        epilog="Exit codes: 0 pass, 1 mathematical discrepancy, 2 usage error.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("pretty", "json", "tsv"), default="pretty")
        p.add_argument("--out", metavar="PATH", default=None)

    p_expand = sub.add_parser("expand", help="expand a Pochhammer product expression")
    p_expand.add_argument("expression", help="e.g. \"(-aq;q^2)_inf / (q;q)\"")
    p_expand.add_argument("--trunc", type=int, default=None)
    common(p_expand)

    p_enum = sub.add_parser("enumerate", help="list partitions or their counts")
    p_enum.add_argument("--case", required=True, help="built-in name or case-file path")
    p_enum.add_argument("--side", choices=("A", "B", "product"), default="A")
    group = p_enum.add_mutually_exclusive_group()
    group.add_argument("--n", type=int, default=None, help="exact weight")
    group.add_argument("--nmax", type=int, default=None, help="all weights up to nmax")
    p_enum.add_argument("--count-only", action="store_true")
    common(p_enum)

    p_verify = sub.add_parser("verify", help="run identity verifications")
    p_verify.add_argument(
        "target",
        nargs="?",
        default="all",
        help="case name, case-file path, 'rr', 'engines', or 'all'",
    )
    p_verify.add_argument("--case", dest="case_flag", default=None, help="alias for the target")
    p_verify.add_argument("--nmax", type=int, default=None)
    p_verify.add_argument("--trunc", type=int, default=None)
    common(p_verify)
    return parser


def _threads_from_env() -> int:
    raw = os.environ.get("QPV_THREADS")
    if raw is None:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigurationError(f"QPV_THREADS must be a positive integer, got {raw!r}") from None
    if threads < 1:
        raise ConfigurationError(f"QPV_THREADS must be a positive integer, got {raw!r}")
    return threads


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    threads = _threads_from_env()
    if args.command == "expand":
        if args.trunc is not None and args.trunc < 0:
            raise ConfigurationError(f"--trunc must be >= 0, got {args.trunc}")
        return RunConfig(
            "expand", args.trunc, None, None, None, "-", args.format, args.out,
            False, args.expression, None, threads,
        )
    if args.command == "enumerate":
        for name, value in (("--n", args.n), ("--nmax", args.nmax)):
            if value is not None and value < 0:
                raise ConfigurationError(f"{name} must be >= 0, got {value}")
        return RunConfig(
            "enumerate", None, args.nmax, args.n, args.case, args.side, args.format,
            args.out, args.count_only, None, None, threads,
        )
    target = args.target
    if args.case_flag is not None:
        if args.target not in ("all", args.case_flag):
            raise ConfigurationError("give either a positional target or --case, not both")
        target = args.case_flag
    for name, value in (("--nmax", args.nmax), ("--trunc", args.trunc)):
        if value is not None and value < 0:
            raise ConfigurationError(f"{name} must be >= 0, got {value}")
    return RunConfig(
        "verify", args.trunc, args.nmax, None, None, "-", args.format, args.out,
        False, None, target, threads,
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(args)
        if cfg.command == "expand":
            text, code = _cmd_expand(cfg)
        elif cfg.command == "enumerate":
            text, code = _cmd_enumerate(cfg)
        else:
            text, code = _cmd_verify(cfg)
    except QpvError as exc:
        sys.stderr.write(f"qpv: error: {exc}\n")
        return EXIT_USAGE
    if cfg.out is not None:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
