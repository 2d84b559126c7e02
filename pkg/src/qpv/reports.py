"""Structured pass/fail reports for verification checks.

Every check produces a :class:`CheckReport` carrying an identifier, its
parameters, a status, and, on failure, the first differing coefficient.
Reports serialise to plain dicts for the CLI's JSON output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import ConfigurationError
from .series import Series

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class Discrepancy:
    q_exp: int
    colour_exps: tuple[int, ...]
    lhs: int
    rhs: int
    x_exp: int | None = None

    def to_dict(self) -> dict:
        out: dict[str, object] = {
            "q_exp": self.q_exp,
            "colour_exps": list(self.colour_exps),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }
        if self.x_exp is not None:
            out["x_exp"] = self.x_exp
        return out


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    params: Mapping[str, object] = field(default_factory=dict)
    status: str = PASS
    first_discrepancy: Discrepancy | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        out: dict[str, object] = {
            "check_id": self.check_id,
            "parameters": dict(sorted(self.params.items())),
            "status": self.status,
        }
        if self.first_discrepancy is not None:
            out["first_discrepancy"] = self.first_discrepancy.to_dict()
        return out

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        line = f"{self.status.upper():4s} {self.check_id}"
        if params:
            line += f" [{params}]"
        if self.first_discrepancy is not None:
            d = self.first_discrepancy
            where = f"q^{d.q_exp}"
            if d.x_exp is not None:
                where += f" x^{d.x_exp}"
            if any(d.colour_exps):
                where += f" exps={d.colour_exps}"
            line += f" first discrepancy at {where}: lhs={d.lhs} rhs={d.rhs}"
        return line


def compare_series(
    check_id: str,
    lhs: Series,
    rhs: Series,
    params: Mapping[str, object] | None = None,
    up_to: int | None = None,
    x_exp: int | None = None,
) -> CheckReport:
    """Coefficientwise comparison up to ``up_to`` (default: the common
    truncation bound).  Both series must share a variable set."""
    if lhs.vars != rhs.vars:
        raise ConfigurationError(f"variable sets differ: {lhs.vars} vs {rhs.vars}")
    bound = min(lhs.trunc, rhs.trunc)
    if up_to is not None:
        if up_to > bound:
            raise ConfigurationError(
                f"comparison to q^{up_to} requested but series exact only to q^{bound}"
            )
        bound = up_to
    params = dict(params or {})
    params.setdefault("up_to_q", bound)
    keys = {k for k in lhs._terms if k[0] <= bound}
    keys.update(k for k in rhs._terms if k[0] <= bound)
    for key in sorted(keys):
        lc = lhs._terms.get(key, 0)
        rc = rhs._terms.get(key, 0)
        if lc != rc:
            return CheckReport(
                check_id,
                params,
                FAIL,
                Discrepancy(key[0], key[1], lc, rc, x_exp=x_exp),
            )
    return CheckReport(check_id, params, PASS)


def merge_reports(check_id: str, params: Mapping[str, object], reports: list[CheckReport]) -> CheckReport:
    """Collapse sub-reports into one: fails with the first failing
    sub-report's discrepancy, annotated with its identifier."""
    for rep in reports:
        if not rep.passed:
            merged = dict(params)
            merged["failed_sub_check"] = rep.check_id
            merged.update(rep.params)
            return CheckReport(check_id, merged, FAIL, rep.first_discrepancy)
    return CheckReport(check_id, dict(params), PASS)
