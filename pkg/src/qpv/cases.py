"""Dilation algebra and the catalogue of built-in identity cases.

A dilation rescales q and shifts each colour's weight line, turning the
abstract four-colour system into residue-classified ordinary integers.
An :class:`IdentityCase` bundles one dilated system (the A side), an
optional congruence-defined partition class (the B side), and an
infinite-product expression; :func:`verify_case` computes all available
sides independently and compares them coefficient by coefficient over
the full multidegree.

Cases are plain data and round-trip through JSON, so external case files
use exactly the schema the built-ins are defined in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .errors import ConfigurationError, MatrixInconsistencyError
from .partitions import (
    PRIMC_COLOURS,
    PRIMC_ROWS,
    CongruenceClass,
    DifferenceMatrix,
    ColourSystem,
    LargestPartTable,
    Part,
    PartitionSystem,
    ResidueCell,
    WeightMap,
    congruence_multidegree,
    congruence_partition_string,
    congruence_series,
    iter_admissible,
    iter_congruence,
    iter_gap_rule,
    partition_counts,
    partition_string,
    partition_weight,
)
from .reports import CheckReport, compare_series, merge_reports
from .series import Series, invert_unit, monomial, pochhammer, substitute

DEFAULT_N_MAX = 24
DEFAULT_TRUNC = 30


# ----------------------------------------------------------------------
# dilations


@dataclass(frozen=True)
class DilationSpec:
    """q -> q^q_scale with per-colour weight offsets and optional
    variable eliminations (value substitutions applied at series level)."""

    colours: tuple[str, ...]
    q_scale: int
    offsets: tuple[int, ...]
    var_values: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        if self.q_scale < 1:
            raise ConfigurationError(f"q scale must be >= 1, got {self.q_scale}")
        if len(self.offsets) != len(self.colours):
            raise ConfigurationError("offsets must align with the colour list")
        for colour, off in zip(self.colours, self.offsets):
            if self.q_scale + off < 1:
                raise ConfigurationError(
                    f"dilated weight of colour {colour!r} is nonpositive at level 1"
                )

    @classmethod
    def make(
        cls,
        colours: tuple[str, ...],
        q_scale: int = 1,
        offsets: Mapping[str, int] | None = None,
        var_values: Mapping[str, int] | None = None,
    ) -> "DilationSpec":
        offsets = offsets or {}
        unknown = set(offsets) - set(colours)
        if unknown:
            raise ConfigurationError(f"offsets for unknown colours {sorted(unknown)}")
        return cls(
            tuple(colours),
            q_scale,
            tuple(offsets.get(x, 0) for x in colours),
            tuple(sorted((var_values or {}).items())),
        )

    @property
    def is_identity(self) -> bool:
        return self.q_scale == 1 and not any(self.offsets) and not self.var_values

    def offsets_map(self) -> dict[str, int]:
        return dict(zip(self.colours, self.offsets))

    def var_values_map(self) -> dict[str, int]:
        return dict(self.var_values)


def dilated_matrix(matrix: DifferenceMatrix, spec: DilationSpec) -> DifferenceMatrix:
    """Gap matrix on dilated values: scale every entry and correct by the
    offset difference of the two colours.  A negative result would let
    dilated values invert an adjacency the base matrix admits, which has
    no partition reading; it is reported as an inconsistency."""
    if matrix.colours != spec.colours:
        raise ConfigurationError("matrix and dilation colour lists differ")
    rows = []
    for i, x in enumerate(spec.colours):
        row = []
        for j, y in enumerate(spec.colours):
            entry = spec.q_scale * matrix.rows[i][j] + spec.offsets[i] - spec.offsets[j]
            if entry < 0:
                raise MatrixInconsistencyError(
                    f"dilated gap for ({x},{y}) is negative ({entry})"
                )
            row.append(entry)
        rows.append(tuple(row))
    return DifferenceMatrix(spec.colours, tuple(rows))


def dilated_weights(spec: DilationSpec) -> WeightMap:
    return WeightMap(spec.colours, spec.q_scale, spec.offsets)


def dilated_order(spec: DilationSpec, count: int) -> list[Part]:
    """First ``count`` dilated parts in increasing order (value, then the
    position of the preimage in the base order)."""
    keyed = []
    for rank, colour in enumerate(spec.colours):
        for level in range(1, count + 2):
            value = spec.q_scale * level + spec.offsets[rank]
            keyed.append((value, level, rank, colour))
    keyed.sort()
    return [Part(value, colour, level) for value, level, rank, colour in keyed[:count]]


# ----------------------------------------------------------------------
# product expressions


@dataclass(frozen=True)
class ProductFactor:
    """One Pochhammer factor ``(sign * base; q^ratio)_count`` placed in
    the numerator or denominator; ``count=None`` means infinite."""

    base_q: int
    base_exps: tuple[tuple[str, int], ...]
    ratio: int
    count: int | None
    sign: int = 1
    denominator: bool = False

    @classmethod
    def make(
        cls,
        base_q: int,
        ratio: int,
        count: int | None = None,
        sign: int = 1,
        denominator: bool = False,
        **exps: int,
    ) -> "ProductFactor":
        return cls(base_q, tuple(sorted(exps.items())), ratio, count, sign, denominator)

    def to_dict(self) -> dict:
        base: dict[str, int] = {"q": self.base_q}
        base.update(dict(self.base_exps))
        return {
            "sign": self.sign,
            "base": base,
            "ratio": self.ratio,
            "count": "inf" if self.count is None else self.count,
            "position": "denominator" if self.denominator else "numerator",
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "ProductFactor":
        try:
            base = dict(data["base"])
            base_q = base.pop("q", 0)
            count = data["count"]
            count = None if count == "inf" else int(count)
            position = data["position"]
            if position not in ("numerator", "denominator"):
                raise ConfigurationError(f"bad factor position {position!r}")
            return cls.make(
                base_q,
                int(data["ratio"]),
                count,
                int(data["sign"]),
                position == "denominator",
                **{str(k): int(v) for k, v in base.items()},
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigurationError(f"malformed product factor: {exc}") from exc


def product_series(
    factors: tuple[ProductFactor, ...], trunc: int, vars: tuple[str, ...]
) -> Series:
    num = Series.one(trunc, vars)
    den = Series.one(trunc, vars)
    for f in factors:
        s = pochhammer(
            monomial(f.base_q, vars, **dict(f.base_exps)), f.ratio, f.count, trunc, vars, sign=f.sign
        )
        if f.denominator:
            den = den * s
        else:
            num = num * s
    return num * invert_unit(den)


# ----------------------------------------------------------------------
# identity cases


@dataclass(frozen=True)
class IdentityCase:
    """One named identity: a dilated difference-condition system (A side),
    an optional congruence class (B side), and the product both equal."""

    name: str
    dilation: DilationSpec
    tracked: tuple[tuple[str, str], ...]
    variables: tuple[str, ...]
    product: tuple[ProductFactor, ...]
    congruence: CongruenceClass | None
    colour_suffix: tuple[tuple[str, str], ...]
    legend: tuple[tuple[str, str], ...]
    n_max_default: int = DEFAULT_N_MAX
    trunc_default: int = DEFAULT_TRUNC
    notes: tuple[str, ...] = ()

    def system(self) -> PartitionSystem:
        base = DifferenceMatrix.from_rows(PRIMC_COLOURS, PRIMC_ROWS)
        return PartitionSystem(
            ColourSystem(self.dilation.colours),
            dilated_matrix(base, self.dilation),
            dilated_weights(self.dilation),
        )

    def tracked_map(self) -> dict[str, str]:
        return dict(self.tracked)

    def suffix_map(self) -> dict[str, str]:
        return dict(self.colour_suffix)


def a_side_series(case: IdentityCase, trunc: int) -> Series:
    """A-side generating series by enumeration under the dilated matrix
    and weights."""
    return LargestPartTable(case.system(), case.tracked_map(), trunc, case.variables).total()


def b_side_series(case: IdentityCase, trunc: int) -> Series | None:
    if case.congruence is None:
        return None
    return congruence_series(case.congruence, trunc, case.variables)


def product_side_series(case: IdentityCase, trunc: int) -> Series:
    return product_series(case.product, trunc, case.variables)


def a_side_partition_strings(case: IdentityCase, n: int) -> list[str]:
    """Canonically formatted A-side partitions of weight exactly n."""
    suffix = case.suffix_map()
    return [
        partition_string(parts, suffix)
        for parts in iter_admissible(case.system(), n)
        if partition_weight(parts) == n
    ]


def b_side_partition_strings(case: IdentityCase, n: int) -> list[str]:
    if case.congruence is None:
        raise ConfigurationError(f"case {case.name!r} defines no congruence side")
    return [
        congruence_partition_string(p, case.congruence)
        for p in iter_congruence(case.congruence, n)
        if sum(v for v, _ in p) == n
    ]


# ----------------------------------------------------------------------
# built-in catalogue (JSON-shaped literals; the loader below is the only
# constructor, so external case files share the exact schema)

_THEOREM_MAIN = {
    "name": "theorem-main",
    "colours": ["a", "b", "c", "d"],
    "dilation": {"q_scale": 1, "offsets": {}, "substitutions": {}},
    "tracked": {"a": "a", "c": "c", "d": "d"},
    "variables": ["a", "c", "d"],
    "product": [
        {"sign": -1, "base": {"q": 1, "a": 1}, "ratio": 2, "count": "inf", "position": "numerator"},
        {"sign": -1, "base": {"q": 1, "d": 1}, "ratio": 2, "count": "inf", "position": "numerator"},
        {"sign": 1, "base": {"q": 1}, "ratio": 1, "count": "inf", "position": "denominator"},
        {"sign": 1, "base": {"q": 1, "c": 1}, "ratio": 2, "count": "inf", "position": "denominator"},
    ],
    "congruence": None,
    "display": {"a": "_a", "b": "_b", "c": "_c", "d": "_d"},
    "legend": {
        "a": "parts coloured a",
        "c": "parts coloured c",
        "d": "parts coloured d",
    },
    "defaults": {"n_max": 24, "trunc": 30},
    "notes": [],
}

_COR2 = {
    "name": "cor2",
    "colours": ["a", "b", "c", "d"],
    "dilation": {"q_scale": 2, "offsets": {"a": -1, "b": 0, "c": 0, "d": 1}, "substitutions": {}},
    "tracked": {"a": "a", "c": "c", "d": "d"},
    "variables": ["a", "c", "d"],
    "product": [
        {"sign": -1, "base": {"q": 1, "a": 1}, "ratio": 4, "count": "inf", "position": "numerator"},
        {"sign": -1, "base": {"q": 3, "d": 1}, "ratio": 4, "count": "inf", "position": "numerator"},
        {"sign": 1, "base": {"q": 2}, "ratio": 2, "count": "inf", "position": "denominator"},
        {"sign": 1, "base": {"q": 2, "c": 1}, "ratio": 4, "count": "inf", "position": "denominator"},
    ],
    "congruence": {
        "modulus": 4,
        "cells": [
            {"residues": [1], "distinct": True, "var": "a", "kind": ""},
            {"residues": [3], "distinct": True, "var": "d", "kind": ""},
            {"residues": [0, 2], "distinct": False, "var": None, "kind": ""},
            {"residues": [2], "distinct": False, "var": "c", "kind": "'"},
        ],
    },
    "display": {"a": "", "b": "'", "c": "", "d": "'"},
    "legend": {
        "a": "odd red parts / parts = 1 (mod 4)",
        "c": "even red parts / green parts",
        "d": "odd green parts / parts = 3 (mod 4)",
    },
    "defaults": {"n_max": 24, "trunc": 30},
    "notes": ["two-coloured refinement: red = colours a,c; green (primed) = colours b,d"],
}

_COR3 = {
    "name": "cor3",
    "colours": ["a", "b", "c", "d"],
    "dilation": {"q_scale": 4, "offsets": {"a": -3, "b": 0, "c": -2, "d": 3}, "substitutions": {}},
    "tracked": {"a": "a", "c": "c", "d": "d"},
    "variables": ["a", "c", "d"],
    "product": [
        {"sign": -1, "base": {"q": 1, "a": 1}, "ratio": 8, "count": "inf", "position": "numerator"},
        {"sign": -1, "base": {"q": 7, "d": 1}, "ratio": 8, "count": "inf", "position": "numerator"},
        {"sign": 1, "base": {"q": 4}, "ratio": 4, "count": "inf", "position": "denominator"},
        {"sign": 1, "base": {"q": 2, "c": 1}, "ratio": 8, "count": "inf", "position": "denominator"},
    ],
    "congruence": {
        "modulus": 8,
        "cells": [
            {"residues": [1], "distinct": True, "var": "a", "kind": ""},
            {"residues": [7], "distinct": True, "var": "d", "kind": ""},
            {"residues": [2], "distinct": False, "var": "c", "kind": ""},
            {"residues": [0, 4], "distinct": False, "var": None, "kind": ""},
        ],
    },
    "display": {"a": "", "b": "", "c": "", "d": ""},
    "legend": {
        "a": "parts = 1 (mod 4) / parts = 1 (mod 8)",
        "c": "parts = 2 (mod 4) / parts = 2 (mod 8)",
        "d": "parts = 3 (mod 4) / parts = 7 (mod 8)",
    },
    "defaults": {"n_max": 28, "trunc": 32},
    "notes": ["no part equal to 3: the d colour starts at value 7"],
}

_COR31 = {
    "name": "cor31",
    "colours": ["a", "b", "c", "d"],
    "dilation": {
        "q_scale": 3,
        "offsets": {"a": -1, "b": 0, "c": 0, "d": 1},
        "substitutions": {"c": 1},
    },
    "tracked": {"a": "a", "d": "d"},
    "variables": ["a", "d"],
    "product": [
        {"sign": -1, "base": {"q": 2, "a": 1}, "ratio": 6, "count": "inf", "position": "numerator"},
        {"sign": -1, "base": {"q": 4, "d": 1}, "ratio": 6, "count": "inf", "position": "numerator"},
        {"sign": -1, "base": {"q": 3}, "ratio": 3, "count": "inf", "position": "numerator"},
        {"sign": 1, "base": {"q": 3}, "ratio": 3, "count": "inf", "position": "denominator"},
    ],
    "congruence": {
        "modulus": 6,
        "cells": [
            {"residues": [2], "distinct": True, "var": "a", "kind": ""},
            {"residues": [4], "distinct": True, "var": "d", "kind": ""},
            {"residues": [0, 3], "distinct": False, "var": None, "kind": ""},
            {"residues": [0, 3], "distinct": True, "var": None, "kind": "'"},
        ],
    },
    "display": {"a": "", "b": "", "c": "'", "d": ""},
    "legend": {
        "a": "parts = 2 (mod 3) / parts = 2 (mod 6)",
        "d": "parts = 1 (mod 3) / parts = 4 (mod 6)",
    },
    "defaults": {"n_max": 24, "trunc": 30},
    "notes": [
        "multiples of 3 come in two kinds; primed ones may not repeat",
        "product differs from the Capparelli-type product only by the"
        " extra ordinary-multiples factor 1/((q^3;q^3)_inf)",
    ],
}

_PRIMC = {
    "name": "primc",
    "colours": ["a", "b", "c", "d"],
    "dilation": {
        "q_scale": 2,
        "offsets": {"a": -1, "b": 0, "c": 0, "d": 1},
        "substitutions": {"a": 1, "c": 1, "d": 1},
    },
    "tracked": {},
    "variables": [],
    "product": [
        {"sign": -1, "base": {"q": 1}, "ratio": 4, "count": "inf", "position": "numerator"},
        {"sign": -1, "base": {"q": 3}, "ratio": 4, "count": "inf", "position": "numerator"},
        {"sign": 1, "base": {"q": 2}, "ratio": 2, "count": "inf", "position": "denominator"},
        {"sign": 1, "base": {"q": 2}, "ratio": 4, "count": "inf", "position": "denominator"},
    ],
    "congruence": {
        "modulus": 1,
        "cells": [{"residues": [0], "distinct": False, "var": None, "kind": ""}],
    },
    "display": {"a": "", "b": "'", "c": "", "d": "'"},
    "legend": {},
    "defaults": {"n_max": 40, "trunc": 60},
    "notes": ["all statistics specialised to 1; the product telescopes to 1/((q;q)_inf)"],
}

_BUILTIN_DICTS = (_THEOREM_MAIN, _COR2, _COR3, _COR31, _PRIMC)


def case_from_dict(data: Mapping) -> IdentityCase:
    try:
        colours = tuple(str(x) for x in data["colours"])
        dl = data["dilation"]
        dilation = DilationSpec.make(
            colours,
            int(dl.get("q_scale", 1)),
            {str(k): int(v) for k, v in dl.get("offsets", {}).items()},
            {str(k): int(v) for k, v in dl.get("substitutions", {}).items()},
        )
        tracked = tuple(sorted((str(k), str(v)) for k, v in data["tracked"].items()))
        variables = tuple(str(v) for v in data["variables"])
        product = tuple(ProductFactor.from_dict(f) for f in data["product"])
        congruence = None
        if data.get("congruence") is not None:
            cg = data["congruence"]
            cells = tuple(
                ResidueCell(
                    frozenset(int(r) for r in cell["residues"]),
                    bool(cell.get("distinct", False)),
                    None if cell.get("var") is None else str(cell["var"]),
                    str(cell.get("kind", "")),
                    int(cell.get("min_value", 1)),
                )
                for cell in cg["cells"]
            )
            congruence = CongruenceClass(int(cg["modulus"]), cells)
        display = tuple(sorted((str(k), str(v)) for k, v in data.get("display", {}).items()))
        legend = tuple(sorted((str(k), str(v)) for k, v in data.get("legend", {}).items()))
        defaults = data.get("defaults", {})
        return IdentityCase(
            name=str(data["name"]),
            dilation=dilation,
            tracked=tracked,
            variables=variables,
            product=product,
            congruence=congruence,
            colour_suffix=display,
            legend=legend,
            n_max_default=int(defaults.get("n_max", DEFAULT_N_MAX)),
            trunc_default=int(defaults.get("trunc", DEFAULT_TRUNC)),
            notes=tuple(str(n) for n in data.get("notes", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigurationError(f"malformed case description: {exc}") from exc


def case_to_dict(case: IdentityCase) -> dict:
    return {
        "name": case.name,
        "colours": list(case.dilation.colours),
        "dilation": {
            "q_scale": case.dilation.q_scale,
            "offsets": case.dilation.offsets_map(),
            "substitutions": case.dilation.var_values_map(),
        },
        "tracked": dict(case.tracked),
        "variables": list(case.variables),
        "product": [f.to_dict() for f in case.product],
        "congruence": None
        if case.congruence is None
        else {
            "modulus": case.congruence.modulus,
            "cells": [
                {
                    "residues": sorted(cell.residues),
                    "distinct": cell.distinct,
                    "var": cell.var,
                    "kind": cell.kind,
                    "min_value": cell.min_value,
                }
                for cell in case.congruence.cells
            ],
        },
        "display": dict(case.colour_suffix),
        "legend": dict(case.legend),
        "defaults": {"n_max": case.n_max_default, "trunc": case.trunc_default},
        "notes": list(case.notes),
    }


def load_case_file(path: str | Path) -> IdentityCase:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigurationError(f"cannot read case file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"case file {path} is not valid JSON: {exc}") from exc
    return case_from_dict(data)


def builtin_cases() -> dict[str, IdentityCase]:
    """The five built-in cases, in catalogue order."""
    return {d["name"]: case_from_dict(d) for d in _BUILTIN_DICTS}


# ----------------------------------------------------------------------
# prose restatements of the dilated gap conditions


def _cor2_prose_gap(larger: Part, smaller: Part) -> bool:
    green = {"b", "d"}
    gap = larger.value - smaller.value
    same = (larger.colour in green) == (smaller.colour in green)
    if larger.value % 2 == 1 and not same:
        return gap >= 1
    if larger.value % 2 == 0 and not same:
        return gap >= 2
    if larger.value % 2 == 1 and same:
        return gap >= 3
    return gap >= 0


def _cor3_prose_gap(larger: Part, smaller: Part) -> bool:
    gap = larger.value - smaller.value
    if larger.value % 4 == 3:
        return gap >= 5
    if larger.value % 4 in (0, 1) and smaller.value % 4 in (1, 2):
        return gap >= 5
    return gap >= 0


_PROSE_GAP_RULES = {"cor2": _cor2_prose_gap, "cor3": _cor3_prose_gap}


def prose_equivalence_check(case: IdentityCase, n_max: int) -> CheckReport:
    """Whether the prose inequality conditions carve out exactly the
    matrix-admissible partitions; computed, never assumed."""
    rule = _PROSE_GAP_RULES.get(case.name)
    if rule is None:
        raise ConfigurationError(f"no prose gap rule recorded for case {case.name!r}")
    system = case.system()

    def key(parts):
        return tuple((p.value, p.level, p.colour) for p in parts)

    by_matrix = sorted(iter_admissible(system, n_max), key=key)
    by_prose = sorted(iter_gap_rule(system, rule, n_max), key=key)
    params = {"case": case.name, "n_max": n_max}
    if by_matrix == by_prose:
        return CheckReport("prose-matrix-equivalence", params)
    only_matrix = [p for p in by_matrix if p not in by_prose]
    only_prose = [p for p in by_prose if p not in by_matrix]
    sample = (only_matrix or only_prose)[0]
    params = dict(params)
    params["matrix_only"] = len(only_matrix)
    params["prose_only"] = len(only_prose)
    params["example"] = partition_string(sample, case.suffix_map())
    return CheckReport("prose-matrix-equivalence", params, "fail")


# ----------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class CaseReport:
    name: str
    n_max: int
    trunc: int
    checks: tuple[CheckReport, ...]
    per_weight: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "case": self.name,
            "n_max": self.n_max,
            "truncation": self.trunc,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_dict() for c in self.checks],
            "per_weight_totals": list(self.per_weight),
        }


def dilation_consistency_check(case: IdentityCase, n_max: int) -> CheckReport:
    """Commutation of enumeration with dilation: substituting the base
    system's series must reproduce the series enumerated directly under
    the dilated matrix and weights.

    Keeping the input truncation for the output is sound here: a
    partition monomial has total variable degree at most its q-degree,
    and every validated offset is > -q_scale, so dilated exponents never
    drop below the original ones.
    """
    base_case = builtin_cases()["theorem-main"]
    tracked = base_case.tracked_map()
    var_offsets: dict[str, int] = {}
    for colour, off in case.dilation.offsets_map().items():
        var = tracked.get(colour)
        if var is None:
            if off != 0:
                raise ConfigurationError(
                    f"colour {colour!r} is untracked but has offset {off}; the"
                    " dilation has no series-level form"
                )
        else:
            var_offsets[var] = off
    base = a_side_series(base_case, n_max)
    mapped = substitute(base, case.dilation.q_scale, var_offsets, n_max)
    values = case.dilation.var_values_map()
    if values:
        mapped = mapped.specialize(values)
    direct = a_side_series(case, n_max)
    return compare_series(
        "dilation-consistency", mapped, direct, {"case": case.name, "n_max": n_max}
    )


def _primc_simplification_check(case: IdentityCase, trunc: int) -> CheckReport:
    """The specialised product telescopes to the ordinary-partition
    product inverse."""
    novars: tuple[str, ...] = ()
    lhs = product_series(case.product, trunc, novars)
    rhs = invert_unit(pochhammer(monomial(1, novars), 1, None, trunc, novars))
    return compare_series("primc-product-simplification", lhs, rhs, {"trunc": trunc})


def _primc_counter_check(case: IdentityCase, n_max: int) -> CheckReport:
    """Dilated enumeration totals against the stand-alone partition
    counter."""
    counts = a_side_series(case, n_max).weight_counts()
    expected = partition_counts(n_max)
    for n, (got, want) in enumerate(zip(counts, expected)):
        if got != want:
            from .reports import Discrepancy

            return CheckReport(
                "primc-vs-partition-counter",
                {"n_max": n_max},
                "fail",
                Discrepancy(n, (), got, want),
            )
    return CheckReport("primc-vs-partition-counter", {"n_max": n_max})


def verify_case(case: IdentityCase, n_max: int | None = None, trunc: int | None = None) -> CaseReport:
    """Compute every available side of the identity independently and
    compare them up to weight n_max (full multidegree)."""
    n_max = case.n_max_default if n_max is None else n_max
    trunc = case.trunc_default if trunc is None else trunc
    if n_max < 0 or trunc < n_max:
        raise ConfigurationError(
            f"need 0 <= n_max <= trunc, got n_max={n_max}, trunc={trunc}"
        )
    a_side = a_side_series(case, n_max)
    product = product_side_series(case, trunc).truncated(n_max)
    checks: list[CheckReport] = [
        compare_series("a-side-vs-product", a_side, product, {"case": case.name, "n_max": n_max})
    ]
    b_side = b_side_series(case, n_max)
    if b_side is not None:
        checks.append(
            compare_series("b-side-vs-product", b_side, product, {"case": case.name, "n_max": n_max})
        )
        checks.append(
            compare_series("a-side-vs-b-side", a_side, b_side, {"case": case.name, "n_max": n_max})
        )
    if not case.dilation.is_identity:
        checks.append(dilation_consistency_check(case, n_max))
    if case.name in _PROSE_GAP_RULES:
        checks.append(prose_equivalence_check(case, n_max))
    if case.name == "primc":
        checks.append(_primc_simplification_check(case, trunc))
        checks.append(_primc_counter_check(case, n_max))
    a_totals = a_side.weight_counts()
    b_totals = b_side.weight_counts() if b_side is not None else None
    p_totals = product.weight_counts()
    per_weight = tuple(
        {
            "n": n,
            "a_side": a_totals[n],
            "b_side": None if b_totals is None else b_totals[n],
            "product": p_totals[n],
        }
        for n in range(n_max + 1)
    )
    return CaseReport(case.name, n_max, trunc, tuple(checks), per_weight)
