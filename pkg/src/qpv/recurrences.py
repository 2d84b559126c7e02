"""Recurrence engines for the four-colour system and their cross-checks.

Three independent routes compute the generating series of admissible
partitions with a bounded largest part:

* the *ladder* engine: per-colour recurrences obtained by peeling the
  largest part, solved level by level (divisions only by unit series);
* the *third-order* engine: a single order-3 recurrence in the level for
  the bounded series of the last colour, seeded with closed-form initial
  values;
* a *q-hypergeometric closed form*: a finite sum of Pochhammer quotients.

On top of these sits the transformation chain: dividing the k-th bounded
series by ``1 - q^(k+1)`` gives a sequence satisfying a shifted
recurrence; packaging it as an x-power series and dividing by
``(-x; q)_inf`` produces coefficients obeying a two-step recurrence whose
closed form telescopes to the infinite-product limit.  Every step is
verified as a truncated series identity; the analytic limit itself is
replaced by the testable statement that coefficients of the bounded
series stabilise, once the level passes the degree, to those of the
product.

All checks return :class:`CheckReport` values; nothing is asserted
in-line, so the CLI can render the same reports it acts on.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from .errors import ConfigurationError
from .partitions import (
    PRIMC_TRACKED,
    LargestPartTable,
    primc_system,
)
from .reports import CheckReport, compare_series, merge_reports
from .series import Series, invert_unit, monomial, pochhammer

VARS = ("a", "c", "d")
COLOURS = ("a", "b", "c", "d")


# ----------------------------------------------------------------------
# small builders


def _one(trunc: int) -> Series:
    return Series.one(trunc, VARS)


def _term(coef: int, q_exp: int, trunc: int, **exps: int) -> Series:
    return Series.term(coef, q_exp, exps, trunc, VARS)


def _poch(q_exp: int, ratio: int, count: int | None, trunc: int, sign: int = 1, **exps: int) -> Series:
    return pochhammer(monomial(q_exp, VARS, **exps), ratio, count, trunc, VARS, sign=sign)


def _inv_one_minus(q_exp: int, trunc: int, **exps: int) -> Series:
    return invert_unit(_one(trunc) - _term(1, q_exp, trunc, **exps))


# ----------------------------------------------------------------------
# ladder engine: per-colour recurrences, one level at a time


@dataclass(frozen=True)
class LadderLevel:
    """Per-colour series at one level: ``exact[x]`` enumerates admissible
    partitions whose largest part is exactly level_x, ``bounded[x]`` at
    most level_x; ``prev_bounded_last`` retains the last-colour bounded
    series one level down (the step recursion reaches two levels back)."""

    level: int
    exact: Mapping[str, Series]
    bounded: Mapping[str, Series]
    prev_bounded_last: Series


def ladder_init(trunc: int) -> LadderLevel:
    """Level 0: only the empty partition, carried by the second colour."""
    one = _one(trunc)
    zero = Series.zero(trunc, VARS)
    return LadderLevel(
        level=0,
        exact={"a": zero, "b": one, "c": zero, "d": zero},
        bounded={"a": zero, "b": one, "c": one, "d": one},
        prev_bounded_last=zero,
    )


def ladder_step(state: LadderLevel) -> LadderLevel:
    """Advance one level.

    Peeling the largest part k_x leaves a partition whose largest part is
    restricted by row x of the gap matrix; solving the resulting four
    equations (the b and c/d ones are self-referential and solved by a
    unit division) gives the exact series, and running sums give the
    bounded ones.  The d-colour series is c/d-proportional to the
    c-colour one and is built from the same core sum.
    """
    k = state.level + 1
    trunc = state.prev_bounded_last.trunc
    one = _one(trunc)
    exact_a = _term(1, k, trunc, a=1) * (state.exact["b"] + state.prev_bounded_last)
    exact_b = _term(1, k, trunc) * _inv_one_minus(k, trunc) * state.bounded["d"]
    inv_c = invert_unit(one - _term(1, k, trunc, c=1))
    core = exact_a + state.bounded["c"]
    exact_c = _term(1, k, trunc, c=1) * inv_c * core
    exact_d = _term(1, k, trunc, d=1) * inv_c * core
    bounded_a = state.bounded["d"] + exact_a
    bounded_b = bounded_a + exact_b
    bounded_c = bounded_b + exact_c
    bounded_d = bounded_c + exact_d
    return LadderLevel(
        level=k,
        exact={"a": exact_a, "b": exact_b, "c": exact_c, "d": exact_d},
        bounded={"a": bounded_a, "b": bounded_b, "c": bounded_c, "d": bounded_d},
        prev_bounded_last=state.bounded["d"],
    )


def ladder_levels(k_max: int, trunc: int) -> list[LadderLevel]:
    """Levels 0..k_max of the ladder engine."""
    levels = [ladder_init(trunc)]
    for _ in range(k_max):
        levels.append(ladder_step(levels[-1]))
    return levels


# ----------------------------------------------------------------------
# third-order engine for the last-colour bounded series


def third_order_levels(k_max: int, trunc: int) -> list[Series]:
    """Bounded series of the last colour for levels 0..k_max, computed
    solely from the order-3 level recurrence and its three seed values;
    independent of the ladder engine."""
    if k_max < 0:
        raise ConfigurationError(f"k_max must be >= 0, got {k_max}")
    one = _one(trunc)
    inv_q1 = _inv_one_minus(1, trunc)
    inv_c1 = _inv_one_minus(1, trunc, c=1)
    binom = (one + _term(1, 1, trunc, a=1)) * (one + _term(1, 1, trunc, d=1))
    out = [one]
    if k_max >= 1:
        out.append(_term(1, 1, trunc) * inv_q1 + binom * inv_c1)
    if k_max >= 2:
        inv_q2 = _inv_one_minus(2, trunc)
        out.append(
            _term(1, 3, trunc) * inv_q1 * inv_q2
            + binom * (one - _term(1, 3, trunc)) * inv_q1 * inv_q2 * inv_c1
        )
    for k in range(3, k_max + 1):
        t1 = (one - _term(1, 2 * k, trunc, c=1)) * _inv_one_minus(k, trunc) * out[k - 1]
        t2 = (
            _term(1, k, trunc, a=1) + _term(1, k, trunc, d=1) + _term(1, 2 * k, trunc, a=1, d=1)
        ) * _inv_one_minus(k - 1, trunc) * out[k - 2]
        t3 = _term(1, 2 * k - 1, trunc, a=1, d=1) * _inv_one_minus(k - 2, trunc) * out[k - 3]
        out.append(invert_unit(one - _term(1, k, trunc, c=1)) * (t1 + t2 + t3))
    return out


# ----------------------------------------------------------------------
# q-hypergeometric closed form


def closed_form_term(k: int, i: int, trunc: int) -> Series:
    """The i-th numerator term of the closed form: vanishes for
    ``k - 2i + 1 < 0`` (empty-denominator convention)."""
    if k < 0 or i < 0:
        raise ConfigurationError(f"indices must be nonnegative, got k={k}, i={i}")
    m = k - 2 * i + 1
    if m < 0:
        return Series.zero(trunc, VARS)
    e = comb(m, 2)
    if e > trunc:
        return Series.zero(trunc, VARS)
    t = _term(1, e, trunc)
    t = t * _poch(1, 2, i, trunc, sign=-1, a=1) * _poch(1, 2, i, trunc, sign=-1, d=1)
    t = t * invert_unit(_poch(1, 1, m, trunc)) * invert_unit(_poch(2, 2, i, trunc))
    return (_one(trunc) - _term(1, k + 1, trunc)) * t


def hypergeometric_bounded(k: int, trunc: int) -> Series:
    """Closed form of the level-k bounded series of the last colour: a
    finite sum of Pochhammer quotients."""
    if k < 0:
        raise ConfigurationError(f"level must be >= 0, got {k}")
    total = Series.zero(trunc, VARS)
    for i in range(0, (k + 1) // 2 + 1):
        term = closed_form_term(k, i, trunc)
        if not term.is_zero():
            total = total + term * invert_unit(_poch(1, 2, i, trunc, c=1))
    return total


def closed_form_term_recurrence_check(k_max: int, i_max: int, trunc: int) -> CheckReport:
    """First-order recurrence of the closed-form terms in the level, for
    i >= 1: a unit-division step plus an explicit Pochhammer quotient."""
    reports = []
    for k in range(1, k_max + 1):
        step = _term(1, k, trunc) * _inv_one_minus(k, trunc)
        for i in range(1, i_max + 1):
            m = k - 2 * i + 1
            extra = Series.zero(trunc, VARS)
            if m >= 0 and comb(m, 2) <= trunc:
                extra = (
                    _term(1, comb(m, 2), trunc)
                    * _poch(1, 2, i, trunc, sign=-1, a=1)
                    * _poch(1, 2, i, trunc, sign=-1, d=1)
                    * invert_unit(_poch(1, 1, m, trunc))
                    * invert_unit(_poch(2, 2, i - 1, trunc))
                )
            rhs = step * closed_form_term(k - 1, i, trunc) + extra
            reports.append(
                compare_series(
                    f"closed-form-term-recurrence[k={k},i={i}]",
                    closed_form_term(k, i, trunc),
                    rhs,
                    {"k": k, "i": i},
                )
            )
    return merge_reports(
        "closed-form-term-recurrence", {"k_max": k_max, "i_max": i_max, "trunc": trunc}, reports
    )


def closed_form_term_sum_check(k_max: int, trunc: int) -> CheckReport:
    """Summing the terms against the remaining Pochhammer denominator
    reproduces the closed form."""
    reports = []
    for k in range(k_max + 1):
        total = Series.zero(trunc, VARS)
        for i in range(0, (k + 1) // 2 + 1):
            total = total + closed_form_term(k, i, trunc) * invert_unit(
                _poch(1, 2, i, trunc, c=1)
            )
        reports.append(
            compare_series(
                f"closed-form-term-sum[k={k}]", total, hypergeometric_bounded(k, trunc), {"k": k}
            )
        )
    return merge_reports("closed-form-term-sum", {"k_max": k_max, "trunc": trunc}, reports)


# ----------------------------------------------------------------------
# the infinite product


def limit_product(trunc: int) -> Series:
    """The four-factor infinite product the bounded series converge to."""
    num = _poch(1, 2, None, trunc, sign=-1, a=1) * _poch(1, 2, None, trunc, sign=-1, d=1)
    den = invert_unit(_poch(1, 1, None, trunc)) * invert_unit(_poch(1, 2, None, trunc, c=1))
    return num * den


# ----------------------------------------------------------------------
# x-power-series helpers (coefficients are Series)


def _xp_mul(A: Sequence[Series], B: Sequence[Series], x_max: int) -> list[Series]:
    trunc = A[0].trunc
    out = [Series.zero(trunc, VARS) for _ in range(x_max + 1)]
    for i, ai in enumerate(A):
        if i > x_max or ai.is_zero():
            continue
        for j, bj in enumerate(B):
            if i + j > x_max:
                break
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return out


def _xp_invert(A: Sequence[Series], x_max: int) -> list[Series]:
    inv0 = invert_unit(A[0])
    out = [inv0]
    for n in range(1, x_max + 1):
        acc = Series.zero(A[0].trunc, VARS)
        for i in range(1, min(n, len(A) - 1) + 1):
            acc = acc + A[i] * out[n - i]
        out.append(-(inv0 * acc))
    return out


def _xp_shift(A: Sequence[Series], j: int) -> list[Series]:
    """Substitute x -> x * q^j."""
    trunc = A[0].trunc
    return [ai * Series.term(1, j * i, {}, trunc, VARS) if j * i <= trunc else Series.zero(trunc, VARS) for i, ai in enumerate(A)]


def _neg_x_pochhammer(x_max: int, trunc: int) -> list[Series]:
    """x-coefficients of prod_{j>=0} (1 + x q^j), truncated in both x and q."""
    out = [_one(trunc)] + [Series.zero(trunc, VARS) for _ in range(x_max)]
    for j in range(trunc + 1):
        factor = [_one(trunc), _term(1, j, trunc)]
        out = _xp_mul(out, factor, x_max)
    return out


# ----------------------------------------------------------------------
# transformation chain


@dataclass(frozen=True)
class TransformChain:
    """The shifted sequence, its x-power series, and the reduced series.

    ``f[j]`` is the (j-1)-level shifted series (``f[0]`` the synthetic
    unit seed); ``g`` is f divided by ``(-x; q)_inf``; ``g[n]`` are the
    coefficients satisfying the two-step recurrence.
    """

    trunc: int
    x_max: int
    f: tuple[Series, ...]
    g: tuple[Series, ...]

    def shifted(self, k: int) -> Series:
        """The level-k shifted series; unit at level -1, zero below."""
        if k <= -2:
            return Series.zero(self.trunc, VARS)
        return self.f[k + 1]


def transform_chain(x_max: int, trunc: int) -> TransformChain:
    """Build the chain from the third-order engine: divide level k by
    ``1 - q^(k+1)``, package as x-coefficients, divide by the
    ``(-x; q)`` product."""
    if x_max < 1:
        raise ConfigurationError(f"x_max must be >= 1, got {x_max}")
    bounded = third_order_levels(x_max - 1, trunc)
    f = [_one(trunc)]
    for k in range(x_max):
        f.append(bounded[k] * _inv_one_minus(k + 1, trunc))
    g = _xp_mul(f, _xp_invert(_neg_x_pochhammer(x_max, trunc), x_max), x_max)
    return TransformChain(trunc, x_max, tuple(f), tuple(g))


def shifted_recurrence_check(chain: TransformChain, k_max: int | None = None) -> CheckReport:
    """The shifted sequence satisfies an order-3 recurrence with
    polynomial coefficients, valid from level 0 with the synthetic seeds."""
    trunc = chain.trunc
    one = _one(trunc)
    if k_max is None:
        k_max = chain.x_max - 1
    reports = []
    for k in range(k_max + 1):
        lhs = (
            one
            - _term(1, k, trunc, c=1)
            - _term(1, k + 1, trunc)
            + _term(1, 2 * k + 1, trunc, c=1)
        ) * chain.shifted(k)
        rhs = (one - _term(1, 2 * k, trunc, c=1)) * chain.shifted(k - 1)
        if k >= 1:
            rhs = rhs + (
                _term(1, k, trunc, a=1) + _term(1, k, trunc, d=1) + _term(1, 2 * k, trunc, a=1, d=1)
            ) * chain.shifted(k - 2)
        if k >= 2:
            rhs = rhs + _term(1, 2 * k - 1, trunc, a=1, d=1) * chain.shifted(k - 3)
        reports.append(compare_series(f"chain-shifted-recurrence[k={k}]", lhs, rhs, {"k": k}))
    return merge_reports("chain-shifted-recurrence", {"k_max": k_max, "trunc": trunc}, reports)


def _compare_xpolys(
    check_id: str, lhs: Sequence[Series], rhs: Sequence[Series], x_check: int, params: dict
) -> CheckReport:
    reports = []
    for j in range(x_check + 1):
        reports.append(
            compare_series(f"{check_id}[x^{j}]", lhs[j], rhs[j], {"x_exp": j}, x_exp=j)
        )
    return merge_reports(check_id, params, reports)


def f_equation_check(chain: TransformChain, x_check: int) -> CheckReport:
    """The x-series satisfies its two-step q-difference equation; checked
    in the q-cleared form so every coefficient stays a power series."""
    trunc = chain.trunc
    f = list(chain.f)
    zero = Series.zero(trunc, VARS)
    lhs = _xp_mul(f, [_term(1, 1, trunc), -_term(1, 1, trunc)], chain.x_max)
    m1 = [
        _term(1, 1, trunc) + _term(1, 0, trunc, c=1),
        zero,
        _term(1, 2, trunc, a=1) + _term(1, 2, trunc, d=1),
    ]
    m2 = [
        _term(1, 0, trunc, c=1),
        _term(1, 1, trunc, c=1),
        -_term(1, 3, trunc, a=1, d=1),
        -_term(1, 4, trunc, a=1, d=1),
    ]
    rhs_a = _xp_mul(_xp_shift(f, 1), m1, chain.x_max)
    rhs_b = _xp_mul(_xp_shift(f, 2), m2, chain.x_max)
    rhs = [sa - sb for sa, sb in zip(rhs_a, rhs_b)]
    if x_check > chain.x_max - 1:
        raise ConfigurationError(f"x_check={x_check} too large for x_max={chain.x_max}")
    return _compare_xpolys(
        "chain-f-equation", lhs, rhs, x_check, {"x_check": x_check, "trunc": trunc}
    )


def g_equation_check(chain: TransformChain, x_check: int) -> CheckReport:
    """Same equation after dividing out the ``(-x; q)`` product: the
    inhomogeneous (1+xq) factor drops and (1-x) becomes (1-x^2)."""
    trunc = chain.trunc
    g = list(chain.g)
    zero = Series.zero(trunc, VARS)
    lhs = _xp_mul(g, [_term(1, 1, trunc), zero, -_term(1, 1, trunc)], chain.x_max)
    m1 = [
        _term(1, 1, trunc) + _term(1, 0, trunc, c=1),
        zero,
        _term(1, 2, trunc, a=1) + _term(1, 2, trunc, d=1),
    ]
    m2 = [
        _term(1, 0, trunc, c=1),
        zero,
        -_term(1, 3, trunc, a=1, d=1),
    ]
    rhs_a = _xp_mul(_xp_shift(g, 1), m1, chain.x_max)
    rhs_b = _xp_mul(_xp_shift(g, 2), m2, chain.x_max)
    rhs = [sa - sb for sa, sb in zip(rhs_a, rhs_b)]
    if x_check > chain.x_max - 2:
        raise ConfigurationError(f"x_check={x_check} too large for x_max={chain.x_max}")
    return _compare_xpolys(
        "chain-g-equation", lhs, rhs, x_check, {"x_check": x_check, "trunc": trunc}
    )


def even_coeff_closed_form(n: int, trunc: int) -> Series:
    """Closed form for the 2n-th reduced coefficient: a quotient of four
    finite Pochhammer symbols."""
    if n < 0:
        raise ConfigurationError(f"index must be >= 0, got {n}")
    num = _poch(1, 2, n, trunc, sign=-1, a=1) * _poch(1, 2, n, trunc, sign=-1, d=1)
    den = invert_unit(_poch(2, 2, n, trunc)) * invert_unit(_poch(1, 2, n, trunc, c=1))
    return num * den


def coeff_parity_check(chain: TransformChain) -> CheckReport:
    """Odd reduced coefficients vanish identically."""
    reports = []
    for n in range(1, chain.x_max + 1, 2):
        reports.append(
            compare_series(
                f"chain-coeff-parity[n={n}]",
                chain.g[n],
                Series.zero(chain.trunc, VARS),
                {"n": n},
                x_exp=None,
            )
        )
    return merge_reports("chain-coeff-parity", {"x_max": chain.x_max}, reports)


def coeff_recurrence_check(chain: TransformChain) -> CheckReport:
    """Two-step recurrence of the reduced coefficients, in multiplied-out
    form (no divisions)."""
    trunc = chain.trunc
    one = _one(trunc)
    reports = []
    for n in range(2, chain.x_max + 1):
        lhs = chain.g[n] * (one - _term(1, n, trunc)) * (one - _term(1, n - 1, trunc, c=1))
        rhs = chain.g[n - 2] * (one + _term(1, n - 1, trunc, a=1)) * (
            one + _term(1, n - 1, trunc, d=1)
        )
        reports.append(compare_series(f"chain-coeff-recurrence[n={n}]", lhs, rhs, {"n": n}))
    return merge_reports("chain-coeff-recurrence", {"n_max": chain.x_max}, reports)


def coeff_closed_form_check(chain: TransformChain) -> CheckReport:
    reports = []
    for n in range(0, chain.x_max // 2 + 1):
        reports.append(
            compare_series(
                f"chain-coeff-closed-form[n={2 * n}]",
                chain.g[2 * n],
                even_coeff_closed_form(n, chain.trunc),
                {"n": 2 * n},
            )
        )
    return merge_reports("chain-coeff-closed-form", {"x_max": chain.x_max}, reports)


# ----------------------------------------------------------------------
# classical sanity identities


def rogers_ramanujan_sides(variant: int, trunc: int) -> tuple[Series, Series]:
    """Both sides of the Rogers-Ramanujan identity (variant 0 or 1):
    the finite q-factorial sum and the mod-5 product inverse."""
    if variant not in (0, 1):
        raise ConfigurationError(f"variant must be 0 or 1, got {variant}")
    novars: tuple[str, ...] = ()
    lhs = Series.zero(trunc, novars)
    n = 0
    while True:
        e = n * n + (1 - variant) * n
        if e > trunc:
            break
        term = Series.term(1, e, {}, trunc, novars)
        lhs = lhs + term * invert_unit(
            pochhammer(monomial(1, novars), 1, n, trunc, novars)
        )
        n += 1
    rhs = invert_unit(
        pochhammer(monomial(2 - variant, novars), 5, None, trunc, novars)
        * pochhammer(monomial(3 + variant, novars), 5, None, trunc, novars)
    )
    return lhs, rhs


def rogers_ramanujan_checks(trunc: int) -> list[CheckReport]:
    out = []
    for variant in (0, 1):
        lhs, rhs = rogers_ramanujan_sides(variant, trunc)
        out.append(
            compare_series(
                f"rogers-ramanujan-{variant}", lhs, rhs, {"variant": variant, "trunc": trunc}
            )
        )
    return out


def euler_split_check(delta: int, trunc: int) -> CheckReport:
    """The even- (delta=0) and odd-indexed (delta=1) halves of the
    triangular-number q-factorial sum each expand to the distinct-parts
    product ``(-q; q)_inf``."""
    if delta not in (0, 1):
        raise ConfigurationError(f"delta must be 0 or 1, got {delta}")
    novars: tuple[str, ...] = ()
    lhs = Series.zero(trunc, novars)
    i = 0
    while True:
        m = 2 * i + delta
        e = comb(m, 2)
        if e > trunc:
            break
        lhs = lhs + Series.term(1, e, {}, trunc, novars) * invert_unit(
            pochhammer(monomial(1, novars), 1, m, trunc, novars)
        )
        i += 1
    rhs = pochhammer(monomial(1, novars), 1, None, trunc, novars, sign=-1)
    return compare_series("euler-split-sum", lhs, rhs, {"delta": delta, "trunc": trunc})


# ----------------------------------------------------------------------
# stabilisation and engine agreement


def stabilization_check(n_max: int, k_max: int | None = None) -> CheckReport:
    """Each level-k bounded series agrees with the infinite product up to
    degree k: equivalently, the degree-n coefficients are constant once
    the level reaches n, and equal to the product's."""
    if k_max is None:
        k_max = n_max + 1
    if k_max < n_max:
        raise ConfigurationError(f"k_max={k_max} must reach n_max={n_max}")
    product = limit_product(n_max)
    levels = third_order_levels(k_max, n_max)
    reports = []
    for k, series in enumerate(levels):
        reports.append(
            compare_series(
                f"stabilization[k={k}]",
                series,
                product,
                {"k": k},
                up_to=min(k, n_max),
            )
        )
    return merge_reports("stabilization", {"n_max": n_max, "k_max": k_max}, reports)


def engine_agreement_checks(k_max: int, trunc: int) -> list[CheckReport]:
    """Pairwise agreement of the ladder engine, the third-order engine,
    the closed form, and the enumeration oracle, plus the exact-series
    proportionality between the last two colours."""
    ladders = ladder_levels(k_max, trunc)
    third = third_order_levels(k_max, trunc)
    table = LargestPartTable(primc_system(), PRIMC_TRACKED, trunc, VARS)
    out = []

    out.append(
        merge_reports(
            "ladder-vs-third-order",
            {"k_max": k_max, "trunc": trunc},
            [
                compare_series(f"ladder-vs-third-order[k={k}]", ladders[k].bounded["d"], third[k], {"k": k})
                for k in range(k_max + 1)
            ],
        )
    )
    out.append(
        merge_reports(
            "ladder-vs-closed-form",
            {"k_max": k_max, "trunc": trunc},
            [
                compare_series(
                    f"ladder-vs-closed-form[k={k}]",
                    ladders[k].bounded["d"],
                    hypergeometric_bounded(k, trunc),
                    {"k": k},
                )
                for k in range(k_max + 1)
            ],
        )
    )
    bounded_reports = []
    exact_reports = []
    for k in range(k_max + 1):
        for colour in COLOURS:
            bounded_reports.append(
                compare_series(
                    f"ladder-vs-oracle-bounded[k={k},{colour}]",
                    ladders[k].bounded[colour],
                    table.bounded(k, colour),
                    {"k": k, "colour": colour},
                )
            )
            exact_reports.append(
                compare_series(
                    f"ladder-vs-oracle-exact[k={k},{colour}]",
                    ladders[k].exact[colour],
                    table.exact(k, colour),
                    {"k": k, "colour": colour},
                )
            )
    out.append(
        merge_reports("ladder-vs-oracle-bounded", {"k_max": k_max, "trunc": trunc}, bounded_reports)
    )
    out.append(
        merge_reports("ladder-vs-oracle-exact", {"k_max": k_max, "trunc": trunc}, exact_reports)
    )
    mono_c = _term(1, 0, trunc, c=1)
    mono_d = _term(1, 0, trunc, d=1)
    out.append(
        merge_reports(
            "exact-series-proportionality",
            {"k_max": k_max, "trunc": trunc},
            [
                compare_series(
                    f"exact-series-proportionality[k={k}]",
                    mono_d * ladders[k].exact["c"],
                    mono_c * ladders[k].exact["d"],
                    {"k": k},
                )
                for k in range(k_max + 1)
            ],
        )
    )
    return out


def engine_check_suite(
    k_max: int = 12,
    trunc: int = 20,
    x_max: int = 20,
    x_equation_max: int = 10,
    term_i_max: int = 6,
    stabilization_n: int = 15,
) -> list[CheckReport]:
    """The full cross-verification battery for the four-colour system."""
    checks = engine_agreement_checks(k_max, trunc)
    checks.append(closed_form_term_sum_check(k_max, trunc))
    checks.append(closed_form_term_recurrence_check(k_max, term_i_max, trunc))
    chain = transform_chain(x_max, trunc)
    checks.append(shifted_recurrence_check(chain))
    checks.append(f_equation_check(chain, x_equation_max))
    checks.append(g_equation_check(chain, x_equation_max))
    checks.append(coeff_parity_check(chain))
    checks.append(coeff_recurrence_check(chain))
    checks.append(coeff_closed_form_check(chain))
    checks.append(euler_split_check(0, trunc))
    checks.append(euler_split_check(1, trunc))
    checks.append(stabilization_check(stabilization_n))
    return checks
