"""Acceptance suite: one test per contractual criterion, each printing a
pass/fail line.  All arithmetic is exact, so every comparison is plain
integer equality.  Run with ``pytest tests/test_acceptance.py -v -s`` to
see the lines and timings.
"""

import random
import time
from functools import lru_cache
from math import comb

from qpv.cases import (
    DilationSpec,
    a_side_partition_strings,
    a_side_series,
    b_side_partition_strings,
    b_side_series,
    builtin_cases,
    dilated_matrix,
    product_series,
    verify_case,
)
from qpv.partitions import DifferenceMatrix, PRIMC_COLOURS, PRIMC_ROWS
from qpv.recurrences import (
    closed_form_term_recurrence_check,
    closed_form_term_sum_check,
    coeff_closed_form_check,
    coeff_parity_check,
    coeff_recurrence_check,
    engine_agreement_checks,
    euler_split_check,
    f_equation_check,
    g_equation_check,
    limit_product,
    rogers_ramanujan_checks,
    stabilization_check,
    transform_chain,
)
from qpv.reports import compare_series
from qpv.series import Monomial, Series, invert_unit, monomial, pochhammer, substitute

from goldens import (
    COR2_A_GOLDEN_6,
    COR2_B_GOLDEN_6,
    COR3_A_GOLDEN_14,
    COR3_B_GOLDEN_14,
    D2_ROWS,
    D3_ROWS,
    D4_ROWS,
)

CASES = builtin_cases()


def report(criterion, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} {criterion}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


@lru_cache(maxsize=None)
def recursive_partition_count(n, max_part=None):
    """Stand-alone brute-force partition counter (recursive descent on
    the largest part); independent of both the series machinery and the
    coloured enumerator."""
    if max_part is None:
        max_part = n
    if n == 0:
        return 1
    return sum(
        recursive_partition_count(n - p, p) for p in range(1, min(n, max_part) + 1)
    )


def test_criterion_1_main_identity_to_q25():
    start = time.perf_counter()
    enumerated = a_side_series(CASES["theorem-main"], 25)
    product = limit_product(25)
    outcome = compare_series("criterion-1", enumerated, product)
    elapsed = time.perf_counter() - start
    report(
        "criterion-1 enumeration equals product to q^25 (full multidegree)",
        outcome.passed and elapsed < 60,
        f"{len(enumerated)} monomials, {elapsed:.1f}s",
    )


def test_criterion_2_golden_listings():
    a2 = a_side_partition_strings(CASES["cor2"], 6)
    b2 = b_side_partition_strings(CASES["cor2"], 6)
    a4 = a_side_partition_strings(CASES["cor3"], 14)
    b4 = b_side_partition_strings(CASES["cor3"], 14)
    lists_ok = (
        sorted(a2) == sorted(COR2_A_GOLDEN_6)
        and sorted(b2) == sorted(COR2_B_GOLDEN_6)
        and sorted(a4) == sorted(COR3_A_GOLDEN_14)
        and sorted(b4) == sorted(COR3_B_GOLDEN_14)
    )
    a_coeff = a_side_series(CASES["cor2"], 6).coeff(6, {"a": 1, "d": 1})
    b_coeff = b_side_series(CASES["cor2"], 6).coeff(6, {"a": 1, "d": 1})
    report(
        "criterion-2 golden listings (11 of 6; 13 of 14; refined count 1)",
        lists_ok and len(a2) == len(b2) == 11 and len(a4) == len(b4) == 13
        and a_coeff == b_coeff == 1,
        f"counts {len(a2)}/{len(b2)} and {len(a4)}/{len(b4)}",
    )


def test_criterion_3_corollaries_at_desk_scale():
    start = time.perf_counter()
    windows = {"cor2": 24, "cor3": 28, "cor31": 24}
    failures = []
    for name, n_max in windows.items():
        outcome = verify_case(CASES[name], n_max, max(n_max, CASES[name].trunc_default))
        if not outcome.passed:
            failures.append(name)
    elapsed = time.perf_counter() - start
    report(
        "criterion-3 corollary cases A=B=product (full multidegree)",
        not failures and elapsed < 120,
        f"windows {windows}, {elapsed:.1f}s",
    )


def test_criterion_4_specialised_counts_and_product():
    counts = a_side_series(CASES["primc"], 40).weight_counts()
    expected = [recursive_partition_count(n) for n in range(41)]
    counts_ok = counts == expected
    simplified = invert_unit(pochhammer(monomial(1, ()), 1, None, 60, ()))
    product = product_series(CASES["primc"].product, 60, ())
    product_ok = product == simplified
    report(
        "criterion-4 specialised case counts p(n) to 40; product telescopes to q^60",
        counts_ok and product_ok,
        f"p(40)={counts[40]}",
    )


def test_criterion_5_engine_agreement():
    checks = engine_agreement_checks(k_max=12, trunc=20)
    failing = [c.check_id for c in checks if not c.passed]
    report(
        "criterion-5 four-way engine agreement (k<=12, q<=20, per colour)",
        not failing,
        f"{len(checks)} check groups",
    )


def test_criterion_6_transformation_chain():
    chain = transform_chain(x_max=20, trunc=20)
    checks = [
        shifted_recurrence_check(chain),
        f_equation_check(chain, 10),
        g_equation_check(chain, 10),
        coeff_parity_check(chain),
        coeff_recurrence_check(chain),
        coeff_closed_form_check(chain),
    ]
    failing = [c.check_id for c in checks if not c.passed]
    report(
        "criterion-6 chain equations (x<=10, q<=20) and coefficient laws (n<=20)",
        not failing,
        "f/g equations, parity, recurrence, closed form",
    )


def test_criterion_7_closed_form_term_identities():
    checks = [
        closed_form_term_sum_check(12, 20),
        closed_form_term_recurrence_check(12, 6, 20),
        euler_split_check(0, 20),
        euler_split_check(1, 20),
    ]
    failing = [c.check_id for c in checks if not c.passed]
    report(
        "criterion-7 term sum/recurrence (k<=12, i<=6) and split sums to q^20",
        not failing,
    )


def test_criterion_8_stabilization():
    outcome = stabilization_check(15)
    report(
        "criterion-8 bounded-series coefficients stabilise to the product (n<=15)",
        outcome.passed,
    )


def test_criterion_9_rogers_ramanujan():
    checks = rogers_ramanujan_checks(50)
    report(
        "criterion-9 both Rogers-Ramanujan identities to q^50",
        all(c.passed for c in checks),
    )


def test_criterion_10_randomised_properties_and_matrices():
    rng = random.Random(74207281)
    vars = ("a", "c", "d")
    trunc = 8
    zero = Series.zero(trunc, vars)
    one = Series.one(trunc, vars)

    def rand_series(max_terms=5):
        terms = {}
        for _ in range(rng.randint(0, max_terms)):
            key = (
                rng.randint(0, trunc),
                (rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)),
            )
            terms[key] = rng.randint(-5, 5)
        return Series(trunc, terms, vars)

    cases_run = 0
    for _ in range(150):
        s1, s2, s3 = rand_series(), rand_series(), rand_series()
        assert s1 + s2 == s2 + s1
        assert (s1 + s2) + s3 == s1 + (s2 + s3)
        assert s1 * s2 == s2 * s1
        assert s1 * (s2 + s3) == s1 * s2 + s1 * s3
        key = (rng.randint(0, trunc), (rng.randint(0, 2), 0, rng.randint(0, 2)))
        assert (s1 + s2).coeff(*key) == s1.coeff(*key) + s2.coeff(*key)
        cases_run += 5
    for _ in range(100):
        eps = rng.choice((1, -1))
        unit = Series.term(eps, 0, (), trunc, vars) + rand_series() * Series.term(
            1, 1, (), trunc, vars
        )
        assert unit * invert_unit(unit) == one
        cases_run += 1
    for _ in range(100):
        base = Monomial(rng.randint(0, 3), (rng.randint(0, 2), 0, rng.randint(0, 2)))
        ratio = rng.randint(1, 3)
        count = rng.randint(0, 3)
        sign = rng.choice((1, -1))
        longer = pochhammer(base, ratio, count + 1, trunc, vars, sign=sign)
        step = one
        step_exp = base.q_exp + ratio * count
        if step_exp <= trunc:
            step = step - Series.term(sign, step_exp, base.colour_exps, trunc, vars)
        assert longer == pochhammer(base, ratio, count, trunc, vars, sign=sign) * step
        cases_run += 1
    for _ in range(100):
        s1, s2 = rand_series(3), rand_series(3)
        q_scale = rng.randint(1, 3)
        shift = {v: rng.randint(0, 2) for v in vars}
        assert substitute(s1 + s2, q_scale, shift, trunc) == substitute(
            s1, q_scale, shift, trunc
        ) + substitute(s2, q_scale, shift, trunc)
        assert substitute(s1 * s2, q_scale, shift, trunc) == substitute(
            s1, q_scale, shift, trunc
        ) * substitute(s2, q_scale, shift, trunc)
        cases_run += 2

    base = DifferenceMatrix.from_rows(PRIMC_COLOURS, PRIMC_ROWS)
    specs = {
        D2_ROWS: DilationSpec.make(PRIMC_COLOURS, 2, {"a": -1, "b": 0, "c": 0, "d": 1}),
        D3_ROWS: DilationSpec.make(PRIMC_COLOURS, 3, {"a": -1, "b": 0, "c": 0, "d": 1}),
        D4_ROWS: DilationSpec.make(PRIMC_COLOURS, 4, {"a": -3, "b": 0, "c": -2, "d": 3}),
    }
    matrices_ok = all(dilated_matrix(base, spec).rows == rows for rows, spec in specs.items())
    report(
        "criterion-10 randomised ring/product/substitution properties; dilated matrices",
        cases_run >= 1000 and matrices_ok and zero + one == one,
        f"{cases_run} randomised cases",
    )
