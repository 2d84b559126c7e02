"""Tests for the recurrence engines, closed forms, and chain checks."""

import pytest

from qpv.errors import ConfigurationError
from qpv.recurrences import (
    VARS,
    closed_form_term,
    closed_form_term_recurrence_check,
    closed_form_term_sum_check,
    coeff_closed_form_check,
    coeff_parity_check,
    coeff_recurrence_check,
    engine_agreement_checks,
    euler_split_check,
    even_coeff_closed_form,
    f_equation_check,
    g_equation_check,
    hypergeometric_bounded,
    ladder_init,
    ladder_levels,
    ladder_step,
    limit_product,
    rogers_ramanujan_checks,
    rogers_ramanujan_sides,
    shifted_recurrence_check,
    stabilization_check,
    third_order_levels,
    transform_chain,
)
from qpv.series import Series, invert_unit

N = 12


def one(trunc=N):
    return Series.one(trunc, VARS)


def term(coef, q_exp, trunc=N, **exps):
    return Series.term(coef, q_exp, exps, trunc, VARS)


def inv_one_minus(q_exp, trunc=N, **exps):
    return invert_unit(one(trunc) - term(1, q_exp, trunc, **exps))


# ----------------------------------------------------------------------
# ladder engine


def test_ladder_initial_values():
    level = ladder_init(N)
    assert level.exact["b"] == one()
    assert level.exact["a"].is_zero()
    assert level.exact["c"].is_zero()
    assert level.exact["d"].is_zero()
    assert level.bounded["a"].is_zero()
    assert level.bounded["b"] == one()
    assert level.bounded["c"] == one()
    assert level.bounded["d"] == one()
    assert level.prev_bounded_last.is_zero()


def test_ladder_first_step_values():
    level = ladder_step(ladder_init(N))
    assert level.exact["a"] == term(1, 1, a=1)
    assert level.exact["b"] == term(1, 1) * inv_one_minus(1)
    expected_bounded_d = term(1, 1) * inv_one_minus(1) + (
        (one() + term(1, 1, a=1)) * (one() + term(1, 1, d=1)) * inv_one_minus(1, c=1)
    )
    assert level.bounded["d"] == expected_bounded_d


def test_ladder_bounded_are_running_sums():
    levels = ladder_levels(4, N)
    for prev, cur in zip(levels, levels[1:]):
        assert cur.bounded["a"] == prev.bounded["d"] + cur.exact["a"]
        assert cur.bounded["b"] == cur.bounded["a"] + cur.exact["b"]
        assert cur.bounded["c"] == cur.bounded["b"] + cur.exact["c"]
        assert cur.bounded["d"] == cur.bounded["c"] + cur.exact["d"]


# ----------------------------------------------------------------------
# third-order engine


def test_third_order_seed_values():
    levels = third_order_levels(2, N)
    assert levels[0] == one()
    expected_1 = term(1, 1) * inv_one_minus(1) + (
        (one() + term(1, 1, a=1)) * (one() + term(1, 1, d=1)) * inv_one_minus(1, c=1)
    )
    assert levels[1] == expected_1
    expected_2 = term(1, 3) * inv_one_minus(1) * inv_one_minus(2) + (
        (one() + term(1, 1, a=1))
        * (one() + term(1, 1, d=1))
        * (one() - term(1, 3))
        * inv_one_minus(1)
        * inv_one_minus(2)
        * inv_one_minus(1, c=1)
    )
    assert levels[2] == expected_2


def test_third_order_agrees_with_ladder():
    levels = third_order_levels(5, N)
    ladder = ladder_levels(5, N)
    for k in range(6):
        assert levels[k] == ladder[k].bounded["d"]


# ----------------------------------------------------------------------
# closed form


def test_closed_form_level_zero_is_one():
    assert hypergeometric_bounded(0, N) == one()


def test_closed_form_matches_engines():
    third = third_order_levels(5, N)
    for k in (1, 3, 5):
        assert hypergeometric_bounded(k, N) == third[k]


def test_closed_form_term_base_case():
    assert closed_form_term(0, 0, N) == one()


def test_closed_form_term_vanishes_below_range():
    assert closed_form_term(1, 2, N).is_zero()
    assert closed_form_term(0, 1, N).is_zero()


def test_closed_form_term_checks_pass():
    assert closed_form_term_sum_check(6, N).passed
    assert closed_form_term_recurrence_check(6, 3, N).passed


# ----------------------------------------------------------------------
# infinite product


def test_limit_product_low_coefficients():
    prod = limit_product(N)
    assert prod.coeff(0) == 1
    assert prod.coeff(1) == 1
    for var in VARS:
        assert prod.coeff(1, {var: 1}) == 1
    # Degree-2 slice: partitions of 2 are 2_a..2_d, 1_c 1_c, 1_c 1_a,
    # 1_d 1_c, 1_d 1_a, 1_b 1_b.
    assert prod.coeff(2) == 2  # 2_b and 1_b 1_b
    assert prod.coeff(2, {"a": 1}) == 1  # 2_a
    assert prod.coeff(2, {"c": 1}) == 1  # 2_c
    assert prod.coeff(2, {"d": 1}) == 1  # 2_d
    assert prod.coeff(2, {"c": 2}) == 1  # 1_c 1_c
    assert prod.coeff(2, {"a": 1, "c": 1}) == 1  # 1_c 1_a
    assert prod.coeff(2, {"c": 1, "d": 1}) == 1  # 1_d 1_c
    assert prod.coeff(2, {"a": 1, "d": 1}) == 1  # 1_d 1_a


def test_stabilization_small():
    assert stabilization_check(8).passed


def test_stabilization_rejects_short_window():
    with pytest.raises(ConfigurationError):
        stabilization_check(8, k_max=5)


# ----------------------------------------------------------------------
# transformation chain


@pytest.fixture(scope="module")
def chain():
    return transform_chain(10, N)


def test_chain_seed_coefficients(chain):
    assert chain.f[0] == one()
    assert chain.f[1] == inv_one_minus(1)
    assert chain.shifted(-1) == one()
    assert chain.shifted(-2).is_zero()


def test_chain_reduced_seeds(chain):
    assert chain.g[0] == one()
    assert chain.g[1].is_zero()
    expected_2 = (
        (one() + term(1, 1, a=1))
        * (one() + term(1, 1, d=1))
        * inv_one_minus(2)
        * inv_one_minus(1, c=1)
    )
    assert chain.g[2] == expected_2
    assert even_coeff_closed_form(1, N) == expected_2


def test_chain_shifted_recurrence(chain):
    assert shifted_recurrence_check(chain).passed


def test_chain_x_equations(chain):
    assert f_equation_check(chain, 6).passed
    assert g_equation_check(chain, 6).passed


def test_chain_coefficient_checks(chain):
    assert coeff_parity_check(chain).passed
    assert coeff_recurrence_check(chain).passed
    assert coeff_closed_form_check(chain).passed


def test_chain_bounds_validated(chain):
    with pytest.raises(ConfigurationError):
        f_equation_check(chain, chain.x_max)


# ----------------------------------------------------------------------
# classical identities


def test_rogers_ramanujan_pinned_coefficients():
    lhs1, rhs1 = rogers_ramanujan_sides(1, N)
    assert lhs1.coeff(1) == rhs1.coeff(1) == 1
    assert lhs1.coeff(4) == rhs1.coeff(4) == 2  # gap-2 partitions: 4 and 3+1
    lhs0, rhs0 = rogers_ramanujan_sides(0, N)
    assert lhs0.coeff(1) == rhs0.coeff(1) == 0


def test_rogers_ramanujan_checks_pass():
    assert all(rep.passed for rep in rogers_ramanujan_checks(30))


def test_euler_split_both_parities():
    assert euler_split_check(0, 10).passed
    assert euler_split_check(1, 10).passed


# ----------------------------------------------------------------------
# engine agreement (small parameters; the acceptance suite pins the
# contractual sizes)


def test_engine_agreement_small():
    for report in engine_agreement_checks(6, N):
        assert report.passed, report.summary()
