"""Tests for dilation algebra and the built-in identity catalogue."""

import json

import pytest

from qpv.errors import ConfigurationError, MatrixInconsistencyError
from qpv.cases import (
    DilationSpec,
    ProductFactor,
    a_side_partition_strings,
    a_side_series,
    b_side_partition_strings,
    b_side_series,
    builtin_cases,
    case_from_dict,
    case_to_dict,
    dilated_matrix,
    dilated_order,
    dilation_consistency_check,
    load_case_file,
    product_series,
    product_side_series,
    prose_equivalence_check,
    verify_case,
)
from qpv.partitions import DifferenceMatrix, PRIMC_COLOURS, PRIMC_ROWS

from goldens import (
    COR2_A_GOLDEN_6,
    COR2_B_GOLDEN_6,
    COR3_A_GOLDEN_14,
    COR3_B_GOLDEN_14,
    D2_ROWS,
    D3_ROWS,
    D4_ROWS,
)

BASE = DifferenceMatrix.from_rows(PRIMC_COLOURS, PRIMC_ROWS)


@pytest.fixture(scope="module")
def cases():
    return builtin_cases()


# ----------------------------------------------------------------------
# dilated matrices (pinned from the printed dilated systems)


def spec_r2():
    return DilationSpec.make(PRIMC_COLOURS, 2, {"a": -1, "b": 0, "c": 0, "d": 1})


def spec_r4():
    return DilationSpec.make(PRIMC_COLOURS, 4, {"a": -3, "b": 0, "c": -2, "d": 3})


def spec_r3():
    return DilationSpec.make(PRIMC_COLOURS, 3, {"a": -1, "b": 0, "c": 0, "d": 1})


def test_dilated_matrix_r2():
    assert dilated_matrix(BASE, spec_r2()).rows == D2_ROWS


def test_dilated_matrix_r4():
    assert dilated_matrix(BASE, spec_r4()).rows == D4_ROWS


def test_dilated_matrix_r3():
    assert dilated_matrix(BASE, spec_r3()).rows == D3_ROWS


def test_dilated_matrix_rejects_negative_entries():
    lopsided = DilationSpec.make(PRIMC_COLOURS, 1, {"a": 0, "b": 5, "c": 0, "d": 0})
    with pytest.raises(MatrixInconsistencyError):
        dilated_matrix(BASE, lopsided)


def test_dilation_spec_rejects_nonpositive_weights():
    with pytest.raises(ConfigurationError):
        DilationSpec.make(PRIMC_COLOURS, 2, {"a": -2})


# ----------------------------------------------------------------------
# dilated orders


def test_dilated_order_r2():
    parts = dilated_order(spec_r2(), 8)
    assert [str(p) for p in parts] == ["1_a", "2_b", "2_c", "3_d", "3_a", "4_b", "4_c", "5_d"]


def test_dilated_order_identity():
    ident = DilationSpec.make(PRIMC_COLOURS, 1, {})
    parts = dilated_order(ident, 5)
    assert [str(p) for p in parts] == ["1_a", "1_b", "1_c", "1_d", "2_a"]


def test_dilated_order_r4():
    parts = dilated_order(spec_r4(), 8)
    assert [str(p) for p in parts] == ["1_a", "2_c", "4_b", "5_a", "6_c", "7_d", "8_b", "9_a"]


def test_dilated_order_r3():
    parts = dilated_order(spec_r3(), 9)
    assert [str(p) for p in parts] == [
        "2_a", "3_b", "3_c", "4_d", "5_a", "6_b", "6_c", "7_d", "8_a",
    ]


# ----------------------------------------------------------------------
# catalogue shape


def test_builtin_catalogue_names(cases):
    assert list(cases) == ["theorem-main", "cor2", "cor3", "cor31", "primc"]


def test_theorem_main_has_base_matrix(cases):
    assert cases["theorem-main"].system().matrix.rows == PRIMC_ROWS


def test_cor31_notes_mention_adjacent_product(cases):
    assert any("Capparelli" in note for note in cases["cor31"].notes)


def test_case_json_roundtrip(cases):
    for case in cases.values():
        assert case_from_dict(case_to_dict(case)) == case


def test_case_file_loading(tmp_path, cases):
    path = tmp_path / "cor2.json"
    path.write_text(json.dumps(case_to_dict(cases["cor2"])))
    assert load_case_file(path) == cases["cor2"]


def test_case_file_errors(tmp_path):
    missing = tmp_path / "nope.json"
    with pytest.raises(ConfigurationError):
        load_case_file(missing)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigurationError):
        load_case_file(bad)
    with pytest.raises(ConfigurationError):
        case_from_dict({"name": "x"})


def test_product_factor_roundtrip():
    f = ProductFactor.make(3, 4, None, sign=-1, denominator=True, d=1)
    assert ProductFactor.from_dict(f.to_dict()) == f


# ----------------------------------------------------------------------
# golden listings


COR2_A_GOLDEN = COR2_A_GOLDEN_6
COR2_B_GOLDEN = COR2_B_GOLDEN_6
COR3_A_GOLDEN = COR3_A_GOLDEN_14
COR3_B_GOLDEN = COR3_B_GOLDEN_14


def test_cor2_golden_lists(cases):
    a_list = a_side_partition_strings(cases["cor2"], 6)
    b_list = b_side_partition_strings(cases["cor2"], 6)
    assert len(a_list) == len(b_list) == 11
    assert set(a_list) == COR2_A_GOLDEN
    assert set(b_list) == COR2_B_GOLDEN


def test_cor2_pinned_multidegree(cases):
    a = a_side_series(cases["cor2"], 6)
    b = b_side_series(cases["cor2"], 6)
    assert a.coeff(6, {"a": 1, "d": 1}) == 1
    assert b.coeff(6, {"a": 1, "d": 1}) == 1


def test_cor3_golden_lists(cases):
    a_list = a_side_partition_strings(cases["cor3"], 14)
    b_list = b_side_partition_strings(cases["cor3"], 14)
    assert len(a_list) == len(b_list) == 13
    assert set(a_list) == COR3_A_GOLDEN
    assert set(b_list) == COR3_B_GOLDEN


def test_cor3_displayed_lists_are_weight_14_not_13(cases):
    # The displayed golden lists only match weight 14; at weight 13 the
    # two sides still agree with each other (full multidegree).
    case = cases["cor3"]
    a13 = set(a_side_partition_strings(case, 13))
    assert a13 != COR3_A_GOLDEN
    a = a_side_series(case, 13)
    b = b_side_series(case, 13)
    assert a == b
    assert len(a_side_partition_strings(case, 13)) == len(b_side_partition_strings(case, 13))


# ----------------------------------------------------------------------
# side computations and verification


def test_product_sides_low_terms(cases):
    prod = product_side_series(cases["cor2"], 6)
    assert prod.coeff(0) == 1
    assert prod.coeff(1, {"a": 1}) == 1  # dilated smallest part
    assert prod.coeff(2) == 1
    assert prod.coeff(6, {"a": 1, "d": 1}) == 1


def test_verify_theorem_main_small(cases):
    report = verify_case(cases["theorem-main"], 10, 12)
    assert report.passed, [c.summary() for c in report.checks]
    assert report.per_weight[1]["a_side"] == 4
    assert report.per_weight[1]["product"] == 4
    assert report.per_weight[1]["b_side"] is None


def test_verify_cor2_small(cases):
    report = verify_case(cases["cor2"], 12, 14)
    assert report.passed, [c.summary() for c in report.checks]
    row = report.per_weight[6]
    assert row["a_side"] == row["b_side"] == row["product"] == 11


def test_verify_cor3_small(cases):
    report = verify_case(cases["cor3"], 16, 18)
    assert report.passed, [c.summary() for c in report.checks]
    row = report.per_weight[14]
    assert row["a_side"] == row["b_side"] == row["product"] == 13


def test_verify_cor31_small(cases):
    report = verify_case(cases["cor31"], 12, 14)
    assert report.passed, [c.summary() for c in report.checks]


def test_verify_primc_small(cases):
    report = verify_case(cases["primc"], 15, 20)
    assert report.passed, [c.summary() for c in report.checks]
    ids = {c.check_id for c in report.checks}
    assert "primc-product-simplification" in ids
    assert "primc-vs-partition-counter" in ids


def test_verify_rejects_bad_window(cases):
    with pytest.raises(ConfigurationError):
        verify_case(cases["theorem-main"], 10, 5)


def test_dilation_consistency_all_dilated_cases(cases):
    for name in ("cor2", "cor3", "cor31", "primc"):
        assert dilation_consistency_check(cases[name], 10).passed, name


def test_prose_equivalence(cases):
    assert prose_equivalence_check(cases["cor2"], 12).passed
    assert prose_equivalence_check(cases["cor3"], 16).passed
    with pytest.raises(ConfigurationError):
        prose_equivalence_check(cases["cor31"], 8)


def test_prose_check_reports_mismatch(cases):
    # Cross the rules deliberately: cor2's prose rule on cor3's system
    # must disagree, and the report should carry counts.
    broken = case_to_dict(builtin_cases()["cor3"])
    broken["name"] = "cor2"
    report = prose_equivalence_check(case_from_dict(broken), 10)
    assert not report.passed
    assert "matrix_only" in report.params or "prose_only" in report.params


def test_legend_and_display_present(cases):
    cor2 = cases["cor2"]
    assert cor2.suffix_map()["b"] == "'"
    assert "a" in dict(cor2.legend)


def test_product_series_respects_position():
    vars = ()
    factors = (
        ProductFactor.make(1, 1, 1, sign=1, denominator=False),  # (1 - q)
        ProductFactor.make(1, 1, 1, sign=1, denominator=True),
    )
    assert product_series(factors, 6, vars).coeff(0) == 1
    assert product_series(factors, 6, vars).coeff(3) == 0
