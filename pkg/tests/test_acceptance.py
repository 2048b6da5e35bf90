"""Acceptance suite: every machine-checkable claim, one test per criterion.

Each test runs the corresponding named check from the verification module
(the same checks the `verify-paper` CLI command runs), asserts it passed,
and enforces the stated desk-scale time budget.
"""

import pytest

from coxbilliards import verification as V

BUDGETS = {
    "check_d4_trajectory_table": 1,
    "check_f4_counterexample": 10,
    "check_e8_counterexample": 60,
    "check_b_family": 30,
    "check_d_family": 30,
    "check_long_word_sorting": 120,
    "check_coxeter_power_sorting": 180,
    "check_type_a_sorting": 120,
    "check_type_a_dictionary": 30,
    "check_small_root_inventories": 60,
    "check_walk_searches": 300,
    "check_property_suites": 300,
}


def _run(name):
    fn = {f.__name__: f for f in V.all_checks()}[name]
    result = fn()
    assert result.passed, f"{name}: {result.detail}"
    assert result.seconds < BUDGETS[name], (
        f"{name} exceeded its time budget: {result.seconds:.1f}s"
    )
    print(f"{name}: PASS ({result.seconds:.2f}s) {result.detail}")
    return result


def test_criterion_01_d4_counterexample():
    _run("check_d4_trajectory_table")


def test_criterion_02_f4_counterexample():
    _run("check_f4_counterexample")


def test_criterion_03_e8_counterexample():
    _run("check_e8_counterexample")


def test_criterion_04_b_family():
    _run("check_b_family")


def test_criterion_05_d_family():
    _run("check_d_family")


def test_criterion_06_long_word_sorting():
    _run("check_long_word_sorting")


def test_criterion_07_coxeter_power_sorting_and_tightness():
    _run("check_coxeter_power_sorting")


def test_criterion_08_type_a_identities():
    _run("check_type_a_sorting")


def test_criterion_09_type_a_correspondence():
    _run("check_type_a_dictionary")


def test_criterion_10_small_root_suites():
    _run("check_small_root_inventories")


def test_criterion_11_walk_search():
    _run("check_walk_searches")


def test_criterion_12_property_suites():
    _run("check_property_suites")
