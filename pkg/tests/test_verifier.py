"""Exhaustive table checks: valid tables pass, perturbed tables fail exactly
when the perturbation leaves the solution space."""

from fractions import Fraction

import pytest

from jetlift import (
    AlgebraParams,
    CoefficientAssignment,
    LiftParams,
    check_leibniz_basis,
    check_skew,
    check_truncation,
    construct,
    run_all_checks,
    spot_check_leibniz,
)
from support import detectable_cells

P121 = LiftParams(AlgebraParams(1, 2), 1)

VALID_GRID = [
    (1, 1, 1),
    (1, 2, 1),
    (2, 1, 1),
    (2, 2, 1),
    (1, 2, 2),
    (2, 2, 2),
    (1, 1, 0),
    (2, 2, 0),
    (0, 2, 1),
    (3, 1, 2),
    (1, 3, 3),
]


def lift_params(r: int, k: int, s: int) -> LiftParams:
    return LiftParams(AlgebraParams(r, k), s)


def random_table(params: LiftParams, seed: int = 0):
    return construct(CoefficientAssignment.random(params, seed=seed))


@pytest.mark.parametrize("r,k,s", VALID_GRID)
def test_constructed_tables_pass_all_checks(r, k, s):
    params = lift_params(r, k, s)
    rep = run_all_checks(random_table(params, seed=r + 10 * k + 100 * s))
    assert rep.passed, rep.to_json_dict()


def test_case_counts_frozen_example():
    rep = run_all_checks(random_table(P121))
    assert rep.cases == {"skew": 0, "leibniz": 27, "truncation": 3}


def test_zero_arity_checks_are_vacuous():
    rep = run_all_checks(random_table(lift_params(2, 2, 0)))
    assert rep.passed
    assert rep.cases == {"skew": 0, "leibniz": 0, "truncation": 0}


@pytest.mark.parametrize(
    "r,k,s", [(1, 1, 1), (1, 2, 1), (2, 1, 1), (1, 2, 2), (2, 2, 1), (2, 2, 2)]
)
def test_corruption_dichotomy(r, k, s):
    """Perturbing one cell is caught exactly on the detectable cells.

    The detectable set comes from an independent criterion (is the indicator
    table at the cell itself a solution?), so this pins both the checks and
    the uniqueness of completions: no false alarms, no misses.
    """
    params = lift_params(r, k, s)
    table = random_table(params, seed=42)
    assert run_all_checks(table).passed
    detectable = set(detectable_cells(params))
    for axes in params.rows:
        for alpha in params.algebra.basis:
            bad = table.with_cell(
                axes, alpha, table.cell(axes, alpha) + Fraction(3, 2)
            )
            rep = run_all_checks(bad)
            assert rep.passed == ((axes, alpha) not in detectable), (axes, alpha)


def test_corruption_witness_names_the_failing_checks():
    table = random_table(P121, seed=1)
    bad = table.with_cell((2,), (1, 0), table.cell((2,), (1, 0)) + 1)
    rep = run_all_checks(bad)
    assert not rep.passed
    kinds = {f.check for f in rep.failures}
    assert "truncation" in kinds
    assert "leibniz" in kinds
    trunc = [f for f in rep.failures if f.check == "truncation"]
    assert trunc[0].witness == ((), (1, 1))
    assert trunc[0].expected == 0 and trunc[0].actual != 0


def test_individual_checks_cover_their_own_ground():
    table = random_table(lift_params(2, 2, 2), seed=3)
    assert check_skew(table).passed
    assert check_leibniz_basis(table).passed
    assert check_truncation(table).passed
    assert check_skew(table).cases["skew"] > 0
    assert check_truncation(table).cases["truncation"] > 0


@pytest.mark.parametrize("r,k,s", [(1, 2, 2), (2, 2, 2), (1, 2, 1)])
def test_all_slots_mode_agrees_on_validity(r, k, s):
    params = lift_params(r, k, s)
    good = random_table(params, seed=5)
    assert run_all_checks(good, all_slots=True).passed
    for axes, alpha in detectable_cells(params):
        bad = good.with_cell(axes, alpha, good.cell(axes, alpha) + 1)
        assert not run_all_checks(bad, all_slots=True).passed
        break


def test_all_slots_counts_scale_with_arity():
    table = random_table(lift_params(1, 2, 2), seed=6)
    last_only = check_leibniz_basis(table)
    both = check_leibniz_basis(table, all_slots=True)
    assert both.cases["leibniz"] == 2 * last_only.cases["leibniz"]
    assert both.passed


def test_spot_check_passes_valid_tables():
    rep = spot_check_leibniz(random_table(P121, seed=7), trials=10)
    assert rep.passed
    assert rep.cases == {"leibniz-spot": 10}


def test_spot_check_flags_a_corrupted_table():
    table = random_table(P121, seed=7)
    bad = table.with_cell((2,), (1, 0), table.cell((2,), (1, 0)) + 1)
    rep = spot_check_leibniz(bad, trials=25)
    assert not rep.passed


def test_report_json_shape_and_witness_limit():
    table = random_table(P121, seed=8)
    bad = table.with_cell((2,), (1, 0), table.cell((2,), (1, 0)) + 1)
    rep = run_all_checks(bad)
    doc = rep.to_json_dict(witness_limit=2)
    assert doc["passed"] is False
    assert set(doc["checks"]) == {"skew", "leibniz", "truncation"}
    assert doc["checks"]["leibniz"]["cases"] == 27
    assert len(doc["witnesses"]) <= 2
    assert all(
        set(w) == {"check", "witness", "expected", "actual"} for w in doc["witnesses"]
    )


def test_reports_merge_counts_and_failures():
    table = random_table(P121, seed=9)
    a = check_skew(table)
    b = check_truncation(table)
    merged = a.merged(b)
    assert merged.cases == {"skew": 0, "truncation": 3}
    assert merged.passed
