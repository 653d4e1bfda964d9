"""Acceptance gate: one test per criterion, at the stated corpus scales.

Run with `pytest tests/test_acceptance.py -v -s` to see the one-line verdict
per criterion.  Everything is exact; the only tolerances are the runtime
budgets, which sit far above the measured times.
"""

import pytest

from twistlab import acceptance
from twistlab.acceptance import Scale
from twistlab.fields import GF2

SCALE = Scale()


def report(result, budget_seconds=None):
    print(result.line(), flush=True)
    assert result.passed, result.line()
    if budget_seconds is not None:
        assert result.seconds < budget_seconds, (
            f"criterion {result.number} exceeded its runtime budget: "
            f"{result.seconds:.1f}s >= {budget_seconds}s"
        )


def test_criterion_1_configuration_sanity():
    report(acceptance.criterion_configuration_sanity(GF2, SCALE), budget_seconds=1.0)


def test_criterion_2_twist_axioms():
    report(acceptance.criterion_twist_axioms(GF2, SCALE), budget_seconds=60.0)


def test_criterion_3_braid_relations():
    report(acceptance.criterion_braid_relations(GF2, SCALE), budget_seconds=300.0)


def test_criterion_4_faithfulness():
    report(acceptance.criterion_faithfulness(GF2, SCALE), budget_seconds=1800.0)


def test_criterion_5_reconstruction():
    report(acceptance.criterion_reconstruction(GF2, SCALE), budget_seconds=1800.0)


def test_criterion_6_degree_bounds():
    report(acceptance.criterion_degree_bounds(GF2, SCALE))


def test_criterion_7_two_term():
    report(acceptance.criterion_two_term(GF2, SCALE), budget_seconds=300.0)


def test_criterion_8_mesh():
    report(acceptance.criterion_mesh(GF2, SCALE), budget_seconds=300.0)


def test_criterion_9_characteristic_independence():
    report(acceptance.criterion_characteristic_independence(SCALE))
