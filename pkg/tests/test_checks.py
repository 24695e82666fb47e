from fractions import Fraction

import pytest

from zagier.checks import CHECKS, expected_even_verdict, expected_odd_verdict, run_check
from zagier.periodicity import InsufficientData, Verdict

SMALL = {"structure": 36}


@pytest.mark.parametrize("theorem", sorted(set(CHECKS) - {"logconcavity"}))
def test_suites_pass_at_small_depth(theorem):
    rep = run_check(theorem, SMALL.get(theorem, 6))
    assert rep.ok and rep.checked > 0, rep.failures


def test_logconcavity_probe_is_reported_not_hidden():
    assert run_check("logconcavity", 29).ok
    rep = run_check("logconcavity", 31)
    assert not rep.ok and rep.failures == [(31, 2)]


def test_structure_needs_full_window():
    with pytest.raises(InsufficientData):
        run_check("structure", 20)


def test_expected_verdict_tables():
    assert expected_odd_verdict(Fraction(0)) == {"verdict": Verdict.PERIODIC, "period": 6}
    assert expected_odd_verdict(Fraction(-3, 2)) == {"verdict": Verdict.IDENTICALLY_ZERO}
    assert expected_odd_verdict(Fraction(7, 2))["verdict"] is Verdict.UNBOUNDED
    assert expected_even_verdict(7)["verdict"] is Verdict.UNBOUNDED
    assert expected_even_verdict(3)["slope"] == 1
