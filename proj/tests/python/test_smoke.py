import json
import math

import pytest

import deterrence_roc as dr

HIGH = dr.find_environment("env01")


def test_headline_auc():
    dictator = dr.find_scheme("dictator")
    assert dr.auc_trapezoid(dr.roc_curve(dictator, HIGH)) == pytest.approx(0.87875, abs=1e-12)
    exact = dr.roc_curve(dictator, HIGH, mode="exact")
    assert exact.anchored
    assert dr.auc_trapezoid(exact) == pytest.approx(0.9, abs=1e-12)
    assert dr.auc_rank(dictator, HIGH) == pytest.approx(0.9, abs=1e-12)


def test_distribution_and_tails():
    scheme = dr.find_scheme("unbiased")
    dist = dr.weighted_sum_distribution(scheme, [0.5] * 4)
    assert dist.support == [0, 1, 2, 3, 4]
    assert dist.total_mass == pytest.approx(1.0, abs=1e-12)
    for k in range(5):
        assert dr.tail_probability(dist, k) == pytest.approx(dr.binomial_tail(4, 0.5, k), abs=1e-12)
    mc = dr.monte_carlo_tail(scheme, [0.5] * 4, 2.0, 64, seed=2024)
    assert mc.estimate == 46 / 64
    assert mc.trials == 64


def test_youden_and_statistics():
    y = dr.youden(dr.find_scheme("unbiased"), HIGH)
    assert round(y.j_star, 3) == 0.974
    assert y.tau_star == pytest.approx(1.1)
    stats = dr.j_statistics(dr.find_scheme("dictator"), dr.paper_environments())
    assert stats.mean_tau_star == pytest.approx(0.1)
    assert len(dr.paper_schemes()) == 7
    assert len(dr.paper_environments()) == 14
    assert len(dr.conclusion_battery()) == 13


def test_game():
    a = dr.assess_attack(0.92, benefit=11.5, cost=1.0)
    assert a.expected_payoff == pytest.approx(0.0, abs=1e-12)
    assert not a.attacks
    assert dr.breakeven_benefit_ratio(0.92) == pytest.approx(11.5, rel=1e-12)
    assert math.isinf(dr.breakeven_benefit_ratio(1.0))
    rates = dr.average_rates(dr.find_scheme("unbiased"), 2.0, dr.conclusion_battery())
    assert 0.91 <= rates.mean_retaliation <= 0.93
    assert 0.11 <= rates.mean_false_alarm <= 0.13


def test_validation_errors():
    with pytest.raises(ValueError, match="length"):
        dr.roc_curve(dr.find_scheme("unbiased"), dr.InfoEnvironment("x", [0.5], [0.5] * 4))
    with pytest.raises(ValueError):
        dr.WeightScheme("bad", [-1.0, 1.0])
    with pytest.raises(ValueError):
        dr.find_scheme("oligarchy")


def test_run_config(tmp_path):
    report = dr.run_config(
        {"schemes": ["veto"], "environments": ["env02"], "outputs": ["auc-table"]}, tmp_path
    )
    assert len(report["results"]["cells"]) == 1
    assert (tmp_path / "auc_table.csv").exists()
    assert json.loads((tmp_path / "run_report.json").read_text())["config"]["schemes"]


def test_reproduce_paper(tmp_path):
    report = dr.reproduce_paper(tmp_path)
    assert len(report["comparison"]["cells"]) == 56
    assert len(list(tmp_path.iterdir())) >= 10
    with pytest.raises(OSError):
        dr.reproduce_paper(tmp_path / "auc_table.csv" / "sub")
