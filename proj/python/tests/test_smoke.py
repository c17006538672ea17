import json

import pytest

import qgt

# The small plan used throughout the tests, 0-based item ids.
ADJ = [[1, 3, 4, 8, 9, 12, 13], [2, 3, 6, 7, 9, 11, 12], [0, 3, 5, 7, 9, 10, 12]]


def test_design_constants():
    d = qgt.design(2, 17)
    assert d is not None
    assert d.c == pytest.approx(0.5251, abs=0.01)
    assert d.ell == pytest.approx(3.2428, abs=0.05)
    assert sum(d.profile.lambdas) == pytest.approx(1.0)
    assert qgt.design(1, 2) is None


def test_small_plan_round_trip():
    plan = qgt.TestPlan.from_adjacency(14, ADJ, 1)
    assert plan.tests == 12
    y = qgt.encode(plan, [3, 7, 10])
    assert y == [1, 0, 1, 0, 2, 0, 2, 1, 3, 1, 3, 2]
    out = qgt.decode(plan, y)
    assert out.identified == [3, 7, 10]
    assert out.iterations == 3
    assert not out.stalled

    text = plan.to_json()
    assert json.loads(text)["right_adj"][0] == [i + 1 for i in ADJ[0]]
    again = qgt.TestPlan.from_json(text)
    assert again.right_adjacency == ADJ


def test_bad_inputs():
    plan = qgt.TestPlan.from_adjacency(14, ADJ, 1)
    with pytest.raises(qgt.FormatError):
        qgt.decode(plan, [0] * 11)
    with pytest.raises(ValueError):
        qgt.encode(plan, [14])
    with pytest.raises(qgt.OutOfRegime):
        qgt.make_plan(100, 100, qgt.design(2, 17))


def test_generated_plan_decodes():
    d = qgt.design(2, 17)
    p = qgt.make_plan(20000, 20, d)
    assert p.m == p.M * p.s
    plan = qgt.generate(p, d, seed=5)
    assert (plan.N, plan.M) == (20000, p.M)
    assert plan.to_json() == qgt.generate(p, d, seed=5).to_json()
    support = [17, 1000, 4242, 19999]
    out = qgt.decode(plan, qgt.encode(plan, support))
    assert set(out.identified) <= set(support)


def test_simulate_sweep():
    reports = qgt.simulate(N=5000, K=10, t=2, d=17, m_values=[400, 1], trials=20, seed=3)
    assert len(reports) == 2
    ok, skipped = reports
    assert ok.trials == 20 and not ok.skipped
    assert 0.0 <= ok.error_prob <= 1.0
    lo, hi = ok.ci
    assert lo <= ok.error_prob <= hi
    assert ok.false_positives == 0
    assert skipped.skipped
