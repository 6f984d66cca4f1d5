import math

import numpy as np
import pytest

from inflbeta.inflated import BeinfParams, InflParams
from inflbeta.montecarlo import (DEFAULT_SIZES, StudyConfig, StudyRow, preset, replicate_estimates,
                                 run_study, truth)


def test_config_validation():
    p = InflParams.bezi(0.2, 0.1, 2.0)
    with pytest.raises(ValueError):
        StudyConfig(p, (10,), 0)
    with pytest.raises(ValueError):
        StudyConfig(p, (0, 10), 5)
    with pytest.raises(ValueError):
        StudyConfig(p, (10,), 5, targets=("gamma",))
    with pytest.raises(TypeError):
        StudyConfig("bezi", (10,), 5)
    with pytest.raises(ValueError):
        preset("table3")
    c = preset("table2")
    assert c.sizes == DEFAULT_SIZES and c.replications == 5000
    assert c.targets == ("gamma", "mu", "phi", "mean", "var", "alpha")


def test_truth_values():
    t = truth(preset("table1").params)
    assert t["mean"] == pytest.approx(0.08) and t["var"] == pytest.approx(0.0256)
    t = truth(preset("table2").params)
    assert t["mean"] == pytest.approx(0.14) and t["var"] == pytest.approx(0.0724) and t["gamma"] == 0.3


def test_determinism_and_parallel_equivalence():
    cfg = preset("table2", sizes=(10, 30), replications=60, seed=3)
    a = run_study(cfg)
    b = run_study(cfg)
    c = run_study(cfg, workers=2, chunk=17)
    assert a == b == c


def test_single_replication_rows():
    cfg = preset("table1", sizes=(50,), replications=1, seed=11)
    rows = run_study(cfg)
    for r in rows:
        if r.skipped == 0:
            assert r.rmse == pytest.approx(abs(r.bias), rel=1e-12)
            assert r.bias == pytest.approx(r.mean - truth(cfg.params)[r.target], abs=1e-15)


def test_row_layout():
    rows = run_study(preset("table2", sizes=(20, 40), replications=20, seed=1))
    keys = [(r.target, r.n, r.estimator) for r in rows]
    assert keys[:4] == [("gamma", 20, "ml"), ("gamma", 40, "ml"), ("mu", 20, "cm"), ("mu", 20, "ml")]
    assert not any(t in ("alpha", "gamma") and e == "cm" for t, _, e in keys)
    assert all(isinstance(r, StudyRow) and r.rmse >= abs(r.bias) for r in rows)


def test_aggregation_identity():
    cfg = preset("table1", sizes=(20,), replications=300, seed=5)
    rows = {(r.target, r.estimator): r for r in run_study(cfg)}
    est = replicate_estimates(cfg, 20)
    tr = truth(cfg.params)
    for (t, e), vals in est.items():
        ok = vals[~np.isnan(vals)]
        r = rows[(t, e)]
        assert r.skipped == vals.size - ok.size
        assert r.mean == pytest.approx(ok.mean(), rel=1e-15)
        assert r.rmse ** 2 == pytest.approx(r.bias ** 2 + ok.var(), abs=1e-12 * max(1.0, r.rmse ** 2))
        assert r.bias == pytest.approx(ok.mean() - tr[t], abs=1e-15)


def test_skips_at_small_n():
    # at n=10, P(no zeros) = 0.8**10, about 11%: those replications skip mean/var
    rows = {(r.target, r.estimator): r for r in run_study(preset("table1", sizes=(10,), replications=400, seed=2))}
    assert rows[("alpha", "ml")].skipped == 0
    assert rows[("mean", "ml")].skipped > 0
    assert rows[("mean", "ml")].skipped == rows[("var", "cm")].skipped
    assert abs(rows[("mean", "ml")].skipped / 400 - 0.8 ** 10) < 4 * math.sqrt(0.107 * 0.893 / 400)


def test_user_defined_config():
    p = BeinfParams.of(0.4, 0.7, 0.6, 5.0)
    rows = run_study(StudyConfig(p, (100,), 50, seed=9, targets=("mu", "gamma")))
    assert [r.target for r in rows] == ["mu", "mu", "gamma"]


@pytest.mark.parametrize("name", ["table1", "table2"])
def test_alpha_hat_unbiased_every_n(name):
    cfg = preset(name, sizes=DEFAULT_SIZES, replications=1000, seed=21)
    cfg = StudyConfig(cfg.params, cfg.sizes, cfg.replications, cfg.seed, targets=("alpha",))
    for r in run_study(cfg):
        se = math.sqrt(0.2 * 0.8 / r.n / cfg.replications)
        assert abs(r.bias) < 4 * se


@pytest.mark.parametrize("name", ["table1", "table2"])
@pytest.mark.parametrize("n", [10, 20, 50])
def test_ml_phi_no_worse_than_cm(name, n):
    """ML's sqrt(MSE) for phi is not above CM's beyond Monte Carlo error.

    The comparison is paired over replications: the difference of squared
    errors CM - ML must not be significantly negative.
    """
    cfg = preset(name, sizes=(n,), replications=2000, seed=7)
    est = replicate_estimates(cfg, n)
    cm, ml = est[("phi", "cm")], est[("phi", "ml")]
    ok = ~np.isnan(cm) & ~np.isnan(ml)
    d = (cm[ok] - 2.0) ** 2 - (ml[ok] - 2.0) ** 2
    assert d.mean() >= -2.0 * d.std() / math.sqrt(d.size)
