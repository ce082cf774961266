import json

import numpy as np
import pytest

from solspec.regression import Dataset, SplitSpec, run_benchmark
from solspec.regression.benchmark import (
    DEFAULT_HYPERPARAMETERS,
    MODEL_IDS,
    REFERENCE_R2,
    merged_hyperparameters,
    reports_to_json,
)
from solspec.synth import pipeline_dataset

FAST = {
    "random_forest": {"n_estimators": 5},
    "gradient_boosting": {"n_estimators": 10},
    "mlp": {"epochs": 5, "hidden": [16, 16]},
}


@pytest.fixture(scope="module")
def pipeline_ds():
    X, y = pipeline_dataset(1500, seed=0)
    return Dataset(X, y)


def test_poly_ridge_learns_pipeline(pipeline_ds):
    result = run_benchmark(pipeline_ds, SplitSpec(seed=42), FAST, models=("poly_ridge",))
    assert result.report("poly_ridge").r2 > 0.9


def test_shared_split(pipeline_ds):
    result = run_benchmark(pipeline_ds, hyperparameters=FAST)
    measured = [m for m, _ in result.scatter.values()]
    assert all(np.array_equal(measured[0], m) for m in measured)
    assert {r.n_train for r in result.reports} == {1200}
    assert {r.n_test for r in result.reports} == {300}


def test_deterministic(pipeline_ds):
    a = reports_to_json(run_benchmark(pipeline_ds, SplitSpec(seed=7), FAST))
    b = reports_to_json(run_benchmark(pipeline_ds, SplitSpec(seed=7), FAST))
    assert a == b


def test_constant_target():
    X = np.random.default_rng(0).uniform(size=(100, 4))
    result = run_benchmark(Dataset(X, np.full(100, 412.0)), hyperparameters=FAST)
    for r in result.reports:
        assert r.error is None
        assert r.r2 is None  # undefined on constant targets
        assert r.mse == pytest.approx(0.0, abs=1e-10)
        np.testing.assert_allclose(result.scatter[r.model_id][1], 412.0, atol=1e-6)


def test_failure_isolated(pipeline_ds):
    bad = dict(FAST, decision_tree={"max_depth": 0})
    result = run_benchmark(pipeline_ds, hyperparameters=bad)
    assert len(result.reports) == 5
    assert result.report("decision_tree").error
    assert [r.model_id for r in result.failed] == ["decision_tree"]
    assert "decision_tree" not in result.scatter


def test_hyperparameters_recorded(pipeline_ds):
    result = run_benchmark(pipeline_ds, hyperparameters=FAST)
    for r in result.reports:
        for key in DEFAULT_HYPERPARAMETERS[r.model_id]:
            assert key in r.hyperparameters
    assert result.report("mlp").hyperparameters["hidden"] == [16, 16]


def test_unknown_model_rejected():
    with pytest.raises(ValueError):
        merged_hyperparameters({"svm": {}})


def test_reference_values_documented():
    assert set(REFERENCE_R2) == set(MODEL_IDS)
    assert REFERENCE_R2["poly_ridge"] > 0 > max(v for k, v in REFERENCE_R2.items() if k != "poly_ridge")


def test_json_round_trip(pipeline_ds):
    payload = json.loads(reports_to_json(run_benchmark(pipeline_ds, hyperparameters=FAST)))
    assert [m["model_id"] for m in payload["models"]] == list(MODEL_IDS)
    assert payload["split"]["train_fraction"] == 0.8
