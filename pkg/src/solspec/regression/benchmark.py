"""Five-model DNI regression benchmark on one shared split."""
from __future__ import annotations

import copy
import csv
import json
import logging
from dataclasses import asdict, dataclass, field
from typing import IO

import numpy as np

from .data import Dataset, SplitSpec, split_indices
from .ensemble import GradientBoostingRegressor, RandomForestRegressor
from .linear import PolyRidgeRegressor
from .metrics import UndefinedR2Error, mse, r2_score
from .mlp import MLPRegressor
from .tree import DecisionTreeRegressor

log = logging.getLogger(__name__)

MODEL_IDS = ("poly_ridge", "decision_tree", "random_forest", "gradient_boosting", "mlp")

DEFAULT_HYPERPARAMETERS = {
    "poly_ridge": {"degree": 2, "alpha": 1.0},
    "decision_tree": {"max_depth": 6, "min_samples_split": 10},
    "random_forest": {"n_estimators": 100, "max_depth": 8, "min_samples_split": 2, "bootstrap": True},
    "gradient_boosting": {"learning_rate": 0.1, "n_estimators": 100, "max_depth": 3},
    "mlp": {
        "hidden": [64, 64],
        "activation": "relu",
        "learning_rate": 1e-3,
        "epochs": 200,
        "batch_size": 64,
    },
}

# values reported for the 2024 Seoul KMA data; not reproducible without that data and split
REFERENCE_R2 = {
    "poly_ridge": 0.11,
    "decision_tree": -2.60,
    "random_forest": -0.32,
    "gradient_boosting": -0.31,
    "mlp": -0.03,
}
REFERENCE_POLY_RIDGE_MSE = 2.1e6


@dataclass
class ModelReport:
    model_id: str
    hyperparameters: dict
    r2: float | None
    mse: float | None
    n_train: int
    n_test: int
    error: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class BenchmarkResult:
    reports: list[ModelReport]
    # per model: (measured, predicted) on the shared test rows
    scatter: dict[str, tuple[np.ndarray, np.ndarray]] = field(default_factory=dict)
    split: SplitSpec = SplitSpec()

    def report(self, model_id: str) -> ModelReport:
        return next(r for r in self.reports if r.model_id == model_id)

    @property
    def failed(self) -> list[ModelReport]:
        return [r for r in self.reports if r.error is not None]


def merged_hyperparameters(overrides: dict | None = None) -> dict:
    """Defaults updated per model with ``overrides``; unknown model ids are rejected."""
    table = copy.deepcopy(DEFAULT_HYPERPARAMETERS)
    for model_id, params in (overrides or {}).items():
        if model_id not in table:
            raise ValueError(f"unknown model id {model_id!r}; expected one of {MODEL_IDS}")
        table[model_id].update(params)
    return table


def load_hyperparameters(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return merged_hyperparameters(json.load(fh))


def make_model(model_id: str, params: dict, seed: int):
    p = dict(params)
    if model_id == "poly_ridge":
        return PolyRidgeRegressor(alpha=p["alpha"], degree=p.get("degree", 2))
    if model_id == "decision_tree":
        return DecisionTreeRegressor(p["max_depth"], p["min_samples_split"])
    if model_id == "random_forest":
        return RandomForestRegressor(
            p["n_estimators"], p["max_depth"], p.get("min_samples_split", 2), p["bootstrap"], seed=seed
        )
    if model_id == "gradient_boosting":
        return GradientBoostingRegressor(p["learning_rate"], p["n_estimators"], p["max_depth"])
    if model_id == "mlp":
        return MLPRegressor(
            tuple(p["hidden"]), p["activation"], p["learning_rate"], p["epochs"], p["batch_size"], seed=seed
        )
    raise ValueError(f"unknown model id {model_id!r}")


def run_benchmark(
    dataset: Dataset,
    split: SplitSpec = SplitSpec(),
    hyperparameters: dict | None = None,
    models: tuple[str, ...] = MODEL_IDS,
) -> BenchmarkResult:
    """Fit every model on the same training rows and score on the same test rows.

    A model that raises gets a report carrying the error text; the others
    still run. R^2 is ``None`` when the test targets are constant.
    """
    table = merged_hyperparameters(hyperparameters)
    train_idx, test_idx = split_indices(len(dataset), split)
    Xtr, ytr = dataset.features[train_idx], dataset.target[train_idx]
    Xte, yte = dataset.features[test_idx], dataset.target[test_idx]

    result = BenchmarkResult([], {}, split)
    for model_id in models:
        params = dict(table[model_id])
        if model_id in ("random_forest", "mlp"):
            params.setdefault("seed", split.seed)
        report = ModelReport(model_id, params, None, None, len(train_idx), len(test_idx))
        try:
            model = make_model(model_id, params, params.get("seed", split.seed)).fit(Xtr, ytr)
            pred = model.predict(Xte)
            report.mse = mse(yte, pred)
            try:
                report.r2 = r2_score(yte, pred)
            except UndefinedR2Error:
                report.r2 = None
            result.scatter[model_id] = (yte.copy(), pred)
        except Exception as exc:  # one model failing must not abort the rest
            log.warning("model %s failed: %s", model_id, exc)
            report.error = f"{type(exc).__name__}: {exc}"
        result.reports.append(report)
    return result


def reports_to_json(result: BenchmarkResult) -> str:
    payload = {
        "split": asdict(result.split),
        "models": [r.to_dict() for r in result.reports],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_reports_csv(result: BenchmarkResult, dest: IO[str]) -> None:
    w = csv.writer(dest, lineterminator="\n")
    w.writerow(["model_id", "r2", "mse", "n_train", "n_test", "hyperparameters", "error"])
    for r in result.reports:
        w.writerow([
            r.model_id,
            "" if r.r2 is None else repr(r.r2),
            "" if r.mse is None else repr(r.mse),
            r.n_train,
            r.n_test,
            json.dumps(r.hyperparameters, sort_keys=True),
            r.error or "",
        ])


def write_scatter_csv(result: BenchmarkResult, dest: IO[str]) -> None:
    w = csv.writer(dest, lineterminator="\n")
    w.writerow(["measured_dni", "predicted_dni", "model_id"])
    for model_id, (measured, predicted) in result.scatter.items():
        for a, b in zip(measured, predicted):
            w.writerow([repr(float(a)), repr(float(b)), model_id])
