"""From-scratch regressors and the DNI benchmark harness."""
from .benchmark import (
    DEFAULT_HYPERPARAMETERS,
    MODEL_IDS,
    BenchmarkResult,
    ModelReport,
    load_hyperparameters,
    run_benchmark,
)
from .data import Dataset, SplitSpec, split_indices, train_test_split
from .ensemble import GradientBoostingRegressor, RandomForestRegressor
from .linear import PolyRidgeRegressor, RankDeficientError, Standardizer, fit_ridge, polynomial_features
from .metrics import UndefinedR2Error, mse, r2_score
from .mlp import DivergenceError, MLPRegressor
from .tree import DecisionTreeRegressor

__all__ = [
    "BenchmarkResult", "DEFAULT_HYPERPARAMETERS", "Dataset", "DecisionTreeRegressor",
    "DivergenceError", "GradientBoostingRegressor", "MLPRegressor", "MODEL_IDS", "ModelReport",
    "PolyRidgeRegressor", "RandomForestRegressor", "RankDeficientError", "SplitSpec",
    "Standardizer", "UndefinedR2Error", "fit_ridge", "load_hyperparameters", "mse",
    "polynomial_features", "r2_score", "run_benchmark", "split_indices", "train_test_split",
]
