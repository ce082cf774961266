"""Bagged and boosted tree ensembles."""
from __future__ import annotations

import numpy as np

from .tree import DecisionTreeRegressor


class RandomForestRegressor:
    """Average of trees fit on bootstrap resamples.

    Each tree draws from its own generator spawned off ``seed``, so results
    do not depend on the order trees are trained in.
    """

    def __init__(
        self,
        n_estimators: int = 100,
        max_depth: int | None = 8,
        min_samples_split: int = 2,
        bootstrap: bool = True,
        seed: int = 0,
    ):
        if n_estimators < 1:
            raise ValueError(f"n_estimators must be >= 1, got {n_estimators}")
        self.n_estimators = n_estimators
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.bootstrap = bootstrap
        self.seed = seed

    def fit(self, X, y):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        y = np.asarray(y, dtype=float).ravel()
        if y.size == 0:
            raise ValueError("cannot fit a forest on an empty dataset")
        n = y.size
        self.trees_ = []
        for child in np.random.SeedSequence(self.seed).spawn(self.n_estimators):
            idx = np.random.default_rng(child).integers(0, n, n) if self.bootstrap else np.arange(n)
            tree = DecisionTreeRegressor(self.max_depth, self.min_samples_split)
            self.trees_.append(tree.fit(X[idx], y[idx]))
        return self

    def tree_predictions(self, X) -> np.ndarray:
        return np.stack([t.predict(X) for t in self.trees_])

    def predict(self, X) -> np.ndarray:
        return self.tree_predictions(X).mean(axis=0)


class GradientBoostingRegressor:
    """Squared-loss boosting: start from mean(y), add shrunken trees fit to residuals.

    ``train_loss_[k]`` is the training MSE after ``k`` stages.
    """

    def __init__(self, learning_rate: float = 0.1, n_estimators: int = 100, max_depth: int = 3, min_samples_split: int = 2):
        if not 0.0 < learning_rate <= 1.0:
            raise ValueError(f"learning_rate must be in (0, 1], got {learning_rate}")
        if n_estimators < 1:
            raise ValueError(f"n_estimators must be >= 1, got {n_estimators}")
        self.learning_rate = learning_rate
        self.n_estimators = n_estimators
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split

    def fit(self, X, y):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        y = np.asarray(y, dtype=float).ravel()
        if y.size == 0:
            raise ValueError("cannot fit boosting on an empty dataset")
        self.init_ = float(y.mean())
        F = np.full(y.size, self.init_)
        self.trees_ = []
        self.train_loss_ = [float(np.mean((y - F) ** 2))]
        for _ in range(self.n_estimators):
            tree = DecisionTreeRegressor(self.max_depth, self.min_samples_split).fit(X, y - F)
            F = F + self.learning_rate * tree.predict(X)
            self.trees_.append(tree)
            self.train_loss_.append(float(np.mean((y - F) ** 2)))
        return self

    def predict(self, X) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        F = np.full(X.shape[0], self.init_)
        for tree in self.trees_:
            F = F + self.learning_rate * tree.predict(X)
        return F
