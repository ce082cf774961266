"""Degree-2 polynomial expansion and ridge regression with an unpenalized bias."""
from __future__ import annotations

from itertools import combinations_with_replacement

import numpy as np


class RankDeficientError(np.linalg.LinAlgError):
    pass


def polynomial_features(X, degree: int = 2) -> np.ndarray:
    """Bias, linear terms, then degree-2 monomials in lexicographic order.

    For 4 inputs the 15 columns are::

        1, x0, x1, x2, x3,
        x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2
    """
    if degree != 2:
        raise ValueError(f"only degree 2 is supported, got {degree}")
    X = np.atleast_2d(np.asarray(X, dtype=float))
    n, p = X.shape
    cols = [np.ones(n)] + [X[:, j] for j in range(p)]
    cols += [X[:, i] * X[:, j] for i, j in combinations_with_replacement(range(p), 2)]
    return np.column_stack(cols)


class Standardizer:
    """Column-wise z-scoring with training statistics; constant columns get unit scale."""

    def fit(self, X):
        X = np.asarray(X, dtype=float)
        self.mean_ = X.mean(axis=0)
        std = X.std(axis=0)
        self.scale_ = np.where(std > 0, std, 1.0)
        return self

    def transform(self, X):
        return (np.asarray(X, dtype=float) - self.mean_) / self.scale_

    def inverse_transform(self, Z):
        return np.asarray(Z, dtype=float) * self.scale_ + self.mean_


def fit_ridge(X, y, alpha: float = 1.0, bias_column: int | None = None) -> np.ndarray:
    """Solve (X'X + alpha I') w = X'y, where I' has a zero at ``bias_column``.

    Solved as the equivalent augmented least-squares problem via SVD rather
    than by forming X'X.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be non-negative, got {alpha}")
    X = np.atleast_2d(np.asarray(X, dtype=float))
    y = np.asarray(y, dtype=float).ravel()
    n, p = X.shape
    penalty = np.sqrt(alpha) * np.eye(p)
    if bias_column is not None:
        penalty[bias_column, bias_column] = 0.0
    A = np.vstack([X, penalty])
    b = np.concatenate([y, np.zeros(p)])
    coef, _, rank, _ = np.linalg.lstsq(A, b, rcond=None)
    if rank < p:
        raise RankDeficientError(
            f"ridge system is singular (rank {rank} < {p} columns, alpha={alpha}); "
            "use alpha > 0 or drop collinear columns"
        )
    return coef


class PolyRidgeRegressor:
    """Quadratic expansion, standardization of the non-bias columns, ridge fit."""

    def __init__(self, alpha: float = 1.0, degree: int = 2):
        self.alpha = alpha
        self.degree = degree

    def _design(self, X):
        P = polynomial_features(X, self.degree)
        P[:, 1:] = self.scaler_.transform(P[:, 1:])
        return P

    def fit(self, X, y):
        P = polynomial_features(X, self.degree)
        self.scaler_ = Standardizer().fit(P[:, 1:])
        self.coef_ = fit_ridge(self._design(X), y, self.alpha, bias_column=0)
        return self

    def predict(self, X):
        return self._design(X) @ self.coef_
