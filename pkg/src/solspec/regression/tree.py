"""CART regression tree."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class Node:
    value: float
    n_samples: int
    feature: int | None = None
    threshold: float | None = None
    left: "Node | None" = None
    right: "Node | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.feature is None


def best_split(X: np.ndarray, y: np.ndarray, min_samples_leaf: int = 1):
    """Greedy split maximizing the reduction in squared error.

    Returns ``(feature, threshold, gain)`` or ``None`` when no split helps.
    Candidate thresholds are midpoints between consecutive distinct values.
    Ties go to the lowest feature index, then the lowest threshold.
    """
    n, p = X.shape
    yc = y - y.mean()
    total = yc.sum()
    # the same partition reached through different features must tie exactly,
    # so gains closer than rounding noise count as equal
    tol = 1e-12 * float(np.dot(yc, yc))
    best = None
    best_gain = tol
    n_left = np.arange(1, n)
    for j in range(p):
        order = np.argsort(X[:, j], kind="stable")
        xs, ys = X[order, j], yc[order]
        left = np.cumsum(ys)[:-1]
        right = total - left
        # SSE reduction for centred y is L^2/n_L + R^2/n_R
        gain = left * left / n_left + right * right / (n - n_left)
        ok = xs[1:] > xs[:-1]
        if min_samples_leaf > 1:
            ok &= (n_left >= min_samples_leaf) & (n - n_left >= min_samples_leaf)
        if not ok.any():
            continue
        gain = np.where(ok, gain, -np.inf)
        k = int(np.argmax(gain >= gain.max() - tol))
        if gain[k] > best_gain + (tol if best is not None else 0.0):
            thr = 0.5 * (xs[k] + xs[k + 1])
            if not xs[k] <= thr < xs[k + 1]:
                thr = xs[k]
            best_gain = gain[k]
            best = (j, float(thr), float(gain[k]))
    return best


class DecisionTreeRegressor:
    def __init__(self, max_depth: int | None = 6, min_samples_split: int = 2, min_samples_leaf: int = 1):
        if max_depth is not None and max_depth < 1:
            raise ValueError(f"max_depth must be positive, got {max_depth}")
        if min_samples_split < 2 or min_samples_leaf < 1:
            raise ValueError("min_samples_split must be >= 2 and min_samples_leaf >= 1")
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.min_samples_leaf = min_samples_leaf

    def fit(self, X, y):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        y = np.asarray(y, dtype=float).ravel()
        if y.size == 0:
            raise ValueError("cannot fit a tree on an empty dataset")
        if X.shape[0] != y.size:
            raise ValueError(f"X has {X.shape[0]} rows but y has {y.size}")
        self.n_features_ = X.shape[1]
        self.root_ = self._grow(X, y, 0)
        return self

    def _grow(self, X, y, depth) -> Node:
        node = Node(float(y.mean()), y.size)
        if (
            (self.max_depth is not None and depth >= self.max_depth)
            or y.size < self.min_samples_split
            or np.all(y == y[0])
        ):
            return node
        split = best_split(X, y, self.min_samples_leaf)
        if split is None:
            return node
        node.feature, node.threshold, _ = split
        mask = X[:, node.feature] <= node.threshold
        node.left = self._grow(X[mask], y[mask], depth + 1)
        node.right = self._grow(X[~mask], y[~mask], depth + 1)
        return node

    def predict(self, X) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        out = np.empty(X.shape[0])
        self._fill(self.root_, X, np.arange(X.shape[0]), out)
        return out

    def _fill(self, node, X, idx, out):
        if node.is_leaf:
            out[idx] = node.value
            return
        go_left = X[idx, node.feature] <= node.threshold
        self._fill(node.left, X, idx[go_left], out)
        self._fill(node.right, X, idx[~go_left], out)

    def depth(self) -> int:
        def d(n):
            return 0 if n.is_leaf else 1 + max(d(n.left), d(n.right))
        return d(self.root_)
