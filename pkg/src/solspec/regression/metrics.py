"""Regression scores."""
from __future__ import annotations

import numpy as np


class UndefinedR2Error(ValueError):
    """R^2 is undefined when the evaluation targets have zero variance."""


def _pair(y_true, y_pred):
    y_true = np.asarray(y_true, dtype=float).ravel()
    y_pred = np.asarray(y_pred, dtype=float).ravel()
    if y_true.size == 0 or y_true.shape != y_pred.shape:
        raise ValueError(f"need equal non-zero lengths, got {y_true.size} and {y_pred.size}")
    return y_true, y_pred


def mse(y_true, y_pred) -> float:
    y_true, y_pred = _pair(y_true, y_pred)
    return float(np.mean((y_true - y_pred) ** 2))


def r2_score(y_true, y_pred) -> float:
    """1 - SS_res / SS_tot, with SS_tot taken about the mean of ``y_true``."""
    y_true, y_pred = _pair(y_true, y_pred)
    ss_tot = float(np.sum((y_true - y_true.mean()) ** 2))
    if ss_tot == 0.0:
        raise UndefinedR2Error("R^2 undefined: y_true has zero variance")
    return 1.0 - float(np.sum((y_true - y_pred) ** 2)) / ss_tot
