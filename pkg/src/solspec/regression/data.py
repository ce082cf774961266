"""Regression dataset assembly and the seeded train/test split."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..dni import DniEstimate
from ..ingest import HourlySample

FEATURE_NAMES = ("cloud_total", "visibility_km", "ghi", "cos_zenith")


@dataclass(frozen=True, eq=False)
class Dataset:
    features: np.ndarray  # (n, 4), columns as FEATURE_NAMES
    target: np.ndarray  # (n,), dni_final in W/m2
    timestamps: tuple = field(default=())
    feature_names: tuple[str, ...] = FEATURE_NAMES

    def __post_init__(self):
        X = np.asarray(self.features, dtype=float)
        y = np.asarray(self.target, dtype=float).ravel()
        if X.ndim != 2 or X.shape[0] != y.shape[0]:
            raise ValueError(f"features {X.shape} and target {y.shape} disagree on row count")
        if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
            raise ValueError("dataset contains missing or non-finite values")
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "target", y)
        object.__setattr__(self, "timestamps", tuple(self.timestamps))

    def __len__(self) -> int:
        return self.target.shape[0]

    def subset(self, idx) -> "Dataset":
        idx = np.asarray(idx, dtype=int)
        ts = tuple(self.timestamps[i] for i in idx) if self.timestamps else ()
        return Dataset(self.features[idx], self.target[idx], ts, self.feature_names)

    @classmethod
    def from_pipeline(cls, samples: Sequence[HourlySample], estimates: Sequence[DniEstimate]) -> "Dataset":
        """Daylight rows with measured GHI; night and blank-radiation hours are dropped."""
        rows, target, ts = [], [], []
        for s, e in zip(samples, estimates, strict=True):
            if s.ghi_missing or s.cos_zenith <= 0:
                continue
            rows.append((s.cloud_total, s.visibility_km, s.ghi, s.cos_zenith))
            target.append(e.dni_final)
            ts.append(s.timestamp)
        return cls(np.array(rows, dtype=float).reshape(-1, 4), np.array(target), tuple(ts))


@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float = 0.8
    seed: int = 42
    chronological: bool = False

    def __post_init__(self):
        if not 0.0 < self.train_fraction < 1.0:
            raise ValueError(f"train_fraction must be in (0, 1), got {self.train_fraction}")


def split_indices(n: int, spec: SplitSpec = SplitSpec()) -> tuple[np.ndarray, np.ndarray]:
    """Row indices for train and test; the first floor(fraction * n) go to train."""
    if n < 2:
        raise ValueError(f"need at least 2 rows to split, got {n}")
    order = np.arange(n) if spec.chronological else np.random.default_rng(spec.seed).permutation(n)
    n_train = math.floor(spec.train_fraction * n)
    return order[:n_train], order[n_train:]


def train_test_split(dataset: Dataset, spec: SplitSpec = SplitSpec()) -> tuple[Dataset, Dataset]:
    train, test = split_indices(len(dataset), spec)
    return dataset.subset(train), dataset.subset(test)
