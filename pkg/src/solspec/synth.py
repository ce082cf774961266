"""Synthetic ASOS-style years for demos and tests.

Clear-sky GHI is ``max(0, S * cos(zenith) * k)`` with a constant
atmospheric factor ``k``. Optional cloud episodes follow a day-level
regime with hourly jitter and cut GHI by the Kasten-Czeplak factor
``1 - 0.75 * (cloud/10) ** 3.4``. Radiation is rounded to 0.01 MJ/m2 and
left blank when it rounds to zero, as in KMA exports.
"""
from __future__ import annotations

from datetime import datetime, timedelta

import numpy as np

from .dni import DniModelConfig
from .geometry import SEOUL, Site, cos_zenith, evaluation_instant
from .ingest import HOUR_SECONDS, ObservationRecord

SOLAR_CONSTANT = 1361.0


def synthetic_year(
    year: int = 2024,
    site: Site = SEOUL,
    seed: int = 0,
    clear_sky: bool = True,
    atmospheric_factor: float = 0.75,
    cloud_episode_rate: float = 0.35,
    visibility_range_km: tuple[float, float] = (5.0, 40.0),
    midpoint: bool = True,
) -> list[ObservationRecord]:
    """One record per hour of ``year``.

    ``cloud_episode_rate`` is the probability that a given day is cloudy;
    it is ignored when ``clear_sky`` is set (all cloud amounts are 0).
    """
    rng = np.random.default_rng(seed)
    start = datetime(year, 1, 1)
    n_hours = int((datetime(year + 1, 1, 1) - start).total_seconds() // 3600)
    n_days = n_hours // 24

    if clear_sky:
        cloud = np.zeros(n_hours, dtype=int)
    else:
        cloudy_day = rng.random(n_days) < cloud_episode_rate
        base = np.where(cloudy_day, rng.uniform(4, 10, n_days), rng.uniform(0, 3, n_days))
        jitter = rng.normal(0.0, 1.5, n_hours)
        cloud = np.clip(np.rint(np.repeat(base, 24) + jitter), 0, 10).astype(int)

    lo, hi = visibility_range_km
    vis_raw = np.rint(rng.uniform(lo, hi, n_hours) * 100).astype(int)

    records = []
    for i in range(n_hours):
        ts = start + timedelta(hours=i)
        cz = cos_zenith(site, evaluation_instant(ts, midpoint))
        ghi = max(0.0, SOLAR_CONSTANT * cz * atmospheric_factor)
        ghi *= 1.0 - 0.75 * (cloud[i] / 10.0) ** 3.4
        mj = round(ghi * HOUR_SECONDS / 1e6, 2)
        records.append(ObservationRecord(i, ts, mj if mj > 0 else None, int(cloud[i]), int(vis_raw[i])))
    return records


def pipeline_target(features: np.ndarray, config: DniModelConfig = DniModelConfig()) -> np.ndarray:
    """Corrected DNI as an exact function of [cloud tenths, visibility km, ghi, cos_zenith] rows."""
    cloud, vis, ghi, cz = features.T
    dni0 = np.where((cz > 0) & (ghi > 0), ghi / np.where(cz > 0, cz, 1.0), 0.0)
    return dni0 * (1 - config.cloud_coefficient * cloud / 10.0) * np.exp(-1.0 / (vis + config.epsilon))


def pipeline_dataset(n: int = 2000, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Daylight-like feature rows whose target is exactly the corrected DNI pipeline.

    The sun is kept above ~17 degrees elevation so the projection stays smooth.
    """
    rng = np.random.default_rng(seed)
    cz = rng.uniform(0.3, 1.0, n)
    cloud = rng.integers(0, 11, n).astype(float)
    vis = rng.uniform(5.0, 40.0, n)
    ghi = SOLAR_CONSTANT * 0.75 * cz * (1 - 0.75 * (cloud / 10) ** 3.4) * rng.uniform(0.9, 1.1, n)
    X = np.column_stack([cloud, vis, ghi, cz])
    return X, pipeline_target(X)
