"""Three-stage DNI estimate from hourly GHI.

1. geometric projection   dni0 = ghi / cos(zenith), zero at night
2. cloud attenuation      dni1 = dni0 * (1 - 0.75 * cloud_factor)
3. visibility transmittance  dni = dni1 * exp(-1 / (visibility_km + eps))

In the default (faithful) mode nothing bounds ``1 / cos(zenith)``, so hours
with a little GHI and a grazing sun produce the very large spikes seen in
raw series. ``cos_zenith_floor`` caps the projection for cleaned runs.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterable

from .ingest import HourlySample

SOLAR_CONSTANT = 1361.0  # W/m2


@dataclass(frozen=True)
class DniModelConfig:
    cloud_coefficient: float = 0.75
    epsilon: float = 1e-6  # km
    cos_zenith_floor: float | None = None
    anomaly_threshold: float = SOLAR_CONSTANT

    def __post_init__(self):
        if not 0.0 <= self.cloud_coefficient <= 1.0:
            raise ValueError(f"cloud_coefficient must be in [0, 1], got {self.cloud_coefficient}")
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.cos_zenith_floor is not None and not 0.0 < self.cos_zenith_floor <= 1.0:
            raise ValueError(f"cos_zenith_floor must be in (0, 1], got {self.cos_zenith_floor}")
        if not self.anomaly_threshold > 0:
            raise ValueError(f"anomaly_threshold must be positive, got {self.anomaly_threshold}")

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DniEstimate:
    dni0: float
    dni1: float
    dni_final: float
    night: bool
    anomalous: bool


def estimate_dni0(ghi: float, cos_zenith: float, floor: float | None = None) -> float:
    """GHI projected onto the beam-normal plane; 0 when the sun is down or GHI is 0."""
    if ghi < 0:
        raise ValueError(f"ghi must be non-negative, got {ghi}")
    if cos_zenith <= 0 or ghi <= 0:
        return 0.0
    if floor is not None:
        cos_zenith = max(cos_zenith, floor)
    return ghi / cos_zenith


def apply_cloud_attenuation(dni0: float, cloud_factor: float, config: DniModelConfig = DniModelConfig()) -> float:
    if not 0.0 <= cloud_factor <= 1.0:
        raise ValueError(f"cloud_factor must be in [0, 1], got {cloud_factor}")
    factor = 1.0 - config.cloud_coefficient * cloud_factor
    # full attenuation is an exact zero even if dni0 overflowed at a grazing sun
    return dni0 * factor if factor > 0 else 0.0


def visibility_transmittance(visibility_km: float, config: DniModelConfig = DniModelConfig()) -> float:
    if visibility_km < 0:
        raise ValueError(f"visibility_km must be non-negative, got {visibility_km}")
    # exp(-1/eps) underflows to exactly 0 at zero visibility
    return math.exp(-1.0 / (visibility_km + config.epsilon))


def apply_visibility_attenuation(dni1: float, visibility_km: float, config: DniModelConfig = DniModelConfig()) -> float:
    tau = visibility_transmittance(visibility_km, config)
    return dni1 * tau if tau > 0 else 0.0


def estimate_dni(sample: HourlySample, config: DniModelConfig = DniModelConfig()) -> DniEstimate:
    night = sample.cos_zenith <= 0 or sample.ghi <= 0
    dni0 = estimate_dni0(sample.ghi, sample.cos_zenith, config.cos_zenith_floor)
    dni1 = apply_cloud_attenuation(dni0, sample.cloud_factor, config)
    final = apply_visibility_attenuation(dni1, sample.visibility_km, config)
    return DniEstimate(dni0, dni1, final, night, final > config.anomaly_threshold)


def estimate_dni_uncorrected(sample: HourlySample, config: DniModelConfig = DniModelConfig()) -> float:
    """Projection-only DNI, without cloud or visibility corrections."""
    return estimate_dni0(sample.ghi, sample.cos_zenith, config.cos_zenith_floor)


def uncorrected_estimate(sample: HourlySample, config: DniModelConfig = DniModelConfig()) -> DniEstimate:
    """Projection-only DNI packaged like :func:`estimate_dni`; all stages equal dni0."""
    dni0 = estimate_dni_uncorrected(sample, config)
    night = sample.cos_zenith <= 0 or sample.ghi <= 0
    return DniEstimate(dni0, dni0, dni0, night, dni0 > config.anomaly_threshold)


def estimate_series(
    samples: Iterable[HourlySample],
    config: DniModelConfig = DniModelConfig(),
    corrected: bool = True,
) -> list[DniEstimate]:
    fn = estimate_dni if corrected else uncorrected_estimate
    return [fn(s, config) for s in samples]
