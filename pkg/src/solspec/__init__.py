"""Hourly DNI estimation from GHI and linear scaling of the ASTM G-173 spectrum."""
from .dni import DniEstimate, DniModelConfig, estimate_dni, estimate_dni_uncorrected, estimate_series
from .geometry import SEOUL, Site, cos_zenith, equation_of_time, solar_declination, solar_position
from .ingest import (
    HourlySample,
    ObservationRecord,
    parse_asos_csv,
    radiation_to_ghi,
    to_hourly_sample,
    to_hourly_samples,
)
from .qc import daily_means, flag_anomalies, seasonal_summary
from .spectrum import (
    SpectralShape,
    SpectrumTable,
    effective_optical_depth,
    integrate,
    load_g173,
    normalize,
    rescale_by_ratio,
    scale,
)
from .synth import synthetic_year

__version__ = "0.1.0"
