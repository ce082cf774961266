"""Standard-spectrum handling: load ASTM G-173, normalize, integrate, rescale.

The hourly spectrum is modelled as a fixed spectral shape multiplied by the
hour's broadband direct irradiance::

    I(lam) = f(lam) * E,      f = I_std / integral(I_std)

which is the same as rescaling the standard spectrum by ``E / E_std``, or
equivalently applying a wavelength-independent optical depth increment
``ln(E_std / E)`` on top of the standard atmosphere.
"""
from __future__ import annotations

import csv
import io
import math
import os
from dataclasses import dataclass, field
from typing import IO

import numpy as np

G173_COLUMNS = ("extraterrestrial", "global_tilt", "direct_circumsolar")
DEFAULT_COLUMN = "direct_circumsolar"
LAMBDA_MIN = 280.0
LAMBDA_MAX = 2500.0

# reference atmosphere the G-173 tables were computed for
G173_CONDITIONS = {
    "air_mass": 1.5,
    "solar_zenith_deg": 48.19,
    "precipitable_water_cm": 1.42,
    "ozone_atm_cm": 0.34,
    "aod_500nm": 0.084,
    "site": "Golden, CO (39.74 N, 105.18 W, 1828 m)",
}


class SpectrumError(ValueError):
    pass


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class SpectrumTable:
    """Spectral irradiance (W m-2 nm-1) on a strictly increasing grid (nm)."""

    wavelength: np.ndarray
    irradiance: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        wl = _frozen(self.wavelength)
        irr = _frozen(self.irradiance)
        if wl.ndim != 1 or wl.size == 0:
            raise SpectrumError("wavelength grid must be a non-empty 1-D array")
        if irr.shape != wl.shape:
            raise SpectrumError(f"irradiance shape {irr.shape} != wavelength shape {wl.shape}")
        if np.any(np.diff(wl) <= 0):
            i = int(np.argmax(np.diff(wl) <= 0)) + 1
            raise SpectrumError(f"wavelengths not strictly increasing at index {i} ({wl[i]} nm)")
        if np.any(irr < 0) or not np.all(np.isfinite(irr)):
            i = int(np.argmax((irr < 0) | ~np.isfinite(irr)))
            raise SpectrumError(f"invalid irradiance {irr[i]} at {wl[i]} nm")
        object.__setattr__(self, "wavelength", wl)
        object.__setattr__(self, "irradiance", irr)

    @property
    def span(self) -> tuple[float, float]:
        return float(self.wavelength[0]), float(self.wavelength[-1])

    def total(self) -> float:
        return integrate(self)


@dataclass(frozen=True, eq=False)
class SpectralShape:
    """Unit-area spectral distribution (nm-1) plus the total it was normalized by."""

    wavelength: np.ndarray
    density: np.ndarray
    reference_total: float

    def __post_init__(self):
        object.__setattr__(self, "wavelength", _frozen(self.wavelength))
        object.__setattr__(self, "density", _frozen(self.density))


def bundled_g173_path() -> str:
    return os.path.join(os.path.dirname(__file__), "data", "ASTMG173.csv")


def _read_text(source) -> str:
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8-sig") as fh:
            return fh.read()
    if isinstance(source, (bytes, bytearray)):
        return bytes(source).decode("utf-8-sig")
    data = source.read()
    return data.decode("utf-8-sig") if isinstance(data, bytes) else data


def load_g173(
    source=None, column: str = DEFAULT_COLUMN, full_range: bool = False
) -> SpectrumTable:
    """Load one column of an ASTM G-173 table.

    Leading non-numeric lines are treated as headers. The result is clipped
    to 280-2500 nm unless ``full_range`` is set.
    """
    if column not in G173_COLUMNS:
        raise SpectrumError(f"unknown column {column!r}; choose from {', '.join(G173_COLUMNS)}")
    col = G173_COLUMNS.index(column) + 1
    text = _read_text(bundled_g173_path() if source is None else source)

    wl, irr = [], []
    in_header = True
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        cells = [c.strip() for c in row]
        if not any(cells):
            continue
        try:
            w = float(cells[0])
        except (ValueError, IndexError):
            if in_header:
                continue
            raise SpectrumError(f"line {lineno}: bad wavelength {cells[0]!r}") from None
        in_header = False
        if len(cells) <= col or not cells[col]:
            raise SpectrumError(f"line {lineno}: missing {column} column")
        try:
            v = float(cells[col])
        except ValueError:
            raise SpectrumError(f"line {lineno}: bad irradiance {cells[col]!r}") from None
        if wl and w <= wl[-1]:
            raise SpectrumError(f"line {lineno}: wavelength {w} not above previous {wl[-1]}")
        if v < 0:
            raise SpectrumError(f"line {lineno}: negative irradiance {v}")
        wl.append(w)
        irr.append(v)
    if not wl:
        raise SpectrumError("no data rows found")

    wl_a, irr_a = np.asarray(wl), np.asarray(irr)
    if not full_range:
        keep = (wl_a >= LAMBDA_MIN) & (wl_a <= LAMBDA_MAX)
        wl_a, irr_a = wl_a[keep], irr_a[keep]
        if wl_a.size == 0:
            raise SpectrumError("no data inside 280-2500 nm")
    meta = {"source": "ASTM G173-03", "column": column, **G173_CONDITIONS}
    return SpectrumTable(wl_a, irr_a, meta)


def _trapezoid(y, x) -> float:
    return float(np.sum(np.diff(x) * (y[1:] + y[:-1])) / 2.0)


def integrate(spectrum: SpectrumTable, lambda0: float | None = None, lambda1: float | None = None) -> float:
    """Trapezoidal integral in W/m2 over [lambda0, lambda1] (default: whole grid).

    Partial intervals at the ends are handled by linear interpolation, so
    integrals over adjacent ranges add up.
    """
    wl, irr = spectrum.wavelength, spectrum.irradiance
    lo, hi = spectrum.span
    a = lo if lambda0 is None else float(lambda0)
    b = hi if lambda1 is None else float(lambda1)
    if not a < b:
        raise ValueError(f"need lambda0 < lambda1, got [{a}, {b}]")
    if a < lo or b > hi:
        raise ValueError(f"[{a}, {b}] outside grid span [{lo}, {hi}]")
    inner = (wl > a) & (wl < b)
    x = np.concatenate(([a], wl[inner], [b]))
    y = np.concatenate(([np.interp(a, wl, irr)], irr[inner], [np.interp(b, wl, irr)]))
    return _trapezoid(y, x)


def normalize(spectrum: SpectrumTable) -> SpectralShape:
    total = integrate(spectrum)
    if not total > 0:
        raise SpectrumError(f"degenerate spectrum: integral {total} is not positive")
    return SpectralShape(spectrum.wavelength, spectrum.irradiance / total, total)


def scale(shape: SpectralShape, E: float) -> SpectrumTable:
    """Spectrum with the given shape and broadband total ``E`` (W/m2)."""
    if not E >= 0:
        raise ValueError(f"E must be non-negative, got {E}")
    return SpectrumTable(shape.wavelength, shape.density * E, {"total_w_m2": float(E)})


def rescale_by_ratio(std: SpectrumTable, E_real: float) -> SpectrumTable:
    if not E_real >= 0:
        raise ValueError(f"E_real must be non-negative, got {E_real}")
    E_std = integrate(std)
    if not E_std > 0:
        raise SpectrumError(f"degenerate spectrum: integral {E_std} is not positive")
    return SpectrumTable(std.wavelength, std.irradiance * (E_real / E_std), {"total_w_m2": float(E_real)})


def effective_optical_depth(E_real: float, E_std: float) -> float:
    """Uniform optical-depth increment that turns ``E_std`` into ``E_real``."""
    if not (E_real > 0 and E_std > 0):
        raise ValueError(f"both totals must be positive, got E_real={E_real}, E_std={E_std}")
    return math.log(E_std / E_real)


def write_spectrum_csv(spectrum: SpectrumTable, dest: IO[str]) -> None:
    writer = csv.writer(dest, lineterminator="\n")
    writer.writerow(["wavelength_nm", "irradiance_w_m2_nm"])
    for w, v in zip(spectrum.wavelength, spectrum.irradiance):
        writer.writerow([repr(float(w)), repr(float(v))])
