"""Low-precision solar position.

Spencer (1971) Fourier series for declination and equation of time, with
true solar time derived from civil time, longitude and a fixed UTC offset.
Zenith accuracy is a few tenths of a degree, which is plenty for hourly
irradiance work.

Every function accepts scalars or numpy arrays.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import datetime, timedelta
from typing import NamedTuple

import numpy as np

MINUTES_PER_DEGREE = 4.0


@dataclass(frozen=True)
class Site:
    """Observation site; longitude is degrees east, offset is hours ahead of UTC."""

    latitude: float
    longitude: float
    utc_offset_hours: float = 9.0
    name: str = ""

    def __post_init__(self):
        if not -90.0 <= self.latitude <= 90.0:
            raise ValueError(f"latitude {self.latitude} outside [-90, 90]")
        if not -180.0 <= self.longitude <= 180.0:
            raise ValueError(f"longitude {self.longitude} outside [-180, 180]")
        if not -14.0 <= self.utc_offset_hours <= 14.0:
            raise ValueError(f"utc_offset_hours {self.utc_offset_hours} outside [-14, 14]")


# KMA ASOS station 108 (Seoul)
SEOUL = Site(latitude=37.5714, longitude=126.9658, utc_offset_hours=9.0, name="Seoul ASOS 108")


class SolarPosition(NamedTuple):
    declination: float  # rad
    equation_of_time: float  # min
    hour_angle: float  # rad, negative before solar noon
    cos_zenith: float


def _check_day(day_of_year, year_length):
    if year_length not in (365, 366):
        raise ValueError(f"year_length must be 365 or 366, got {year_length}")
    d = np.asarray(day_of_year, dtype=float)
    if np.any(~np.isfinite(d)) or np.any(d < 1) or np.any(d >= year_length + 1):
        raise ValueError(f"day_of_year must lie in [1, {year_length + 1}), got {day_of_year}")
    return d


def _day_angle(d, year_length):
    return 2.0 * np.pi * (d - 1.0) / year_length


def _maybe_scalar(x):
    return float(x) if np.ndim(x) == 0 else x


def solar_declination(day_of_year, year_length: int = 365):
    """Solar declination in radians.

    ``day_of_year`` may be fractional (1.0 is midnight starting 1 January).
    """
    g = _day_angle(_check_day(day_of_year, year_length), year_length)
    dec = (
        0.006918
        - 0.399912 * np.cos(g)
        + 0.070257 * np.sin(g)
        - 0.006758 * np.cos(2 * g)
        + 0.000907 * np.sin(2 * g)
        - 0.002697 * np.cos(3 * g)
        + 0.00148 * np.sin(3 * g)
    )
    return _maybe_scalar(dec)


def equation_of_time(day_of_year, year_length: int = 365):
    """Apparent minus mean solar time, in minutes."""
    g = _day_angle(_check_day(day_of_year, year_length), year_length)
    eot = 229.18 * (
        0.000075
        + 0.001868 * np.cos(g)
        - 0.032077 * np.sin(g)
        - 0.014615 * np.cos(2 * g)
        - 0.040849 * np.sin(2 * g)
    )
    return _maybe_scalar(eot)


def cos_zenith_from_angles(latitude_rad, declination_rad, hour_angle_rad):
    """sin(lat)sin(dec) + cos(lat)cos(dec)cos(h), clamped to [-1, 1]."""
    c = np.sin(latitude_rad) * np.sin(declination_rad) + np.cos(latitude_rad) * np.cos(
        declination_rad
    ) * np.cos(hour_angle_rad)
    return _maybe_scalar(np.clip(c, -1.0, 1.0))


def _year_length(year: int) -> int:
    return 366 if (year % 4 == 0 and year % 100 != 0) or year % 400 == 0 else 365


def solar_position(site: Site, timestamp: datetime) -> SolarPosition:
    """Solar position for a naive civil timestamp in the site's fixed UTC offset."""
    ylen = _year_length(timestamp.year)
    tt = timestamp.timetuple()
    clock_min = tt.tm_hour * 60.0 + tt.tm_min + tt.tm_sec / 60.0 + timestamp.microsecond / 6e7
    day = tt.tm_yday + clock_min / 1440.0
    dec = solar_declination(day, ylen)
    eot = equation_of_time(day, ylen)
    true_solar_min = (
        clock_min
        + MINUTES_PER_DEGREE * (site.longitude - 15.0 * site.utc_offset_hours)
        + eot
    )
    hour_angle = math.radians(true_solar_min / MINUTES_PER_DEGREE - 180.0)
    # wrap to (-pi, pi] so the sign convention is stable around midnight
    hour_angle = math.atan2(math.sin(hour_angle), math.cos(hour_angle))
    cz = cos_zenith_from_angles(math.radians(site.latitude), dec, hour_angle)
    return SolarPosition(dec, eot, hour_angle, cz)


def cos_zenith(site: Site, timestamp: datetime) -> float:
    """Cosine of the solar zenith angle; negative when the sun is below the horizon."""
    return solar_position(site, timestamp).cos_zenith


def evaluation_instant(timestamp: datetime, midpoint: bool = True) -> datetime:
    """Instant at which geometry is evaluated for an hour-labelled accumulation.

    KMA rows labelled HH:00 hold the sum over the preceding hour, so the
    default is the interval midpoint HH-0.5h.
    """
    return timestamp - timedelta(minutes=30) if midpoint else timestamp


def solar_noon(site: Site, date) -> datetime:
    """Civil clock time of local solar noon (one EoT refinement)."""
    base = datetime(date.year, date.month, date.day, 12)
    offset_min = MINUTES_PER_DEGREE * (site.longitude - 15.0 * site.utc_offset_hours)
    noon = base - timedelta(minutes=offset_min + solar_position(site, base).equation_of_time)
    return base - timedelta(minutes=offset_min + solar_position(site, noon).equation_of_time)
