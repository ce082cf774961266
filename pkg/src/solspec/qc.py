"""Daily aggregation, spike flagging and monthly summaries of an hourly DNI run."""
from __future__ import annotations

import csv
from dataclasses import dataclass
from datetime import date, datetime
from itertools import groupby
from typing import IO, Iterable, Sequence

from .dni import DniEstimate
from .ingest import HourlySample

MODES = ("all_hours", "daylight_only")
DNI_FIELDS = ("dni_final", "dni1", "dni0")


@dataclass(frozen=True)
class DailyAggregate:
    date: date
    mean_ghi: float
    mean_dni: float
    n_hours: int
    n_anomalous: int


@dataclass(frozen=True)
class AnomalyEntry:
    timestamp: datetime
    dni_final: float
    ghi: float
    cos_zenith: float


@dataclass(frozen=True)
class AnomalyReport:
    threshold: float
    flags: list[bool]
    entries: list[AnomalyEntry]

    @property
    def count(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class MonthlySummary:
    year: int
    month: int
    n_days: int
    ghi_mean: float
    ghi_max: float
    ghi_min: float
    dni_mean: float
    dni_max: float
    dni_min: float


Series = Sequence[tuple[HourlySample, DniEstimate]]


def _check_sorted(series: Series) -> None:
    for (a, _), (b, _) in zip(series, series[1:]):
        if b.timestamp <= a.timestamp:
            raise ValueError(f"series not sorted by timestamp at {b.timestamp.isoformat()}")


def daily_means(series: Series, mode: str = "all_hours", dni_field: str = "dni_final") -> list[DailyAggregate]:
    """Per-date means of GHI and DNI.

    ``daylight_only`` keeps hours with ``cos_zenith > 0``; dates without any
    selected hour are omitted. ``dni_field`` picks which stage is averaged.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if dni_field not in DNI_FIELDS:
        raise ValueError(f"dni_field must be one of {DNI_FIELDS}, got {dni_field!r}")
    series = list(series)
    _check_sorted(series)

    out = []
    for day, group in groupby(series, key=lambda p: p[0].timestamp.date()):
        hours = [p for p in group if mode == "all_hours" or p[0].cos_zenith > 0]
        if not hours:
            continue
        n = len(hours)
        out.append(
            DailyAggregate(
                date=day,
                mean_ghi=sum(s.ghi for s, _ in hours) / n,
                mean_dni=sum(getattr(e, dni_field) for _, e in hours) / n,
                n_hours=n,
                n_anomalous=sum(e.anomalous for _, e in hours),
            )
        )
    return out


def flag_anomalies(series: Series, threshold: float) -> AnomalyReport:
    """Flag hours whose final DNI exceeds ``threshold`` (W/m2)."""
    if not threshold > 0:
        raise ValueError(f"threshold must be positive, got {threshold}")
    flags, entries = [], []
    for s, e in series:
        hit = e.dni_final > threshold
        flags.append(hit)
        if hit:
            entries.append(AnomalyEntry(s.timestamp, e.dni_final, s.ghi, s.cos_zenith))
    return AnomalyReport(threshold, flags, entries)


def seasonal_summary(aggregates: Iterable[DailyAggregate]) -> list[MonthlySummary]:
    out = []
    for (year, month), group in groupby(aggregates, key=lambda a: (a.date.year, a.date.month)):
        days = list(group)
        ghi = [d.mean_ghi for d in days]
        dni = [d.mean_dni for d in days]
        out.append(
            MonthlySummary(
                year, month, len(days),
                sum(ghi) / len(ghi), max(ghi), min(ghi),
                sum(dni) / len(dni), max(dni), min(dni),
            )
        )
    return out


def write_daily_csv(aggregates: Iterable[DailyAggregate], dest: IO[str]) -> None:
    w = csv.writer(dest, lineterminator="\n")
    w.writerow(["date", "mean_ghi", "mean_dni", "n_hours", "n_anomalous"])
    for a in aggregates:
        w.writerow([a.date.isoformat(), repr(a.mean_ghi), repr(a.mean_dni), a.n_hours, a.n_anomalous])


def write_monthly_csv(summaries: Iterable[MonthlySummary], dest: IO[str]) -> None:
    w = csv.writer(dest, lineterminator="\n")
    w.writerow(["year", "month", "n_days", "ghi_mean", "ghi_max", "ghi_min", "dni_mean", "dni_max", "dni_min"])
    for m in summaries:
        w.writerow([m.year, m.month, m.n_days] + [repr(v) for v in (m.ghi_mean, m.ghi_max, m.ghi_min, m.dni_mean, m.dni_max, m.dni_min)])


def write_anomaly_csv(report: AnomalyReport, dest: IO[str]) -> None:
    w = csv.writer(dest, lineterminator="\n")
    w.writerow(["timestamp", "dni_final", "ghi_w_m2", "cos_zenith"])
    for e in report.entries:
        w.writerow([e.timestamp.isoformat(), repr(e.dni_final), repr(e.ghi), repr(e.cos_zenith)])
