"""Reading KMA ASOS hourly exports and turning them into physics-ready samples.

The expected layout is five comma separated columns::

    Index,일시,일사(MJ/m2),전운량(10분위),시정(10m)
    8777,2024.12.31 17:00:00,0.42,0,3570

Columns are located by header name (Korean or English) when possible and
by position otherwise. Extra columns in raw KMA exports (station id, name)
are ignored when headers are recognised.
"""
from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from datetime import datetime
from typing import IO, Iterable, Sequence

from .geometry import SEOUL, Site, cos_zenith, evaluation_instant

HOUR_SECONDS = 3600.0
CANONICAL_HEADER = ("Index", "일시", "일사(MJ/m2)", "전운량(10분위)", "시정(10m)")
SAMPLE_HEADER = (
    "timestamp",
    "ghi_w_m2",
    "ghi_missing",
    "cos_zenith",
    "cloud_factor",
    "visibility_km",
)

# lowercase substrings identifying each field
_HEADER_KEYS = {
    "index": ("index", "번호"),
    "timestamp": ("일시", "date", "time"),
    "radiation": ("일사", "solar radiation", "radiation"),
    "cloud": ("전운량", "cloud"),
    "visibility": ("시정", "visibility"),
}
_POSITIONAL = {"index": 0, "timestamp": 1, "radiation": 2, "cloud": 3, "visibility": 4}


class IngestError(ValueError):
    """Parse or validation failure; ``row`` is the 1-based data row when known."""

    def __init__(self, message: str, row: int | None = None):
        self.row = row
        super().__init__(message if row is None else f"row {row}: {message}")


@dataclass(frozen=True)
class ObservationRecord:
    index: int
    timestamp: datetime  # local civil time, hour label
    solar_radiation: float | None  # MJ/m2 over the hour; None when blank
    cloud_total: int  # tenths, 0..10
    visibility_raw: int  # units of 10 m


@dataclass(frozen=True)
class HourlySample:
    timestamp: datetime
    ghi: float  # W/m2, hourly mean
    ghi_missing: bool
    cos_zenith: float
    cloud_factor: float
    visibility_km: float

    @property
    def cloud_total(self) -> float:
        return self.cloud_factor * 10.0


def parse_timestamp(text: str) -> datetime:
    """Parse ``YYYY.M.D HH:MM:SS``; ISO ``YYYY-MM-DD HH:MM[:SS]`` is also accepted."""
    text = text.strip()
    for fmt in ("%Y.%m.%d %H:%M:%S", "%Y.%m.%d %H:%M", "%Y-%m-%d %H:%M:%S", "%Y-%m-%d %H:%M", "%Y-%m-%dT%H:%M:%S", "%Y-%m-%dT%H:%M"):
        try:
            return datetime.strptime(text, fmt)
        except ValueError:
            continue
    raise ValueError(f"unrecognised datetime {text!r}")


def format_timestamp(ts: datetime) -> str:
    return f"{ts.year}.{ts.month}.{ts.day} {ts:%H:%M:%S}"


def _resolve_columns(header: Sequence[str]) -> dict[str, int] | None:
    lowered = [h.strip().lower() for h in header]
    found: dict[str, int] = {}
    for field, keys in _HEADER_KEYS.items():
        for i, name in enumerate(lowered):
            if i in found.values():
                continue
            if any(k in name for k in keys):
                found[field] = i
                break
    required = {"timestamp", "radiation", "cloud", "visibility"}
    if required <= found.keys():
        return found
    return None


def _open_text(source) -> IO[str]:
    if isinstance(source, (str, os.PathLike)):
        return open(source, encoding="utf-8-sig", newline="")
    if isinstance(source, (bytes, bytearray)):
        return io.StringIO(bytes(source).decode("utf-8-sig"), newline="")
    if isinstance(source, io.TextIOBase):
        return source
    return io.TextIOWrapper(source, encoding="utf-8-sig", newline="")


def _parse_float(cell: str, what: str, row: int) -> float:
    try:
        return float(cell)
    except ValueError:
        raise IngestError(f"{what} {cell!r} is not a number", row) from None


def _parse_int(cell: str, what: str, row: int) -> int:
    value = _parse_float(cell, what, row)
    if value != int(value):
        raise IngestError(f"{what} {cell!r} is not an integer", row)
    return int(value)


def parse_asos_csv(source, lenient: bool = False) -> list[ObservationRecord]:
    """Parse an ASOS hourly CSV into records, in file order.

    Args:
        source: path, bytes, or a text/binary stream.
        lenient: substitute cloud=0 and the previous row's visibility for
            blank cells instead of rejecting the row.

    Raises:
        IngestError: on the first bad row, or when timestamps are not
            strictly increasing whole hours.
    """
    fh = _open_text(source)
    try:
        rows = list(csv.reader(fh))
    finally:
        if fh is not source:
            fh.close()
    rows = [r for r in rows if any(c.strip() for c in r)]
    if not rows:
        raise IngestError("empty file: header row missing")
    columns = _resolve_columns(rows[0])
    if columns is None:
        columns = dict(_POSITIONAL)

    records: list[ObservationRecord] = []
    prev_vis: int | None = None
    prev_ts: datetime | None = None
    for n, row in enumerate(rows[1:], start=1):
        cells = {}
        for field, col in columns.items():
            cells[field] = row[col].strip() if col < len(row) else ""
        try:
            ts = parse_timestamp(cells["timestamp"])
        except ValueError as exc:
            raise IngestError(str(exc), n) from None
        if ts.minute or ts.second or ts.microsecond:
            raise IngestError(f"timestamp {cells['timestamp']!r} is not on the hour", n)
        if prev_ts is not None and ts <= prev_ts:
            raise IngestError(
                f"timestamps not strictly increasing ({format_timestamp(ts)} after "
                f"{format_timestamp(prev_ts)})",
                n,
            )

        rad_cell = cells["radiation"]
        radiation = _parse_float(rad_cell, "solar radiation", n) if rad_cell else None
        if radiation is not None and radiation < 0:
            raise IngestError(f"negative solar radiation {radiation}", n)

        if cells["cloud"]:
            cloud = _parse_int(cells["cloud"], "cloud amount", n)
        elif lenient:
            cloud = 0
        else:
            raise IngestError("cloud amount missing", n)
        if not 0 <= cloud <= 10:
            raise IngestError(f"cloud amount {cloud} outside 0..10", n)

        if cells["visibility"]:
            vis = _parse_int(cells["visibility"], "visibility", n)
        elif lenient and prev_vis is not None:
            vis = prev_vis
        else:
            raise IngestError("visibility missing", n)
        if vis < 0:
            raise IngestError(f"negative visibility {vis}", n)

        idx_cell = cells.get("index", "")
        index = _parse_int(idx_cell, "index", n) if idx_cell else n - 1
        records.append(ObservationRecord(index, ts, radiation, cloud, vis))
        prev_ts, prev_vis = ts, vis
    return records


def _format_number(value: float) -> str:
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


def write_asos_csv(records: Iterable[ObservationRecord], dest: IO[str]) -> None:
    """Write records in the canonical five-column layout; inverse of :func:`parse_asos_csv`."""
    writer = csv.writer(dest, lineterminator="\n")
    writer.writerow(CANONICAL_HEADER)
    for r in records:
        writer.writerow(
            [
                r.index,
                format_timestamp(r.timestamp),
                "" if r.solar_radiation is None else _format_number(r.solar_radiation),
                r.cloud_total,
                r.visibility_raw,
            ]
        )


def radiation_to_ghi(solar_radiation: float | None) -> tuple[float, bool]:
    """Hourly MJ/m2 accumulation to mean W/m2; blank cells give ``(0.0, True)``."""
    if solar_radiation is None:
        return 0.0, True
    if solar_radiation < 0:
        raise ValueError(f"solar radiation must be non-negative, got {solar_radiation}")
    return solar_radiation * 1e6 / HOUR_SECONDS, False


def visibility_to_km(visibility_raw: float) -> float:
    # raw unit is 10 m, so km = raw * 10 / 1000 = raw / 100
    if visibility_raw < 0:
        raise ValueError(f"visibility must be non-negative, got {visibility_raw}")
    return visibility_raw / 100.0


def to_hourly_sample(
    record: ObservationRecord, site: Site = SEOUL, midpoint: bool = True
) -> HourlySample:
    ghi, missing = radiation_to_ghi(record.solar_radiation)
    return HourlySample(
        timestamp=record.timestamp,
        ghi=ghi,
        ghi_missing=missing,
        cos_zenith=cos_zenith(site, evaluation_instant(record.timestamp, midpoint)),
        cloud_factor=record.cloud_total / 10.0,
        visibility_km=visibility_to_km(record.visibility_raw),
    )


def to_hourly_samples(
    records: Iterable[ObservationRecord], site: Site = SEOUL, midpoint: bool = True
) -> list[HourlySample]:
    return [to_hourly_sample(r, site, midpoint) for r in records]


def write_samples_csv(samples: Iterable[HourlySample], dest: IO[str]) -> None:
    writer = csv.writer(dest, lineterminator="\n")
    writer.writerow(SAMPLE_HEADER)
    for s in samples:
        writer.writerow(
            [
                s.timestamp.isoformat(),
                repr(s.ghi),
                int(s.ghi_missing),
                repr(s.cos_zenith),
                repr(s.cloud_factor),
                repr(s.visibility_km),
            ]
        )


def samples_to_dicts(samples: Iterable[HourlySample]) -> list[dict]:
    return [
        {
            "timestamp": s.timestamp.isoformat(),
            "ghi_w_m2": s.ghi,
            "ghi_missing": s.ghi_missing,
            "cos_zenith": s.cos_zenith,
            "cloud_factor": s.cloud_factor,
            "visibility_km": s.visibility_km,
        }
        for s in samples
    ]


def read_samples_csv(source) -> list[HourlySample]:
    """Read the normalized sample CSV written by :func:`write_samples_csv`."""
    fh = _open_text(source)
    try:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != SAMPLE_HEADER:
            raise IngestError(f"not a sample file; expected header {','.join(SAMPLE_HEADER)}")
        out = []
        for n, row in enumerate(reader, start=1):
            if not row:
                continue
            try:
                out.append(
                    HourlySample(
                        timestamp=datetime.fromisoformat(row[0]),
                        ghi=float(row[1]),
                        ghi_missing=row[2].strip() in ("1", "true", "True"),
                        cos_zenith=float(row[3]),
                        cloud_factor=float(row[4]),
                        visibility_km=float(row[5]),
                    )
                )
            except (ValueError, IndexError) as exc:
                raise IngestError(str(exc), n) from None
        return out
    finally:
        if fh is not source:
            fh.close()


def is_sample_file(path) -> bool:
    with open(path, encoding="utf-8-sig") as fh:
        first = fh.readline().strip()
    return tuple(first.split(",")) == SAMPLE_HEADER


def load_samples(path, site: Site = SEOUL, midpoint: bool = True, lenient: bool = False) -> list[HourlySample]:
    """Load either a raw ASOS export or a previously normalized sample file."""
    if is_sample_file(path):
        return read_samples_csv(path)
    return to_hourly_samples(parse_asos_csv(path, lenient=lenient), site, midpoint)


def bundled_excerpt_path() -> str:
    """Path of the 14-row Seoul 2024 excerpt shipped with the package."""
    return os.path.join(os.path.dirname(__file__), "data", "asos_seoul_2024_excerpt.csv")
