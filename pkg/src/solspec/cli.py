"""Command-line interface.

    solspec ingest   --input asos.csv --output samples.csv
    solspec estimate --input asos.csv --output hourly.csv [--uncorrected]
    solspec spectrum --dni 650 --output spectrum.csv
    solspec daily    --input asos.csv --output daily.csv [--mode daylight_only]
    solspec regress  --input asos.csv --output outdir/ [--split chronological]
    solspec report   --input asos.csv --output outdir/ [--uncorrected]
    solspec synth    --output year.csv [--cloudy]
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from contextlib import contextmanager

from . import qc, svg
from .dni import DniModelConfig, estimate_series
from .geometry import SEOUL, Site
from .ingest import IngestError, load_samples, samples_to_dicts, write_asos_csv, write_samples_csv
from .regression.benchmark import (
    load_hyperparameters,
    merged_hyperparameters,
    reports_to_json,
    run_benchmark,
    write_reports_csv,
    write_scatter_csv,
)
from .regression.data import Dataset, SplitSpec
from .spectrum import G173_COLUMNS, SpectrumError, load_g173, normalize, scale, write_spectrum_csv
from .synth import synthetic_year

log = logging.getLogger("solspec")

FORMATS = ("csv", "json", "svg")
HOURLY_HEADER = ["timestamp", "ghi_w_m2", "cos_zenith", "dni0", "dni1", "dni_final", "night", "anomalous"]


class CliError(Exception):
    pass


def _formats(text: str) -> list[str]:
    fmts = [f.strip() for f in text.split(",") if f.strip()]
    bad = [f for f in fmts if f not in FORMATS]
    if bad or not fmts:
        raise argparse.ArgumentTypeError(f"formats must be a subset of {','.join(FORMATS)}")
    return fmts


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--input", help="ASOS hourly CSV, or a sample file written by `ingest`")
    p.add_argument("--g173", help="ASTM G-173 table (default: bundled copy)")
    p.add_argument("--lat", type=float, default=SEOUL.latitude)
    p.add_argument("--lon", type=float, default=SEOUL.longitude)
    p.add_argument("--tz-offset", type=float, default=SEOUL.utc_offset_hours, help="hours ahead of UTC")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--anomaly-threshold", type=float, default=DniModelConfig().anomaly_threshold)
    p.add_argument("--cos-floor", type=float, default=None, help="lower bound on cos(zenith) in the projection")
    p.add_argument("--uncorrected", action="store_true", help="projection-only DNI (no cloud/visibility terms)")
    p.add_argument("--output", help="output file (or directory for report/regress); stdout if omitted")
    p.add_argument("--format", type=_formats, default=None, help="comma list of csv,json,svg")
    p.add_argument("--lenient", action="store_true", help="fill blank cloud/visibility cells instead of failing")
    p.add_argument("--on-the-hour", action="store_true", help="evaluate geometry at the hour label, not the interval midpoint")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="solspec", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()

    sub.add_parser("ingest", parents=[common], help="normalize ASOS rows to physics-ready samples")
    sub.add_parser("estimate", parents=[common], help="hourly DNI estimates")

    sp = sub.add_parser("spectrum", parents=[common], help="G-173 shape scaled to a DNI value")
    sp.add_argument("--dni", type=float, required=True, help="broadband direct irradiance, W/m2")
    sp.add_argument("--column", choices=G173_COLUMNS, default="direct_circumsolar")
    sp.add_argument("--full-range", action="store_true", help="keep 2500-4000 nm")

    daily = sub.add_parser("daily", parents=[common], help="daily mean GHI/DNI")
    daily.add_argument("--mode", choices=qc.MODES, default="all_hours")

    reg = sub.add_parser("regress", parents=[common], help="five-model regression benchmark")
    reg.add_argument("--split", choices=("shuffle", "chronological"), default="shuffle")
    reg.add_argument("--train-fraction", type=float, default=0.8)
    reg.add_argument("--config", help="JSON hyperparameter overrides keyed by model id")
    reg.add_argument("--strict", action="store_true", help="exit non-zero if any model fails")

    rep = sub.add_parser("report", parents=[common], help="full pipeline: hourly, daily, monthly, anomalies, spectra, figures")
    rep.add_argument("--mode", choices=qc.MODES, default="all_hours")
    rep.add_argument("--column", choices=G173_COLUMNS, default="direct_circumsolar")

    syn = sub.add_parser("synth", parents=[common], help="write a synthetic ASOS-format year")
    syn.add_argument("--year", type=int, default=2024)
    syn.add_argument("--cloudy", action="store_true", help="add cloud episodes (default is clear sky)")
    return parser


# ---------------------------------------------------------------- helpers


@contextmanager
def _sink(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _render(writer, *args) -> str:
    buf = io.StringIO()
    writer(*args, buf)
    return buf.getvalue()


def _site(args) -> Site:
    return Site(args.lat, args.lon, args.tz_offset)


def _config(args) -> DniModelConfig:
    return DniModelConfig(cos_zenith_floor=args.cos_floor, anomaly_threshold=args.anomaly_threshold)


def _samples(args):
    if not args.input:
        raise CliError("--input is required")
    if not os.path.exists(args.input):
        raise CliError(f"input file not found: {args.input}")
    try:
        return load_samples(args.input, _site(args), midpoint=not args.on_the_hour, lenient=args.lenient)
    except IngestError as exc:
        raise CliError(f"{args.input}: {exc}") from None


def _file_format(args) -> str:
    fmts = [f for f in (args.format or ["csv"]) if f != "svg"]
    return fmts[0] if fmts else "csv"


def _hourly_rows(samples, estimates):
    for s, e in zip(samples, estimates):
        yield [s.timestamp.isoformat(), s.ghi, s.cos_zenith, e.dni0, e.dni1, e.dni_final, e.night, e.anomalous]


def _hourly_csv(samples, estimates) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HOURLY_HEADER)
    for row in _hourly_rows(samples, estimates):
        w.writerow(row[:1] + [repr(float(v)) for v in row[1:6]] + [int(row[6]), int(row[7])])
    return buf.getvalue()


def _hourly_json(samples, estimates) -> str:
    rows = [dict(zip(HOURLY_HEADER, r)) for r in _hourly_rows(samples, estimates)]
    return json.dumps(rows, indent=1) + "\n"


def _daily_json(aggregates) -> str:
    rows = [
        {"date": a.date.isoformat(), "mean_ghi": a.mean_ghi, "mean_dni": a.mean_dni,
         "n_hours": a.n_hours, "n_anomalous": a.n_anomalous}
        for a in aggregates
    ]
    return json.dumps(rows, indent=1) + "\n"


def _out_dir(args) -> str:
    if not args.output:
        raise CliError("--output directory is required")
    os.makedirs(args.output, exist_ok=True)
    return args.output


# ---------------------------------------------------------------- commands


def cmd_ingest(args) -> int:
    samples = _samples(args)
    with _sink(args.output) as fh:
        if _file_format(args) == "json":
            fh.write(json.dumps(samples_to_dicts(samples), indent=1) + "\n")
        else:
            write_samples_csv(samples, fh)
    log.info("ingested %d rows", len(samples))
    return 0


def cmd_estimate(args) -> int:
    samples = _samples(args)
    estimates = estimate_series(samples, _config(args), corrected=not args.uncorrected)
    text = _hourly_json(samples, estimates) if _file_format(args) == "json" else _hourly_csv(samples, estimates)
    with _sink(args.output) as fh:
        fh.write(text)
    return 0


def cmd_spectrum(args) -> int:
    try:
        std = load_g173(args.g173, args.column, args.full_range)
        spectrum = scale(normalize(std), args.dni)
    except (SpectrumError, OSError) as exc:
        raise CliError(f"spectrum: {exc}") from None
    with _sink(args.output) as fh:
        write_spectrum_csv(spectrum, fh)
    return 0


def cmd_daily(args) -> int:
    samples = _samples(args)
    estimates = estimate_series(samples, _config(args), corrected=not args.uncorrected)
    aggregates = qc.daily_means(list(zip(samples, estimates)), args.mode)
    with _sink(args.output) as fh:
        if _file_format(args) == "json":
            fh.write(_daily_json(aggregates))
        else:
            qc.write_daily_csv(aggregates, fh)
    return 0


def cmd_regress(args) -> int:
    samples = _samples(args)
    estimates = estimate_series(samples, _config(args))
    dataset = Dataset.from_pipeline(samples, estimates)
    if len(dataset) < 2:
        raise CliError(f"only {len(dataset)} daylight rows with measured GHI; need at least 2")
    table = load_hyperparameters(args.config) if args.config else merged_hyperparameters()
    split = SplitSpec(args.train_fraction, args.seed, args.split == "chronological")
    result = run_benchmark(dataset, split, table)

    out = _out_dir(args)
    fmts = args.format or ["csv", "json", "svg"]
    if "csv" in fmts:
        _write(os.path.join(out, "report.csv"), _render(write_reports_csv, result))
        _write(os.path.join(out, "scatter.csv"), _render(write_scatter_csv, result))
    if "json" in fmts:
        _write(os.path.join(out, "report.json"), reports_to_json(result))
    if "svg" in fmts:
        for model_id, (measured, predicted) in result.scatter.items():
            _write(os.path.join(out, f"scatter_{model_id}.svg"), svg.scatter(measured, predicted, f"Measured vs predicted DNI: {model_id}"))
    for r in result.reports:
        if r.error:
            print(f"warning: {r.model_id} failed: {r.error}", file=sys.stderr)
        else:
            r2 = "undefined" if r.r2 is None else f"{r.r2:.4f}"
            print(f"{r.model_id:18s} r2={r2:>10s} mse={r.mse:.6g}")
    return 2 if args.strict and result.failed else 0


def _spectra_samples(samples, estimates, std) -> str:
    """Scaled spectra for the highest-GHI non-anomalous hour of each month.

    Ranking by GHI rather than DNI keeps grazing-sun hours, whose projected
    DNI is inflated, out of the selection.
    """
    best = {}
    for s, e in zip(samples, estimates):
        if e.dni_final <= 0 or e.anomalous:
            continue
        key = (s.timestamp.year, s.timestamp.month)
        if key not in best or s.ghi > best[key][1]:
            best[key] = (s.timestamp, s.ghi, e.dni_final)
    shape = normalize(std)
    picks = [best[k] for k in sorted(best)]
    columns = [scale(shape, dni).irradiance for _, _, dni in picks]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["wavelength_nm"] + [ts.isoformat() for ts, _, _ in picks])
    for i, wl in enumerate(shape.wavelength):
        w.writerow([repr(float(wl))] + [repr(float(c[i])) for c in columns])
    return buf.getvalue()


def cmd_report(args) -> int:
    samples = _samples(args)
    config = _config(args)
    try:
        std = load_g173(args.g173, args.column)
    except (SpectrumError, OSError) as exc:
        raise CliError(f"spectrum: {exc}") from None
    out = _out_dir(args)
    fmts = args.format or ["csv", "svg"]

    runs = [("", True)] + ([("_uncorrected", False)] if args.uncorrected else [])
    for suffix, corrected in runs:
        estimates = estimate_series(samples, config, corrected=corrected)
        series = list(zip(samples, estimates))
        daily = qc.daily_means(series, args.mode)
        monthly = qc.seasonal_summary(daily)
        anomalies = qc.flag_anomalies(series, config.anomaly_threshold)
        if "csv" in fmts:
            _write(os.path.join(out, f"hourly{suffix}.csv"), _hourly_csv(samples, estimates))
            _write(os.path.join(out, f"daily{suffix}.csv"), _render(qc.write_daily_csv, daily))
            _write(os.path.join(out, f"monthly{suffix}.csv"), _render(qc.write_monthly_csv, monthly))
            _write(os.path.join(out, f"anomalies{suffix}.csv"), _render(qc.write_anomaly_csv, anomalies))
        if "json" in fmts:
            _write(os.path.join(out, f"hourly{suffix}.json"), _hourly_json(samples, estimates))
            _write(os.path.join(out, f"daily{suffix}.json"), _daily_json(daily))
        if "svg" in fmts:
            label = "DNI, projection only (W/m2)" if not corrected else "DNI (W/m2)"
            _write(
                os.path.join(out, f"daily_timeseries{suffix}.svg"),
                svg.dual_axis_timeseries(
                    [a.date for a in daily], [a.mean_ghi for a in daily], [a.mean_dni for a in daily],
                    right_label=label,
                ),
            )
        if corrected:
            _write(os.path.join(out, "spectra_samples.csv"), _spectra_samples(samples, estimates, std))
        print(f"{'corrected' if corrected else 'uncorrected'}: {len(series)} hours, {len(daily)} days, "
              f"{anomalies.count} hours above {config.anomaly_threshold:g} W/m2")
    return 0


def cmd_synth(args) -> int:
    records = synthetic_year(args.year, _site(args), seed=args.seed, clear_sky=not args.cloudy)
    with _sink(args.output) as fh:
        write_asos_csv(records, fh)
    return 0


COMMANDS = {
    "ingest": cmd_ingest,
    "estimate": cmd_estimate,
    "spectrum": cmd_spectrum,
    "daily": cmd_daily,
    "regress": cmd_regress,
    "report": cmd_report,
    "synth": cmd_synth,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except BrokenPipeError:
        # output piped into head or similar; silence the flush at exit
        sys.stdout = None
        return 0
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
