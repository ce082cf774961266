import csv
import json
import os

import pytest

from solspec.cli import main
from solspec.regression.benchmark import MODEL_IDS


def _rows(path):
    with open(path, encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def _read(path):
    with open(path, "rb") as fh:
        return fh.read()


@pytest.fixture(scope="module")
def year_csv(tmp_path_factory):
    path = tmp_path_factory.mktemp("synth") / "year.csv"
    assert main(["synth", "--cloudy", "--seed", "3", "--output", str(path)]) == 0
    return str(path)


class TestIngest:
    def test_excerpt(self, excerpt_path, tmp_path):
        out = tmp_path / "samples.csv"
        assert main(["ingest", "--input", excerpt_path, "--output", str(out)]) == 0
        rows = _rows(out)
        assert len(rows) == 14
        assert float(rows[7]["ghi_w_m2"]) == pytest.approx(116.67, abs=0.01)

    def test_json(self, excerpt_path, tmp_path):
        out = tmp_path / "samples.json"
        assert main(["ingest", "--input", excerpt_path, "--format", "json", "--output", str(out)]) == 0
        assert len(json.loads(out.read_text())) == 14

    def test_missing_file(self, tmp_path, capsys):
        missing = str(tmp_path / "nope.csv")
        assert main(["ingest", "--input", missing]) != 0
        assert missing in capsys.readouterr().err

    def test_corrupt_row(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("Index,일시,일사(MJ/m2),전운량(10분위),시정(10m)\n0,2024.1.1 00:00:00,,0,394\n1,2024.1.1 01:00:00,,12,394\n", encoding="utf-8")
        assert main(["ingest", "--input", str(bad)]) != 0
        assert "row 2" in capsys.readouterr().err


class TestEstimate:
    def test_blank_rows_zero(self, excerpt_path, tmp_path):
        out = tmp_path / "hourly.csv"
        assert main(["estimate", "--input", excerpt_path, "--output", str(out)]) == 0
        rows = _rows(out)
        assert list(rows[0]) == ["timestamp", "ghi_w_m2", "cos_zenith", "dni0", "dni1", "dni_final", "night", "anomalous"]
        for r in rows:
            if float(r["ghi_w_m2"]) == 0.0:
                assert float(r["dni0"]) == float(r["dni_final"]) == 0.0

    def test_from_ingested_samples(self, excerpt_path, tmp_path):
        samples, a, b = tmp_path / "s.csv", tmp_path / "a.csv", tmp_path / "b.csv"
        main(["ingest", "--input", excerpt_path, "--output", str(samples)])
        main(["estimate", "--input", excerpt_path, "--output", str(a)])
        main(["estimate", "--input", str(samples), "--output", str(b)])
        assert _read(a) == _read(b)

    def test_uncorrected_dominates(self, year_csv, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["estimate", "--input", year_csv, "--output", str(a)])
        main(["estimate", "--input", year_csv, "--uncorrected", "--output", str(b)])
        for ra, rb in zip(_rows(a), _rows(b)):
            assert float(ra["dni_final"]) <= float(rb["dni_final"])

    def test_cos_floor(self, year_csv, tmp_path):
        out = tmp_path / "f.csv"
        main(["estimate", "--input", year_csv, "--cos-floor", "0.087", "--output", str(out)])
        assert max(float(r["dni0"]) / max(float(r["ghi_w_m2"]), 1e-12) for r in _rows(out) if float(r["ghi_w_m2"]) > 0) <= 1 / 0.087 + 1e-9


class TestSpectrum:
    def test_two_columns(self, tmp_path):
        out = tmp_path / "s.csv"
        assert main(["spectrum", "--dni", "500", "--output", str(out)]) == 0
        rows = _rows(out)
        assert list(rows[0]) == ["wavelength_nm", "irradiance_w_m2_nm"]
        wl = [float(r["wavelength_nm"]) for r in rows]
        irr = [float(r["irradiance_w_m2_nm"]) for r in rows]
        total = sum((b - a) * (x + y) / 2 for a, b, x, y in zip(wl, wl[1:], irr, irr[1:]))
        assert total == pytest.approx(500.0, abs=1e-6)

    def test_bad_g173(self, tmp_path):
        assert main(["spectrum", "--dni", "1", "--g173", str(tmp_path / "x.csv")]) != 0


class TestDaily:
    def test_full_year(self, year_csv, tmp_path):
        out = tmp_path / "d.csv"
        assert main(["daily", "--input", year_csv, "--output", str(out)]) == 0
        rows = _rows(out)
        assert len(rows) == 366
        assert list(rows[0]) == ["date", "mean_ghi", "mean_dni", "n_hours", "n_anomalous"]


class TestReport:
    def test_artifacts_and_determinism(self, year_csv, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        for d in (a, b):
            assert main(["report", "--input", year_csv, "--output", str(d), "--uncorrected", "--format", "csv,json,svg"]) == 0
        names = sorted(os.listdir(a))
        for expected in ("hourly.csv", "daily.csv", "monthly.csv", "anomalies.csv", "spectra_samples.csv",
                         "daily_timeseries.svg", "daily_timeseries_uncorrected.svg", "hourly.json"):
            assert expected in names
        for name in names:
            if not name.endswith(".svg"):
                assert _read(a / name) == _read(b / name), name
        assert len(_rows(a / "daily.csv")) == 366
        svg = (a / "daily_timeseries.svg").read_text()
        assert svg.count("<polyline") == 2 and "GHI" in svg


class TestRegress:
    def test_outputs(self, year_csv, tmp_path):
        cfg = tmp_path / "hp.json"
        cfg.write_text(json.dumps({"random_forest": {"n_estimators": 4}, "mlp": {"epochs": 3}, "gradient_boosting": {"n_estimators": 5}}))
        out = tmp_path / "reg"
        assert main(["regress", "--input", year_csv, "--config", str(cfg), "--output", str(out)]) == 0
        report = _rows(out / "report.csv")
        assert [r["model_id"] for r in report] == list(MODEL_IDS)
        n_test = int(report[0]["n_test"])
        assert len(_rows(out / "scatter.csv")) == n_test * 5
        assert json.loads(report[2]["hyperparameters"])["n_estimators"] == 4
        assert all((out / f"scatter_{m}.svg").exists() for m in MODEL_IDS)

    def test_failed_model_warns_unless_strict(self, year_csv, tmp_path, capsys):
        cfg = tmp_path / "hp.json"
        cfg.write_text(json.dumps({"decision_tree": {"max_depth": 0}, "random_forest": {"n_estimators": 2}, "mlp": {"epochs": 1}, "gradient_boosting": {"n_estimators": 2}}))
        args = ["regress", "--input", year_csv, "--config", str(cfg), "--format", "csv"]
        assert main(args + ["--output", str(tmp_path / "r1")]) == 0
        assert "decision_tree failed" in capsys.readouterr().err
        assert main(args + ["--output", str(tmp_path / "r2"), "--strict"]) == 2
        rows = _rows(tmp_path / "r1" / "report.csv")
        assert len(rows) == 5 and rows[1]["error"]
        assert len(_rows(tmp_path / "r1" / "scatter.csv")) == int(rows[0]["n_test"]) * 4

    def test_chronological(self, year_csv, tmp_path):
        cfg = tmp_path / "hp.json"
        cfg.write_text(json.dumps({"random_forest": {"n_estimators": 2}, "mlp": {"epochs": 1}, "gradient_boosting": {"n_estimators": 2}}))
        out = tmp_path / "r"
        assert main(["regress", "--input", year_csv, "--config", str(cfg), "--split", "chronological", "--format", "json", "--output", str(out)]) == 0
        assert json.loads((out / "report.json").read_text())["split"]["chronological"] is True
