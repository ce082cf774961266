"""Five regressors predicting DNI from (GHI, cos z, cloud, visibility).

The dataset is built from the physical pipeline on a synthetic year, so the
polynomial ridge model should come close to a perfect fit.
"""
from solspec import SEOUL, estimate_series, synthetic_year, to_hourly_samples
from solspec.regression import Dataset, SplitSpec, run_benchmark

samples = to_hourly_samples(synthetic_year(2024, SEOUL, seed=1, clear_sky=False))
dataset = Dataset.from_pipeline(samples, estimate_series(samples))
print(f"{len(dataset)} daylight hours with valid GHI")

result = run_benchmark(dataset, SplitSpec(train_fraction=0.8, seed=42))
print(f"train {result.reports[0].n_train}, test {result.reports[0].n_test}\n")
print(f"{'model':18} {'R2':>8} {'MSE':>12}")
for r in result.reports:
    r2 = "n/a" if r.r2 is None else f"{r.r2:.4f}"
    print(f"{r.model_id:18} {r2:>8} {r.mse:12.2f}")
