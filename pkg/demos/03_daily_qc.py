"""A synthetic year with cloud episodes through daily means, monthly summaries and QC.

The two daily-mean conventions differ by roughly a factor of two because
night hours are zeros in the all-hours mean.
"""
from solspec import SEOUL, estimate_series, synthetic_year, to_hourly_samples
from solspec.qc import daily_means, flag_anomalies, seasonal_summary

samples = to_hourly_samples(synthetic_year(2024, SEOUL, seed=0, clear_sky=False))
estimates = estimate_series(samples)
series = list(zip(samples, estimates))

all_hours = daily_means(series, mode="all_hours")
daylight = daily_means(series, mode="daylight_only")
print(f"{len(samples)} hours, {len(all_hours)} days")
print(f"June 21 mean GHI: all hours {all_hours[172].mean_ghi:.1f}, daylight only {daylight[172].mean_ghi:.1f} W/m2")

print("\nmonth  GHI    DNI")
for m in seasonal_summary(all_hours):
    print(f"{m.month:5d} {m.ghi_mean:6.1f} {m.dni_mean:6.1f}")

report = flag_anomalies(series, threshold=1361.0)
print(f"\n{report.count} hours above {report.threshold:g} W/m2")
for entry in report.entries[:5]:
    print(f"  {entry.timestamp}  dni={entry.dni_final:.0f}  ghi={entry.ghi:.1f}  cos z={entry.cos_zenith:.3f}")
