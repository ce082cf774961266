"""Hourly ASOS rows to DNI, stage by stage.

Uses the bundled 14-row Seoul excerpt. Night hours come out as exact zeros,
and the geometry is evaluated at the middle of each accumulation hour.
"""
from solspec import SEOUL, HourlySample, estimate_dni, parse_asos_csv, to_hourly_samples
from solspec.ingest import bundled_excerpt_path

records = parse_asos_csv(bundled_excerpt_path())
samples = to_hourly_samples(records, SEOUL)

print(f"{'time':16} {'GHI':>7} {'cos z':>7} {'dni0':>8} {'dni1':>8} {'dni':>8}")
for s in samples:
    e = estimate_dni(s)
    print(f"{s.timestamp:%Y-%m-%d %H:%M} {s.ghi:7.2f} {s.cos_zenith:7.3f} {e.dni0:8.2f} {e.dni1:8.2f} {e.dni_final:8.2f}")

# A little diffuse light with the sun at the horizon is enough for a spike.
spike = estimate_dni(HourlySample(samples[0].timestamp, 90.0, False, 0.01, 0.0, 30.0))
print(f"\nGHI 90 W/m2 at cos z = 0.01 projects to dni0 = {spike.dni0:.0f} W/m2, anomalous={spike.anomalous}")
