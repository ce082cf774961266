import pytest

from solspec.dni import estimate_series
from solspec.ingest import bundled_excerpt_path, to_hourly_samples
from solspec.spectrum import load_g173
from solspec.synth import synthetic_year

# pure-python trapezoid over the bundled direct+circumsolar column, 280-2500 nm
E_STD_DIRECT = 892.2908263812797


@pytest.fixture(scope="session")
def g173():
    return load_g173()


@pytest.fixture(scope="session")
def excerpt_path():
    return bundled_excerpt_path()


@pytest.fixture(scope="session")
def clear_year():
    samples = to_hourly_samples(synthetic_year(clear_sky=True, seed=0))
    return samples, estimate_series(samples), estimate_series(samples, corrected=False)


@pytest.fixture(scope="session")
def cloudy_year():
    samples = to_hourly_samples(synthetic_year(clear_sky=False, seed=1))
    return samples, estimate_series(samples)


ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
