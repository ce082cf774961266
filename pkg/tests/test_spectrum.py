import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from solspec.spectrum import (
    SpectralShape,
    SpectrumError,
    SpectrumTable,
    effective_optical_depth,
    integrate,
    load_g173,
    normalize,
    rescale_by_ratio,
    scale,
)

from .conftest import E_STD_DIRECT


def _rel(a, b):
    return np.max(np.abs(a - b) / np.abs(b))


def _positive_spectra():
    return st.integers(2, 60).flatmap(
        lambda n: st.tuples(
            arrays(float, n, elements=st.floats(0.1, 10.0)),
            arrays(float, n, elements=st.floats(0.01, 100.0)),
        )
    ).map(lambda t: SpectrumTable(280.0 + np.cumsum(t[0]), t[1]))


class TestLoad:
    def test_domain(self, g173):
        assert g173.wavelength[0] == 280.0
        assert g173.wavelength[-1] <= 2500.0
        assert g173.wavelength.size == 1702

    def test_full_range(self):
        assert load_g173(full_range=True).wavelength[-1] == 4000.0

    def test_reference_total(self, g173):
        # frozen from an independent pure-python trapezoid over the bundled file
        assert integrate(g173) == pytest.approx(E_STD_DIRECT, rel=1e-12)

    def test_columns_ordered_by_magnitude(self):
        totals = [integrate(load_g173(column=c)) for c in ("direct_circumsolar", "global_tilt", "extraterrestrial")]
        assert totals == sorted(totals)

    def test_metadata(self, g173):
        assert g173.metadata["air_mass"] == 1.5
        assert g173.metadata["aod_500nm"] == 0.084

    def test_duplicate_wavelength(self):
        text = "header\n300,1,1,1\n300,1,1,1\n"
        with pytest.raises(SpectrumError, match="line 3"):
            load_g173(io.StringIO(text))

    def test_negative_irradiance(self):
        with pytest.raises(SpectrumError, match="negative"):
            load_g173(io.StringIO("300,1,1,1\n301,1,1,-2\n"))

    def test_missing_column(self):
        with pytest.raises(SpectrumError, match="missing"):
            load_g173(io.StringIO("300,1,1\n"))

    def test_unknown_column(self):
        with pytest.raises(SpectrumError):
            load_g173(column="diffuse")

    def test_bytes_source(self):
        s = load_g173(b"w,e,g,d\n300,1,2,3\n310,1,2,5\n")
        assert integrate(s) == pytest.approx(40.0)


class TestIntegrate:
    def test_rectangle(self):
        s = SpectrumTable([0.0, 10.0], [2.0, 2.0])
        assert integrate(s, 0, 10) == 20.0

    def test_triangle(self):
        s = SpectrumTable([0.0, 100.0], [0.0, 1.0])
        dense = np.linspace(0, 100, 100001)
        oracle = float(np.sum(np.diff(dense) * (dense[1:] + dense[:-1]) / 200.0))
        assert oracle == pytest.approx(50.0, rel=1e-12)
        assert integrate(s) == pytest.approx(50.0, rel=1e-12)

    def test_partial_interval_interpolation(self):
        s = SpectrumTable([0.0, 100.0], [0.0, 1.0])
        assert integrate(s, 0, 50) == pytest.approx(12.5, rel=1e-12)

    @pytest.mark.parametrize("abc", [(280, 700, 2500), (300.25, 1000.7, 1702.3), (281.1, 281.2, 281.3)])
    def test_additive(self, g173, abc):
        a, b, c = abc
        assert integrate(g173, a, b) + integrate(g173, b, c) == pytest.approx(integrate(g173, a, c), rel=1e-12)

    @pytest.mark.parametrize("bounds", [(500, 400), (270, 400), (300, 2600), (400, 400)])
    def test_bad_bounds(self, g173, bounds):
        with pytest.raises(ValueError):
            integrate(g173, *bounds)


class TestNormalizeScale:
    def test_unit_area(self, g173):
        shape = normalize(g173)
        area = integrate(SpectrumTable(shape.wavelength, shape.density))
        assert area == pytest.approx(1.0, rel=1e-9)
        assert shape.reference_total == pytest.approx(E_STD_DIRECT, rel=1e-12)

    def test_scale_invariant(self, g173):
        a = normalize(g173)
        b = normalize(SpectrumTable(g173.wavelength, 5 * g173.irradiance))
        np.testing.assert_allclose(a.density, b.density, rtol=1e-12, atol=0)

    def test_degenerate(self):
        with pytest.raises(SpectrumError):
            normalize(SpectrumTable([1.0, 2.0], [0.0, 0.0]))

    def test_zero(self, g173):
        assert not np.any(scale(normalize(g173), 0.0).irradiance)

    def test_identity_at_reference(self, g173):
        shape = normalize(g173)
        out = scale(shape, shape.reference_total)
        nz = g173.irradiance > 0
        assert _rel(out.irradiance[nz], g173.irradiance[nz]) < 1e-12

    @pytest.mark.parametrize("E", [100.0, 500.0, 900.0])
    def test_reintegrates_to_E(self, g173, E):
        assert integrate(scale(normalize(g173), E)) == pytest.approx(E, abs=1e-6)

    def test_negative_E(self, g173):
        with pytest.raises(ValueError):
            scale(normalize(g173), -1.0)

    def test_immutable(self, g173):
        with pytest.raises(ValueError):
            g173.irradiance[0] = 1.0

    @settings(max_examples=100)
    @given(_positive_spectra())
    def test_unit_area_property(self, s):
        shape = normalize(s)
        assert integrate(SpectrumTable(shape.wavelength, shape.density)) == pytest.approx(1.0, rel=1e-9)

    @settings(max_examples=100)
    @given(_positive_spectra(), st.floats(0.0, 2000.0), st.floats(0.0, 2000.0))
    def test_linearity(self, s, a, b):
        f = normalize(s)
        np.testing.assert_allclose(scale(f, a + b).irradiance, scale(f, a).irradiance + scale(f, b).irradiance, rtol=1e-12, atol=1e-300)

    @settings(max_examples=100)
    @given(_positive_spectra(), st.floats(1e-3, 1e4))
    def test_shape_preserved(self, s, E):
        f = normalize(s)
        np.testing.assert_allclose(normalize(scale(f, E)).density, f.density, rtol=1e-12, atol=0)


class TestRescale:
    def test_identity(self, g173):
        out = rescale_by_ratio(g173, integrate(g173))
        np.testing.assert_allclose(out.irradiance, g173.irradiance, rtol=1e-12, atol=0)

    def test_halving(self, g173):
        out = rescale_by_ratio(g173, integrate(g173) / 2)
        np.testing.assert_allclose(out.irradiance, g173.irradiance / 2, rtol=1e-12, atol=0)

    @pytest.mark.parametrize("E", [100.0, 500.0, 900.0])
    def test_matches_scale_of_normalize(self, g173, E):
        a = rescale_by_ratio(g173, E).irradiance
        b = scale(normalize(g173), E).irradiance
        nz = b > 0
        assert _rel(a[nz], b[nz]) < 1e-12


class TestOpticalDepth:
    def test_no_attenuation(self):
        assert effective_optical_depth(700.0, 700.0) == 0.0

    def test_one_e_fold(self):
        assert effective_optical_depth(700.0 / math.e, 700.0) == pytest.approx(1.0, rel=1e-15)

    @pytest.mark.parametrize("args", [(0.0, 1.0), (1.0, 0.0), (-1.0, 5.0)])
    def test_invalid(self, args):
        with pytest.raises(ValueError):
            effective_optical_depth(*args)

    @pytest.mark.parametrize("E", [100.0, 500.0, 900.0, 1200.0])
    def test_beer_lambert(self, g173, E):
        tau = effective_optical_depth(E, integrate(g173))
        bl = g173.irradiance * math.exp(-tau)
        out = rescale_by_ratio(g173, E).irradiance
        nz = bl > 0
        assert _rel(out[nz], bl[nz]) < 1e-12
