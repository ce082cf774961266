"""Scale the ASTM G-173 direct spectrum to a measured DNI.

The reference spectrum is normalized to unit area and multiplied by a DNI
value. Because the scaling is linear, this is the same as attenuating every
wavelength by exp(-tau) with a single wavelength-independent optical depth.
"""
import numpy as np

from solspec import effective_optical_depth, integrate, load_g173, normalize, scale

g173 = load_g173()  # direct + circumsolar, 280-2500 nm
E_std = integrate(g173)
print(f"{len(g173.wavelength)} points, band-integrated direct irradiance {E_std:.3f} W/m2")

shape = normalize(g173)
for dni in (100.0, 500.0, 900.0):
    spec = scale(shape, dni)
    tau = effective_optical_depth(dni, E_std)
    same = np.allclose(spec.irradiance, g173.irradiance * np.exp(-tau), rtol=1e-12, atol=0)
    peak = spec.wavelength[np.argmax(spec.irradiance)]
    print(f"DNI {dni:5.0f}: tau={tau:+.4f}  integral={integrate(spec):8.3f}  peak at {peak:.0f} nm  Beer-Lambert match={same}")
