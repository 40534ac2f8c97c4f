"""The moving maximum: location, height, speed.

For orders strictly between diffusion and wave the kernel's maximum
sits at x*(t) = c t^nu with height G*(t) = m t^-nu.  This walks the
order range and prints c, m and the certified tolerances, then shows
the speed v(t) = nu c t^(nu-1) crossing the wave speed 1: faster than
the wave pulse early, slower late.
"""

import numpy as np

from fracwave import coefficients, max_location_coeff, propagation_speed

print("order      c (location)   m (height)      c_tol      m_tol")
for nu in np.arange(0.55, 0.991, 0.05):
    co = coefficients(round(float(nu), 2))
    print(f"{nu:5.2f} {co.c:14.8f} {co.m:12.8f} {co.c_tol:10.1e}"
          f" {co.m_tol:10.1e}")
print(f"endpoints: c = {max_location_coeff(0.5)} at nu = 0.5,"
      f" c = {max_location_coeff(1.0)} at nu = 1")

print()
print("speed of the maximum, v(t) = nu c t^(nu-1):")
ts = np.geomspace(1e-12, 1e12, 9)
header = "nu \\ t " + "".join(f"{t:9.0e}" for t in ts)
print(header)
for nu in (0.6, 0.75, 0.9):
    row = f"{nu:5.2f}  "
    for t in ts:
        row += f"{propagation_speed(nu, float(t)):9.2e}"
    print(row)
print("the wave-endpoint speed is the constant 1; every interior order"
      " crosses it once")

# crossing times v(t) = 1, i.e. t = (nu c)^(1/(1-nu)); tiny for orders
# near 0.5 because the exponent blows up
print()
for nu in (0.55, 0.6, 0.75, 0.9):
    c = coefficients(nu).c
    t1 = (nu * c) ** (1.0 / (1.0 - nu))
    print(f"  nu={nu}: v(t) = 1 at t = {t1:.3e}")
