"""Tour of the special-function layer with its error bounds.

Every evaluation returns (value, abs_err).  The bounds are meant to be
taken literally, so this demo checks them against closed forms where
closed forms exist.
"""

import math

from fracwave import mainardi_m, mainardi_m_prime, ml, wright, x_switch

print("E_1(-x) = exp(-x):")
for x in (0.5, 2.0, 10.0):
    res = ml(1.0, x)
    print(f"  x={x:5.1f}  value={res.value: .12e}  bound={res.abs_err:.1e}"
          f"  true diff={abs(res.value - math.exp(-x)):.1e}")

print("E_2(-x) = cos(sqrt(x)):")
for x in (2.0, 50.0, 400.0):
    res = ml(2.0, x)
    print(f"  x={x:5.0f}  value={res.value: .12e}  bound={res.abs_err:.1e}"
          f"  true diff={abs(res.value - math.cos(math.sqrt(x))):.1e}")

print("series/asymptotic handoff, x_switch(alpha) = 33^alpha:")
for alpha in (1.2, 1.5, 1.8):
    print(f"  alpha={alpha}: {x_switch(alpha):9.1f}")

print("M_{1/2}(r) = exp(-r^2/4)/sqrt(pi):")
for r in (0.0, 1.0, 3.0):
    res = mainardi_m(0.5, r)
    true = math.exp(-r * r / 4.0) / math.sqrt(math.pi)
    print(f"  r={r:4.1f}  value={res.value:.12e}"
          f"  true diff={abs(res.value - true):.1e}")

print("W(lam, mu, 0) = 1/Gamma(mu), n = 0 term only:")
for lam, mu in ((-0.75, 0.25), (-0.5, 0.0), (-0.25, 2.0)):
    res = wright(lam, mu, 0.0)
    print(f"  lam={lam:5.2f} mu={mu:4.2f}  value={res.value:.12f}")

# the derivative route is an independently reindexed series; a centered
# difference of M is a cheap cross-check
print("M'(nu, r) vs centered difference of M:")
h = 1e-6
for nu, r in ((0.6, 0.8), (0.75, 1.2)):
    d = mainardi_m_prime(nu, r).value
    fd = (mainardi_m(nu, r + h).value - mainardi_m(nu, r - h).value) / (2 * h)
    print(f"  nu={nu} r={r}:  M'={d: .10f}  fd={fd: .10f}"
          f"  diff={abs(d - fd):.1e}")
