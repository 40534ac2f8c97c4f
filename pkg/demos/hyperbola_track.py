"""The maximum point travels along a hyperbola.

x*(t) G*(t) = c m is independent of t, so in the (x, G) plane the
maximum traces x G = const.  The product c m itself grows monotonically
with the order: small near diffusion (the maximum hugs the origin with
finite height, c -> 0), large near the wave endpoint (m blows up).
"""

import numpy as np

from fracwave import hyperbola_track, product_constant

nu = 0.8
ts = np.geomspace(0.25, 64.0, 9)
print(f"order nu = {nu}")
print("      t         x*(t)        G*(t)     x* G*")
for t, (x_star, g_star) in zip(ts, hyperbola_track(nu, ts)):
    print(f"{t:9.2f} {x_star:12.6f} {g_star:12.6f}"
          f" {x_star * g_star:10.6f}")
print(f"product_constant({nu}) = {product_constant(nu):.10f}")

print()
print("the constant across orders:")
for nu in (0.55, 0.65, 0.75, 0.85, 0.95):
    print(f"  nu={nu}: c m = {product_constant(nu):.6f}")
