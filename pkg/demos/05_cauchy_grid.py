"""
The discrete Cauchy equation
============================

Pin g(0) = 0 and g(1) = 1 on the grid k/m and ask for g_i + g_j = g_{i+j}.
Least squares returns exactly the linear function, the discrete analogue of
the bounded solution of f(x) + f(z) = f(x + z).
"""
import numpy as np

from blochgleason import cauchy_grid_solve

for m in (2, 4, 8, 16, 32):
    g = cauchy_grid_solve(m)
    dev = np.max(np.abs(g - np.arange(-m, m + 1) / m))
    print(f"m={m:2d}: max deviation from k/m = {dev:.2e}")

print(cauchy_grid_solve(4))
