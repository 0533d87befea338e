"""The spread of an apex graph K_1 v H from walk counts in H.

Four terms of the expansion in 1/sqrt(n-1) leave an error of order
n^(-7/2): doubling n should shrink the residual by about 2^-3.5 = 0.088.
The residuals drop below double precision, so they are computed in mpmath.
"""

import mpmath

from k2tspread import expansion_residuals

rows = expansion_residuals(3, [200 * 2 ** i for i in range(7)], dps=60)
prev = None
with mpmath.workdps(60):
    for n, ell, r in rows:
        ratio = "" if prev is None else f"{float(r / prev):.4f}"
        print(f"n={n:6d}  l0={ell:5d}  residual={mpmath.nstr(r, 6):>12}  ratio={ratio}")
        prev = r
print(f"target ratio 2^-3.5 = {2 ** -3.5:.4f}")
