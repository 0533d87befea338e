"""Which member of the family K_1 v (l K_t u isolated vertices) has the largest spread?

For fixed n and t the spread of G_l is the distance between the outer roots
of a cubic.  Scanning l shows a single peak, and the peak sits at
l0 = floor((2n + xi_t) / 3t).
"""

from k2tspread import argmax_ells, ell_star, extremal_graph, scan_family, spread, spread_exact, xi

print("xi_t for t = 2..20:", [xi(t) for t in range(2, 21)])

n, t = 400, 5
rows = scan_family(n, t)
peak = argmax_ells(rows)
print(f"\nn={n}, t={t}: argmax over l is {peak}, formula gives l0 = {ell_star(n, t)}")
for r in rows[max(0, peak[0] - 3): peak[0] + 4]:
    mark = "  <- max" if r.is_argmax else ""
    print(f"  l={r.ell:3d}  S={r.spread:.12f}{mark}")

# the cubic route and a dense eigensolve agree
g = extremal_graph(n, t, peak[0])
print(f"\ndense eigensolver: {spread(g):.12f}, cubic: {spread_exact(n, t, peak[0]):.12f}")
