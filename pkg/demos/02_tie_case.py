"""When t = 12k + 4 and 3t divides 2n + xi_t, two family members tie.

The depressed cubics of G_{l0} and G_{l0-1} are x^3 + p x + q and
x^3 + p x - q, so one root set is the negation of the other and the
spreads coincide exactly.
"""

from k2tspread import depressed_cubic, extremal_graph, scan_family, spread, tie_params

for k in range(3):
    t, eta_t, n = tie_params(k, 6)
    c1, c2 = depressed_cubic(n, t, 6), depressed_cubic(n, t, 5)
    print(f"k={k}: t={t}, n={n}, eta={eta_t}:  x^3 {c1.p}x {int(c1.q):+d}  vs  x^3 {c2.p}x {int(c2.q):+d}")

n, t = 59, 4
flagged = [r for r in scan_family(n, t) if r.is_argmax]
print(f"\nscan at n={n}, t={t}: maximisers {[r.ell for r in flagged]}")
print("dense spreads:", [round(spread(extremal_graph(n, t, r.ell)), 13) for r in flagged])
