"""Exhaustive checks at small n.

The extremal statement is asymptotic.  At small n some K_{2,t}-minor-free
graph can beat every family member; K_4 minus an edge does so at n = 4,
t = 3.  Restricted to apex graphs with Delta(H) < t, the exhaustive winner
is already a family member.
"""

import time

from k2tspread import compare_family_optimum, max_spread_apex, max_spread_minor_free, to_graph6
from k2tspread.search import family_member_ell, family_threshold

for n, t in [(5, 2), (6, 2), (7, 2), (4, 3), (6, 3), (7, 3)]:
    t0 = time.perf_counter()
    g, s = max_spread_minor_free(n, t)
    fam = compare_family_optimum(n, t)
    tag = "family member" if family_member_ell(g, t) is not None else f"beats family by {s - fam:.4f}"
    print(f"all minor-free, n={n} t={t}: {to_graph6(g):8s} S={s:.6f}  ({tag}, {time.perf_counter() - t0:.1f}s)")

for n, t in [(10, 3), (11, 3)]:
    r = max_spread_apex(n, t)
    print(f"apex class,     n={n} t={t}: winner is G_l with l={family_member_ell(r.graph, t)} "
          f"after {r.evaluated} classes")

print("\nsmallest n0 <= 300 from which the family argmax equals l0:")
print({t: family_threshold(t, 300) for t in range(2, 13)})
