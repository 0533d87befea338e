"""Walk moments of an apex complement and the spread expansion they feed.

For a graph G with a dominating vertex u0 and H = G - u0, both extreme
eigenvalues satisfy lambda^2 = (n-1) + sum_k a_k / lambda^k with
a_k = 1' A_H^k 1.  Inverting that series gives

    S(G) = 2 sqrt(n-1) + 2 c2/(n-1)^(1/2) + 2 c4/(n-1)^(3/2) + 2 c6/(n-1)^(5/2) + O(n^-7/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F

import mpmath

from .family import _check_feasible, _mpf, ell_star, spread_exact
from .graph import Graph, iter_bits

KMAX = 6


@dataclass(frozen=True)
class WalkMoments:
    a: tuple[int, ...]  # a[0] is a_1
    nH: int

    def __getitem__(self, k: int) -> int:
        """1-based access: ``m[k]`` is a_k."""
        if k < 1:
            raise IndexError("walk moments start at a_1")
        return self.a[k - 1]


def walk_moments(H: Graph, kmax: int = KMAX) -> WalkMoments:
    """Exact walk counts a_k = 1' A_H^k 1 for k = 1..kmax."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    nbrs = [list(iter_bits(row)) for row in H.adj]
    w = [1] * H.n
    a = []
    for _ in range(kmax):
        w = [sum(w[u] for u in nb) for nb in nbrs]
        a.append(sum(w))
    return WalkMoments(tuple(a), H.n)


def family_moments(n: int, t: int, ell: int, kmax: int = KMAX) -> WalkMoments:
    """Walk moments of l K_t plus isolated vertices: a_i = l t (t-1)^i."""
    _check_feasible(n, t, ell)
    return WalkMoments(tuple(ell * t * (t - 1) ** i for i in range(1, kmax + 1)), n - 1)


def _as_float(cs, exact):
    return cs if exact else tuple(float(c) for c in cs)


def c_coeffs(m: WalkMoments, n: int, exact: bool = False):
    """(c2, c4, c6) from the walk moments; Fractions when ``exact``."""
    if n < 2:
        raise ValueError("need n >= 2")
    if len(m.a) < 6:
        raise ValueError("c6 needs the moments a_1..a_6")
    a1, a2, a3, a4, a5, a6 = (F(m[k], n - 1) for k in range(1, 7))
    c2 = -F(3, 8) * a1 ** 2 + F(1, 2) * a2
    c4 = (
        -F(105, 128) * a1 ** 4
        + F(35, 16) * a1 ** 2 * a2
        - F(5, 8) * a2 ** 2
        - F(5, 4) * a1 * a3
        + F(1, 2) * a4
    )
    c6 = (
        -F(3003, 1024) * a1 ** 6
        + F(3003, 256) * a1 ** 4 * a2
        - F(693, 64) * a1 ** 2 * a2 ** 2
        + F(21, 16) * a2 ** 3
        - F(21, 32) * (11 * a1 ** 3 - 12 * a1 * a2) * a3
        - F(7, 8) * a3 ** 2
        + F(7, 16) * (9 * a1 ** 2 - 4 * a2) * a4
        - F(7, 4) * a1 * a5
        + F(1, 2) * a6
    )
    return _as_float((c2, c4, c6), exact)


def c_coeffs_family(n: int, t: int, ell: int, exact: bool = False):
    """(c2, c4, c6) of G_l written as polynomials in l."""
    _check_feasible(n, t, ell)
    N = n - 1
    s = t - 1
    ell = F(ell)
    c2 = -F(3, 8) * F(t ** 2 * s ** 2, N ** 2) * ell ** 2 + F(1, 2) * F(t * s ** 2, N) * ell
    c4 = (
        -F(105, 128) * F(t ** 4 * s ** 4, N ** 4) * ell ** 4
        + F(35, 16) * F(t ** 3 * s ** 4, N ** 3) * ell ** 3
        - F(15, 8) * F(t ** 2 * s ** 4, N ** 2) * ell ** 2
        + F(1, 2) * F(t * s ** 4, N) * ell
    )
    c6 = (
        -F(3003, 1024) * F(t ** 6 * s ** 6, N ** 6) * ell ** 6
        + F(3003, 256) * F(t ** 5 * s ** 6, N ** 5) * ell ** 5
        - F(1155, 64) * F(t ** 4 * s ** 6, N ** 4) * ell ** 4
        + F(105, 8) * F(t ** 3 * s ** 6, N ** 3) * ell ** 3
        - F(35, 8) * F(t ** 2 * s ** 6, N ** 2) * ell ** 2
        + F(1, 2) * F(t * s ** 6, N) * ell
    )
    return _as_float((c2, c4, c6), exact)


def _truncated_series(c2, c4, c6, n: int, dps: int | None):
    if dps is None:
        r = (n - 1) ** 0.5
        return 2 * r + 2 * float(c2) / r + 2 * float(c4) / r ** 3 + 2 * float(c6) / r ** 5
    with mpmath.workdps(dps):
        r = mpmath.sqrt(n - 1)
        return 2 * r + 2 * _mpf(c2) / r + 2 * _mpf(c4) / r ** 3 + 2 * _mpf(c6) / r ** 5


def spread_approx(H: Graph, n: int, dps: int | None = None):
    """Four-term expansion of S(K_1 v H); ``H`` must have n - 1 vertices."""
    if H.n != n - 1:
        raise ValueError(f"apex complement must have n-1 = {n - 1} vertices, got {H.n}")
    c2, c4, c6 = c_coeffs(walk_moments(H), n, exact=True)
    return _truncated_series(c2, c4, c6, n, dps)


def spread_approx_family(n: int, t: int, ell: int, dps: int | None = None):
    c2, c4, c6 = c_coeffs_family(n, t, ell, exact=True)
    return _truncated_series(c2, c4, c6, n, dps)


def family_difference_leading(n: int, t: int, ell: int, dps: int | None = None):
    """Leading term of S(G_{l+1}) - S(G_l), without its O((n-1)^-3) error."""
    _check_feasible(n, t, ell + 1)
    bracket = F(ell) + F(1, 2) - F(2 * (n - 1), 3 * t) + F(2 * (t - 1) ** 2, 27 * t)
    coef = F(3 * t * t * (t - 1) ** 2, 2)
    if dps is None:
        return -float(coef) * float(bracket) / (n - 1) ** 2.5
    with mpmath.workdps(dps):
        return -_mpf(coef) * _mpf(bracket) / mpmath.mpf(n - 1) ** mpmath.mpf(2.5)


def expansion_residuals(t: int, n_values, dps: int = 60) -> list[tuple[int, int, mpmath.mpf]]:
    """(n, l0, |S_exact - S_approx|) at l = l0(n) for each n, in ``dps`` digits.

    The residuals fall below double precision quickly, hence mpmath.
    """
    rows = []
    with mpmath.workdps(dps):
        for n in n_values:
            ell = ell_star(n, t)
            exact = spread_exact(n, t, ell, dps=dps)
            approx = spread_approx_family(n, t, ell, dps=dps)
            rows.append((n, ell, abs(exact - approx)))
    return rows
