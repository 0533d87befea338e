"""Exact arithmetic for the family G_l = K_1 v (l K_t  u  (n-1-lt) K_1).

Everything up to the root extraction is integer or Fraction arithmetic.
Roots come from the trigonometric formula, in float by default or in
mpmath at a requested number of decimal digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath


def _floor(x: Fraction) -> int:
    return math.floor(x)


def xi(t: int) -> int:
    """Offset xi_t in l0 = floor((2n + xi_t) / 3t)."""
    if t < 2:
        raise ValueError("xi_t is defined for t >= 2")
    if t % 2 == 0:
        return 2 * eta(t)
    return _floor(Fraction(3 * t, 2) - 2 - Fraction(2 * (t - 1) ** 2, 9))


def eta(t: int) -> int:
    if t < 2 or t % 2:
        raise ValueError("eta_t is defined for even t >= 2")
    return _floor(Fraction(3 * t, 4) - 1 - Fraction((t - 1) ** 2, 9))


def ell_star(n: int, t: int) -> int:
    """The optimal clique count floor((2n + xi_t) / 3t)."""
    ell0 = (2 * n + xi(t)) // (3 * t)
    if ell0 < 0 or ell0 * t > n - 1:
        raise ValueError(f"l0 = {ell0} is infeasible for n={n}, t={t}")
    return ell0


def ell_one(n: int, t: int) -> Fraction:
    """Real maximiser 2(n-1)/(3t) of the second-order coefficient."""
    return Fraction(2 * (n - 1), 3 * t)


def is_tie_case(n: int, t: int) -> bool:
    return t % 12 == 4 and (2 * n + xi(t)) % (3 * t) == 0


def _check_feasible(n: int, t: int, ell: int) -> None:
    if t < 2:
        raise ValueError("clique size t must be >= 2")
    if n < 1 or ell < 0 or ell * t > n - 1:
        raise ValueError(f"infeasible family parameters n={n}, t={t}, l={ell}")


@dataclass(frozen=True)
class ExtremalParams:
    n: int
    t: int
    ell: int
    xi: int = field(init=False)
    eta: int | None = field(init=False)
    ell0: int = field(init=False)
    ell1: Fraction = field(init=False)

    def __post_init__(self):
        _check_feasible(self.n, self.t, self.ell)
        object.__setattr__(self, "xi", xi(self.t))
        object.__setattr__(self, "eta", eta(self.t) if self.t % 2 == 0 else None)
        object.__setattr__(self, "ell0", ell_star(self.n, self.t))
        object.__setattr__(self, "ell1", ell_one(self.n, self.t))


def char_cubic(n: int, t: int, ell: int) -> tuple[int, int, int, int]:
    """Monic cubic whose roots contain the extreme eigenvalues of G_l."""
    _check_feasible(n, t, ell)
    return (1, -(t - 1), -(n - 1), (t - 1) * (n - 1 - ell * t))


@dataclass(frozen=True)
class DepressedCubic:
    """x^3 + p x + q."""

    p: Fraction
    q: Fraction

    @property
    def discriminant(self) -> Fraction:
        return -4 * self.p ** 3 - 27 * self.q ** 2

    def __call__(self, x):
        return x ** 3 + self.p * x + self.q


def depress(coeffs) -> DepressedCubic:
    """Shift a monic cubic x^3 + b x^2 + c x + d by x -> x - b/3."""
    a, b, c, d = (Fraction(v) for v in coeffs)
    if a != 1:
        raise ValueError("cubic must be monic")
    p = c - b * b / 3
    q = 2 * b ** 3 / 27 - b * c / 3 + d
    return DepressedCubic(p, q)


def depressed_cubic(n: int, t: int, ell: int) -> DepressedCubic:
    """Characteristic cubic of G_l under lambda = x + (t-1)/3."""
    return depress(char_cubic(n, t, ell))


def _mpf(x) -> mpmath.mpf:
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def solve_depressed_cubic(c: DepressedCubic, dps: int | None = None) -> tuple:
    """Three real roots of x^3 + p x + q, largest first.

    With ``dps`` set the roots are mpmath numbers at that precision,
    otherwise floats.  A discriminant below ``-1e-9 * (4|p|^3 + 27 q^2)``
    means complex roots and is rejected.
    """
    p, q = Fraction(c.p), Fraction(c.q)
    scale = 4 * abs(p) ** 3 + 27 * q * q
    if c.discriminant < -Fraction(1, 10 ** 9) * scale:
        raise ValueError(f"cubic x^3 + ({p})x + ({q}) has complex roots")
    if p == 0:
        # the discriminant test leaves only q == 0 here
        return (mpmath.mpf(0),) * 3 if dps is not None else (0.0, 0.0, 0.0)

    if dps is None:
        pf, qf = float(p), float(q)
        arg = 3 * qf / (2 * pf) * math.sqrt(-3 / pf)
        if abs(arg) > 1:
            if abs(arg) - 1 > 1e-12:
                raise ValueError(f"acos argument {arg!r} outside [-1, 1]")
            arg = math.copysign(1.0, arg)
        theta = math.acos(arg)
        r = 2 * math.sqrt(-pf / 3)
        roots = [r * math.cos(theta / 3 - 2 * math.pi * j / 3) for j in range(3)]
        return tuple(sorted(roots, reverse=True))

    with mpmath.workdps(dps):
        pm, qm = _mpf(p), _mpf(q)
        arg = 3 * qm / (2 * pm) * mpmath.sqrt(-3 / pm)
        if abs(arg) > 1:
            if abs(arg) - 1 > mpmath.mpf(10) ** -12:
                raise ValueError(f"acos argument {arg} outside [-1, 1]")
            arg = mpmath.sign(arg)
        theta = mpmath.acos(arg)
        r = 2 * mpmath.sqrt(-pm / 3)
        roots = [r * mpmath.cos(theta / 3 - 2 * mpmath.pi * j / 3) for j in range(3)]
        return tuple(sorted(roots, reverse=True))


def char_roots(n: int, t: int, ell: int, dps: int | None = None) -> tuple:
    """Roots of the characteristic cubic in the lambda variable, largest first."""
    shift = Fraction(t - 1, 3)
    xs = solve_depressed_cubic(depressed_cubic(n, t, ell), dps)
    if dps is None:
        return tuple(x + float(shift) for x in xs)
    with mpmath.workdps(dps):
        return tuple(x + _mpf(shift) for x in xs)


def spread_exact(n: int, t: int, ell: int, dps: int | None = None):
    """Spread of G_l as the largest minus smallest root of its cubic.

    At l = 0 the cubic factors as (lambda - t + 1)(lambda^2 - n + 1) and the
    linear factor belongs to no eigenvector of the star, so the spread is
    2 sqrt(n - 1) there.
    """
    if ell == 0:
        _check_feasible(n, t, ell)
        if dps is None:
            return 2 * math.sqrt(n - 1)
        with mpmath.workdps(dps):
            return 2 * mpmath.sqrt(n - 1)
    xs = solve_depressed_cubic(depressed_cubic(n, t, ell), dps)
    if dps is None:
        return xs[0] - xs[2]
    with mpmath.workdps(dps):
        return xs[0] - xs[2]


def tie_params(k: int, ell0: int) -> tuple[int, int, int]:
    """(t, eta_t, n) for the tie family t = 12k + 4 with optimum ell0."""
    t = 12 * k + 4
    eta_t = 1 + k - 16 * k * k
    n = 6 * (3 * k + 1) * ell0 + 16 * k * k - k - 1
    return t, eta_t, n


def tie_cubics(k: int, ell0: int) -> tuple[DepressedCubic, DepressedCubic]:
    """Closed-form depressed cubics of G_{l0} and G_{l0-1} in the tie family."""
    a = 6 * (3 * k + 1) * ell0 + 64 * k * k + 23 * k + 1
    b = 72 * k * k + 42 * k + 6
    return DepressedCubic(Fraction(-a), Fraction(-b)), DepressedCubic(Fraction(-a), Fraction(b))
