"""Adjacency spectra, spreads and the closed forms used to check them."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

DEFAULT_TOL = 1e-10


class EigensolverError(RuntimeError):
    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray  # descending
    max_residual: float

    @property
    def lambda1(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def lambda_n(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def spread(self) -> float:
        return self.lambda1 - self.lambda_n


def spectrum(G: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    """All adjacency eigenvalues of ``G`` with a residual certificate.

    LAPACK's symmetric driver (Householder tridiagonalisation followed by a
    tridiagonal QR/QL solve) does the work; the certificate is the largest
    ``||A v - lambda v||_2`` over the returned unit eigenvectors.
    """
    if G.n < 1:
        raise ValueError("spectrum of the null graph is undefined")
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = G.adjacency_matrix()
    w, V = np.linalg.eigh(A)
    R = A @ V - V * w
    residual = float(np.max(np.linalg.norm(R, axis=0)))
    if not residual <= tol:
        raise EigensolverError(
            f"eigensolver residual {residual:.3e} exceeds tolerance {tol:.3e}", residual
        )
    return Spectrum(w[::-1].copy(), residual)


def spread(G: Graph, tol: float = DEFAULT_TOL) -> float:
    return spectrum(G, tol).spread


def join_regular_spectrum(eigs_g, k: float, eigs_h, ell: float) -> np.ndarray:
    """Spectrum of G v H for a k-regular G and an ell-regular H.

    ``eigs_g`` and ``eigs_h`` are the full spectra sorted descending.  The
    two Perron eigenvalues are replaced by the roots of
    ``(x - k)(x - ell) = m * n`` where m, n are the orders.
    """
    eg = np.sort(np.asarray(eigs_g, dtype=float))[::-1]
    eh = np.sort(np.asarray(eigs_h, dtype=float))[::-1]
    if abs(eg[0] - k) > 1e-9 or abs(eh[0] - ell) > 1e-9:
        raise ValueError("leading eigenvalue must equal the regularity degree")
    m, n = len(eg), len(eh)
    # x^2 - (k + ell) x + (k ell - m n) = 0
    b = k + ell
    disc = math.sqrt((k - ell) ** 2 + 4 * m * n)
    roots = [(b + disc) / 2, (b - disc) / 2]
    out = np.concatenate([eg[1:], eh[1:], roots])
    return np.sort(out)[::-1]


def spread_closed_form(q: int, t: int) -> float:
    """sqrt(4qt + t^2 - 2t + 1), the spread of K_1 v qK_t for q >= 1.

    At q = 0 this evaluates to t - 1, which is not the spread of K_1.
    """
    return math.sqrt(4 * q * t + t * t - 2 * t + 1)


def rayleigh(G: Graph, w) -> float:
    w = np.asarray(w, dtype=float)
    if w.shape != (G.n,):
        raise ValueError(f"vector must have length {G.n}")
    ww = float(w @ w)
    if ww == 0:
        raise ValueError("Rayleigh quotient of the zero vector")
    num = 2.0 * sum(w[u] * w[v] for u, v in G.edges())
    return num / ww


def nikiforov_bound(n: int, t: int) -> float:
    """Upper bound (t-1)/2 + sqrt(n + (t^2-2t-3)/4) on the spectral radius.

    Proven only for n >= 400 t^6; evaluated here without that check.
    """
    return (t - 1) / 2 + math.sqrt(n + (t * t - 2 * t - 3) / 4)
