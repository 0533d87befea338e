"""Searches that test the extremal claims where they can be checked.

* ``scan_family``: spreads of G_l over a range of l from the exact cubic.
* ``max_spread_minor_free``: every K_{2,t}-minor-free graph on n <= 8
  vertices, up to isomorphism.
* ``max_spread_apex``: graphs K_1 v H with max degree of H below t,
  exhaustively for n <= 12 and by hill climbing beyond.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .family import ell_star, is_tie_case, spread_exact
from .graph import (
    Graph,
    canonical_form,
    complete_bipartite,
    iter_bits,
    join,
    make_complete,
    make_empty,
    write_graph6_file,
)
from .minor import BudgetExhausted, find_minor
from .spectral import spread

log = logging.getLogger(__name__)

TIE_TOL = 1e-10
MAX_EXHAUSTIVE_N = 8
MAX_APEX_EXHAUSTIVE_N = 12


@dataclass(frozen=True)
class ScanRow:
    ell: int
    spread: float
    is_argmax: bool


def scan_family(n: int, t: int, ell_lo: int | None = None, ell_hi: int | None = None) -> list[ScanRow]:
    """Exact spreads of G_l for ell_lo <= l <= ell_hi with the maximisers flagged.

    Every l within TIE_TOL of the best spread is flagged.
    """
    top = (n - 1) // t
    lo = 0 if ell_lo is None else ell_lo
    hi = top if ell_hi is None else ell_hi
    if not 0 <= lo <= hi <= top:
        raise ValueError(f"need 0 <= l_lo <= l_hi <= {top}, got [{lo}, {hi}]")
    values = [spread_exact(n, t, ell) for ell in range(lo, hi + 1)]
    best = max(values)
    return [
        ScanRow(ell, s, best - s <= TIE_TOL) for ell, s in zip(range(lo, hi + 1), values)
    ]


def argmax_ells(rows: Iterable[ScanRow]) -> list[int]:
    return [r.ell for r in rows if r.is_argmax]


def family_threshold(t: int, n_max: int) -> int | None:
    """Smallest n0 <= n_max with argmax_l S(G_l) = {l0} (or the tie pair) for
    every n in [n0, n_max]; None if the match fails at n_max itself.
    """
    n0 = None
    for n in range(n_max, t, -1):
        try:
            ell0 = ell_star(n, t)
        except ValueError:
            break
        expected = [ell0 - 1, ell0] if is_tie_case(n, t) else [ell0]
        if argmax_ells(scan_family(n, t)) != expected:
            break
        n0 = n
    return n0


# ----------------------------------------------------- graph enumeration

def _extensions(G: Graph) -> Iterable[Graph]:
    n = G.n
    for mask in range(1 << n):
        rows = [row | (1 << n) if mask >> v & 1 else row for v, row in enumerate(G.adj)]
        rows.append(mask)
        yield Graph(n + 1, tuple(rows))


class MinorFreeFilter:
    """Picklable vertex-deletion-closed test: no K_{2,t} minor, optionally
    after joining an apex and with a cap on the maximum degree.

    In apex mode the apex is a cut vertex between the components of H and
    K_{2,t} is 2-connected, so each K_1 v C is tested on its own and the
    verdict cached by the canonical code of C.
    """

    def __init__(self, t: int, budget: int, apex: bool = False, max_degree: int | None = None):
        self.t = t
        self.budget = budget
        self.apex = apex
        self.max_degree = max_degree
        self._cache: dict[tuple[int, int], bool] = {}

    def quick(self, G: Graph) -> bool:
        return self.max_degree is None or G.max_degree() <= self.max_degree

    def _free(self, G: Graph) -> bool:
        return find_minor(G, complete_bipartite(2, self.t), self.budget) is None

    def __call__(self, G: Graph) -> bool:
        if not self.quick(G):
            return False
        if not self.apex:
            return self._free(G)
        for comp in G.components():
            if comp.bit_count() < 2:
                continue
            C = G.induced(iter_bits(comp))
            key = (C.n, canonical_form(C)[0])
            if key not in self._cache:
                self._cache[key] = self._free(join(make_complete(1), C))
            if not self._cache[key]:
                return False
        return True


def hereditary_classes(n: int, keep: Callable[[Graph], bool], workers: int = 1) -> dict[int, Graph]:
    """Isomorphism classes on ``n`` vertices whose induced subgraphs all pass ``keep``.

    Built by vertex augmentation: each class on k+1 vertices arises from a
    class on k vertices by adding one vertex with some neighbourhood, so
    ``keep`` must be closed under vertex deletion.  Keys are canonical codes,
    values are in canonical labelling.  With ``workers > 1`` the ``keep``
    calls run in a process pool; the result does not depend on it.  A
    ``keep.quick`` method, if present, screens extensions before they are
    canonised.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    quick = getattr(keep, "quick", None)
    level = {0: make_empty(1)} if keep(make_empty(1)) else {}
    for _ in range(1, n):
        fresh: dict[int, Graph] = {}
        for G in level.values():
            for X in _extensions(G):
                if quick is not None and not quick(X):
                    continue
                code, perm = canonical_form(X)
                if code not in fresh:
                    fresh[code] = X.relabel(list(perm))
        codes = sorted(fresh)
        todo = [fresh[c] for c in codes]
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                verdicts = list(pool.map(keep, todo, chunksize=64))
        else:
            verdicts = [keep(X) for X in todo]
        level = {c: X for c, X, ok in zip(codes, todo, verdicts) if ok}
    return level


@dataclass(frozen=True)
class SearchResult:
    graph: Graph
    spread: float
    complete: bool  # False when a budget cut the search short
    evaluated: int


def _pick_best(cands: list[tuple[int, Graph, float]]) -> tuple[int, Graph, float]:
    best = max(s for _, _, s in cands)
    return min((c for c in cands if best - c[2] <= TIE_TOL), key=lambda c: c[0])


def minor_free_graphs(n: int, t: int, budget: int = 10 ** 7, workers: int = 1) -> list[Graph]:
    """All K_{2,t}-minor-free graphs on n <= 8 vertices, one per isomorphism class,
    in canonical labelling, sorted by canonical code."""
    if n > MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE_N}")
    if n < 1:
        raise ValueError("need n >= 1")
    classes = hereditary_classes(n, MinorFreeFilter(t, budget), workers)
    return [classes[c] for c in sorted(classes)]


def max_spread_minor_free(
    n: int,
    t: int,
    budget: int = 10 ** 7,
    workers: int = 1,
    dump_path=None,
) -> tuple[Graph, float]:
    """Maximum spread over all K_{2,t}-minor-free graphs on n <= 8 vertices.

    Among maximisers (within TIE_TOL) the one with the least canonical code
    is returned, in its canonical labelling.  ``dump_path`` receives every
    maximiser in graph6.
    """
    graphs = minor_free_graphs(n, t, budget, workers)
    cands = [(canonical_form(G)[0], G, spread(G)) for G in graphs]
    code, G, s = _pick_best(cands)
    if dump_path is not None:
        write_graph6_file(dump_path, [g for _, g, v in sorted(cands, key=lambda c: c[0]) if s - v <= TIE_TOL])
    return G, s


# ------------------------------------------------------------ apex search

def family_member_ell(G: Graph, t: int) -> int | None:
    """l if G is isomorphic to G_l (apex at any position), else None."""
    apexes = [v for v in range(G.n) if G.degree(v) == G.n - 1]
    for apex in apexes:
        H = G.remove_vertex(apex)
        ell = 0
        ok = True
        for comp in H.components():
            size = comp.bit_count()
            if size == 1:
                continue
            if size != t or any((H.adj[v] & comp).bit_count() != t - 1 for v in iter_bits(comp)):
                ok = False
                break
            ell += 1
        if ok:
            return ell
    return None


def _apex_graph(H: Graph) -> Graph:
    return join(make_complete(1), H)


def max_spread_apex(
    n: int,
    t: int,
    budget: int = 20000,
    exhaustive: bool | None = None,
    seed: int = 0,
    minor_budget: int = 10 ** 6,
) -> SearchResult:
    """Best spread over K_1 v H with Delta(H) <= t-1 and no K_{2,t} minor.

    Exhaustive over isomorphism classes of H when n <= 12 (default there);
    otherwise hill climbing over single edge flips of H from the star, with
    ``budget`` spread evaluations and random restarts.  A flip whose minor
    check exceeds ``minor_budget`` nodes is rejected.
    """
    if n < 2 or t < 2:
        raise ValueError("need n >= 2 and t >= 2")
    if exhaustive is None:
        exhaustive = n <= MAX_APEX_EXHAUSTIVE_N
    if exhaustive and n > MAX_APEX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive apex search is limited to n <= {MAX_APEX_EXHAUSTIVE_N}")
    if exhaustive:
        classes = hereditary_classes(n - 1, MinorFreeFilter(t, minor_budget, apex=True, max_degree=t - 1))
        cands = []
        for H in classes.values():
            G = _apex_graph(H)
            cands.append((canonical_form(G)[0], G, spread(G)))
        _, G, s = _pick_best(cands)
        return SearchResult(G, s, True, len(cands))
    return _hill_climb(n, t, budget, seed, minor_budget)


def _hill_climb(n: int, t: int, budget: int, seed: int, minor_budget: int) -> SearchResult:
    rng = random.Random(seed)
    keep = MinorFreeFilter(t, minor_budget, apex=True, max_degree=t - 1)
    m = n - 1
    pairs = [(u, v) for u in range(m) for v in range(u + 1, m)]
    best_H = make_empty(m)
    best_s = spread(_apex_graph(best_H))
    evaluated = 1

    def flip(H: Graph, u: int, v: int) -> Graph:
        rows = list(H.adj)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return Graph(m, tuple(rows))

    def feasible(H: Graph) -> bool:
        try:
            return keep(H)
        except BudgetExhausted:
            return False

    H, s = best_H, best_s
    while evaluated < budget:
        improved = False
        rng.shuffle(pairs)
        for u, v in pairs:
            if evaluated >= budget:
                break
            cand = flip(H, u, v)
            if not feasible(cand):
                continue
            cs = spread(_apex_graph(cand))
            evaluated += 1
            if cs > s + TIE_TOL:
                H, s = cand, cs
                improved = True
                break
        if s > best_s + TIE_TOL:
            best_H, best_s = H, s
        if not improved:
            # local optimum: restart from a few random feasible flips of the best
            H = best_H
            for _ in range(rng.randint(1, max(1, m // 2))):
                u, v = rng.choice(pairs)
                cand = flip(H, u, v)
                if feasible(cand):
                    H = cand
            s = spread(_apex_graph(H))
            evaluated += 1
    log.info("hill climb stopped after %d evaluations, best spread %.12f", evaluated, best_s)
    return SearchResult(_apex_graph(best_H), best_s, False, evaluated)


def compare_family_optimum(n: int, t: int) -> float:
    """max over feasible l of spread_exact(n, t, l)."""
    return max(spread_exact(n, t, ell) for ell in range((n - 1) // t + 1))
