"""Exact H-minor testing for small graphs by branch-set search.

A model of H in G assigns each vertex h of H a nonempty connected vertex set
X_h of G, pairwise disjoint, such that every edge hk of H is realised by some
G-edge between X_h and X_k.  The search places H's vertices one at a time,
enumerating connected candidate sets that touch the already placed
neighbours.  Exact, exponential, meant for graphs with a few dozen vertices
at most.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complete_bipartite, iter_bits

DEFAULT_BUDGET = 10 ** 8


class BudgetExhausted(RuntimeError):
    """The search ran out of nodes before reaching a verdict."""

    def __init__(self, nodes: int):
        super().__init__(f"minor search exhausted its budget after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class MinorModel:
    branch_sets: tuple[frozenset[int], ...]

    def is_valid(self, G: Graph, H: Graph) -> bool:
        if len(self.branch_sets) != H.n:
            return False
        masks = []
        seen = 0
        for X in self.branch_sets:
            mask = sum(1 << v for v in X)
            if not X or mask & seen or any(v < 0 or v >= G.n for v in X):
                return False
            if not _connected(G.adj, mask):
                return False
            seen |= mask
            masks.append(mask)
        for h, k in H.edges():
            if not any(G.adj[v] & masks[k] for v in iter_bits(masks[h])):
                return False
        return True


def _connected(adj, mask: int) -> bool:
    if not mask:
        return False
    start = mask & -mask
    comp = frontier = start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def _nbhd(adj, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= adj[v]
    return out & ~mask


def biconnected_blocks(G: Graph) -> list[int]:
    """Vertex sets (bitmasks) of the blocks of G, isolated vertices excluded."""
    adj = [list(iter_bits(row)) for row in G.adj]
    disc = [-1] * G.n
    low = [0] * G.n
    blocks = []
    clock = 0
    for root in range(G.n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = clock
                    clock += 1
                    stack.append((u, v, iter(adj[u])))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    mask = 0
                    while True:
                        a, b = edge_stack.pop()
                        mask |= (1 << a) | (1 << b)
                        if (a, b) == (parent, v):
                            break
                    blocks.append(mask)
    return blocks


def _is_biconnected(H: Graph) -> bool:
    if H.n < 3:
        return False
    blocks = biconnected_blocks(H)
    return len(blocks) == 1 and blocks[0] == (1 << H.n) - 1


def _connected_sets(adj, root: int, allowed: int, stop=None):
    """Connected subsets of ``allowed`` containing ``root``, each once.

    When ``stop(S)`` is true the subtree above ``S`` is not explored, so
    only sets all of whose proper ancestors fail ``stop`` come out.
    """
    def grow(S, ext, forb):
        yield S
        if stop is not None and stop(S):
            return
        while ext:
            low = ext & -ext
            ext ^= low
            forb |= low
            v = low.bit_length() - 1
            yield from grow(S | low, ext | (adj[v] & allowed & ~S & ~forb), forb)

    start = 1 << root
    yield from grow(start, adj[root] & allowed & ~start, start)


def _placement_order(H: Graph) -> list[int]:
    deg = H.degrees()
    order: list[int] = []
    placed = 0
    while len(order) < H.n:
        best = max(
            (v for v in range(H.n) if not placed >> v & 1),
            key=lambda v: ((H.adj[v] & placed).bit_count(), deg[v], -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


class _Search:
    def __init__(self, G: Graph, H: Graph, budget: int, nodes: int):
        self.adj = G.adj
        self.H = H
        self.budget = budget
        self.nodes = nodes
        self.order = _placement_order(H)
        pos = {h: i for i, h in enumerate(self.order)}
        self.earlier_nbrs = []
        self.later_count = []
        self.closing = []
        self.twin_prev = []
        for i, h in enumerate(self.order):
            nb = list(iter_bits(H.adj[h]))
            self.earlier_nbrs.append([pos[k] for k in nb if pos[k] < i])
            self.closing.append(all(pos[k] < i for k in nb))
            prev = -1
            for j in range(i - 1, -1, -1):
                k = self.order[j]
                if H.adj[h] & ~(1 << k) == H.adj[k] & ~(1 << h):
                    prev = j
                    break
            self.twin_prev.append(prev)
        # later_count[j][i]: H-neighbours of order[j] placed at positions >= i
        self.later_count = [
            [sum(1 for k in iter_bits(H.adj[self.order[j]]) if pos[k] >= i) for i in range(H.n + 1)]
            for j in range(H.n)
        ]

    def run(self, region: int):
        self.sets = [0] * self.H.n
        self.nbhds = [0] * self.H.n
        if self._place(0, region):
            return [self.sets[self.order.index(h)] for h in range(self.H.n)]
        return None

    def _candidates(self, i: int, avail: int):
        adj = self.adj
        earlier = self.earlier_nbrs[i]
        if not earlier:
            for r in iter_bits(avail):
                # r is the least vertex of the set
                yield from _connected_sets(adj, r, avail & ~((1 << r) - 1))
            return
        needs = [self.nbhds[j] for j in earlier]
        needs.sort(key=lambda m: (m & avail).bit_count())
        roots = needs[0] & avail
        rest = needs[1:]

        def touches_all(S):
            return all(S & m for m in rest)

        stop = touches_all if self.closing[i] else None
        done = 0
        for r in iter_bits(roots):
            for S in _connected_sets(adj, r, avail & ~done, stop):
                if touches_all(S):
                    yield S
            done |= 1 << r

    def _place(self, i: int, avail: int) -> bool:
        H = self.H
        if i == H.n:
            return True
        tp = self.twin_prev[i]
        floor_bit = self.sets[tp] & -self.sets[tp] if tp >= 0 else 0
        remaining = H.n - i - 1
        for S in self._candidates(i, avail):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExhausted(self.nodes)
            if (S & -S) <= floor_bit:
                continue
            left = avail & ~S
            if left.bit_count() < remaining:
                continue
            self.sets[i] = S
            self.nbhds[i] = _nbhd(self.adj, S)
            ok = True
            for j in range(i + 1):
                need = self.later_count[j][i + 1]
                if need and (self.nbhds[j] & left).bit_count() < need:
                    ok = False
                    break
            if ok and self._place(i + 1, left):
                return True
        return False


def find_minor(G: Graph, H: Graph, budget: int = DEFAULT_BUDGET) -> MinorModel | None:
    """A model of H in G, or None when H is not a minor of G.

    Raises BudgetExhausted if more than ``budget`` candidate branch sets are
    examined; that outcome says nothing about minor containment.
    """
    if H.n < 1:
        raise ValueError("H must have at least one vertex")
    if H.n > G.n or H.edge_count > G.edge_count:
        return None
    if H.edge_count == 0:
        return MinorModel(tuple(frozenset([v]) for v in range(H.n)))
    if _is_biconnected(H):
        # a 2-connected minor lives inside a single block
        regions = biconnected_blocks(G)
    elif len(H.components()) == 1:
        regions = G.components()
    else:
        regions = [(1 << G.n) - 1]
    nodes = 0
    for region in regions:
        if region.bit_count() < H.n:
            continue
        search = _Search(G, H, budget, nodes)
        found = search.run(region)
        nodes = search.nodes
        if found is not None:
            return MinorModel(tuple(frozenset(iter_bits(m)) for m in found))
    return None


def has_minor(G: Graph, H: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    return find_minor(G, H, budget) is not None


def is_k2t_minor_free(G: Graph, t: int, budget: int = DEFAULT_BUDGET) -> bool:
    if t < 2:
        raise ValueError("t must be >= 2")
    return find_minor(G, complete_bipartite(2, t), budget) is None


def edge_bound_holds(G: Graph, t: int) -> bool:
    """2|E| <= (t+1)(n-1), the edge bound for K_{2,t}-minor-free graphs."""
    if G.n < 1:
        raise ValueError("need n >= 1")
    return 2 * G.edge_count <= (t + 1) * (G.n - 1)
