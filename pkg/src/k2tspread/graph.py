"""Simple undirected graphs stored as bitset adjacency rows.

Vertex ``v`` is an index in ``range(n)``; ``adj[v]`` is a Python int whose
bit ``u`` is set when ``uv`` is an edge.  Graphs are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must have exactly n rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside range({self.n})")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=dtype)
        for u in range(self.n):
            nbrs = self.neighbors(u)
            if nbrs:
                A[u, nbrs] = 1
        return A

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("loops are not allowed")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_vertex(self, v: int) -> "Graph":
        """Delete ``v``; vertices above it shift down by one."""
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.adj):
            if u != v:
                rows.append((row & low) | (row >> (v + 1) << v))
        return Graph(self.n - 1, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            row = 0
            for u in iter_bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vs), tuple(rows))

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph whose vertex ``i`` is old vertex ``perm[i]``."""
        inv = {old: new for new, old in enumerate(perm)}
        rows = []
        for old in perm:
            row = 0
            for u in iter_bits(self.adj[old]):
                row |= 1 << inv[u]
            rows.append(row)
        return Graph(self.n, tuple(rows))

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by least vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps


def make_empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def make_complete(t: int) -> Graph:
    if t < 1:
        raise ValueError("complete graph needs t >= 1")
    full = (1 << t) - 1
    return Graph(t, tuple(full & ~(1 << v) for v in range(t)))


def make_path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    """Circulant graph on Z_n; every offset d connects i to i +- d (mod n)."""
    edges = set()
    for d in offsets:
        d %= n
        if d == 0:
            continue
        for i in range(n):
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, sorted(edges))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    return Graph(G.n + H.n, G.adj + tuple(row << shift for row in H.adj))


def join(G: Graph, H: Graph) -> Graph:
    gmask = (1 << G.n) - 1
    hmask = ((1 << H.n) - 1) << G.n
    rows = tuple(row | hmask for row in G.adj) + tuple((row << G.n) | gmask for row in H.adj)
    return Graph(G.n + H.n, rows)


def copies(G: Graph, k: int) -> Graph:
    """``k`` disjoint copies of ``G``."""
    rows = []
    for c in range(k):
        shift = c * G.n
        rows.extend(row << shift for row in G.adj)
    return Graph(k * G.n, tuple(rows))


def extremal_graph(n: int, t: int, ell: int) -> Graph:
    """K_1 joined to ``ell`` copies of K_t plus ``n - 1 - ell*t`` isolated vertices.

    Vertex 0 is the apex, cliques occupy consecutive blocks after it, and the
    isolated vertices come last.
    """
    if t < 2:
        raise ValueError("clique size t must be >= 2")
    if ell < 0 or n < 1:
        raise ValueError("need n >= 1 and ell >= 0")
    if ell * t > n - 1:
        raise ValueError(f"ell*t = {ell * t} exceeds n-1 = {n - 1}: no room for {ell} copies of K_{t}")
    rest = disjoint_union(copies(make_complete(t), ell), make_empty(n - 1 - ell * t))
    return join(make_complete(1), rest)


# ---------------------------------------------------------------- graph6

def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def to_graph6(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        row = G.adj[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return (_encode_n(G.n) + body).decode("ascii")


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [c - 63 for c in s.encode("ascii")]
    if not data or any(c < 0 or c > 63 for c in data):
        raise ValueError(f"invalid graph6 string {s!r}")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        n = 0
        for c in data[2:8]:
            n = (n << 6) | c
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_file(path) -> list[Graph]:
    graphs = []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(from_graph6(line))
    return graphs


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for G in graphs:
            fh.write(to_graph6(G) + "\n")


# ------------------------------------------------------- canonical forms

def _refine(adj, cells: list[list[int]]) -> list[list[int]]:
    # equitable refinement of an ordered partition; sub-cells are ordered by
    # their signatures, so the result is isomorphism-equivariant
    while True:
        where = {}
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        masks = [sum(1 << v for v in cell) for cell in cells]
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            out.extend(groups[sig] for sig in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _code(adj, perm) -> int:
    # bit order matches graph6: column j, row i < j, most significant first
    code = 0
    for j in range(1, len(perm)):
        row = adj[perm[j]]
        for i in range(j):
            code = (code << 1) | (row >> perm[i] & 1)
    return code


def _twin_key(adj, v: int):
    return adj[v] & ~(1 << v), adj[v] | (1 << v)


def _canon_connected(adj, vertices: list[int]) -> tuple[int, tuple[int, ...]]:
    """Least leaf code of the individualisation-refinement tree."""
    best: list = [None, ()]

    def visit(cells):
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            perm = tuple(c[0] for c in cells)
            code = _code(adj, perm)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, perm
            return
        cell = cells[target]
        seen_open, seen_closed = set(), set()
        for v in cell:
            # swapping twins is an automorphism fixing the partition
            o, c = _twin_key(adj, v)
            if o in seen_open or c in seen_closed:
                continue
            seen_open.add(o)
            seen_closed.add(c)
            rest = [u for u in cell if u != v]
            visit(cells[:target] + [[v], rest] + cells[target + 1:])

    visit([list(vertices)])
    return best[0], best[1]


def canonical_form(G: Graph) -> tuple[int, tuple[int, ...]]:
    """Return ``(code, perm)`` with ``G.relabel(perm)`` a canonical copy of G.

    Components are canonised separately by individualisation-refinement
    and laid out in order of (size, code); ``code`` is the graph6-ordered
    adjacency bit string of the canonical copy.  Two graphs on the same
    number of vertices are isomorphic iff their codes agree.
    """
    parts = []
    for comp in G.components():
        vs = list(iter_bits(comp))
        local = G.induced(vs)
        code, perm = _canon_connected(local.adj, list(range(local.n)))
        parts.append((len(vs), code, [vs[i] for i in perm]))
    parts.sort(key=lambda p: (p[0], p[1]))
    perm = tuple(v for _, _, vs in parts for v in vs)
    return _code(G.adj, perm), perm


def canonical_graph(G: Graph) -> Graph:
    return G.relabel(list(canonical_form(G)[1]))
