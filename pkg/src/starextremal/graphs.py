"""Concrete graph values: bit-matrix graphs, family construction, star
counting from adjacency, and graph6 serialization.

Adjacency is a tuple of row bitmasks (bit j of rows[i] set iff i~j), which
keeps the hamiltonicity kernels to word operations.  Graph objects are
capped at 64 vertices: exhaustive search runs at n <= 10 and the closed
forms in ``counts`` cover everything larger.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional

from . import counts
from .errors import FamilySizeError, Graph6Error, ParameterError

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on labeled vertices 0..n-1."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ParameterError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.rows) != self.n:
            raise ParameterError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ParameterError(f"row {i} has bits beyond vertex {self.n - 1}")
            if row >> i & 1:
                raise ParameterError(f"loop at vertex {i}")
        for i in range(self.n):
            for j in range(i):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise ParameterError(f"asymmetric adjacency at ({i}, {j})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.rows[i] >> j & 1]

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ParameterError("cannot add a loop")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Graph with vertex ``perm[v]`` playing the role of old vertex v."""
        p = list(perm)
        rows = [0] * self.n
        for i in range(self.n):
            r = self.rows[i]
            nr = 0
            while r:
                j = (r & -r).bit_length() - 1
                r &= r - 1
                nr |= 1 << p[j]
            rows[p[i]] = nr
        return Graph(self.n, tuple(rows))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ParameterError(f"bad edge ({u}, {v}) for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def degree_sequence(g: Graph) -> list[int]:
    """Nondecreasing degree list."""
    return sorted(r.bit_count() for r in g.rows)


def edge_count(g: Graph) -> int:
    return sum(r.bit_count() for r in g.rows) // 2


def count_stars(g: Graph, t: int) -> int:
    """Number of t-stars (copies of K_{1,t}); t = 1 counts edges."""
    return counts.stars_from_degrees((r.bit_count() for r in g.rows), t)


def min_degree(g: Graph) -> int:
    return min((r.bit_count() for r in g.rows), default=0)


# ---------------------------------------------------------------------------
# the two extremal families as concrete graphs
# ---------------------------------------------------------------------------
# Vertex layout for both: dominating clique first, then the variable part.

def build_g(n: int, ell: int, i: int) -> Graph:
    """Family-G member K_{i+l} + (I_i u K_{n-2i-l}); for i+l = 0 this is
    I_1 u K_{n-1}.  Dominators are vertices [0, i+l), the independent set
    [i+l, i+l+i), the clique the rest."""
    counts.FamilyParams(n, ell, i)
    a = i + ell  # dominating clique size
    rows = [0] * n
    full = (1 << n) - 1
    for v in range(a):
        rows[v] = full ^ (1 << v)
    for v in range(a, a + i):
        rows[v] = (1 << a) - 1
    cl_mask = ((1 << n) - 1) ^ ((1 << (a + i)) - 1)
    dom_mask = (1 << a) - 1
    for v in range(a + i, n):
        rows[v] = (cl_mask ^ (1 << v)) | dom_mask
    return Graph(n, tuple(rows))


def build_h(n: int, k: int, i: int) -> Graph:
    """Family-H member K_{k-1} + (K_i u K_{n-k-i+1}); for k = 1 this is
    K_i u K_{n-i}."""
    counts.ConnFamilyParams(n, k, i)
    a = k - 1
    rows = [0] * n
    full = (1 << n) - 1
    dom_mask = (1 << a) - 1
    left_mask = ((1 << (a + i)) - 1) ^ dom_mask
    right_mask = full ^ dom_mask ^ left_mask
    for v in range(a):
        rows[v] = full ^ (1 << v)
    for v in range(a, a + i):
        rows[v] = (left_mask ^ (1 << v)) | dom_mask
    for v in range(a + i, n):
        rows[v] = (right_mask ^ (1 << v)) | dom_mask
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class FamilyMemberCursor:
    """One member of the spanning-subgraph family around a family-G graph:
    the base parameters plus the subset of clique-internal edge slots that
    are missing."""

    n: int
    ell: int
    i: int
    missing: tuple[tuple[int, int], ...]

    def graph(self) -> Graph:
        g = build_g(self.n, self.ell, self.i)
        rows = list(g.rows)
        for u, v in self.missing:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))


def family_members(n: int, ell: int, i: int,
                   cap: Optional[int] = None) -> Iterator[FamilyMemberCursor]:
    """Stream every member of the family around member (n, ell, i): all
    spanning subgraphs where only edges inside the K_{n-2i-l} part may be
    missing.  The first member is the full graph itself.

    With ``cap`` set, a family larger than cap raises FamilySizeError up
    front; cap=None streams unconditionally (the caller owns the budget).
    """
    counts.FamilyParams(n, ell, i)
    size = counts.family_size(n, ell, i)
    if cap is not None and size > cap:
        raise FamilySizeError(
            f"family around (n={n}, ell={ell}, i={i}) has {size} members, cap {cap}")
    a = i + ell
    clique = list(range(a + i, n))
    slots = list(combinations(clique, 2))
    for mask in range(size):
        missing = tuple(slots[b] for b in range(len(slots)) if mask >> b & 1)
        yield FamilyMemberCursor(n, ell, i, missing)


def enumerate_family(n: int, ell: int, i: int,
                     cap: Optional[int] = None) -> Iterator[Graph]:
    """family_members materialized as graphs."""
    for cur in family_members(n, ell, i, cap):
        yield cur.graph()


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------
# Standard format: size bytes, then the upper triangle in column-major
# order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed into 6-bit chunks,
# each offset by 63.

def _size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ParameterError(f"graph6 size {n} not supported")


def graph6_encode(g: Graph) -> str:
    out = bytearray(_size_bytes(g.n))
    bits = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            bits = bits << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = 0
                nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    return out.decode("ascii")


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise Graph6Error("empty graph6 text", 0)
    pos = 0
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside graph6 range", off)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise Graph6Error("truncated 8-byte size header", len(data))
            n = 0
            for b in data[2:8]:
                n = n << 6 | (b - 63)
            pos = 8
        else:
            if len(data) < 4:
                raise Graph6Error("truncated 4-byte size header", len(data))
            n = 0
            for b in data[1:4]:
                n = n << 6 | (b - 63)
            pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph on {n} vertices exceeds the {MAX_VERTICES}-vertex cap", 0)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos < need:
        raise Graph6Error(
            f"need {need} payload bytes for n={n}, got {len(data) - pos}", len(data))
    if len(data) - pos > need:
        raise Graph6Error("trailing bytes after graph6 payload", pos + need)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + idx // 6] - 63
            if byte >> (5 - idx % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    for pad in range(idx, need * 6):
        byte = data[pos + pad // 6] - 63
        if byte >> (5 - pad % 6) & 1:
            raise Graph6Error("nonzero padding bits", pos + pad // 6)
    return Graph(n, tuple(rows))
