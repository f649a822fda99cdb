"""Exact deciders for the six forbidden properties, the degree-threshold
closure, and the degree-condition witness.

The deciders share one backtracking Hamilton-cycle kernel over bitmask
adjacency that supports forced edges (linear forests are contracted into
path segments before the search).  Path variants reduce to the cycle
search by adding a gadget vertex.  A subset-DP cycle decider is kept as an
independent cross-check for tests.

Small-n conventions, fixed here because the minimum-n table below starts
later: K_1 and K_2 are not hamiltonian; K_1 is traceable; K_1 is
hamiltonian-connected vacuously and K_2 via its single edge.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Optional

from .errors import ParameterError, PropertyDomainError
from .graphs import Graph, degree_sequence

PropertyKind = Literal[
    "hamiltonian",
    "traceable",
    "hamiltonian_connected",
    "k_edge_hamiltonian",
    "k_hamiltonian",
    "k_connected",
]


# ---------------------------------------------------------------------------
# Hamilton-cycle kernel
# ---------------------------------------------------------------------------

def _segments_from_forest(forced: tuple[tuple[int, int], ...],
                          allowed: int) -> Optional[list[tuple[int, int, int]]]:
    """Contract a forced linear forest into (start, end, interior_mask)
    segments.  Returns None when the forced set cannot lie on any cycle
    within ``allowed`` (degree > 2 or a closed sub-cycle)."""
    fadj: dict[int, list[int]] = {}
    for u, v in forced:
        if not (allowed >> u & 1 and allowed >> v & 1):
            return None
        fadj.setdefault(u, []).append(v)
        fadj.setdefault(v, []).append(u)
    if any(len(nb) > 2 for nb in fadj.values()):
        return None
    seen: set[int] = set()
    segments: list[tuple[int, int, int]] = []
    for v, nb in fadj.items():
        if v in seen or len(nb) == 2:
            continue
        # walk from an endpoint
        seen.add(v)
        interior = 0
        prev, cur = v, nb[0]
        while True:
            seen.add(cur)
            nxt = [w for w in fadj[cur] if w != prev]
            if not nxt:
                break
            interior |= 1 << cur
            prev, cur = cur, nxt[0]
        segments.append((v, cur, interior))
    if len(seen) != len(fadj):
        return None  # leftover vertices all have forced degree 2: a cycle
    return segments


def _ham_cycle_masks(rows: tuple[int, ...], allowed: int,
                     forced: tuple[tuple[int, int], ...] = ()) -> bool:
    m = allowed.bit_count()
    if m < 3:
        return False
    for u, v in forced:
        if not rows[u] >> v & 1:
            return False
    segments = _segments_from_forest(forced, allowed)
    if segments is None:
        return False

    seg_at: dict[int, tuple[int, int, int]] = {}
    for a, b, interior in segments:
        seg_at[a] = (a, b, interior)
        seg_at[b] = (b, a, interior)
    interiors = 0
    for _, _, interior in segments:
        interiors |= interior

    if segments:
        a0, b0, int0 = segments[0]
        start = a0
        visited0 = (1 << a0) | (1 << b0) | int0
        cur0 = b0
        if visited0 == allowed:
            return bool(rows[cur0] >> start & 1)
    else:
        # anchor at a min-degree vertex: fewest branches at the root
        best, best_deg = -1, 1 << 30
        r = allowed
        while r:
            v = (r & -r).bit_length() - 1
            r &= r - 1
            deg = (rows[v] & allowed).bit_count()
            if deg < best_deg:
                best, best_deg = v, deg
        if best_deg < 2:
            return False
        start = best
        visited0 = 1 << start
        cur0 = start

    start_bit = 1 << start

    def reachable_all(cur: int, visited: int) -> bool:
        todo = allowed & ~visited
        if not todo:
            return True
        frontier = rows[cur] & todo
        if not frontier:
            return False
        seen = frontier
        while frontier:
            nxt = 0
            r = frontier
            while r:
                v = (r & -r).bit_length() - 1
                r &= r - 1
                nxt |= rows[v]
            frontier = nxt & todo & ~seen
            seen |= frontier
        return (seen & todo) == todo

    def dfs(cur: int, visited: int) -> bool:
        if visited == allowed:
            return bool(rows[cur] >> start & 1)
        if not reachable_all(cur, visited):
            return False
        # every unvisited vertex still needs two usable incidences
        todo = allowed & ~visited
        avail = todo | (1 << cur) | start_bit
        r = todo & ~interiors
        while r:
            v = (r & -r).bit_length() - 1
            r &= r - 1
            if (rows[v] & avail).bit_count() < 2:
                return False
        cands = rows[cur] & todo
        while cands:
            w = (cands & -cands).bit_length() - 1
            cands &= cands - 1
            if interiors >> w & 1:
                continue  # segment interiors are traversed via their ports
            seg = seg_at.get(w)
            if seg is not None and not visited >> w & 1:
                a, b, interior = seg
                nv = visited | (1 << a) | (1 << b) | interior
                if dfs(b, nv):
                    return True
            elif seg is None:
                if dfs(w, visited | (1 << w)):
                    return True
        return False

    return dfs(cur0, visited0)


def _ham_path_masks(rows: tuple[int, ...], allowed: int, u: int, v: int) -> bool:
    """Spanning u..v path within ``allowed``, via a gadget vertex adjacent
    to exactly u and v."""
    m = allowed.bit_count()
    if m == 1:
        return u == v and allowed >> u & 1
    if u == v:
        return False
    n = len(rows)
    gadget = n
    ext = list(rows) + [(1 << u) | (1 << v)]
    ext[u] |= 1 << gadget
    ext[v] |= 1 << gadget
    return _ham_cycle_masks(tuple(ext), allowed | (1 << gadget))


def _traceable_masks(rows: tuple[int, ...], allowed: int) -> bool:
    """Spanning path with free endpoints, via a universal gadget vertex."""
    m = allowed.bit_count()
    if m <= 1:
        return m == 1
    if m == 2:
        r = allowed
        a = (r & -r).bit_length() - 1
        b = (r & (r - 1)).bit_length() - 1
        return bool(rows[a] >> b & 1)
    n = len(rows)
    gadget = n
    ext = [row | (1 << gadget) if allowed >> i & 1 else row
           for i, row in enumerate(rows)]
    ext.append(allowed)
    return _ham_cycle_masks(tuple(ext), allowed | (1 << gadget))


def hamiltonian_cycle_dp(g: Graph) -> bool:
    """Independent subset-DP decider for a spanning cycle (cross-check for
    the backtracking kernel; practical to n ~ 16)."""
    n = g.n
    if n < 3:
        return False
    rows = g.rows
    # paths start at vertex 0; reach[mask] = bitset of possible end vertices
    full = (1 << n) - 1
    reach = {1: 1}
    frontier = {1: 1}
    while frontier:
        nxt: dict[int, int] = {}
        for mask, ends in frontier.items():
            e = ends
            while e:
                v = (e & -e).bit_length() - 1
                e &= e - 1
                cand = rows[v] & ~mask
                while cand:
                    w = (cand & -cand).bit_length() - 1
                    cand &= cand - 1
                    nm = mask | (1 << w)
                    cur = reach.get(nm, 0)
                    if not cur >> w & 1:
                        reach[nm] = cur | (1 << w)
                        nxt[nm] = nxt.get(nm, 0) | (1 << w)
        frontier = nxt
    ends = reach.get(full, 0)
    return bool(ends & rows[0])


# ---------------------------------------------------------------------------
# the six deciders
# ---------------------------------------------------------------------------

def is_hamiltonian(g: Graph) -> bool:
    """Spanning cycle; n <= 2 is never hamiltonian, K_3 is."""
    full = (1 << g.n) - 1
    return _ham_cycle_masks(g.rows, full)


def is_traceable(g: Graph) -> bool:
    """Spanning path; K_1 is traceable."""
    full = (1 << g.n) - 1
    return _traceable_masks(g.rows, full)


def is_hamiltonian_connected(g: Graph) -> bool:
    """Spanning path between every pair of distinct vertices."""
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not _ham_path_masks(g.rows, full, u, v):
                return False
    return True


def _linear_forests(n: int, size: int):
    """Yield every set of exactly ``size`` vertex pairs forming disjoint
    paths (max degree 2, no cycle).  Pairs range over the complete graph:
    a forest edge need not be present in the graph under test."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    deg = [0] * n
    parent = list(range(n))

    def find(x: int) -> int:
        # no path compression: unions are undone on backtrack
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[tuple[int, int]] = []

    def rec(lo: int, remaining: int):
        if remaining == 0:
            yield tuple(chosen)
            return
        if len(edges) - lo < remaining:
            return
        for idx in range(lo, len(edges)):
            u, v = edges[idx]
            if deg[u] >= 2 or deg[v] >= 2:
                continue
            ru, rv = find(u), find(v)
            if ru == rv:
                continue
            parent_ru = parent[ru]
            parent[ru] = rv
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from rec(idx + 1, remaining - 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
            parent[ru] = parent_ru
        return

    yield from rec(0, size)


def k_edge_failure_size(g: Graph, k_max: int) -> Optional[int]:
    """Smallest s <= k_max such that some linear forest of s vertex pairs
    does not extend to a spanning cycle through it (forest pairs missing
    from g are added first); 0 means g has no spanning cycle at all.
    None when every forest up to k_max extends."""
    full = (1 << g.n) - 1
    if not _ham_cycle_masks(g.rows, full):
        return 0
    for s in range(1, k_max + 1):
        for forest in _linear_forests(g.n, s):
            rows = g.rows
            extra = [(u, v) for u, v in forest if not rows[u] >> v & 1]
            if extra:
                aug = list(rows)
                for u, v in extra:
                    aug[u] |= 1 << v
                    aug[v] |= 1 << u
                rows = tuple(aug)
            if not _ham_cycle_masks(rows, full, forest):
                return s
    return None


def is_k_edge_hamiltonian(g: Graph, k: int) -> bool:
    """Every linear forest of at most k vertex pairs lies on a spanning
    cycle once its missing pairs are added to the graph (k = 0 is plain
    hamiltonicity).  Forest size is edge count."""
    if not 0 <= k <= g.n - 3:
        raise ParameterError(f"k={k} outside [0, n-3] for n={g.n}")
    return k_edge_failure_size(g, k) is None


def k_ham_failure_size(g: Graph, k_max: int) -> Optional[int]:
    """Smallest s <= k_max such that deleting some s vertices leaves a
    non-hamiltonian graph; 0 means g itself has no spanning cycle.  None
    when every deletion up to k_max stays hamiltonian."""
    full = (1 << g.n) - 1
    if not _ham_cycle_masks(g.rows, full):
        return 0
    for s in range(1, k_max + 1):
        for subset in combinations(range(g.n), s):
            mask = full
            for v in subset:
                mask ^= 1 << v
            if not _ham_cycle_masks(g.rows, mask):
                return s
    return None


def is_k_hamiltonian(g: Graph, k: int) -> bool:
    """Removing any set of at most k vertices leaves a hamiltonian graph
    (k = 0 is plain hamiltonicity)."""
    if not 0 <= k <= g.n - 3:
        raise ParameterError(f"k={k} outside [0, n-3] for n={g.n}")
    return k_ham_failure_size(g, k) is None


def _max_vertex_flow(rows: tuple[int, ...], n: int, s: int, t: int) -> int:
    """Number of internally vertex-disjoint s..t paths (s, t nonadjacent),
    by unit-capacity augmentation on the split digraph."""
    # nodes: 2v = v_in, 2v+1 = v_out; cap 1 on in->out except for s, t
    INF = n + 1
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = INF if v in (s, t) else 1
        cap[(2 * v + 1, 2 * v)] = 0
    for u in range(n):
        r = rows[u]
        while r:
            v = (r & -r).bit_length() - 1
            r &= r - 1
            cap[(2 * u + 1, 2 * v)] = INF
            cap.setdefault((2 * v, 2 * u + 1), 0)
    adj: dict[int, list[int]] = {}
    for (a, b) in cap:
        adj.setdefault(a, []).append(b)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: -1}
        queue = [source]
        while queue and sink not in prev:
            nq = []
            for a in queue:
                for b in adj.get(a, ()):
                    if b not in prev and cap[(a, b)] > 0:
                        prev[b] = a
                        nq.append(b)
            queue = nq
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut over all nonadjacent pairs; n-1 for complete
    graphs, 0 for disconnected ones and for n <= 1."""
    n = g.n
    if n <= 1:
        return 0
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)
             if not g.rows[u] >> v & 1]
    if not pairs:
        return n - 1
    return min(_max_vertex_flow(g.rows, n, u, v) for u, v in pairs)


def is_k_connected(g: Graph, k: int) -> bool:
    if k < 1:
        raise ParameterError(f"k={k} must be >= 1")
    return g.n > k and vertex_connectivity(g) >= k


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        r = frontier
        while r:
            v = (r & -r).bit_length() - 1
            r &= r - 1
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# property specs and dispatch
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PropertySpec:
    """One forbidden property with its stability offset, the minimum n at
    which complete graphs have it, and (for the k-parametrized kinds) k.

    A property is (n+ell)-stable: adding an edge between nonadjacent u, v
    with d(u)+d(v) >= n+ell never creates the property where it was
    absent, which is what drives the closure below.
    """

    kind: PropertyKind
    k: int = 0

    def __post_init__(self) -> None:
        if self.kind in ("k_edge_hamiltonian", "k_hamiltonian", "k_connected"):
            if self.k < 1:
                raise ParameterError(f"{self.kind} needs k >= 1, got {self.k}")
        elif self.k:
            raise ParameterError(f"{self.kind} takes no k")

    @property
    def ell(self) -> int:
        return {
            "traceable": -1,
            "hamiltonian": 0,
            "hamiltonian_connected": 1,
            "k_edge_hamiltonian": self.k,
            "k_hamiltonian": self.k,
            "k_connected": self.k - 2,
        }[self.kind]

    @property
    def min_n(self) -> int:
        return {
            "traceable": 2,
            "hamiltonian": 3,
            "hamiltonian_connected": 2,
            "k_edge_hamiltonian": 3,
            "k_hamiltonian": self.k + 3,
            "k_connected": self.k + 1,
        }[self.kind]

    def stability_threshold(self, n: int) -> int:
        return n + self.ell

    @property
    def label(self) -> str:
        if self.kind == "k_edge_hamiltonian":
            return f"{self.k}-edge-hamiltonian"
        if self.kind == "k_hamiltonian":
            return f"{self.k}-hamiltonian"
        if self.kind == "k_connected":
            return f"{self.k}-connected"
        return self.kind.replace("_", "-")


def has_property(g: Graph, spec: PropertySpec) -> bool:
    """Dispatch to the matching decider; n below the property's minimum is
    rejected rather than guessed."""
    if g.n < spec.min_n:
        raise PropertyDomainError(
            f"{spec.label} is undefined below n={spec.min_n}, got n={g.n}")
    if spec.kind == "hamiltonian":
        return is_hamiltonian(g)
    if spec.kind == "traceable":
        return is_traceable(g)
    if spec.kind == "hamiltonian_connected":
        return is_hamiltonian_connected(g)
    if spec.kind == "k_edge_hamiltonian":
        return is_k_edge_hamiltonian(g, spec.k)
    if spec.kind == "k_hamiltonian":
        return is_k_hamiltonian(g, spec.k)
    return is_k_connected(g, spec.k)


# ---------------------------------------------------------------------------
# closure
# ---------------------------------------------------------------------------

def bc_closure(g: Graph, threshold: int) -> Graph:
    """Iteratively add edges between nonadjacent u, v with
    d(u) + d(v) >= threshold until no such pair remains.  The fixpoint is
    unique regardless of addition order."""
    if threshold < 0:
        raise ParameterError(f"threshold must be >= 0, got {threshold}")
    rows = list(g.rows)
    degs = [r.bit_count() for r in rows]
    changed = True
    while changed:
        changed = False
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not rows[u] >> v & 1 and degs[u] + degs[v] >= threshold:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                    degs[u] += 1
                    degs[v] += 1
                    changed = True
    return Graph(g.n, tuple(rows))


def bc_closure_random_order(g: Graph, threshold: int,
                            rng: random.Random) -> Graph:
    """Closure computed by adding one random eligible edge at a time; used
    to exercise order-independence of the fixpoint."""
    rows = list(g.rows)
    degs = [r.bit_count() for r in rows]
    while True:
        eligible = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                    if not rows[u] >> v & 1 and degs[u] + degs[v] >= threshold]
        if not eligible:
            return Graph(g.n, tuple(rows))
        u, v = rng.choice(eligible)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        degs[u] += 1
        degs[v] += 1


# ---------------------------------------------------------------------------
# degree-condition witness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeWitness:
    """An index i* certifying the degree condition that every graph lacking
    the property must satisfy: at least i* vertices of low degree and a
    bounded number of high-degree vertices."""

    i_star: int
    low_cap: int      # the low-degree bound (i*+ell, or i*+k-2 for k-connectivity)
    low_count: int    # vertices of degree <= low_cap (>= i*)
    high_count: int   # vertices of degree >= n - i*


def chvatal_witness(g: Graph, spec: PropertySpec) -> Optional[DegreeWitness]:
    """Search for the witness index from the sorted degree list.

    For a graph lacking the property one is guaranteed to exist; for a
    graph having it the search simply reports what it finds (possibly
    None).  This function never decides the property itself.
    """
    n = g.n
    if n < spec.min_n:
        raise PropertyDomainError(
            f"{spec.label} is undefined below n={spec.min_n}, got n={g.n}")
    degs = degree_sequence(g)
    if spec.kind == "k_connected":
        k = spec.k
        for i in range(1, (n - k + 1) // 2 + 1):
            if degs[i - 1] <= i + k - 2 and degs[n - k] <= n - i - 1:
                low_cap = i + k - 2
                return DegreeWitness(
                    i, low_cap,
                    sum(1 for d in degs if d <= low_cap),
                    sum(1 for d in degs if d >= n - i))
        return None
    ell = spec.ell
    for i in range(1, (n - 1 - ell) // 2 + 1):
        if degs[i - 1] <= i + ell and degs[n - i - ell - 1] <= n - i - 1:
            low_cap = i + ell
            return DegreeWitness(
                i, low_cap,
                sum(1 for d in degs if d <= low_cap),
                sum(1 for d in degs if d >= n - i))
    return None
