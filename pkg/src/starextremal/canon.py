"""Canonical labeling by partition refinement plus individualization.

The canonical labeling of a graph is the vertex ordering that maximizes
the upper-triangle adjacency bits read in column-major order (the same
bit order graph6 uses), searched over the leaves of an
individualization-refinement tree.  Two prunings keep the tree small at
the symmetric inputs this package meets (cliques, independent sets, and
joins of both): branching skips twin vertices, whose subtrees are
guaranteed equal, and subtrees whose fixed prefix already compares below
the best leaf are cut.  Adequate through n = 10; not meant for more.
"""

from __future__ import annotations

from .graphs import Graph, graph6_encode


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.  Sub-cells produced by
    a split are ordered by decreasing neighbor count, which keeps the
    ordering a function of the graph alone."""
    while True:
        changed = False
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            new_cells: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((rows[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    for key in sorted(groups, reverse=True):
                        new_cells.append(groups[key])
            if changed:
                cells = new_cells
                break
        if not changed:
            return cells


def _twin_reps(rows: tuple[int, ...], cell: list[int]) -> list[int]:
    """One representative per twin class of the cell.  u, v are twins when
    swapping them is an automorphism, i.e. their neighborhoods agree off
    {u, v}; individualizing either leads to identical subtree outcomes."""
    reps: list[int] = []
    classes: list[tuple[int, int]] = []  # (open nbhd key, closed nbhd key)
    for v in cell:
        open_k = rows[v]
        closed_k = rows[v] | (1 << v)
        for i, (ok, ck) in enumerate(classes):
            u = reps[i]
            if (rows[u] >> v & 1 and ck == closed_k) or \
               (not rows[u] >> v & 1 and ok == open_k):
                break
        else:
            reps.append(v)
            classes.append((open_k, closed_k))
    return reps


def canonical_perm(g: Graph) -> tuple[int, ...]:
    """Permutation sending old vertex v to its canonical position."""
    n = g.n
    if n <= 1:
        return tuple(range(n))
    rows = g.rows
    total_bits = n * (n - 1) // 2

    best_key: list[int | None] = [None]
    best_order: list[tuple[int, ...]] = [()]

    def prefix_bits(order: list[int]) -> int:
        key = 0
        for b in range(1, len(order)):
            rb = rows[order[b]]
            for a in range(b):
                key = key << 1 | (rb >> order[a] & 1)
        return key

    def descend(cells: list[list[int]]) -> None:
        fixed: list[int] = []
        idx = 0
        while idx < len(cells) and len(cells[idx]) == 1:
            fixed.append(cells[idx][0])
            idx += 1
        p = len(fixed)
        pref = prefix_bits(fixed)
        if best_key[0] is not None:
            bp = best_key[0] >> (total_bits - p * (p - 1) // 2)
            if pref < bp:
                return
        if p == n:
            if best_key[0] is None or pref > best_key[0]:
                best_key[0] = pref
                best_order[0] = tuple(fixed)
            return
        target = cells[idx]
        for v in _twin_reps(rows, target):
            rest = [w for w in target if w != v]
            new_cells = cells[:idx] + [[v], rest] + cells[idx + 1:]
            descend(_refine(rows, new_cells))

    descend(_refine(rows, [list(range(n))]))
    order = best_order[0]
    perm = [0] * n
    for pos, v in enumerate(order):
        perm[v] = pos
    return tuple(perm)


def canonical_key(g: Graph) -> tuple[int, int]:
    """(n, adjacency bits under the canonical labeling); equal exactly for
    isomorphic graphs."""
    n = g.n
    if n <= 1:
        return (n, 0)
    perm = canonical_perm(g)
    order = [0] * n
    for v, pos in enumerate(perm):
        order[pos] = v
    rows = g.rows
    key = 0
    for b in range(1, n):
        rb = rows[order[b]]
        for a in range(b):
            key = key << 1 | (rb >> order[a] & 1)
    return (n, key)


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_perm(g))


def canonical_form(g: Graph) -> str:
    """Canonical graph6 text: identical for isomorphic graphs."""
    return graph6_encode(canonical_graph(g))
