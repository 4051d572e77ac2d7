"""Automorphism and isomorphism search by partition refinement.

The search keeps an ordered list of aligned (domain, image) cell pairs: a
compatible bijection must map each domain cell onto its image cell.
Cells are refined to a stable partition by neighbor counts against every
cell, then a branch vertex is individualized and the search recurses.
Every map found at a leaf is re-verified edge-by-edge before being
returned, so the refinement is an accelerator, never an oracle.

Certification use: a coloring is distinguishing exactly when the search
seeded with its color classes finds no nontrivial automorphism.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph, bits

Cells = list[tuple[int, int]]


def _initial_cells(n: int, colors_d: Sequence[int] | None,
                   colors_i: Sequence[int] | None) -> Cells | None:
    """Aligned starting cells from color classes; None if classes mismatch."""
    full = (1 << n) - 1
    if colors_d is None:
        return [(full, full)]
    groups_d: dict[int, int] = {}
    groups_i: dict[int, int] = {}
    for v, c in enumerate(colors_d):
        groups_d[c] = groups_d.get(c, 0) | 1 << v
    for v, c in enumerate(colors_i):
        groups_i[c] = groups_i.get(c, 0) | 1 << v
    if sorted(groups_d) != sorted(groups_i):
        return None
    cells = []
    for c in sorted(groups_d):
        d, i = groups_d[c], groups_i[c]
        if d.bit_count() != i.bit_count():
            return None
        cells.append((d, i))
    return cells


def _refine(adj_d: Sequence[int], adj_i: Sequence[int], cells: Cells) -> Cells | None:
    """Refine aligned cells to a joint equitable partition; None on mismatch."""
    cells = list(cells)
    changed = True
    while changed:
        changed = False
        for splitter_d, splitter_i in list(cells):
            new_cells: Cells = []
            for cell_d, cell_i in cells:
                if cell_d.bit_count() == 1:
                    new_cells.append((cell_d, cell_i))
                    continue
                by_count_d: dict[int, int] = {}
                for v in bits(cell_d):
                    c = (adj_d[v] & splitter_d).bit_count()
                    by_count_d[c] = by_count_d.get(c, 0) | 1 << v
                by_count_i: dict[int, int] = {}
                for v in bits(cell_i):
                    c = (adj_i[v] & splitter_i).bit_count()
                    by_count_i[c] = by_count_i.get(c, 0) | 1 << v
                keys = sorted(by_count_d)
                if keys != sorted(by_count_i):
                    return None
                for key in keys:
                    d, i = by_count_d[key], by_count_i[key]
                    if d.bit_count() != i.bit_count():
                        return None
                    new_cells.append((d, i))
                if len(keys) > 1:
                    changed = True
            cells = new_cells
            if changed:
                break
    return cells


def _extract_map(cells: Cells, n: int) -> list[int]:
    perm = [0] * n
    for cell_d, cell_i in cells:
        perm[cell_d.bit_length() - 1] = cell_i.bit_length() - 1
    return perm


def _is_edge_map(adj_d: Sequence[int], adj_i: Sequence[int], perm: list[int]) -> bool:
    for u in range(len(perm)):
        mapped = 0
        for v in bits(adj_d[u]):
            mapped |= 1 << perm[v]
        if mapped != adj_i[perm[u]]:
            return False
    return True


def _individualize(cells: Cells, idx: int, u: int, w: int) -> Cells:
    cell_d, cell_i = cells[idx]
    child = list(cells)
    child[idx:idx + 1] = [
        (1 << u, 1 << w),
        (cell_d & ~(1 << u), cell_i & ~(1 << w)),
    ]
    return child


def _search(adj_d: Sequence[int], adj_i: Sequence[int], cells: Cells) -> list[int] | None:
    cells = _refine(adj_d, adj_i, cells)
    if cells is None:
        return None
    branch = None
    for idx, (cell_d, _) in enumerate(cells):
        size = cell_d.bit_count()
        if size > 1 and (branch is None or size < branch[1]):
            branch = (idx, size)
    if branch is None:
        perm = _extract_map(cells, len(adj_d))
        return perm if _is_edge_map(adj_d, adj_i, perm) else None
    idx = branch[0]
    cell_d, cell_i = cells[idx]
    u = (cell_d & -cell_d).bit_length() - 1
    for w in bits(cell_i):
        found = _search(adj_d, adj_i, _individualize(cells, idx, u, w))
        if found is not None:
            return found
    return None


def find_isomorphism(G: Graph, H: Graph,
                     colors_g: Sequence[int] | None = None,
                     colors_h: Sequence[int] | None = None) -> list[int] | None:
    """A color-respecting isomorphism G -> H as an image array, or None."""
    if G.n != H.n or G.edge_count() != H.edge_count():
        return None
    cells = _initial_cells(G.n, colors_g, colors_h)
    if cells is None:
        return None
    if G.n == 0:
        return []
    return _search(G.adj, H.adj, cells)


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return find_isomorphism(G, H) is not None


def find_nontrivial_automorphism(G: Graph,
                                 coloring: Sequence[int] | None = None
                                 ) -> list[int] | None:
    """A non-identity (color-preserving) automorphism, or None if Aut is
    trivial (trivial on the color classes, when a coloring is given).

    Pivot loop: take the first vertex u in a non-singleton refined cell and
    search for an automorphism moving u inside its cell; if none exists,
    every remaining automorphism fixes u, so u is individualized and the
    loop continues.  Deterministic given the fixed cell/target ordering.
    """
    if coloring is not None and len(coloring) != G.n:
        raise ValueError("coloring must assign a color to every vertex")
    if G.n == 0:
        return None
    cells = _initial_cells(G.n, coloring, coloring)
    adj = G.adj
    while True:
        cells = _refine(adj, adj, cells)
        if cells is None:  # cannot happen for identical sides; guard anyway
            return None
        pivot = None
        for idx, (cell_d, _) in enumerate(cells):
            if cell_d.bit_count() > 1:
                pivot = idx
                break
        if pivot is None:
            return None
        cell_d, cell_i = cells[pivot]
        u = (cell_d & -cell_d).bit_length() - 1
        for w in bits(cell_i):
            if w == u:
                continue
            found = _search(adj, adj, _individualize(cells, pivot, u, w))
            if found is not None:
                return found
        cells = _individualize(cells, pivot, u, u)


def find_color_preserving_automorphism(G: Graph, coloring: Sequence[int]
                                       ) -> list[int] | None:
    """Non-identity automorphism phi with coloring[phi(v)] == coloring[v]."""
    return find_nontrivial_automorphism(G, coloring)


def is_distinguishing(G: Graph, coloring: Sequence[int]) -> bool:
    return find_color_preserving_automorphism(G, coloring) is None


def is_automorphism(G: Graph, perm: Sequence[int]) -> bool:
    """Independent re-check: perm is a bijection preserving adjacency."""
    if sorted(perm) != list(range(G.n)):
        return False
    return _is_edge_map(G.adj, G.adj, list(perm))


def preserves_coloring(coloring: Sequence[int], perm: Sequence[int]) -> bool:
    return all(coloring[perm[v]] == coloring[v] for v in range(len(perm)))
