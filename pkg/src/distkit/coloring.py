"""Proper colorings, exact chromatic numbers, and distinguishing search.

Colorings are plain lists ``color[v]`` of small nonnegative ints.  List
assignments are per-vertex sequences of distinct color ids whose order is
significant (prefix slicing in the composition engine relies on it).

The distinguishing searches share one trick: every time a candidate
coloring is rejected, the automorphism that rejected it is cached and
tried first on later candidates, so the exact refinement search only runs
on colorings that survive the cheap prefilter.  The final verdict on any
returned coloring is always the exact search.
"""

from __future__ import annotations

import random
from typing import Sequence

from .errors import Budget
from .graphs import Graph, bits
from .symmetry import find_color_preserving_automorphism, preserves_coloring


def is_proper(G: Graph, coloring: Sequence[int]) -> bool:
    """True iff no edge joins two vertices of the same color."""
    if len(coloring) != G.n:
        raise ValueError("coloring must assign a color to every vertex")
    for u in range(G.n):
        for v in bits(G.adj[u] >> (u + 1) << (u + 1)):
            if coloring[u] == coloring[v]:
                return False
    return True


def greedy_coloring(G: Graph) -> list[int]:
    """DSATUR greedy: highest saturation first, ties by degree then index."""
    n = G.n
    colors = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] == -1),
            key=lambda u: (len(sat[u]), G.degree(u), -u),
        )
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        for w in bits(G.adj[v]):
            sat[w].add(c)
    return colors


def _greedy_clique(G: Graph) -> list[int]:
    if G.n == 0:
        return []
    v = max(range(G.n), key=lambda u: (G.degree(u), -u))
    clique = [v]
    cand = G.adj[v]
    while cand:
        w = max(bits(cand), key=lambda u: ((G.adj[u] & cand).bit_count(), -u))
        clique.append(w)
        cand &= G.adj[w]
    return clique


def chromatic_number(G: Graph, budget: Budget | None = None) -> int:
    """Exact chromatic number by DSATUR-style branch and bound."""
    n = G.n
    if n == 0:
        return 0
    if G.edge_count() == 0:
        return 1
    if budget is None:
        budget = Budget(what="chromatic number")
    ub = max(greedy_coloring(G)) + 1
    clique = _greedy_clique(G)
    lb = len(clique)
    if lb == ub:
        return ub

    best = ub
    colors = [-1] * n
    for i, v in enumerate(clique):
        colors[v] = i

    def pick() -> int:
        chosen, key = -1, None
        for u in range(n):
            if colors[u] != -1:
                continue
            seen = {colors[w] for w in bits(G.adj[u]) if colors[w] != -1}
            k = (len(seen), G.degree(u), -u)
            if key is None or k > key:
                chosen, key = u, k
        return chosen

    def bt(done: int, used: int) -> None:
        nonlocal best
        budget.spend()
        if used >= best:
            return
        if done == n:
            best = used
            return
        v = pick()
        banned = {colors[w] for w in bits(G.adj[v]) if colors[w] != -1}
        for c in range(min(used + 1, best - 1)):
            if c in banned:
                continue
            colors[v] = c
            bt(done + 1, max(used, c + 1))
            colors[v] = -1
            if best == lb:
                return

    bt(len(clique), len(clique))
    return best


class _DistinguishingChecker:
    """Exact distinguishing test with a cache of known spoiler automorphisms."""

    def __init__(self, G: Graph):
        self.G = G
        self.spoilers: list[list[int]] = []

    def check(self, coloring: Sequence[int]) -> bool:
        for phi in self.spoilers:
            if preserves_coloring(coloring, phi):
                return False
        phi = find_color_preserving_automorphism(self.G, coloring)
        if phi is None:
            return True
        self.spoilers.append(phi)
        return False


def distinguishing_proper_coloring(G: Graph, k: int,
                                   budget: Budget | None = None
                                   ) -> list[int] | None:
    """A proper distinguishing coloring using at most k distinct colors,
    or None if exhaustive search proves none exists.

    Enumerates proper colorings in canonical (first-occurrence-minimal)
    form along a fixed max-degree-first vertex order; distinguishing
    status is invariant under bijective recoloring, so the canonical
    representatives cover all colorings.
    """
    if k < 1:
        raise ValueError(f"color count must be positive, got {k}")
    n = G.n
    if n == 0:
        return []
    if budget is None:
        budget = Budget(what="distinguishing coloring search")
    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    colors = [-1] * n
    checker = _DistinguishingChecker(G)

    def bt(pos: int, used: int) -> list[int] | None:
        budget.spend()
        if pos == n:
            if checker.check(colors):
                return list(colors)
            return None
        v = order[pos]
        banned = {colors[w] for w in bits(G.adj[v]) if colors[w] != -1}
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            colors[v] = c
            found = bt(pos + 1, max(used, c + 1))
            if found is not None:
                return found
            colors[v] = -1
        return None

    return bt(0, 0)


def chi_D(G: Graph, budget: Budget | None = None,
          max_colors: int | None = None) -> tuple[int, list[int]]:
    """Exact distinguishing chromatic number with a witness coloring.

    Searches color counts upward from the chromatic number; always
    terminates at n colors (an injective coloring is distinguishing).
    Raises ValueError if ``max_colors`` is proven insufficient.
    """
    if G.n == 0:
        return 0, []
    if budget is None:
        budget = Budget(what="distinguishing chromatic number")
    top = G.n if max_colors is None else max_colors
    start = chromatic_number(G, budget)
    for k in range(start, top + 1):
        witness = distinguishing_proper_coloring(G, k, budget)
        if witness is not None:
            return k, witness
    raise ValueError(f"no proper distinguishing coloring with <= {top} colors")


def find_L_distinguishing(G: Graph, lists: Sequence[Sequence[int]],
                          budget: Budget | None = None,
                          prefer_fresh: bool = False) -> list[int] | None:
    """A proper distinguishing coloring drawn from per-vertex lists.

    Exhaustive backtracking; None means no such coloring exists.  With
    ``prefer_fresh`` the search tries colors unused so far first (the
    explored space is unchanged, only its order), which reaches spread-out
    colorings quickly on large lists.
    """
    n = G.n
    if len(lists) != n:
        raise ValueError("need one color list per vertex")
    for v, lst in enumerate(lists):
        if len(set(lst)) != len(lst):
            raise ValueError(f"list for vertex {v} has repeated colors")
    if budget is None:
        budget = Budget(what="list-distinguishing search")
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    colors: list[int | None] = [None] * n
    used: dict[int, int] = {}
    checker = _DistinguishingChecker(G)

    def bt(pos: int) -> list[int] | None:
        budget.spend()
        if pos == n:
            out = [colors[v] for v in range(n)]
            if checker.check(out):
                return out
            return None
        v = order[pos]
        banned = {colors[w] for w in bits(G.adj[v]) if colors[w] is not None}
        choices = [c for c in lists[v] if c not in banned]
        if prefer_fresh:
            choices.sort(key=lambda c: (used.get(c, 0) > 0,))
        for c in choices:
            colors[v] = c
            used[c] = used.get(c, 0) + 1
            found = bt(pos + 1)
            if found is not None:
                return found
            used[c] -= 1
            colors[v] = None
        return None

    return bt(0)


def sample_chi_DL_evidence(G: Graph, k: int, trials: int, seed: int,
                           budget_limit: int | None = None) -> dict:
    """Adversarial sampling over uniform size-k list assignments.

    Trial 0 is always the constant assignment {0..k-1} (the canonical
    adversary: it reduces list-distinguishing to plain distinguishing);
    the remaining trials draw each list uniformly from a 2k-color palette.
    Reports the first assignment admitting no distinguishing proper
    coloring, which witnesses that k lists are not always enough.
    """
    if k < 1:
        raise ValueError(f"list size must be positive, got {k}")
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    rng = random.Random(seed)
    palette = list(range(2 * k))
    report: dict = {
        "k": k,
        "trials": trials,
        "seed": seed,
        "palette_size": len(palette),
        "counterexample": None,
        "trials_run": 0,
    }
    for trial in range(trials):
        if trial == 0:
            lists = [tuple(range(k)) for _ in range(G.n)]
        else:
            lists = [tuple(sorted(rng.sample(palette, k))) for _ in range(G.n)]
        budget = Budget(budget_limit, what=f"chi_DL sampling trial {trial}")
        coloring = find_L_distinguishing(G, lists, budget=budget)
        report["trials_run"] = trial + 1
        if coloring is None:
            report["counterexample"] = {
                "trial": trial,
                "lists": [list(lst) for lst in lists],
            }
            return report
    return report
