"""Generators for the graph families used throughout the package.

Vertex labeling conventions are part of the public contract:

* Paley ``paley(q)``: vertex i is the field element i of GF(q).
* Dihedral ``dihedral_cayley(spec)``: vertices 0..m-1 are the rotations
  rho^i, vertices m..2m-1 are the reflections rho^j*sigma (j = id - m).
* Circulant ``circulant(spec)`` / ``cycle_power(n, k)``: vertex i is i in Z_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graphs import Graph, build_graph, join


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite(s: int, t: int) -> Graph:
    return complete_multipartite([s, t])


def complete_multipartite(sizes: list[int]) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be positive and nonempty, got {sizes}")
    n = sum(sizes)
    full = (1 << n) - 1
    adj = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        adj.extend([full & ~part] * s)
        start += s
    return Graph(n, tuple(adj))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_power(n: int, k: int) -> Graph:
    """k-th power of the n-cycle: x ~ y iff circular distance <= k."""
    if n < 3:
        raise ValueError(f"cycle power needs n >= 3, got {n}")
    if not 1 <= k <= n // 2:
        raise ValueError(f"cycle power needs 1 <= k <= n//2, got k={k}, n={n}")
    return circulant(CirculantSpec(n, frozenset(range(1, k + 1))))


@dataclass(frozen=True)
class CirculantSpec:
    """Circulant graph on Z_n with connection set S (symmetric closure implied)."""

    n: int
    connection: frozenset[int]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"circulant needs n >= 2, got {self.n}")
        if not self.connection:
            raise ValueError("connection set must be nonempty")
        if any(not 1 <= s <= self.n // 2 for s in self.connection):
            raise ValueError(
                f"connection set must lie in 1..{self.n // 2}, got {sorted(self.connection)}"
            )


def circulant(spec: CirculantSpec) -> Graph:
    n = spec.n
    diffs = set(spec.connection) | {n - s for s in spec.connection}
    adj = []
    for i in range(n):
        row = 0
        for d in diffs:
            row |= 1 << ((i + d) % n)
        adj.append(row & ~(1 << i))
    return Graph(n, tuple(adj))


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PaleySpec:
    """Field size for the Paley graph; prime q with q = 1 (mod 4)."""

    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"Paley field size must be prime, got {self.q}")
        if self.q % 4 != 1:
            raise ValueError(f"Paley needs q = 1 (mod 4), got {self.q} = {self.q % 4} (mod 4)")


def paley(spec: PaleySpec) -> Graph:
    """Paley graph: x ~ y iff x - y is a nonzero quadratic residue mod q."""
    q = spec.q
    residues = {pow(x, 2, q) for x in range(1, (q - 1) // 2 + 1)}
    adj = []
    for i in range(q):
        row = 0
        for d in residues:
            row |= 1 << ((i + d) % q)
        adj.append(row)
    return Graph(q, tuple(adj))


@dataclass(frozen=True)
class DihedralSpec:
    """Cayley graph data on the dihedral group of order 2m.

    The generating set is all nontrivial rotations plus the reflections
    ``rho^f sigma`` for f in ``reflection_exponents`` (|F| = m - k).
    When F is not given, the deterministic default {0, .., m-k-1} is used.
    """

    m: int
    k: int
    reflection_exponents: frozenset[int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"dihedral half-order must be >= 2, got {self.m}")
        if not 1 <= self.k <= 5:
            raise ValueError(f"omitted-reflection count k must be in 1..5, got {self.k}")
        if self.k >= self.m:
            raise ValueError(f"need k < m so that F is nonempty, got k={self.k}, m={self.m}")
        if self.reflection_exponents is None:
            object.__setattr__(
                self, "reflection_exponents", frozenset(range(self.m - self.k))
            )
        F = self.reflection_exponents
        if any(not 0 <= f < self.m for f in F):
            raise ValueError(f"reflection exponents must lie in 0..{self.m - 1}")
        if len(F) != self.m - self.k:
            raise ValueError(f"|F| must be m - k = {self.m - self.k}, got {len(F)}")


def dihedral_cayley(spec: DihedralSpec) -> Graph:
    """Cayley graph with u ~ v iff u * v^{-1} is a generator.

    Both cosets induce K_m; rotation rho^i is adjacent to reflection
    rho^j*sigma exactly when (i + j) mod m lies in F.
    Raises ValueError if the generating set fails to generate (graph
    disconnected), which is checked by orbit closure rather than guessed.
    """
    m = spec.m
    F = spec.reflection_exponents
    n = 2 * m
    rot_mask = (1 << m) - 1
    ref_mask = ((1 << m) - 1) << m
    adj = [0] * n
    for i in range(m):
        adj[i] = rot_mask & ~(1 << i)
        adj[m + i] = ref_mask & ~(1 << (m + i))
    for i in range(m):
        for f in F:
            j = (f - i) % m
            adj[i] |= 1 << (m + j)
            adj[m + j] |= 1 << i
    G = Graph(n, tuple(adj))
    if not G.is_connected():
        raise ValueError("generating set does not generate the dihedral group")
    return G


def default_H(r: int) -> Graph:
    """Canonical companion graph on 2r-1 vertices with independence <= r-1.

    Returns the square of the (2r-1)-cycle, whose independence number is
    floor((2r-1)/3) <= r-1.  For r = 2 the square degenerates to K_3.
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    n = 2 * r - 1
    return cycle_power(n, min(2, n // 2))


FAMILY_TAGS = ("G1", "G2", "G3", "G4")


@dataclass(frozen=True)
class ApplicationSpec:
    """Parameters for one join-family instance X v H.

    Shared constraints: r > 6 and 3r+3 <= n <= r^2, with a = n-2r+1 and
    b = 2r-1.  ``H`` defaults to ``default_H(r)``.  Family-specific data:
    G2 derives the Paley field size a; G3 takes (k, F) with a = 2m; G1 and
    G4 take nothing extra.
    """

    tag: str
    r: int
    n: int
    H: Graph | None = None
    dihedral_k: int | None = None
    dihedral_F: frozenset[int] | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"family tag must be one of {FAMILY_TAGS}, got {self.tag!r}")
        if self.r <= 6:
            raise ValueError(f"family parameter requires r > 6, got r={self.r}")
        lo, hi = 3 * self.r + 3, self.r * self.r
        if not lo <= self.n <= hi:
            raise ValueError(
                f"order must satisfy 3r+3 <= n <= r^2, i.e. {lo} <= n <= {hi}, got n={self.n}"
            )

    @property
    def a(self) -> int:
        return self.n - 2 * self.r + 1

    @property
    def b(self) -> int:
        return 2 * self.r - 1


def circulant_power_exponent(a: int, r: int) -> int:
    """Cycle-power exponent t = max{ceil(a/(r-1))-1, ceil((a-b)/2), ceil((r+2)/2)}."""
    b = 2 * r - 1
    return max(
        math.ceil(a / (r - 1)) - 1,
        math.ceil((a - b) / 2),
        math.ceil((r + 2) / 2),
    )


def application_base_graph(spec: ApplicationSpec) -> Graph:
    """The family-specific base graph X on a vertices."""
    a, b, r = spec.a, spec.b, spec.r
    if spec.tag == "G1":
        return complete(a)
    if spec.tag == "G2":
        cap = min(4 * r - 3, (r - 1) ** 2)
        if not 2 * r + 5 <= a:
            raise ValueError(f"G2 requires 2r+5 <= a, i.e. {2 * r + 5} <= {a}")
        if not a <= cap:
            raise ValueError(f"G2 requires a <= min(4r-3, (r-1)^2) = {cap}, got a={a}")
        return paley(PaleySpec(a))  # PaleySpec checks primality and a = 1 (mod 4)
    if spec.tag == "G3":
        if a % 2 != 0:
            raise ValueError(f"G3 requires even a = 2m, got a={a}")
        if not a >= r + 8:
            raise ValueError(f"G3 requires a = 2m >= r+8, i.e. {a} >= {r + 8}")
        k = 1 if spec.dihedral_k is None else spec.dihedral_k
        return dihedral_cayley(DihedralSpec(a // 2, k, spec.dihedral_F))
    t = circulant_power_exponent(a, r)
    if not 2 * t <= b:
        raise ValueError(f"G4 requires 2t <= b with t={t}, b={b}")
    return cycle_power(a, t)


def application_graph(spec: ApplicationSpec) -> Graph:
    """Join X v H for the requested family instance.

    The companion H must have b = 2r-1 vertices and independence number at
    most r-1; the latter is verified exactly at build time.
    """
    from .invariants import independence_number

    H = default_H(spec.r) if spec.H is None else spec.H
    if H.n != spec.b:
        raise ValueError(f"H must have b = 2r-1 = {spec.b} vertices, got {H.n}")
    alpha, _ = independence_number(H)
    if alpha > spec.r - 1:
        raise ValueError(
            f"H must satisfy alpha(H) <= r-1 = {spec.r - 1}, got alpha(H) = {alpha}"
        )
    return join(application_base_graph(spec), H)
