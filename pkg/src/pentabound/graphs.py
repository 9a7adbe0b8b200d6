"""Small-graph core: exact representation, canonical labeling, enumeration,
and subgraph statistics for graphs on at most 10 vertices.

A graph is stored as a tuple of neighborhood bitmasks. The canonical form
of a graph is the relabeling that minimizes the upper-triangle bit string
in column order; two graphs are isomorphic iff their canonical keys are
equal. Canonicalization is a brute-force minimum over vertex orderings
(branch-and-bound with twin skipping), which is exact and fast enough at
this scale.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from pentabound._kernels import canon_search, count_c5

MAX_CANON_N = 10
MAX_ENUM_N = 8


class Graph:
    """Immutable undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "masks")

    def __init__(self, n: int, masks: tuple[int, ...]):
        self.n = n
        self.masks = masks

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        masks = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError("loops not allowed")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError("vertex out of range")
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return cls(n, tuple(masks))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        n = len(matrix)
        masks = [0] * n
        for i in range(n):
            if matrix[i][i]:
                raise ValueError("nonzero diagonal")
            for j in range(n):
                if matrix[i][j] != matrix[j][i]:
                    raise ValueError("matrix not symmetric")
                if i != j and matrix[i][j]:
                    masks[i] |= 1 << j
        return cls(n, tuple(masks))

    @classmethod
    def from_upper_bits(cls, n: int, bits: int) -> "Graph":
        """Inverse of upper_bits: unpack column-order upper-triangle bits."""
        masks = [0] * n
        total = n * (n - 1) // 2
        pos = 0
        for j in range(1, n):
            for i in range(j):
                if (bits >> (total - 1 - pos)) & 1:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
                pos += 1
        return cls(n, tuple(masks))

    def upper_bits(self) -> int:
        """Upper-triangle bits in column order ((0,1),(0,2),(1,2),...), MSB first."""
        bits = 0
        for j in range(1, self.n):
            mj = self.masks[j]
            for i in range(j):
                bits = (bits << 1) | ((mj >> i) & 1)
        return bits

    def has_edge(self, a: int, b: int) -> bool:
        return bool((self.masks[a] >> b) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for j in range(self.n) for i in range(j) if (self.masks[j] >> i) & 1]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def relabel(self, order) -> "Graph":
        """Relabeled copy; order[p] is the old vertex placed at new position p."""
        inv = [0] * self.n
        for p, v in enumerate(order):
            inv[v] = p
        masks = [0] * self.n
        for v in range(self.n):
            m = self.masks[v]
            new = 0
            while m:
                low = m & -m
                new |= 1 << inv[low.bit_length() - 1]
                m ^= low
            masks[inv[v]] = new
        return Graph(self.n, tuple(masks))

    def induced(self, subset) -> "Graph":
        """Induced subgraph on the given vertices, relabeled in sorted order."""
        sub = sorted(subset)
        masks = []
        for v in sub:
            m = 0
            for p, w in enumerate(sub):
                if (self.masks[v] >> w) & 1:
                    m |= 1 << p
            masks.append(m)
        return Graph(len(sub), tuple(masks))

    def add_vertex(self, neighbors: int) -> "Graph":
        """New graph with vertex n adjacent to the bitmask `neighbors`."""
        masks = list(self.masks)
        for v in range(self.n):
            if (neighbors >> v) & 1:
                masks[v] |= 1 << self.n
        masks.append(neighbors)
        return Graph(self.n + 1, tuple(masks))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full ^ m ^ (1 << v)) for v, m in enumerate(self.masks)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph({self.n}, edges={self.edges()})"


class CanonGraph(Graph):
    """Graph in canonical labeling; canon_key decides isomorphism."""

    __slots__ = ("canon_key",)

    def __init__(self, n: int, masks: tuple[int, ...], canon_key: int):
        super().__init__(n, masks)
        self.canon_key = canon_key

    def __repr__(self) -> str:
        return f"CanonGraph({self.n}, key={self.canon_key}, edges={self.edges()})"


def canonical_form(g) -> CanonGraph:
    """Canonicalize a Graph or an adjacency matrix (list of rows)."""
    if not isinstance(g, Graph):
        g = Graph.from_matrix(g)
    if g.n > MAX_CANON_N:
        raise ValueError(f"canonicalization supports n <= {MAX_CANON_N}")
    if isinstance(g, CanonGraph):
        return g
    key, order = canon_search(g.n, g.masks)
    relabeled = g.relabel(order)
    return CanonGraph(g.n, relabeled.masks, key)


@lru_cache(maxsize=None)
def _canon_key_of_bits(n: int, bits: int) -> int:
    return canon_search(n, Graph.from_upper_bits(n, bits).masks)[0]


def canon_key_of(g: Graph) -> int:
    """Canonical key without materializing the relabeled graph (memoized)."""
    if isinstance(g, CanonGraph):
        return g.canon_key
    return _canon_key_of_bits(g.n, g.upper_bits())


@lru_cache(maxsize=None)
def enumerate_graphs(n: int) -> tuple[CanonGraph, ...]:
    """All isomorphism classes on n vertices, sorted by canonical key."""
    if n < 0 or n > MAX_ENUM_N:
        raise ValueError(f"enumeration supports 0 <= n <= {MAX_ENUM_N}")
    if n == 0:
        return (CanonGraph(0, (), 0),)
    seen: dict[int, CanonGraph] = {}
    for parent in enumerate_graphs(n - 1):
        for neighbors in range(1 << (n - 1)):
            child = parent.add_vertex(neighbors)
            key, order = canon_search(n, child.masks)
            if key not in seen:
                seen[key] = CanonGraph(n, child.relabel(order).masks, key)
    return tuple(seen[k] for k in sorted(seen))


def _embeddings(H: Graph, G: Graph) -> int:
    """Count injective maps V(H) -> V(G) sending edges to edges."""
    order = sorted(range(H.n), key=lambda v: -H.degree(v))
    pos_of = {v: i for i, v in enumerate(order)}
    back_edges = []
    for i, v in enumerate(order):
        back_edges.append([j for j in range(i) if H.has_edge(v, order[j])])
    count = 0
    assigned = [0] * H.n

    def place(i: int, used: int) -> None:
        nonlocal count
        if i == H.n:
            count += 1
            return
        for w in range(G.n):
            if (used >> w) & 1:
                continue
            ok = True
            for j in back_edges[i]:
                if not (G.masks[w] >> assigned[j]) & 1:
                    ok = False
                    break
            if ok:
                assigned[i] = w
                place(i + 1, used | (1 << w))

    place(0, 0)
    return count


def count_subgraphs(H: Graph, G: Graph) -> int:
    """Number of (possibly non-induced) subgraphs of G isomorphic to H."""
    if H.n > G.n:
        return 0
    if G.n > MAX_CANON_N:
        raise ValueError(f"subgraph counting supports |G| <= {MAX_CANON_N}")
    emb = _embeddings(H, G)
    aut = _embeddings(H, H)
    assert emb % aut == 0
    return emb // aut


def pentagon_count(G: Graph) -> int:
    """Number of 5-cycle subgraphs (compiled kernel when available)."""
    return count_c5(G.n, G.masks)


def pentagon_density(G: Graph) -> Fraction:
    """nu(C5, G) / C(n, 5); may exceed 1 since subgraphs are counted."""
    return Fraction(pentagon_count(G), comb(G.n, 5))


def induced_count(H: Graph, G: Graph) -> int:
    """Number of |H|-subsets of V(G) that induce a copy of H."""
    if H.n > G.n:
        return 0
    hkey = canon_key_of(H)
    cnt = 0
    for sub in combinations(range(G.n), H.n):
        if _canon_key_of_bits(H.n, G.induced(sub).upper_bits()) == hkey:
            cnt += 1
    return cnt


def induced_density(H: Graph, G: Graph) -> Fraction:
    """Probability that a uniformly random |H|-subset of V(G) induces H."""
    return Fraction(induced_count(H, G), comb(G.n, H.n))


def clique_number(G: Graph) -> int:
    if G.n == 0:
        return 0
    best = 1
    for sub in range(1, 1 << G.n):
        size = sub.bit_count()
        if size <= best:
            continue
        is_clique = True
        m = sub
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if (G.masks[v] & sub) != sub ^ low:
                is_clique = False
                break
            m ^= low
        if is_clique:
            best = size
    return best


def multipartite_graph(parts) -> Graph:
    """Complete multipartite graph, not canonicalized (any order supported
    by the counting kernels)."""
    parts = list(parts)
    if any(p < 1 for p in parts):
        raise ValueError("part sizes must be >= 1")
    n = sum(parts)
    masks = []
    start = 0
    full = (1 << n) - 1
    for p in parts:
        block = ((1 << p) - 1) << start
        for _ in range(p):
            masks.append(full ^ block)
        start += p
    return Graph(n, tuple(masks))


def complete_multipartite(parts) -> CanonGraph:
    g = multipartite_graph(parts)
    if g.n > MAX_CANON_N:
        raise ValueError(f"materialization supports n <= {MAX_CANON_N}")
    return canonical_form(g)


def turan_parts(k: int, n: int) -> tuple[int, ...]:
    """Balanced part sizes: n mod k parts of size ceil(n/k), the rest floor."""
    if k < 1:
        raise ValueError("k must be >= 1")
    q, r = divmod(n, k)
    return tuple([q + 1] * r + [q] * (k - r))


def turan_graph(k: int, n: int) -> CanonGraph:
    return complete_multipartite([p for p in turan_parts(k, n) if p > 0])


def is_complete_multipartite(G: Graph) -> bool:
    """True iff the complement is a disjoint union of cliques."""
    comp = G.complement()
    seen = 0
    for v in range(G.n):
        if (seen >> v) & 1:
            continue
        cell = comp.masks[v] | (1 << v)
        m = cell
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if comp.masks[u] | (1 << u) != cell:
                return False
            m ^= low
        seen |= cell
    return True


def edit_distance(G: Graph, H: Graph) -> int:
    """Minimum number of adjacency changes over vertex bijections."""
    if G.n != H.n:
        raise ValueError("edit distance requires equal orders")
    if G.n > MAX_ENUM_N:
        raise ValueError(f"edit distance supports n <= {MAX_ENUM_N}")
    gbits = G.upper_bits()
    best = None
    from itertools import permutations

    for order in permutations(range(H.n)):
        hbits = H.relabel(order).upper_bits()
        d = (gbits ^ hbits).bit_count()
        if best is None or d < best:
            best = d
            if best == 0:
                break
    return best if best is not None else 0


# graph6: McKay's ASCII format for undirected graphs, n <= 62 (one-byte
# order field). The data bits are exactly upper_bits() in this module's
# column order.

def graph6_encode(G: Graph) -> str:
    if G.n > 62:
        raise ValueError("graph6 encoder supports n <= 62")
    out = [chr(63 + G.n)]
    total = G.n * (G.n - 1) // 2
    bits = G.upper_bits()
    padded = total + (-total) % 6
    bits <<= padded - total
    for i in range(padded // 6):
        group = (bits >> (padded - 6 * (i + 1))) & 0x3F
        out.append(chr(63 + group))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    text = text.strip()
    if not text:
        raise ValueError("empty graph6 string")
    n = ord(text[0]) - 63
    if not 0 <= n <= 62:
        raise ValueError("unsupported graph6 order field")
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    data = text[1 : 1 + need]
    if len(data) != need:
        raise ValueError("truncated graph6 string")
    bits = 0
    for ch in data:
        group = ord(ch) - 63
        if not 0 <= group < 64:
            raise ValueError("invalid graph6 byte")
        bits = (bits << 6) | group
    bits >>= (need * 6 - total)
    return Graph.from_upper_bits(n, bits)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)
