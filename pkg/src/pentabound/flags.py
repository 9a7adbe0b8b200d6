"""Flag algebra on small graphs: types (graphs on s labeled vertices),
typed flags, flag densities, pair densities, products, and the
unlabelling operator.

A flag is a graph with an injective labeling of [s]; flag isomorphisms
must fix every label. Canonicalization reuses the graph kernel with the
label vertices pinned to the first positions, so a flag's key encodes the
type in its first s*(s-1)/2 bits. Catalog flags live on at most 6
vertices; density computations accept larger hosts.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

from pentabound._kernels import canon_search
from pentabound.graphs import CanonGraph, Graph, canonical_form
from pentabound.polynomials import RationalFunction

MAX_FLAG_N = 6
MAX_TYPE_S = 3
MAX_HOST_N = 16


def induced_ordered(g: Graph, order) -> Graph:
    """Induced subgraph with vertices taken in the given order."""
    order = list(order)
    masks = []
    for v in order:
        m = 0
        for p, w in enumerate(order):
            if (g.masks[v] >> w) & 1:
                m |= 1 << p
        masks.append(m)
    return Graph(len(order), tuple(masks))


@lru_cache(maxsize=None)
def _flag_key_of_bits(n: int, s: int, bits: int) -> int:
    g = Graph.from_upper_bits(n, bits)
    return canon_search(n, g.masks, tuple(range(s)))[0]


def flag_key(g: Graph, labels: tuple[int, ...]) -> int:
    """Canonical key of (g, labels) under label-preserving isomorphism."""
    rest = [v for v in range(g.n) if v not in labels]
    arranged = induced_ordered(g, list(labels) + rest)
    return _flag_key_of_bits(g.n, len(labels), arranged.upper_bits())


class TypedFlag:
    """Canonical representative of a flag: label i sits at vertex i and the
    unlabeled part minimizes the key."""

    __slots__ = ("graph", "s", "key")

    def __init__(self, graph: Graph, labels):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct vertices")
        if len(labels) > MAX_TYPE_S:
            raise ValueError(f"type size capped at {MAX_TYPE_S}")
        if graph.n > MAX_FLAG_N:
            raise ValueError(f"catalog flags capped at {MAX_FLAG_N} vertices")
        rest = [v for v in range(graph.n) if v not in labels]
        arranged = induced_ordered(graph, list(labels) + rest)
        key, order = canon_search(graph.n, arranged.masks, tuple(range(len(labels))))
        self.graph = arranged.relabel(order)
        self.s = len(labels)
        self.key = key

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(range(self.s))

    def type_graph(self) -> Graph:
        """The type: the labeled part, vertex i carrying label i."""
        return induced_ordered(self.graph, range(self.s))

    def underlying(self) -> CanonGraph:
        return canonical_form(self.graph)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TypedFlag)
            and self.n == other.n
            and self.s == other.s
            and self.key == other.key
        )

    def __hash__(self) -> int:
        return hash((self.n, self.s, self.key))

    def __repr__(self) -> str:
        return f"TypedFlag(n={self.n}, s={self.s}, key={self.key})"


class HostFlag:
    """A labeled host for density computations; not canonicalized, so it
    may exceed the catalog size cap."""

    __slots__ = ("graph", "labels")

    def __init__(self, graph: Graph, labels):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct vertices")
        if graph.n > MAX_HOST_N:
            raise ValueError(f"hosts capped at {MAX_HOST_N} vertices")
        self.graph = graph
        self.labels = labels

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def s(self) -> int:
        return len(self.labels)


def _as_host(G) -> HostFlag:
    if isinstance(G, HostFlag):
        return G
    if isinstance(G, TypedFlag):
        return HostFlag(G.graph, G.labels)
    raise TypeError("host must be a TypedFlag or HostFlag")


def _type_bits(g: Graph, labels: tuple[int, ...]) -> int:
    return induced_ordered(g, labels).upper_bits()


def enumerate_types(s: int) -> tuple[TypedFlag, ...]:
    """All types of size s up to isomorphism, as fully labeled flags."""
    if s > MAX_TYPE_S:
        raise ValueError(f"type size capped at {MAX_TYPE_S}")
    out = {}
    for bits in range(1 << (s * (s - 1) // 2)):
        f = TypedFlag(Graph.from_upper_bits(s, bits), tuple(range(s)))
        out[f.key] = f
    return tuple(out[k] for k in sorted(out))


@lru_cache(maxsize=None)
def _enumerate_flags_cached(s: int, type_bits: int, ell: int) -> tuple[TypedFlag, ...]:
    sigma = Graph.from_upper_bits(s, type_bits)
    base = TypedFlag(sigma, tuple(range(s)))
    level = {base.key: base}
    for n in range(s + 1, ell + 1):
        nxt: dict[int, TypedFlag] = {}
        for f in level.values():
            for neighbors in range(1 << f.n):
                g = f.graph.add_vertex(neighbors)
                nf = TypedFlag(g, tuple(range(s)))
                if nf.key not in nxt:
                    nxt[nf.key] = nf
        level = nxt
    return tuple(level[k] for k in sorted(level))


def enumerate_flags(sigma, ell: int) -> tuple[TypedFlag, ...]:
    """All sigma-flags on ell vertices up to label-preserving isomorphism,
    sorted by canonical key. sigma is a fully labeled TypedFlag or a Graph
    whose vertex i carries label i."""
    if isinstance(sigma, TypedFlag):
        if sigma.s != sigma.n:
            raise ValueError("type must be fully labeled")
        sgraph = sigma.graph
    else:
        sgraph = sigma
    s = sgraph.n
    if s > MAX_TYPE_S:
        raise ValueError(f"type size capped at {MAX_TYPE_S}")
    if ell > MAX_FLAG_N:
        raise ValueError(f"flag order capped at {MAX_FLAG_N}")
    if ell < s:
        raise ValueError("flag order below type size")
    return _enumerate_flags_cached(s, sgraph.upper_bits(), ell)


def _check_same_type(F: TypedFlag, host: HostFlag) -> None:
    if F.s != host.s:
        raise ValueError("type size mismatch")
    if _type_bits(F.graph, F.labels) != _type_bits(host.graph, host.labels):
        raise ValueError("type mismatch between flag and host")


def flag_density(F: TypedFlag, G) -> Fraction:
    """Probability that the labels plus a uniformly random set of
    |F|-s further host vertices induce a copy of F."""
    host = _as_host(G)
    _check_same_type(F, host)
    extra = F.n - F.s
    if extra < 0 or F.n > host.n:
        raise ValueError("flag larger than host")
    pool = [v for v in range(host.n) if v not in host.labels]
    hits = 0
    for X in combinations(pool, extra):
        sub = induced_ordered(host.graph, list(host.labels) + list(X))
        if _flag_key_of_bits(F.n, F.s, sub.upper_bits()) == F.key:
            hits += 1
    return Fraction(hits, comb(len(pool), extra))


def pair_density(F1: TypedFlag, F2: TypedFlag, G) -> Fraction:
    """Probability that two uniformly random disjoint extension sets induce
    copies of F1 and F2 (full enumeration, exact)."""
    host = _as_host(G)
    _check_same_type(F1, host)
    _check_same_type(F2, host)
    a = F1.n - F1.s
    b = F2.n - F2.s
    pool = [v for v in range(host.n) if v not in host.labels]
    m = len(pool)
    if a + b > m:
        raise ValueError("host too small for disjoint extension sets")
    hits = 0
    base = list(host.labels)
    for X1 in combinations(pool, a):
        sub1 = induced_ordered(host.graph, base + list(X1))
        if _flag_key_of_bits(F1.n, F1.s, sub1.upper_bits()) != F1.key:
            continue
        rest = [v for v in pool if v not in X1]
        for X2 in combinations(rest, b):
            sub2 = induced_ordered(host.graph, base + list(X2))
            if _flag_key_of_bits(F2.n, F2.s, sub2.upper_bits()) == F2.key:
                hits += 1
    return Fraction(hits, comb(m, a) * comb(m - a, b))


def product_expand(F1: TypedFlag, F2: TypedFlag) -> dict[TypedFlag, Fraction]:
    """Expand F1 * F2 over the flags of order |F1| + |F2| - s; the
    coefficient of F is pair_density(F1, F2, F)."""
    if F1.s != F2.s or _type_bits(F1.graph, F1.labels) != _type_bits(F2.graph, F2.labels):
        raise ValueError("type mismatch")
    ell = F1.n + F2.n - F1.s
    if ell > MAX_FLAG_N:
        raise ValueError(f"product order {ell} exceeds cap {MAX_FLAG_N}")
    sigma = induced_ordered(F1.graph, F1.labels)
    out: dict[TypedFlag, Fraction] = {}
    for F in enumerate_flags(sigma, ell):
        c = pair_density(F1, F2, F)
        if c:
            out[F] = c
    return out


def q_sigma(F: TypedFlag) -> Fraction:
    """Probability that a uniformly random injective labeling of the
    underlying graph realizes the flag."""
    n, s = F.n, F.s
    total = 0
    hits = 0
    for theta in permutations(range(n), s):
        total += 1
        if flag_key(F.graph, theta) == F.key:
            hits += 1
    return Fraction(hits, total)


def unlabel(vec: dict[TypedFlag, object]) -> dict[CanonGraph, object]:
    """Linear extension of F -> q_sigma(F) * underlying(F)."""
    out: dict[CanonGraph, object] = {}
    for F, coeff in vec.items():
        q = q_sigma(F)
        if q == 0:
            continue
        H = F.underlying()
        term = q * coeff
        if H in out:
            out[H] = out[H] + term
        else:
            out[H] = term
    return {H: c for H, c in out.items() if not _is_zero_coeff(c)}


def _is_zero_coeff(c) -> bool:
    if isinstance(c, RationalFunction):
        return c.is_zero
    return c == 0


def square_unlabel(terms) -> dict[CanonGraph, RationalFunction]:
    """Unlabelled expansion of (sum_i c_i F_i)^2.

    terms: list of (coefficient, flag) with coefficients rational functions
    in k (plain rationals are lifted). All flags must share the type and
    the order; the square lives on 2*order - s vertices.
    """
    items = [(_lift(c), F) for c, F in terms]
    if not items:
        return {}
    flags = [F for _, F in items]
    s = flags[0].s
    order = flags[0].n
    tbits = _type_bits(flags[0].graph, flags[0].labels)
    for F in flags:
        if F.s != s or F.n != order or _type_bits(F.graph, F.labels) != tbits:
            raise ValueError("square terms must share type and order")
    ell = 2 * order - s
    if ell > MAX_FLAG_N:
        raise ValueError(f"square order {ell} exceeds cap {MAX_FLAG_N}")
    sigma = induced_ordered(flags[0].graph, flags[0].labels)
    out: dict[CanonGraph, RationalFunction] = {}
    zero = RationalFunction.const(0)
    for host in enumerate_flags(sigma, ell):
        val = zero
        for i, (ci, Fi) in enumerate(items):
            for j, (cj, Fj) in enumerate(items):
                if j < i:
                    continue
                p = pair_density(Fi, Fj, host)
                if p == 0:
                    continue
                contrib = ci * cj * p
                if j > i:
                    contrib = contrib * 2
                val = val + contrib
        if val.is_zero:
            continue
        q = q_sigma(host)
        H = host.underlying()
        prev = out.get(H, zero)
        out[H] = prev + q * val
    return {H: c for H, c in out.items() if not c.is_zero}


def _lift(c) -> RationalFunction:
    if isinstance(c, RationalFunction):
        return c
    return RationalFunction.const(c)


def average_square_over_embeddings(coeffs, flags, graph: Graph) -> tuple[Fraction, Fraction]:
    """Average over all injective labelings theta of (sum_i c_i P(F_i,(G,theta)))^2
    and of the disjoint bilinear sum sum_ij c_i c_j P(F_i,F_j;(G,theta)).

    Returns (square_average, bilinear_average). Labelings that do not
    realize the type contribute zero to both. The bilinear average equals
    the unlabelled square expansion evaluated against induced densities;
    the square average is its with-replacement counterpart and is
    nonnegative by construction.
    """
    s = flags[0].s
    tbits = _type_bits(flags[0].graph, flags[0].labels)
    total = 0
    sq_acc = Fraction(0)
    bi_acc = Fraction(0)
    for theta in permutations(range(graph.n), s):
        total += 1
        if _type_bits(graph, theta) != tbits:
            continue
        host = HostFlag(graph, theta)
        dens = [flag_density(F, host) for F in flags]
        lin = sum(c * d for c, d in zip(coeffs, dens))
        sq_acc += lin * lin
        for i, ci in enumerate(coeffs):
            for j, cj in enumerate(coeffs):
                bi_acc += ci * cj * pair_density(flags[i], flags[j], host)
    return sq_acc / total, bi_acc / total


def flag_to_text(F: TypedFlag) -> str:
    """Serialize as graph6 plus a label-map suffix."""
    from pentabound.graphs import graph6_encode

    return graph6_encode(F.graph) + "|θ:" + ",".join(str(v) for v in F.labels)


def flag_from_text(text: str) -> TypedFlag:
    from pentabound.graphs import graph6_decode

    if "|" not in text:
        raise ValueError("missing label-map suffix")
    g6, suffix = text.split("|", 1)
    if suffix.startswith("θ:"):
        body = suffix[2:]
    elif suffix.startswith("t:"):
        body = suffix[2:]
    else:
        raise ValueError("malformed label-map suffix")
    labels = tuple(int(v) for v in body.split(",")) if body else ()
    return TypedFlag(graph6_decode(g6), labels)
