"""Pure-Python kernels: canonical labeling and 5-cycle counting.

Graphs are passed as (n, masks) where masks[v] is the neighborhood bitmask
of vertex v. The canonical key of a graph is the minimum, over all vertex
orderings, of the upper-triangle bit string read in column order
((0,1),(0,2),(1,2),(0,3),...), packed into an int with the first bit most
significant. Column order gives the prefix property that makes
branch-and-bound possible: placing vertex p contributes only its adjacency
bits to the p vertices already placed. It also coincides with the graph6
bit order.
"""

from __future__ import annotations

from itertools import combinations, permutations


def canon_search(n: int, masks: tuple[int, ...], fixed: tuple[int, ...] = ()) -> tuple[int, tuple[int, ...]]:
    """Minimize the packed upper-triangle bits over vertex orderings.

    Vertices listed in `fixed` are pinned to the first positions in the
    given order; only the rest are permuted. Returns (key, order) where
    order[p] is the input vertex placed at position p.
    """
    if n == 0:
        return 0, ()
    total_bits = n * (n - 1) // 2

    placed = list(fixed)
    cur = 0
    length = 0
    for j, v in enumerate(placed):
        bits = 0
        mv = masks[v]
        for i in range(j):
            bits = (bits << 1) | ((mv >> placed[i]) & 1)
        cur = (cur << j) | bits
        length += j

    best_key: int | None = None
    best_perm: tuple[int, ...] = ()
    in_fixed = set(fixed)
    free = [v for v in range(n) if v not in in_fixed]

    def descend(placed: list[int], cur: int, length: int, remaining: list[int]) -> None:
        nonlocal best_key, best_perm
        if not remaining:
            if best_key is None or cur < best_key:
                best_key = cur
                best_perm = tuple(placed)
            return
        j = len(placed)
        cands = []
        for v in remaining:
            bits = 0
            mv = masks[v]
            for i in range(j):
                bits = (bits << 1) | ((mv >> placed[i]) & 1)
            cands.append((bits, v))
        cands.sort()
        tried: list[int] = []
        for bits, v in cands:
            twin = False
            for u in tried:
                pair = ~((1 << u) | (1 << v))
                if masks[u] & pair == masks[v] & pair:
                    twin = True
                    break
            if twin:
                continue
            tried.append(v)
            ncur = (cur << j) | bits
            nlength = length + j
            if best_key is not None and ncur > (best_key >> (total_bits - nlength)):
                continue
            descend(placed + [v], ncur, nlength, [w for w in remaining if w != v])

    descend(placed, cur, length, free)
    assert best_key is not None
    return best_key, best_perm


# The 12 distinct 5-cycles on a fixed 5-set, as edge lists; orientation and
# rotation fixed by anchoring position 0 and requiring perm[0] < perm[-1].
_CYCLES5: list[tuple[tuple[int, int], ...]] = []
for _perm in permutations(range(1, 5)):
    if _perm[0] > _perm[-1]:
        continue
    _cyc = (0,) + _perm
    _CYCLES5.append(tuple((_cyc[i], _cyc[(i + 1) % 5]) for i in range(5)))
assert len(_CYCLES5) == 12


def count_c5(n: int, masks: tuple[int, ...]) -> int:
    """Number of 5-cycle subgraphs, by scanning all 5-subsets."""
    if n < 5:
        return 0
    total = 0
    for sub in combinations(range(n), 5):
        for edges in _CYCLES5:
            for a, b in edges:
                if not (masks[sub[a]] >> sub[b]) & 1:
                    break
            else:
                total += 1
    return total
