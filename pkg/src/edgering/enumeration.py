"""Exhaustive enumeration of small connected graphs up to isomorphism.

Graphs on n vertices are generated by attaching vertex n to every nonempty
neighborhood of every representative on n - 1 vertices (every connected graph
has a non-cut vertex, so nothing is missed) and deduplicated by a canonical
form: the minimum adjacency code over vertex orderings compatible with the
stable color refinement. Two graphs receive the same code exactly when they
are isomorphic, because a code reconstructs its graph.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import factorial

import numpy as np

from .graphs import Graph

MAX_N = 8
_PY_PERM_LIMIT = 1536


@lru_cache(maxsize=None)
def edge_slots(n: int) -> tuple[tuple[int, int], ...]:
    """Fixed bit order for vertex pairs (i < j), 0-based."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def graph_to_bits(g: Graph) -> int:
    slots = edge_slots(g.d)
    index = {pair: k for k, pair in enumerate(slots)}
    bits = 0
    for i, j in g.edges:
        bits |= 1 << index[(i - 1, j - 1)]
    return bits


def bits_to_graph(n: int, bits: int) -> Graph:
    slots = edge_slots(n)
    edges = [(i + 1, j + 1) for k, (i, j) in enumerate(slots) if bits >> k & 1]
    return Graph(n, tuple(edges))


def _adj_masks(n: int, bits: int) -> list[int]:
    masks = [0] * n
    for k, (i, j) in enumerate(edge_slots(n)):
        if bits >> k & 1:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    return masks


def _is_connected_bits(n: int, bits: int) -> bool:
    masks = _adj_masks(n, bits)
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        v = frontier
        while v:
            low = (v & -v).bit_length() - 1
            v &= v - 1
            nxt |= masks[low]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def _stable_colors(n: int, masks: list[int]) -> list[int]:
    """Iterated neighbor-color refinement with canonical color ids."""
    colors = [bin(m).count("1") for m in masks]
    while True:
        sigs = []
        for v in range(n):
            nb = []
            m = masks[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                nb.append(colors[u])
            sigs.append((colors[v], tuple(sorted(nb))))
        ids = {sig: k for k, sig in enumerate(sorted(set(sigs)))}
        new = [ids[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _code_for_order(n: int, masks: list[int], order: tuple[int, ...]) -> int:
    pos = [0] * n
    for slot, v in enumerate(order):
        pos[v] = slot
    code = 0
    for k, (i, j) in enumerate(edge_slots(n)):
        if masks[order[i]] >> order[j] & 1:
            code |= 1 << k
    return code


@lru_cache(maxsize=4)
def _perm_edge_map(n: int) -> np.ndarray:
    """For every permutation, where each edge slot lands; used by the
    vectorized full-permutation canonical code."""
    slots = edge_slots(n)
    index = {pair: k for k, pair in enumerate(slots)}
    perms = list(permutations(range(n)))
    table = np.zeros((len(perms), len(slots)), dtype=np.int32)
    for p_idx, perm in enumerate(perms):
        for k, (i, j) in enumerate(slots):
            a, b = perm[i], perm[j]
            table[p_idx, k] = index[(a, b) if a < b else (b, a)]
    return table


def _canonical_full(n: int, bits: int) -> int:
    table = _perm_edge_map(n)
    vec = np.array([(bits >> k) & 1 for k in range(len(edge_slots(n)))], dtype=np.int64)
    weights = (1 << np.arange(len(vec))).astype(np.int64)
    codes = vec[table] @ weights
    return int(codes.min())


@lru_cache(maxsize=1 << 20)
def canonical_bits(n: int, bits: int) -> int:
    """Canonical adjacency code; equal codes mean isomorphic graphs."""
    masks = _adj_masks(n, bits)
    colors = _stable_colors(n, masks)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    ordered = [classes[c] for c in sorted(classes)]
    count = 1
    for cls in ordered:
        count *= factorial(len(cls))
    if count > _PY_PERM_LIMIT:
        # color classes too coarse to prune; fall back to all n! orderings
        return _canonical_full(n, bits)
    best = None
    for pieces in product(*(permutations(cls) for cls in ordered)):
        order = tuple(v for piece in pieces for v in piece)
        code = _code_for_order(n, masks, order)
        if best is None or code < best:
            best = code
    return best


@lru_cache(maxsize=None)
def connected_graph_bits(n: int) -> tuple[int, ...]:
    """Canonical codes of all connected graphs on exactly n vertices."""
    if not (1 <= n <= MAX_N):
        raise ValueError(f"supported range is 1..{MAX_N} vertices")
    if n == 1:
        return (0,)
    prev = connected_graph_bits(n - 1)
    prev_slot_count = len(edge_slots(n - 1))
    slots = edge_slots(n)
    index = {pair: k for k, pair in enumerate(slots)}
    # bits of the (n-1)-graph occupy the same slot order prefix only if the
    # slot enumeration nests; it does not, so remap explicitly
    remap = [index[(i, j)] for (i, j) in edge_slots(n - 1)]
    new_vertex_slots = [index[(i, n - 1)] for i in range(n - 1)]
    out: set[int] = set()
    for old in prev:
        base = 0
        for k in range(prev_slot_count):
            if old >> k & 1:
                base |= 1 << remap[k]
        for nb in range(1, 1 << (n - 1)):
            bits = base
            m = nb
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                bits |= 1 << new_vertex_slots[i]
            out.add(canonical_bits(n, bits))
    return tuple(sorted(out))


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on exactly n vertices, one per isomorphism class."""
    return [bits_to_graph(n, bits) for bits in connected_graph_bits(n)]


def connected_graphs_up_to(n_max: int) -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, n_max + 1):
        out.extend(connected_graphs(n))
    return out


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group, by direct permutation counting."""
    n = g.d
    bits = graph_to_bits(g)
    masks = _adj_masks(n, bits)
    if n >= 7:
        table = _perm_edge_map(n)
        vec = np.array([(bits >> k) & 1 for k in range(len(edge_slots(n)))], dtype=np.int64)
        permuted = vec[table]
        return int(np.sum(np.all(permuted == vec[None, :], axis=1)))
    count = 0
    for perm in permutations(range(n)):
        if _code_for_order(n, masks, perm) == bits:
            count += 1
    return count
