"""The edge polytope: exact dimension, facets, and dilation membership.

Facets are produced two independent ways. `facets()` runs a double
description pass over the vertex list inside a full-dimensional coordinate
chart, entirely in integer arithmetic. `predicted_facets()` instead builds
inequalities combinatorially from the graph: coordinate facets at vertices
whose removal leaves no bipartite component (non-bipartite case) or keeps
the graph connected (bipartite case), and hyperplane facets from independent
sets whose neighborhood structure is connected with a suitable complement.
Both outputs are canonicalized modulo the affine hull so they can be
compared as halfspace sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .graphs import (
    Graph,
    NotConnectedError,
    adjacency,
    connected_components,
    induced_subgraph,
    is_bipartite,
    is_connected,
)


class InvariantViolationError(RuntimeError):
    """An internal cross-check failed; indicates a bug, never bad user input."""


@dataclass(frozen=True)
class FacetInequality:
    """A facet-defining halfspace a.x >= b, canonical modulo the affine hull.

    The normal is a primitive integer vector orthogonal to the hull equations,
    so equal facets compare equal componentwise regardless of how they were
    found. `provenance` records which construction produced the inequality.
    """

    normal: tuple[int, ...]
    offset: int
    provenance: str = "hull"

    def key(self) -> tuple:
        return (self.normal, self.offset)

    def to_dict(self) -> dict:
        return {"normal": list(self.normal), "offset": self.offset, "provenance": self.provenance}


def _edge_vector(d: int, e: tuple[int, int]) -> tuple[int, ...]:
    v = [0] * d
    v[e[0] - 1] = 1
    v[e[1] - 1] = 1
    return tuple(v)


@dataclass
class EdgePolytope:
    """Convex hull of the edge vectors e_i + e_j of a connected graph."""

    graph: Graph
    d: int
    vertices: tuple[tuple[int, ...], ...]
    dim: int
    hull_equations: tuple[tuple[tuple[int, ...], int], ...]
    _facets: tuple[FacetInequality, ...] | None = field(default=None, repr=False)

    def facets(self) -> tuple[FacetInequality, ...]:
        if self._facets is None:
            self._facets = _hull_facets(self)
        return self._facets

    def contains(self, q: int, point) -> str:
        return contains(self, q, point)

    def tight_vertices(self, facet: FacetInequality) -> tuple[int, ...]:
        """Indices (into self.vertices) where the facet inequality is tight."""
        a, b = facet.normal, facet.offset
        return tuple(
            k for k, v in enumerate(self.vertices)
            if sum(ai * vi for ai, vi in zip(a, v)) == b
        )


@lru_cache(maxsize=16384)
def edge_polytope(g: Graph) -> EdgePolytope:
    """Construct the edge polytope of a connected graph with at least one edge."""
    if g.m == 0:
        raise ValueError("edge polytope needs at least one edge")
    if not is_connected(g):
        raise NotConnectedError("edge polytope is defined for connected graphs")
    verts = tuple(_edge_vector(g.d, e) for e in g.edges)
    bip = is_bipartite(g)
    v0 = verts[0]
    diffs = [tuple(a - b for a, b in zip(v, v0)) for v in verts[1:]]
    dim = linalg.rank(diffs)
    expected = g.d - 2 if bip is not None else g.d - 1
    if dim != expected:
        raise InvariantViolationError(
            f"rank-computed dimension {dim} != structural dimension {expected}"
        )
    equations: list[tuple[tuple[int, ...], int]] = [(tuple([1] * g.d), 2)]
    if bip is not None:
        chi = tuple(1 if v in bip.left else 0 for v in g.vertices())
        equations.append((chi, 1))
    for coeffs, rhs in equations:
        for v in verts:
            if sum(c * x for c, x in zip(coeffs, v)) != rhs:
                raise InvariantViolationError("vertex violates an affine hull equation")
    return EdgePolytope(g, g.d, verts, dim, tuple(equations))


# ---------------------------------------------------------------------------
# Canonicalization modulo the affine hull
# ---------------------------------------------------------------------------

def _hull_rows(p: EdgePolytope) -> list[list[Fraction]]:
    return [[Fraction(c) for c in coeffs] + [Fraction(-rhs)] for coeffs, rhs in p.hull_equations]


def canonical_inequality(p: EdgePolytope, normal, offset, provenance: str) -> FacetInequality:
    """Reduce (normal, offset) to the unique representative orthogonal to the hull.

    Adding multiples of hull equations does not change the inequality on the
    polytope, so the orthogonal representative identifies the halfspace.
    """
    basis = _ortho_hull_basis(p)
    vec = [Fraction(x) for x in normal] + [Fraction(-offset)]
    reduced = linalg.project_out(vec, basis)
    ints = linalg.clear_denominators(reduced)
    if all(x == 0 for x in ints):
        raise ValueError("inequality is a hull equation, not a facet candidate")
    return FacetInequality(ints[:-1], -ints[-1], provenance)


@lru_cache(maxsize=16384)
def _ortho_hull_basis_cached(equations: tuple) -> tuple:
    rows = [[Fraction(c) for c in coeffs] + [Fraction(-rhs)] for coeffs, rhs in equations]
    return tuple(tuple(r) for r in linalg.orthogonalize(rows))


def _ortho_hull_basis(p: EdgePolytope):
    return [list(r) for r in _ortho_hull_basis_cached(p.hull_equations)]


# ---------------------------------------------------------------------------
# Hull-side facet computation (double description)
# ---------------------------------------------------------------------------

def _chart_columns(p: EdgePolytope) -> list[int]:
    v0 = p.vertices[0]
    diffs = [[a - b for a, b in zip(v, v0)] for v in p.vertices[1:]]
    cols = linalg.pivot_columns(diffs)
    if len(cols) != p.dim:
        raise InvariantViolationError("chart projection lost rank")
    return cols


def dual_description(points: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], int]]:
    """Facet inequalities (alpha, beta), alpha.x >= beta, of a full-dimensional
    polytope given by its integer points.

    Works on the homogenization (p, 1): facets correspond to extreme rays of
    the dual cone, built incrementally one point-inequality at a time with the
    combinatorial adjacency test.
    """
    n = len(points[0])
    gens = [tuple(pt) + (1,) for pt in points]

    # Reorder so the first n+1 generators are linearly independent; the
    # initial cone is then simplicial and all intermediate cones are pointed.
    indep: list[int] = []
    rest: list[int] = []
    chosen: list[tuple[int, ...]] = []
    for idx, row in enumerate(gens):
        if len(chosen) < n + 1 and linalg.rank(chosen + [row]) > len(chosen):
            chosen.append(row)
            indep.append(idx)
        else:
            rest.append(idx)
    if len(chosen) < n + 1:
        raise InvariantViolationError("points are not full-dimensional in the chart")
    order = indep + rest

    base = [gens[i] for i in order[: n + 1]]
    rays: list[tuple[int, ...]] = []
    for j in range(n + 1):
        rhs = [1 if i == j else 0 for i in range(n + 1)]
        col = linalg.solve(base, rhs)
        rays.append(linalg.clear_denominators(col))

    def dot(a, b) -> int:
        return sum(x * y for x, y in zip(a, b))

    def zero_mask(ray, upto: int) -> int:
        mask = 0
        for k in range(upto):
            if dot(gens[order[k]], ray) == 0:
                mask |= 1 << k
        return mask

    processed = n + 1
    masks = [zero_mask(r, processed) for r in rays]

    for step in range(n + 1, len(order)):
        h = gens[order[step]]
        vals = [dot(h, r) for r in rays]
        if all(v >= 0 for v in vals):
            masks = [m | (1 << step) if vals[k] == 0 else m for k, m in enumerate(masks)]
            processed += 1
            continue
        plus = [k for k, v in enumerate(vals) if v > 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        minus = [k for k, v in enumerate(vals) if v < 0]
        new_rays: list[tuple[int, ...]] = []
        new_masks: list[int] = []
        for k in plus + zero:
            new_rays.append(rays[k])
            new_masks.append(masks[k] | ((1 << step) if vals[k] == 0 else 0))
        seen = set(new_rays)
        for kp in plus:
            for km in minus:
                common = masks[kp] & masks[km]
                if common.bit_count() < n - 1:
                    continue
                adjacent = True
                for other, om in enumerate(masks):
                    if other in (kp, km):
                        continue
                    if common & om == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                lam, mu = vals[kp], -vals[km]
                combo = tuple(mu * a + lam * b for a, b in zip(rays[kp], rays[km]))
                combo = linalg.primitive(combo)
                if combo in seen:
                    continue
                seen.add(combo)
                new_rays.append(combo)
                new_masks.append(zero_mask(combo, step + 1))
        rays, masks = new_rays, new_masks
        processed += 1

    out = []
    for r in rays:
        alpha, beta = r[:-1], -r[-1]
        out.append((tuple(alpha), beta))
    return out


def _hull_facets(p: EdgePolytope) -> tuple[FacetInequality, ...]:
    if p.dim < 1:
        return ()
    cols = _chart_columns(p)
    chart_points = [tuple(v[c] for c in cols) for v in p.vertices]
    raw = dual_description(chart_points)
    facets = []
    for alpha, beta in raw:
        normal = [0] * p.d
        for c, a in zip(cols, alpha):
            normal[c] = a
        facets.append(canonical_inequality(p, normal, beta, "hull"))
    uniq = {f.key(): f for f in facets}
    return tuple(sorted(uniq.values(), key=FacetInequality.key))


def facets(p: EdgePolytope) -> tuple[FacetInequality, ...]:
    return p.facets()


# ---------------------------------------------------------------------------
# Graph-side facet prediction
# ---------------------------------------------------------------------------

def _component_subgraphs(g: Graph, removed: set[int]):
    rest = [v for v in g.vertices() if v not in removed]
    if not rest:
        return []
    sub, kept = induced_subgraph(g, rest)
    comps = connected_components(sub)
    return [frozenset(kept[v - 1] for v in comp) for comp in comps]


def _is_bipartite_on(g: Graph, vertex_set: frozenset[int]) -> bool:
    sub, _ = induced_subgraph(g, sorted(vertex_set))
    return is_bipartite(sub) is not None


def _neighborhood_graph_connected(g: Graph, t: frozenset[int]) -> tuple[bool, frozenset[int]]:
    """Connectivity of the bipartite graph spanned by edges meeting the
    independent set t; returns (connected, neighborhood)."""
    adj = adjacency(g)
    nbhd = frozenset(u for v in t for u in adj[v])
    touched = [e for e in g.edges if e[0] in t or e[1] in t]
    verts = t | nbhd
    if not touched:
        return False, nbhd
    comp = {touched[0][0], touched[0][1]}
    frontier = list(comp)
    link: dict[int, set[int]] = {v: set() for v in verts}
    for a, b in touched:
        link[a].add(b)
        link[b].add(a)
    while frontier:
        v = frontier.pop()
        for u in link[v]:
            if u not in comp:
                comp.add(u)
                frontier.append(u)
    return comp == set(verts), nbhd


def predicted_facets(g: Graph) -> tuple[FacetInequality, ...]:
    """Facets predicted from the graph structure alone (no hull computation).

    Non-bipartite case: x_i >= 0 whenever every component of g - i is
    non-bipartite, plus, for every independent set T whose incident bipartite
    graph is connected and whose complement has only non-bipartite components,
    the inequality sum_{N(T)} x - sum_T x >= 0.

    Bipartite case: x_i >= 0 whenever g - i is connected, plus the analogous
    independent-set inequalities with a nonempty connected complement.
    """
    if not is_connected(g):
        raise NotConnectedError("facet prediction is defined for connected graphs")
    p = edge_polytope(g)
    if p.dim < 1:
        return ()
    bip = is_bipartite(g)
    found: dict[tuple, FacetInequality] = {}

    def record(normal, offset, provenance):
        f = canonical_inequality(p, normal, offset, provenance)
        found.setdefault(f.key(), f)

    for i in g.vertices():
        comps = _component_subgraphs(g, {i})
        if bip is None:
            ok = all(not _is_bipartite_on(g, comp) for comp in comps)
        else:
            ok = len(comps) == 1
        if ok:
            normal = [0] * g.d
            normal[i - 1] = 1
            record(normal, 0, f"coordinate({i})")

    verts = list(g.vertices())
    adj = adjacency(g)
    for mask in range(1, 1 << g.d):
        t = frozenset(verts[k] for k in range(g.d) if mask >> k & 1)
        if any(u in adj[v] for v in t for u in t if u > v):
            continue
        connected_nbhd, nbhd = _neighborhood_graph_connected(g, t)
        if not connected_nbhd:
            continue
        rest = frozenset(g.vertices()) - t - nbhd
        if bip is None:
            comps = _component_subgraphs(g, set(t | nbhd))
            if any(_is_bipartite_on(g, comp) for comp in comps):
                continue
        else:
            if not rest:
                continue
            comps = _component_subgraphs(g, set(t | nbhd))
            if len(comps) != 1:
                continue
        normal = [0] * g.d
        for v in nbhd:
            normal[v - 1] = 1
        for v in t:
            normal[v - 1] = -1
        kind = "fundamental" if bip is None else "acceptable"
        record(normal, 0, f"{kind}({sorted(t)},{sorted(nbhd)})")

    return tuple(sorted(found.values(), key=FacetInequality.key))


# ---------------------------------------------------------------------------
# Dilation membership
# ---------------------------------------------------------------------------

def contains(p: EdgePolytope, q: int, point) -> str:
    """Classify an integer point against the dilation q * P.

    Returns "interior" (relative to the affine span), "boundary", or
    "outside". All arithmetic is exact.
    """
    if q < 1:
        raise ValueError("dilation factor q must be >= 1")
    pt = tuple(point)
    if len(pt) != p.d:
        raise ValueError(f"point has {len(pt)} coordinates, expected {p.d}")
    for coeffs, rhs in p.hull_equations:
        if sum(c * x for c, x in zip(coeffs, pt)) != q * rhs:
            return "outside"
    strict = True
    for f in p.facets():
        val = sum(a * x for a, x in zip(f.normal, pt))
        if val < q * f.offset:
            return "outside"
        if val == q * f.offset:
            strict = False
    return "interior" if strict else "boundary"
