"""Lattice points of dilated edge polytopes, the edge ring's Hilbert function,
the h*-vector, and the regularity of normal edge rings.

Two independent counting routes are kept apart deliberately:

* `lattice_points` enumerates integer vectors satisfying the scaled affine
  hull equations inside the coordinate box and filters by the facet
  inequalities (geometric route);
* `idp_points` accumulates sums of q edge vectors by an iterated sumset
  (ring route; these are the degree-q monomials of the edge ring).

The two agree exactly when the ring is normal, and the comparison is itself
the integer-decomposition test `check_idp`.

Coordinates in a dilation q*P are bounded by q, so points are packed into
single integers base 16 for deduplication; all supported workflows stay at
q <= 15.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import Graph, is_bipartite
from .matching import matching_number
from .normality import is_normal
from .polytope import InvariantViolationError, edge_polytope

MAX_Q = 15
DEFAULT_ROW_BUDGET = 6_000_000


class NotNormalError(ValueError):
    """The requested quantity is only defined for normal edge rings."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured size budget."""


# ---------------------------------------------------------------------------
# Integer-vector plumbing
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _compositions(total: int, parts: int, cap: int) -> np.ndarray:
    """All integer vectors of length `parts` with entries in [0, cap] summing
    to `total`, as a read-only (N, parts) array."""
    if parts == 0:
        arr = np.zeros((1 if total == 0 else 0, 0), dtype=np.int16)
        arr.setflags(write=False)
        return arr
    if parts == 1:
        if 0 <= total <= cap:
            arr = np.array([[total]], dtype=np.int16)
        else:
            arr = np.zeros((0, 1), dtype=np.int16)
        arr.setflags(write=False)
        return arr
    blocks = []
    lo = max(0, total - cap * (parts - 1))
    hi = min(cap, total)
    for v in range(lo, hi + 1):
        tail = _compositions(total - v, parts - 1, cap)
        if len(tail) == 0:
            continue
        head = np.full((len(tail), 1), v, dtype=np.int16)
        blocks.append(np.hstack([head, tail]))
    if not blocks:
        arr = np.zeros((0, parts), dtype=np.int16)
    else:
        arr = np.vstack(blocks)
    arr.setflags(write=False)
    return arr


def _pack(points: np.ndarray) -> np.ndarray:
    d = points.shape[1]
    weights = (16 ** np.arange(d)).astype(np.int64)
    return points.astype(np.int64) @ weights


def _unpack(codes: np.ndarray, d: int) -> list[tuple[int, ...]]:
    out = []
    for code in codes.tolist():
        vec = []
        for _ in range(d):
            vec.append(code & 15)
            code >>= 4
        out.append(tuple(vec))
    return out


def _facet_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    p = edge_polytope(g)
    fs = p.facets()
    if not fs:
        return np.zeros((0, g.d)), np.zeros(0)
    a = np.array([f.normal for f in fs], dtype=np.int64)
    b = np.array([f.offset for f in fs], dtype=np.int64)
    # facet coefficients stay far below 2**26, so float64 dot products are exact
    assert np.abs(a).max() < 1 << 26
    return a.astype(np.float64), b.astype(np.float64)


def _hull_candidates(g: Graph, q: int) -> np.ndarray:
    """Integer vectors satisfying the scaled hull equations within 0..q."""
    bip = is_bipartite(g)
    if bip is None:
        return np.asarray(_compositions(2 * q, g.d, q))
    left = sorted(bip.left)
    right = sorted(bip.right)
    lcomp = np.asarray(_compositions(q, len(left), q))
    rcomp = np.asarray(_compositions(q, len(right), q))
    nl, nr = len(lcomp), len(rcomp)
    if nl == 0 or nr == 0:
        return np.zeros((0, g.d), dtype=np.int16)
    out = np.zeros((nl * nr, g.d), dtype=np.int16)
    out[:, np.array(left) - 1] = np.repeat(lcomp, nr, axis=0)
    out[:, np.array(right) - 1] = np.tile(rcomp, (nl, 1))
    return out


def window_row_cost(g: Graph, q_max: int) -> int:
    """Candidate-row count of the full geometric enumeration up to q_max."""
    bip = is_bipartite(g)
    total = 0
    for q in range(1, q_max + 1):
        if bip is None:
            total += math.comb(2 * q + g.d - 1, g.d - 1)
        else:
            total += math.comb(q + len(bip.left) - 1, len(bip.left) - 1) * math.comb(
                q + len(bip.right) - 1, len(bip.right) - 1
            )
    return total


@lru_cache(maxsize=512)
def _lattice_classified(g: Graph, q: int) -> tuple[np.ndarray, np.ndarray]:
    """(points, strict) for qP: the lattice points as a lexicographically
    sorted int array plus a boolean mask marking relative-interior points."""
    if q > MAX_Q:
        raise BudgetExceededError(f"dilation {q} exceeds the supported bound {MAX_Q}")
    if q == 0:
        pts = np.zeros((1, g.d), dtype=np.int16)
        strict = np.array([False])
        return pts, strict
    cand = _hull_candidates(g, q)
    a, b = _facet_arrays(g)
    if len(cand) == 0:
        return cand, np.zeros(0, dtype=bool)
    if len(a) == 0:
        inside = np.ones(len(cand), dtype=bool)
        strict = np.ones(len(cand), dtype=bool)
    else:
        vals = cand.astype(np.float64) @ a.T
        thresh = q * b
        inside = np.all(vals >= thresh, axis=1)
        strict = np.all(vals > thresh, axis=1)
    pts = cand[inside]
    strict = strict[inside]
    order = np.lexsort(pts.T[::-1]) if len(pts) else np.zeros(0, dtype=int)
    pts = pts[order]
    strict = strict[order]
    pts.setflags(write=False)
    strict.setflags(write=False)
    return pts, strict


def lattice_points(g: Graph, q: int) -> set[tuple[int, ...]]:
    """Integer points of the dilation q * P, enumerated geometrically."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    pts, _ = _lattice_classified(g, q)
    return {tuple(int(x) for x in row) for row in pts}


def interior_lattice_points(g: Graph, q: int) -> set[tuple[int, ...]]:
    """Lattice points in the relative interior of q * P."""
    pts, strict = _lattice_classified(g, q)
    return {tuple(int(x) for x in row) for row in pts[strict]}


def lattice_count(g: Graph, q: int) -> int:
    pts, _ = _lattice_classified(g, q)
    return len(pts)


def interior_count(g: Graph, q: int) -> int:
    _, strict = _lattice_classified(g, q)
    return int(strict.sum())


# ---------------------------------------------------------------------------
# Ring-side counting (sums of edge vectors)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1024)
def _idp_packed(g: Graph, q: int) -> np.ndarray:
    if q > MAX_Q:
        raise BudgetExceededError(f"degree {q} exceeds the supported bound {MAX_Q}")
    if q == 0:
        arr = np.zeros(1, dtype=np.int64)
        arr.setflags(write=False)
        return arr
    deltas = np.array(
        [(16 ** (i - 1)) + (16 ** (j - 1)) for i, j in g.edges], dtype=np.int64
    )
    prev = _idp_packed(g, q - 1)
    sums = (prev[:, None] + deltas[None, :]).ravel()
    arr = np.unique(sums)
    arr.setflags(write=False)
    return arr


def idp_points(g: Graph, q: int) -> set[tuple[int, ...]]:
    """All distinct sums of q edge vectors (the degree-q monomial exponents)."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    return set(_unpack(_idp_packed(g, q), g.d))


def hilbert_function(g: Graph, q: int) -> int:
    """Number of degree-q monomials of the edge ring."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    return len(_idp_packed(g, q))


def check_idp(g: Graph, q_max: int) -> bool:
    """True iff every lattice point of qP is a sum of q edge vectors, q <= q_max."""
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    for q in range(1, q_max + 1):
        pts, _ = _lattice_classified(g, q)
        geo = np.sort(_pack(pts))
        ring = _idp_packed(g, q)
        if len(geo) != len(ring) or not np.array_equal(geo, ring):
            return False
    return True


# ---------------------------------------------------------------------------
# Interior threshold and regularity
# ---------------------------------------------------------------------------

def _interior_candidates(g: Graph, q: int) -> np.ndarray:
    """Integer vectors with all coordinates >= 1 satisfying the hull equations.

    For a normal graph every interior lattice point has all coordinates >= 1
    (verified exhaustively on small graphs by the test suite), so restricting
    the interior search to this slice is lossless and keeps large dilations
    cheap.
    """
    bip = is_bipartite(g)
    if bip is None:
        if 2 * q < g.d:
            return np.zeros((0, g.d), dtype=np.int16)
        return np.asarray(_compositions(2 * q - g.d, g.d, q - 1)) + 1
    left = sorted(bip.left)
    right = sorted(bip.right)
    if q < len(left) or q < len(right):
        return np.zeros((0, g.d), dtype=np.int16)
    lcomp = np.asarray(_compositions(q - len(left), len(left), q - 1)) + 1
    rcomp = np.asarray(_compositions(q - len(right), len(right), q - 1)) + 1
    nl, nr = len(lcomp), len(rcomp)
    if nl == 0 or nr == 0:
        return np.zeros((0, g.d), dtype=np.int16)
    out = np.zeros((nl * nr, g.d), dtype=np.int16)
    out[:, np.array(left) - 1] = np.repeat(lcomp, nr, axis=0)
    out[:, np.array(right) - 1] = np.tile(rcomp, (nl, 1))
    return out


def min_interior_q(g: Graph) -> int:
    """Least q >= 1 whose dilation contains an interior lattice point.

    Defined for normal edge rings. The search starts at the edge cover number
    d - mat(G), below which no interior point can exist, and must succeed by
    dim P + 1.
    """
    if not is_normal(g):
        raise NotNormalError("interior threshold is computed for normal edge rings only")
    p = edge_polytope(g)
    a, b = _facet_arrays(g)
    mu = g.d - matching_number(g)
    for q in range(max(mu, 1), p.dim + 2):
        cand = _interior_candidates(g, q)
        if len(cand) == 0:
            continue
        if len(a) == 0:
            return q
        vals = cand.astype(np.float64) @ a.T
        if bool(np.any(np.all(vals > q * b, axis=1))):
            return q
    raise InvariantViolationError(
        "no interior lattice point found by dim + 1; input is non-normal or a bug"
    )


def ehrhart_counts(g: Graph, q_max: int, row_budget: int = DEFAULT_ROW_BUDGET) -> list[int]:
    """Geometric lattice-point counts |qP| for q = 0..q_max."""
    cost = window_row_cost(g, q_max)
    if cost > row_budget:
        raise BudgetExceededError(
            f"enumeration of {cost} candidate rows exceeds the budget {row_budget}"
        )
    return [lattice_count(g, q) for q in range(q_max + 1)]


def _hstar_from_counts(counts: list[int], dim: int) -> tuple[int, ...]:
    h = []
    for i in range(dim + 1):
        total = 0
        for j in range(i + 1):
            total += (-1) ** j * math.comb(dim + 1, j) * counts[i - j]
        h.append(total)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return tuple(h)


def _binom_poly(n: int, k: int) -> int:
    """Binomial coefficient as a polynomial in n, valid for negative n."""
    num = 1
    for t in range(k):
        num *= n - t
    return num // math.factorial(k)


def ehrhart_polynomial_value(h_star_vec, dim: int, q: int) -> int:
    """Evaluate the counting polynomial determined by an h*-vector; defined
    for negative q as well (reciprocity checks)."""
    return sum(h_star_vec[i] * _binom_poly(q + dim - i, dim) for i in range(len(h_star_vec)))


def h_star(g: Graph, row_budget: int = DEFAULT_ROW_BUDGET) -> tuple[int, ...]:
    """h*-vector of the edge polytope of a normal graph.

    Computed from the counts at q = 0..dim; the two extra window values check
    that the resulting polynomial reproduces the counts, and nonnegativity is
    enforced as a runtime diagnostic.
    """
    if not is_normal(g):
        raise NotNormalError("h* is computed for normal edge rings only")
    p = edge_polytope(g)
    counts = ehrhart_counts(g, p.dim + 2, row_budget)
    h = _hstar_from_counts(counts, p.dim)
    if h[0] != 1:
        raise InvariantViolationError(f"h*_0 = {h[0]} != 1")
    if any(x < 0 for x in h):
        raise InvariantViolationError(f"negative h* entry in {h}; contradicts normality")
    for q in (p.dim + 1, p.dim + 2):
        if ehrhart_polynomial_value(h, p.dim, q) != counts[q]:
            raise InvariantViolationError("h* polynomial disagrees with a checked count")
    return h


def regularity_normal(g: Graph, row_budget: int = DEFAULT_ROW_BUDGET) -> int:
    """Regularity of a normal edge ring: the h*-degree, equivalently
    (dim P + 1) minus the interior dilation threshold.

    Both routes run and are cross-asserted whenever the geometric window fits
    the row budget; beyond it only the interior-threshold route runs.
    """
    if not is_normal(g):
        raise NotNormalError("regularity via h* applies to normal edge rings only")
    p = edge_polytope(g)
    s = (p.dim + 1) - min_interior_q(g)
    if window_row_cost(g, p.dim + 2) <= row_budget:
        s_h = len(h_star(g, row_budget)) - 1
        if s_h != s:
            raise InvariantViolationError(
                f"h* degree {s_h} != (dim+1) - interior threshold {s}"
            )
    return s


@dataclass(frozen=True)
class EhrhartProfile:
    """Counting data of one normal edge polytope over the window q <= dim + 2."""

    counts: tuple[int, ...]
    interior_counts: tuple[int, ...]
    min_interior_q: int
    h_star: tuple[int, ...]
    s: int
    krull_dim: int

    def to_dict(self) -> dict:
        return {
            "counts": list(self.counts),
            "interior_counts": list(self.interior_counts),
            "min_interior_q": self.min_interior_q,
            "h_star": list(self.h_star),
            "s": self.s,
            "krull_dim": self.krull_dim,
        }


def ehrhart_profile(g: Graph, row_budget: int = DEFAULT_ROW_BUDGET) -> EhrhartProfile:
    """Full counting profile of a normal graph; raises BudgetExceededError when
    the window enumeration would be too large."""
    if not is_normal(g):
        raise NotNormalError("profiles are computed for normal edge rings only")
    p = edge_polytope(g)
    counts = ehrhart_counts(g, p.dim + 2, row_budget)
    interior = [interior_count(g, q) for q in range(p.dim + 3)]
    h = h_star(g, row_budget)
    q_min = min_interior_q(g)
    s = len(h) - 1
    if s != p.dim + 1 - q_min:
        raise InvariantViolationError("h* degree disagrees with interior threshold")
    first_interior = next((q for q, c in enumerate(interior) if q >= 1 and c > 0), None)
    if first_interior != q_min:
        raise InvariantViolationError("interior threshold disagrees with interior counts")
    return EhrhartProfile(
        counts=tuple(counts),
        interior_counts=tuple(interior),
        min_interior_q=q_min,
        h_star=h,
        s=s,
        krull_dim=p.dim + 1,
    )
