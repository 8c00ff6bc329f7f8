"""Independent brute-force oracles used by the test suite.

These deliberately avoid the algorithms they check: matching and covering by
exhaustive search, membership by Caratheodory-style subset solving, facets by
candidate-hyperplane enumeration, generator counts by exact linear algebra,
and labeled connected-graph counts by the classical recurrence. The rational
elimination helpers are standalone so the oracles share nothing with the
package implementation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from edgering.graphs import Graph, adjacency


# ---------------------------------------------------------------------------
# Matchings and covers
# ---------------------------------------------------------------------------

def brute_matching_number(g: Graph) -> int:
    """Exhaustive maximum matching size via subset recursion over vertices."""
    masks = [0] * (g.d + 1)
    for i, j in g.edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i

    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        if avail == 0:
            return 0
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        out = best(rest)
        nbrs = masks[v] & avail
        while nbrs:
            u = (nbrs & -nbrs).bit_length() - 1
            nbrs &= nbrs - 1
            out = max(out, 1 + best(rest & ~(1 << u)))
        return out

    full = sum(1 << v for v in g.vertices())
    result = best(full)
    best.cache_clear()
    return result


def brute_matching_number_subsets(g: Graph) -> int:
    """Literal enumeration over all edge subsets; only for tiny graphs."""
    assert g.m <= 16
    for size in range(g.d // 2, 0, -1):
        for sub in combinations(g.edges, size):
            used: set[int] = set()
            ok = True
            for i, j in sub:
                if i in used or j in used:
                    ok = False
                    break
                used.update((i, j))
            if ok:
                return size
    return 0


def brute_edge_cover_number(g: Graph) -> int | None:
    """Exhaustive minimum edge cover size; None if no cover exists."""
    assert g.m <= 16
    want = set(g.vertices())
    for size in range(1, g.m + 1):
        for sub in combinations(g.edges, size):
            covered: set[int] = set()
            for i, j in sub:
                covered.update((i, j))
            if covered == want:
                return size
    return None


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------

def all_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every simple cycle, one representative per rotation/reflection."""
    adj = adjacency(g)
    out: list[tuple[int, ...]] = []

    def extend(path: list[int]) -> None:
        s, last = path[0], path[-1]
        for x in sorted(adj[last]):
            if x == s and len(path) >= 3:
                if path[1] < path[-1]:
                    out.append(tuple(path))
                continue
            if x <= s or x in path:
                continue
            path.append(x)
            extend(path)
            path.pop()

    for s in g.vertices():
        extend([s])
    return out


def has_odd_cycle(g: Graph) -> bool:
    return any(len(c) % 2 == 1 for c in all_cycles(g))


# ---------------------------------------------------------------------------
# Exact rational elimination (standalone)
# ---------------------------------------------------------------------------

def frac_rank(rows) -> int:
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


def frac_solve_square(matrix, rhs):
    """Solve an s x s rational system; None when singular."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


# ---------------------------------------------------------------------------
# Polytope membership and facets by brute force
# ---------------------------------------------------------------------------

def caratheodory_member(vertices, q: int, point) -> bool:
    """Is point / q a convex combination of the vertices?

    Checked by solving the barycentric system over every affinely independent
    vertex subset of size at most dim + 1.
    """
    d = len(vertices[0])
    target = [Fraction(x, q) for x in point] + [Fraction(1)]
    maxsize = min(len(vertices), d + 1)
    for size in range(1, maxsize + 1):
        for sub in combinations(vertices, size):
            cols = [list(v) + [1] for v in sub]
            # equations: sum_k lam_k * cols[k] = target (d+1 equations)
            eq_rows = [[Fraction(cols[k][i]) for k in range(size)] for i in range(d + 1)]
            chosen: list[list[Fraction]] = []
            chosen_rhs: list[Fraction] = []
            for row, b in zip(eq_rows, target):
                if len(chosen) == size:
                    break
                if frac_rank(chosen + [row]) > len(chosen):
                    chosen.append(row)
                    chosen_rhs.append(b)
            if len(chosen) < size:
                continue
            sol = frac_solve_square(chosen, chosen_rhs)
            if sol is None:
                continue
            good = all(
                sum(r[k] * sol[k] for k in range(size)) == b
                for r, b in zip(eq_rows, target)
            )
            if good and all(x >= 0 for x in sol):
                return True
    return False


def _functional_through(pts, vertices):
    """An affine functional vanishing on pts and not on the hull of vertices."""
    d = len(vertices[0])
    ncols = d + 1
    mat = [[Fraction(x) for x in p] + [Fraction(1)] for p in pts]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    for free_col in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[free_col] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][free_col]
        vals = [sum(vec[k] * v[k] for k in range(d)) + vec[d] for v in vertices]
        if any(x != 0 for x in vals):
            return vec, vals
    return None


def bruteforce_facets(vertices, dim: int) -> set[frozenset[int]]:
    """Facets as tight vertex index sets, by scanning hyperplanes spanned by
    dim-subsets of vertices. Exact but exponential; tiny instances only."""
    n = len(vertices)
    facets: set[frozenset[int]] = set()
    for sub in combinations(range(n), dim):
        pts = [vertices[i] for i in sub]
        base = pts[0]
        diffs = [[p[k] - base[k] for k in range(len(base))] for p in pts[1:]]
        if frac_rank(diffs) != dim - 1:
            continue
        hit = _functional_through(pts, vertices)
        if hit is None:
            continue
        _, vals = hit
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            tight = frozenset(i for i, v in enumerate(vals) if v == 0)
            pts_t = [vertices[i] for i in tight]
            base_t = pts_t[0]
            diffs_t = [[p[k] - base_t[k] for k in range(len(base_t))] for p in pts_t[1:]]
            if frac_rank(diffs_t) == dim - 1:
                facets.add(tight)
    return facets


# ---------------------------------------------------------------------------
# Toric generator counts by exact linear algebra
# ---------------------------------------------------------------------------

def monomials_of_degree(m: int, q: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(m), q):
        expo = [0] * m
        for k in combo:
            expo[k] += 1
        out.append(tuple(expo))
    return out


def generator_count_oracle(g: Graph, q: int) -> int:
    """Minimal generators of the defining ideal in degree q: dimension of the
    degree-q relation space minus the dimension spanned there by monomial
    multiples of lower-degree relations, both via exact rank."""
    edge_vecs = []
    for i, j in g.edges:
        v = [0] * g.d
        v[i - 1] += 1
        v[j - 1] += 1
        edge_vecs.append(tuple(v))

    def multidegree(expo):
        out = [0] * g.d
        for k, e in enumerate(expo):
            if e:
                for t in range(g.d):
                    out[t] += e * edge_vecs[k][t]
        return tuple(out)

    def fibers_at(qq):
        groups: dict[tuple, list[tuple[int, ...]]] = {}
        for expo in monomials_of_degree(g.m, qq):
            groups.setdefault(multidegree(expo), []).append(expo)
        return groups

    monos_q = monomials_of_degree(g.m, q)
    index = {mo: k for k, mo in enumerate(monos_q)}
    relation_dim = sum(len(f) - 1 for f in fibers_at(q).values())

    rows: list[list[int]] = []
    for qq in range(2, q):
        for fiber in fibers_at(qq).values():
            if len(fiber) < 2:
                continue
            u0 = fiber[0]
            for u in fiber[1:]:
                for mult in monomials_of_degree(g.m, q - qq):
                    a = tuple(x + y for x, y in zip(u0, mult))
                    b = tuple(x + y for x, y in zip(u, mult))
                    row = [0] * len(monos_q)
                    row[index[a]] += 1
                    row[index[b]] -= 1
                    rows.append(row)
    lower_dim = frac_rank(rows) if rows else 0
    return relation_dim - lower_dim


# ---------------------------------------------------------------------------
# Counting labeled connected graphs (recurrence)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def labeled_connected_count(n: int) -> int:
    """Connected labeled graphs on n vertices via the classical recurrence."""
    if n == 1:
        return 1
    total = 2 ** math.comb(n, 2)
    rest = 0
    for k in range(1, n):
        rest += (
            math.comb(n - 1, k - 1)
            * labeled_connected_count(k)
            * 2 ** math.comb(n - k, 2)
        )
    return total - rest
