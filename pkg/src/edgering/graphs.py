"""Finite simple graphs on vertices 1..d: parsing, families, structure queries.

Graphs are immutable values; every operation in this module is pure, so
instances can be shared freely across workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache


class GraphParseError(ValueError):
    """Malformed edge-list text; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotConnectedError(ValueError):
    """Raised when an operation requires a connected graph."""


def _norm_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex set {1, ..., d}, sorted edge tuple."""

    d: int
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def of(d: int, edges) -> "Graph":
        """Build a graph, normalizing edge order and dropping duplicates."""
        if d < 1:
            raise ValueError("vertex count must be at least 1")
        seen = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop edge ({i},{j}) is not allowed")
            if not (1 <= i <= d and 1 <= j <= d):
                raise ValueError(f"edge ({i},{j}) out of range 1..{d}")
            seen.add(_norm_edge(i, j))
        return Graph(d, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.d + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return adjacency(self)[v]

    def has_edge(self, i: int, j: int) -> bool:
        return j in adjacency(self)[i]


@lru_cache(maxsize=65536)
def adjacency(g: Graph) -> tuple[frozenset[int], ...]:
    """Neighbor sets indexed by vertex (index 0 unused)."""
    adj: list[set[int]] = [set() for _ in range(g.d + 1)]
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    return tuple(frozenset(s) for s in adj)


def parse_graph(text: str) -> Graph:
    """Parse edge-list text: first line "d m", then m lines "i j" with i < j.

    Duplicate edge lines collapse to one edge. Loops, out-of-range indices and
    malformed lines are rejected with their line number.
    """
    lines = text.splitlines()
    entries = [(no + 1, ln.strip()) for no, ln in enumerate(lines) if ln.strip()]
    if not entries:
        raise GraphParseError("empty input, expected header 'd m'", 1)
    head_no, head = entries[0]
    parts = head.split()
    if len(parts) != 2:
        raise GraphParseError(f"expected header 'd m', got {head!r}", head_no)
    try:
        d, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"non-integer header {head!r}", head_no) from None
    if d < 1:
        raise GraphParseError(f"vertex count {d} must be positive", head_no)
    if m < 0:
        raise GraphParseError(f"edge count {m} must be nonnegative", head_no)
    body = entries[1:]
    if len(body) < m:
        raise GraphParseError(f"expected {m} edge lines, found {len(body)}", len(lines) + 1)
    if len(body) > m:
        extra_no, extra = body[m]
        raise GraphParseError(f"unexpected extra line {extra!r}", extra_no)
    edges = set()
    for no, ln in body:
        toks = ln.split()
        if len(toks) != 2:
            raise GraphParseError(f"expected 'i j', got {ln!r}", no)
        try:
            i, j = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphParseError(f"non-integer edge {ln!r}", no) from None
        if i == j:
            raise GraphParseError(f"loop edge ({i},{j})", no)
        if not (i < j):
            raise GraphParseError(f"edge ({i},{j}) must satisfy i < j", no)
        if not (1 <= i and j <= d):
            raise GraphParseError(f"edge ({i},{j}) out of range 1..{d}", no)
        edges.add((i, j))
    return Graph(d, tuple(sorted(edges)))


def render_graph(g: Graph) -> str:
    """Inverse of parse_graph: the canonical edge-list text of a graph."""
    out = [f"{g.d} {g.m}"]
    out.extend(f"{i} {j}" for i, j in g.edges)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]


def is_bipartite(g: Graph) -> Bipartition | None:
    """Return a 2-coloring if one exists, else None.

    Disconnected input is allowed; each component is colored with its minimum
    vertex on the left side, and sides are merged across components.
    """
    adj = adjacency(g)
    color: dict[int, int] = {}
    for root in g.vertices():
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    left = frozenset(v for v, c in color.items() if c == 0)
    right = frozenset(v for v, c in color.items() if c == 1)
    return Bipartition(left, right)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertex set into components, ordered by minimum vertex."""
    adj = adjacency(g)
    seen: set[int] = set()
    parts: list[frozenset[int]] = []
    for root in g.vertices():
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in comp:
                    comp.add(u)
                    queue.append(u)
        seen |= comp
        parts.append(frozenset(comp))
    return parts


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def induced_subgraph(g: Graph, w) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on w, relabeled 1..|w|.

    Returns (subgraph, kept) where kept[k-1] is the original label of the new
    vertex k. Raises on an empty or invalid vertex set.
    """
    kept = tuple(sorted(set(w)))
    if not kept:
        raise ValueError("induced subgraph on an empty vertex set")
    if kept[0] < 1 or kept[-1] > g.d:
        raise ValueError(f"vertex set {kept} not contained in 1..{g.d}")
    index = {v: k + 1 for k, v in enumerate(kept)}
    inside = set(kept)
    edges = tuple(
        sorted((index[i], index[j]) for i, j in g.edges if i in inside and j in inside)
    )
    return Graph(len(kept), edges), kept


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return Graph(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """Complete bipartite graph with sides 1..a and a+1..a+b."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite(a,b) needs a, b >= 1")
    return Graph(a + b, tuple((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph(n, tuple(sorted(edges)))


def path_graph(n: int) -> Graph:
    """Path on n vertices (n - 1 edges)."""
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def star_graph(d: int) -> Graph:
    """Star on d vertices: center 1: edges {1,2}, ..., {1,d}."""
    if d < 2:
        raise ValueError("star(d) needs d >= 2")
    return Graph(d, tuple((1, j) for j in range(2, d + 1)))


def attach_path(base: Graph, vertex: int, length: int) -> Graph:
    """Glue a path with `length` new edges (and `length` new vertices) at `vertex`."""
    if not (1 <= vertex <= base.d):
        raise ValueError(f"attachment vertex {vertex} not in 1..{base.d}")
    if length < 1:
        raise ValueError("attach_path needs length >= 1")
    d = base.d + length
    edges = list(base.edges)
    prev = vertex
    for k in range(base.d + 1, d + 1):
        edges.append(_norm_edge(prev, k))
        prev = k
    return Graph(d, tuple(sorted(edges)))


def two_triangles_path(ell: int) -> Graph:
    """Two disjoint triangles joined by a path with ell edges between them.

    Triangles {1,2,3} and {4,5,6}; the path runs from 3 to 4 through ell - 1
    fresh vertices, so the graph has 6 + ell - 1 vertices and 7 + ell - 1 edges.
    """
    if ell < 1:
        raise ValueError("two_triangles_path(ell) needs ell >= 1")
    edges = [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]
    if ell == 1:
        edges.append((3, 4))
        return Graph(6, tuple(sorted(edges)))
    d = 6 + ell - 1
    chain = [3] + list(range(7, 7 + ell - 1)) + [4]
    for a, b in zip(chain, chain[1:]):
        edges.append(_norm_edge(a, b))
    return Graph(d, tuple(sorted(edges)))


def _split_args(body: str) -> list[str]:
    args: list[str] = []
    depth = 0
    cur = ""
    for ch in body:
        if ch == "," and depth == 0:
            args.append(cur.strip())
            cur = ""
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        cur += ch
    if cur.strip():
        args.append(cur.strip())
    return args


def make_family(spec: str) -> Graph:
    """Build a graph from a family spec string.

    Accepted forms: complete(n), complete_bipartite(a,b), cycle(n), path(n),
    star(d), two_triangles_path(l), attach_path(base_spec, vertex, length).
    """
    spec = spec.strip()
    if not spec.endswith(")") or "(" not in spec:
        raise ValueError(f"bad family spec {spec!r}")
    name, body = spec.split("(", 1)
    name = name.strip()
    body = body[:-1]
    args = _split_args(body)
    simple = {
        "complete": (complete_graph, 1),
        "complete_bipartite": (complete_bipartite_graph, 2),
        "cycle": (cycle_graph, 1),
        "path": (path_graph, 1),
        "star": (star_graph, 1),
        "two_triangles_path": (two_triangles_path, 1),
    }
    if name in simple:
        fn, arity = simple[name]
        if len(args) != arity:
            raise ValueError(f"{name} expects {arity} argument(s), got {len(args)}")
        return fn(*(int(a) for a in args))
    if name == "attach_path":
        if len(args) != 3:
            raise ValueError("attach_path expects (base_spec, vertex, length)")
        return attach_path(make_family(args[0]), int(args[1]), int(args[2]))
    raise ValueError(f"unknown family {name!r}")
