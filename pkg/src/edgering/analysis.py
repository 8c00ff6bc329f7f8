"""Whole-graph analysis reports, the exhaustive bound verifier, family sweeps,
and the bounded matching-number survey."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .ehrhart import (
    DEFAULT_ROW_BUDGET,
    BudgetExceededError,
    h_star,
    min_interior_q,
    regularity_normal,
    window_row_cost,
)
from .enumeration import connected_graphs
from .graphs import (
    Graph,
    NotConnectedError,
    attach_path,
    complete_bipartite_graph,
    complete_graph,
    is_bipartite,
    is_connected,
    two_triangles_path,
)
from .matching import matching_number, min_edge_cover
from .normality import is_normal
from .polytope import edge_polytope
from .toric import DEFAULT_MONOMIAL_BUDGET, GeneratorProfile, minimal_generator_degrees

CSV_HEADER = "family,params,d,edges,mat,mu,normal,dim,reg,expected_reg,verdict"


@dataclass(frozen=True)
class AnalysisReport:
    """Every invariant of one connected graph, plus the bound verdict."""

    d: int
    edge_count: int
    edges: tuple[tuple[int, int], ...]
    bipartite: bool
    connected: bool
    mat: int
    mu: int
    cover_size: int
    normal: bool
    dim: int
    facet_count: int
    min_interior_q: int | None
    h_star: tuple[int, ...] | None
    reg: int | None
    reg_source: str
    bound_used: int | None
    verdict: str
    generator_profile: GeneratorProfile | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "graph": {
                "d": self.d,
                "edge_count": self.edge_count,
                "edges": [list(e) for e in self.edges],
                "bipartite": self.bipartite,
                "connected": self.connected,
            },
            "mat": self.mat,
            "mu": self.mu,
            "mu_identity": {"d_minus_mat": self.d - self.mat, "cover_size": self.cover_size},
            "normal": self.normal,
            "dim": self.dim,
            "facet_count": self.facet_count,
            "min_interior_q": self.min_interior_q,
            "h_star": list(self.h_star) if self.h_star is not None else None,
            "reg": self.reg,
            "reg_source": self.reg_source,
            "theorem": {"verdict": self.verdict, "bound_used": self.bound_used},
            "generator_profile": (
                self.generator_profile.to_dict() if self.generator_profile else None
            ),
            "notes": list(self.notes),
            "seconds": round(self.seconds, 6),
        }


def analyze(
    g: Graph,
    run_toric: bool = False,
    toric_qmax: int | None = None,
    hstar_row_budget: int = DEFAULT_ROW_BUDGET,
    toric_budget: int = DEFAULT_MONOMIAL_BUDGET,
) -> AnalysisReport:
    """Compute all invariants of a connected graph with at least two vertices.

    Toric analysis is opt-in because fiber enumeration grows quickly; when it
    runs, its degree bound defaults to 2 * dim unless given explicitly.
    """
    if g.d < 2:
        raise ValueError("analysis needs at least two vertices")
    if not is_connected(g):
        raise NotConnectedError("analysis requires a connected graph")
    t0 = time.perf_counter()
    notes: list[str] = []
    mat = matching_number(g)
    cover = min_edge_cover(g)
    mu = g.d - mat
    bip = is_bipartite(g) is not None
    normal = is_normal(g)
    p = edge_polytope(g)
    facet_count = len(p.facets())

    q_min: int | None = None
    hs: tuple[int, ...] | None = None
    reg: int | None = None
    reg_source = "unknown"
    if normal:
        q_min = min_interior_q(g)
        reg = (p.dim + 1) - q_min
        if window_row_cost(g, p.dim + 2) <= hstar_row_budget:
            hs = h_star(g, hstar_row_budget)
            if len(hs) - 1 != reg:
                raise RuntimeError("h* degree disagrees with interior threshold")
            reg_source = "h-star degree, cross-checked against interior threshold"
        else:
            reg_source = "interior threshold (h* window over row budget)"
            notes.append("h_star skipped: enumeration window over the row budget")

    profile: GeneratorProfile | None = None
    if run_toric:
        qmax = toric_qmax if toric_qmax is not None else max(2, 2 * p.dim)
        try:
            profile = minimal_generator_degrees(g, qmax, toric_budget)
        except BudgetExceededError as exc:
            notes.append(f"toric analysis aborted: {exc}")
        if profile is not None and not normal:
            if profile.total == 1:
                reg = profile.degrees[0] - 1
                reg_source = f"principal generator (certified up to degree {profile.complete_up_to})"
            else:
                notes.append("defining ideal not principal up to the bound; reg unknown")

    if normal:
        bound = mat - 1 if bip else mat
        verdict = "holds" if reg is not None and reg <= bound else "violated"
    else:
        bound = None
        verdict = "not-applicable"

    return AnalysisReport(
        d=g.d,
        edge_count=g.m,
        edges=g.edges,
        bipartite=bip,
        connected=True,
        mat=mat,
        mu=mu,
        cover_size=len(cover),
        normal=normal,
        dim=p.dim,
        facet_count=facet_count,
        min_interior_q=q_min,
        h_star=hs,
        reg=reg,
        reg_source=reg_source,
        bound_used=bound,
        verdict=verdict,
        generator_profile=profile,
        notes=tuple(notes),
        seconds=time.perf_counter() - t0,
    )


def verify_theorem(n_max: int) -> list[AnalysisReport]:
    """Check reg <= mat (non-bipartite normal) and reg <= mat - 1 (bipartite)
    over every connected graph on at most n_max vertices, up to isomorphism.

    Returns the list of violating reports; an empty list is the expected
    outcome. Non-normal graphs are skipped (the bound does not apply).
    """
    if not (2 <= n_max <= 8):
        raise ValueError("n_max must be between 2 and 8")
    violations: list[AnalysisReport] = []
    for n in range(2, n_max + 1):
        for g in connected_graphs(n):
            if not is_normal(g):
                continue
            report = analyze(g)
            if report.verdict == "violated":
                violations.append(report)
    return violations


@dataclass(frozen=True)
class SweepRow:
    """One family instance: expected versus computed invariants."""

    family: str
    params: str
    d: int
    edge_count: int
    mat: int
    mu: int
    normal: bool
    dim: int
    reg: int | None
    expected_reg: int
    expected_mat: int
    match: bool

    def verdict(self) -> str:
        return "match" if self.match else "mismatch"

    def csv_row(self) -> str:
        reg = "" if self.reg is None else str(self.reg)
        return (
            f"{self.family},{self.params},{self.d},{self.edge_count},{self.mat},"
            f"{self.mu},{str(self.normal).lower()},{self.dim},{reg},"
            f"{self.expected_reg},{self.verdict()}"
        )

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "d": self.d,
            "edge_count": self.edge_count,
            "mat": self.mat,
            "mu": self.mu,
            "normal": self.normal,
            "dim": self.dim,
            "reg": self.reg,
            "expected_reg": self.expected_reg,
            "expected_mat": self.expected_mat,
            "match": self.match,
        }


def _family_row(family: str, params: str, g: Graph, expected_reg: int, expected_mat: int,
                run_toric: bool = False, toric_qmax: int | None = None) -> SweepRow:
    report = analyze(g, run_toric=run_toric, toric_qmax=toric_qmax)
    match = report.reg == expected_reg and report.mat == expected_mat
    return SweepRow(
        family=family,
        params=params,
        d=g.d,
        edge_count=g.m,
        mat=report.mat,
        mu=report.mu,
        normal=report.normal,
        dim=report.dim,
        reg=report.reg,
        expected_reg=expected_reg,
        expected_mat=expected_mat,
        match=match,
    )


def run_families(r_max: int, l_max: int) -> list[SweepRow]:
    """Sweep the path-extended complete and complete bipartite families, where
    any regularity r <= matching number m is realized, plus the two-triangle
    path family where regularity outruns the matching number.

    r below 2 is skipped: the r = 0, 1 instances degenerate (a single edge or
    an empty graph) and are logged as unverified edge cases by the CLI.
    """
    if r_max < 2:
        raise ValueError("r_max must be >= 2")
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    rows: list[SweepRow] = []
    for r in range(2, r_max + 1):
        for m in range(r, r + 3):
            h = complete_graph(2 * r)
            g = h if m == r else attach_path(h, 1, 2 * (m - r))
            rows.append(_family_row("complete_plus_path", f"r={r};m={m}", g, r, m))
            hb = complete_bipartite_graph(r + 1, r + 1)
            gb = hb if m == r else attach_path(hb, 1, 2 * (m - r))
            rows.append(
                _family_row("complete_bipartite_plus_path", f"r={r};m={m}", gb, r, m + 1)
            )
    for ell in range(1, l_max + 1):
        g = two_triangles_path(ell)
        rows.append(
            _family_row(
                "two_triangles_path",
                f"l={ell}",
                g,
                expected_reg=ell + 2,
                expected_mat=2 + math.ceil(ell / 2),
                run_toric=True,
                toric_qmax=ell + 4,
            )
        )
    return rows


def question5_sweep(
    m: int,
    n_max: int,
    toric_qmax: int | None = None,
    toric_budget: int = DEFAULT_MONOMIAL_BUDGET,
) -> dict:
    """Survey connected graphs with matching number exactly m on up to n_max
    vertices: maximum regularity among normal ones, and among non-normal ones
    that carry a principal-ideal certificate.

    Purely empirical and bounded; the summary never claims a general bound.
    Graphs are bucketed by their computed matching number.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if not (2 <= n_max <= 8):
        raise ValueError("n_max must be between 2 and 8")
    rows: list[dict] = []
    normal_max: tuple[int, Graph] | None = None
    nonnormal_max: tuple[int, Graph] | None = None
    skipped_budget = 0
    for n in range(2, n_max + 1):
        for g in connected_graphs(n):
            if matching_number(g) != m:
                continue
            normal = is_normal(g)
            dim = edge_polytope(g).dim
            reg: int | None = None
            if normal:
                reg = regularity_normal(g)
                if normal_max is None or reg > normal_max[0]:
                    normal_max = (reg, g)
            else:
                qmax = toric_qmax if toric_qmax is not None else dim + 2
                try:
                    profile = minimal_generator_degrees(g, max(2, qmax), toric_budget)
                except BudgetExceededError:
                    skipped_budget += 1
                    profile = None
                if profile is not None and profile.total == 1:
                    reg = profile.degrees[0] - 1
                    if nonnormal_max is None or reg > nonnormal_max[0]:
                        nonnormal_max = (reg, g)
            rows.append(
                {
                    "d": g.d,
                    "edges": [list(e) for e in g.edges],
                    "mat": m,
                    "normal": normal,
                    "dim": dim,
                    "reg": reg,
                }
            )
    return {
        "m": m,
        "n_max": n_max,
        "scope": "empirical, bounded scope",
        "graphs_with_mat_m": len(rows),
        "normal_max_reg": normal_max[0] if normal_max else None,
        "non_normal_principal_max_reg": nonnormal_max[0] if nonnormal_max else None,
        "toric_skipped_over_budget": skipped_budget,
        "rows": rows,
    }
