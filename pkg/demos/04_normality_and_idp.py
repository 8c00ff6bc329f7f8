#!/usr/bin/env python3
"""Normality of the edge ring: the odd cycle condition versus the integer
decomposition property.

A connected graph has a normal edge ring exactly when any two vertex-disjoint
odd cycles are joined by an edge. Normality makes every lattice point of qP a
sum of q edge vectors; the two-triangle family shows how that fails, with a
"hole" appearing in the dilation.

Run:  python demos/04_normality_and_idp.py
"""

from edgering import (
    check_idp,
    complete_graph,
    cycle_graph,
    enumerate_minimal_odd_cycles,
    idp_points,
    is_normal,
    lattice_points,
    satisfies_odd_cycle_condition,
    two_triangles_path,
)
from edgering.polytope import edge_polytope

print("=" * 70)
print("Odd cycle condition versus integer decomposition")
print("=" * 70)

for name, g in [
    ("K4", complete_graph(4)),
    ("C5", cycle_graph(5)),
    ("two triangles, bridge (l=1)", two_triangles_path(1)),
    ("two triangles, path l=2", two_triangles_path(2)),
    ("two triangles, path l=3", two_triangles_path(3)),
]:
    cycles = enumerate_minimal_odd_cycles(g)
    dim = edge_polytope(g).dim
    print(f"\n{name}:")
    print(f"  chordless odd cycles: {cycles}")
    print(f"  odd cycle condition:  {satisfies_odd_cycle_condition(g)}")
    print(f"  normal edge ring:     {is_normal(g)}")
    print(f"  decomposition check through dim+2: {check_idp(g, dim + 2)}")

g = two_triangles_path(2)
print("\nlocating the first hole for two_triangles_path(2):")
for q in range(1, 5):
    geo = lattice_points(g, q)
    ring = idp_points(g, q)
    print(f"  q={q}: |qP| = {len(geo)}, expressible as q edges: {len(ring)}")
    if geo != ring:
        hole = sorted(geo - ring)[0]
        print(f"  first hole at q={q}: {hole} is in qP but is no sum of {q} edges")
        break
