#!/usr/bin/env python3
"""Build graphs, parse the edge-list format, and compute matchings and covers.

Run:  python demos/01_graphs_matchings_covers.py
"""

from edgering import (
    complete_graph,
    cycle_graph,
    make_family,
    matching_number,
    maximum_matching,
    min_edge_cover,
    parse_graph,
    render_graph,
    star_graph,
    two_triangles_path,
)

print("=" * 70)
print("Graphs, matchings, and minimum edge covers")
print("=" * 70)

# the wire format: a header "d m" and one "i j" line per edge
text = "4 4\n1 2\n2 3\n3 4\n1 4\n"
c4 = parse_graph(text)
print("\nparsed a 4-cycle:", c4.edges)
print("render round-trips:", parse_graph(render_graph(c4)) == c4)

for name, g in [
    ("triangle", complete_graph(3)),
    ("4-cycle", cycle_graph(4)),
    ("complete graph K6", complete_graph(6)),
    ("star on 6 vertices", star_graph(6)),
    ("two triangles + path of length 3", two_triangles_path(3)),
]:
    m = maximum_matching(g)
    cover = min_edge_cover(g)
    print(f"\n{name}:  d={g.d}  edges={g.m}")
    print(f"  matching number mat = {len(m)}   certificate: {sorted(m.edges)}")
    print(f"  cover number    mu  = {len(cover)}  (= d - mat = {g.d - len(m)})")

# family specs are also available as strings, matching the CLI flag
g = make_family("attach_path(complete(4),1,2)")
print(f"\nattach_path(complete(4),1,2): d={g.d}, mat={matching_number(g)}")
