"""
Building (1,2)-step competition graphs
======================================

Two routes to the same graph: the distance-based oracle and the
constant-time local rule.
"""

from mtclab import competition_graph, fixture, random_tournament
from mtclab.competition import witness
from mtclab.report import emit_dot, emit_graph

# The star fixture: four vertices in two parts, plus x in a third part
t = fixture("STAR5")
g = competition_graph(t)
print(emit_graph(g))

# every edge has a witness w; print who reaches w and how
for u, v in g.sorted_edges():
    w = witness(t, u, v)
    print(f"{u}-{v}: {w.kind.name.lower()} via {w.target}")

# both methods agree on a larger random instance
t = random_tournament([3, 3, 2, 2], seed=7)
fast, oracle = competition_graph(t, "fast"), competition_graph(t, "oracle")
print("edges:", fast.edge_count(), "agree:", fast == oracle)

# Graphviz output, sinks dashed
print(emit_dot(fixture("SINK4"), competition_graph(fixture("SINK4"))))
