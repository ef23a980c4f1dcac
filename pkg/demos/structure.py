"""
Loose instances and their block structure
=========================================
"""

from mtclab import (classify_parts, competition_graph, components_and_diameters, domination_number,
                    enumerate_tournaments, fixture, max_anti_competing_set, verify_block_structure)
from mtclab.report import emit_report

t = fixture("SINK4")
g = competition_graph(t)
print(emit_report(verify_block_structure(t, g)))

# components and their diameters; the sink sits alone
for comp, diam in components_and_diameters(g):
    print(sorted(comp), "diameter", diam)
print("domination number:", domination_number(g))

# How often is a small instance loose?
loose = total = 0
for t in enumerate_tournaments([2, 2, 1]):
    total += 1
    loose += classify_parts(t, competition_graph(t)).loose
print(f"{loose} of {total} orientations of [2,2,1] are loose")

# the largest set of pairwise non-competing vertices spanning two parts
t = fixture("STAR5")
res = max_anti_competing_set(t, competition_graph(t), "cross-part")
print(sorted(res.best_set), "star shape:", res.star_shape_verified)
