"""
Recognizing interval, chordal and C4-free graphs
================================================
"""

from collections import Counter

from mtclab import (SimpleGraph, competition_graph, find_asteroidal_triple, is_c4_free, is_chordal,
                    is_interval, random_tournament)
from mtclab.report import emit_report

# A six-cycle: not chordal, and 1, 3, 5 form an asteroidal triple
c6 = SimpleGraph("123456", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("6", "1")])
print(emit_report(is_chordal(c6)))
print(find_asteroidal_triple(c6))

# A subdivided claw is chordal yet not interval
claw = SimpleGraph("cabdxyz", [("c", "a"), ("a", "x"), ("c", "b"), ("b", "y"), ("c", "d"), ("d", "z")])
print(emit_report(is_interval(claw)))

# tally the classes over random [3,3,3] instances
tally = Counter()
for seed in range(300):
    t = random_tournament([3, 3, 3], seed)
    g = competition_graph(t)
    tally[(is_interval(g).interval, is_chordal(g).chordal, is_c4_free(g).c4_free)] += 1
for (i, c, f), n in sorted(tally.items()):
    print(f"interval={i!s:5} chordal={c!s:5} c4free={f!s:5} {n}")
