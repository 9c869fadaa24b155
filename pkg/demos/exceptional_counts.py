"""
Counting diagrams in the exceptional types
==========================================

Implications never leave a column, so the number of diagrams is a product
of column counts.  Each column is counted by a small dynamic programme,
which keeps even the 57 roots of the last E8 column cheap.
"""

import time

from cauchon import count_column, weyl_order
from cauchon.diagrams import graph_for

for name in ["G2", "F4", "E6", "E7", "E8"]:
    start = time.perf_counter()
    graph = graph_for(name)
    per_column = [count_column(j, graph) for j in range(1, int(name[1]) + 1)]
    total = 1
    for c in per_column:
        total *= c
    elapsed = time.perf_counter() - start
    print(f"{name}: {' x '.join(map(str, per_column))} = {total}  (|W| = {weyl_order(name)}, {elapsed:.2f}s)")
