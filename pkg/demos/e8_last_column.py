"""
The last column of E8
=====================

The eighth column holds 57 roots and the only Choice implications of the
type: a diagram containing position 92 must also contain one of two roots
from the box just above it, for three different pairs.  Bucketing the 240
column diagrams by their last member reproduces the table of counts.
"""

from cauchon import per_start_counts, to_dot
from cauchon.diagrams import graph_for

graph = graph_for("E8")
for c in graph.choices:
    print(f"{c.src} => " + " or ".join(map(str, c.alts)))

report = per_start_counts(8, graph)
for start, count in report.per_start.items():
    print("none" if start is None else start, count)
print("total", report.total)

# Render with Graphviz: `dot -Tsvg e8_column8.dot -o e8.svg`.
with open("e8_column8.dot", "w") as fh:
    fh.write(to_dot(graph, column=8))
