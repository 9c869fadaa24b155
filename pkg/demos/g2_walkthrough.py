"""
G2 from roots to diagrams
=========================

The smallest exceptional type shows every step of the pipeline: the
Lusztig order, the single admissible plane, its five implications and the
twelve diagrams that match the twelve elements of the Weyl group.
"""

from cauchon import canonical_order, derive_all, enumerate_admissible_planes, enumerate_all
from cauchon.diagrams import weyl_word_of_diagram

# The order comes from the reduced word 1 2 1 2 1 2 of the longest element.
order = canonical_order("G2")
for e in order.entries:
    print(e.pos, e.root, "column", e.column, "h'", e.lheight)

# In G2 every admissible plane is the whole root system.
(plane,) = enumerate_admissible_planes(order)
print(plane.ptype, len(plane.members), "roots")

# Its implications form a small chain inside the second column.
graph = derive_all(order)
for imp in graph:
    print(imp.src, "->", imp.dst)

# Each diagram gives a reduced word; the words are all different.
for d in enumerate_all(graph):
    print(sorted(d.positions), weyl_word_of_diagram(d, order))
