"""
Clips of conjugacy classes: first steps
=======================================

The clips of two classes [H1] and [H2] of closed O(3) subgroups is the
set of classes of intersections H1 with g H2 g^-1 over all relative
orientations g.  This script walks through the basic calls.
"""

from o3clips import class_leq, clips, clips_families, order_of, parse_label

# two cubes in general position share nothing but the identity; in
# special positions they can share a common rotation subgroup
print("O clips O:")
print(" ", clips("O", "O"))

# one side infinite works the same way
print("D4 clips O(2):")
print(" ", clips("D4", "O(2)"))

# reflection groups against rotation-plus-inversion groups
print("O^- clips O+Z2c:")
print(" ", clips("O^-", "O+Z2c"))

# the full group is the identity element of the operation
print("I+Z2c clips O(3):")
print(" ", clips("I+Z2c", "O(3)"))

# clips encodes the partial order: a class survives its own clips with a
# larger class exactly when it embeds into it
a, b = parse_label("Z4^-"), parse_label("O^-")
print(f"{a} <= {b}:", class_leq(a, b), "and", a, "in clips:",
      a in clips(a, b))

# families clip memberwise; the result is the union of the pairwise cells
left = ["Z2", "D4"]
right = ["O+Z2c"]
print("family clips", left, "with", right, ":")
print(" ", clips_families(left, right))

# orders of everything in a cell divide the orders of both arguments
cell = clips("O+Z2c", "D6^d")
print("orders in O+Z2c clips D6^d:", [order_of(c) for c in cell])
