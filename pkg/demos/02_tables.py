"""
Closed-form clips tables for the reflection families
====================================================

Clips cells where one argument is a rotation-plus-inversion group and
the other contains improper elements without -Id follow closed forms
with a handful of parity and gcd branch conditions.  This script prints
a slice of those tables and shows the helper sets they are built from.
"""

from o3clips import ClassSet, clips, parse_label
from o3clips.tables import clips_type2_type3, ell_octa, gamma, zee

# the branch helpers: zee picks Z2 or Z2^- by parity, gamma collapses a
# cyclic factor through a gcd, ell_octa is the octahedral common core
for n in (2, 3, 4, 6):
    print(f"zee({n}) = {zee(n)}")
print("gamma(2, 4) =", " ".join(map(str, gamma(2, 4))))
print("gamma(3, 4) =", " ".join(map(str, gamma(3, 4))))
print("ell_octa(3) =", ClassSet(ell_octa(3)))
print("ell_octa(4) =", ClassSet(ell_octa(4)))
print()

# one full table row: Z6+Z2c against each reflection family column
row = parse_label("Z6+Z2c")
for col in ("Z4^-", "Z12^-", "D4^z", "D6^z", "D8^d", "D12^d", "O^-",
            "O(2)^-"):
    branch, cell = clips_type2_type3(row, parse_label(col))
    note = f"  [{branch}]" if branch else ""
    print(f"{row} x {col}: {' '.join(map(str, cell))}{note}")
print()

# the same cells through the public entry point (which also handles the
# canonical collapses, e.g. D2^d is the same class as D2^z)
print("D2^d resolves to", parse_label("D2^d"))
print("O+Z2c x D2^d:", clips("O+Z2c", "D2^d"))

# axial rows have closed forms too
for col in ("Z4^-", "D6^z", "D8^d", "O(2)^-"):
    print(f"O(2)+Z2c x {col}:", clips("O(2)+Z2c", col))
