"""Ways to build groups: matrix generators, direct, central and fiber
products.

The catalogue bundles permutation realizations of SL2(q) and PSL2(q) via
their actions on vectors and projective points, central products glued
along a shared central subgroup, and the sixfold cover of A6 assembled as
a fiber product of the double and triple covers.
"""

from chardeg import (Catalogue, MatrixGroupSpec, center, central_product,
                     character_table, conjugacy_classes, derived_series,
                     direct_product, is_perfect, perm_from_matrix_group)
from chardeg.perms import parse_cycles

# SL2(5) acting on the 24 nonzero vectors of F5^2
sl25 = perm_from_matrix_group(MatrixGroupSpec(
    p=5, k=1, n=2,
    generators=[(1, 1, 0, 1), (2, 0, 0, 3), (0, 1, 4, 0)],
    action="vectors", name="SL2_5"))
print(f"SL2(5): degree {sl25.degree}, order {sl25.order}, "
      f"center of order {center(sl25).order}, perfect: {is_perfect(sl25)}")

# the same matrices on the 6 projective points give PSL2(5) = A5
psl25 = perm_from_matrix_group(MatrixGroupSpec(
    p=5, k=1, n=2,
    generators=[(1, 1, 0, 1), (2, 0, 0, 3), (0, 1, 4, 0)],
    action="projective", name="PSL2_5"))
print(f"projective action: degree {psl25.degree}, order {psl25.order}")

# direct product: degrees multiply, classes pair up
a5 = psl25
prod = direct_product(a5, a5, name="A5xA5")
print(f"\nA5 x A5: order {prod.order}, "
      f"{conjugacy_classes(prod).num_classes} classes")

# central product: identify the central involution of SL2(5) with the
# square inside a cyclic group of order 4
from chardeg import Group
c4 = Group([parse_cycles("(1 2 3 4)", 4)], 4, name="C4")
z_gen = center(sl25).generators[0]
cp = central_product(sl25, c4, [z_gen], [parse_cycles("(1 3)(2 4)", 4)],
                     name="SL25oC4")
print(f"\nSL2(5) o C4: order {cp.group.order} "
      f"(= 120 * 4 / 2), center {center(cp.group).order}")

# the bundled catalogue assembles 6.A6 as a fiber product of the double
# cover (SL2(9)) and the triple cover over a common A6 quotient
cat = Catalogue()
g6 = cat.group("6A6")
z6 = center(g6)
print(f"\n6.A6: order {g6.order}, perfect {is_perfect(g6)}, "
      f"center cyclic of order {z6.order}")
print("derived series stabilizes at:",
      [g.order for g in derived_series(g6)])
print("degrees:", character_table(g6).degrees())
