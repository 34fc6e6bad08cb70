"""The average character degree family and the solvability thresholds.

The headline facts this library can certify by exact computation:

  * every group with average character degree below 16/5 is solvable,
    and A5 sits exactly at 16/5;
  * restricting the average to even degrees moves the threshold to 18/5,
    attained by SL2(5);
  * averaging only degrees coprime to 3 puts SL2(5) at exactly 3,
    strictly below A5's 10/3.

The averages are exact rationals; an empty selection averages to 0.
"""

from chardeg import (EVEN, Catalogue, DegreeFilter, acd, character_table)

cat = Catalogue()

for name in ("A5", "A6", "SL2_5", "S5", "SL2_7"):
    t = character_table(cat.group(name))
    print(f"{name:7s} degrees {t.degrees()}")
    print(f"        acd      = {acd(t)}")
    print(f"        acd_even = {acd(t, EVEN)}")
    print(f"        acd_3'   = {acd(t, DegreeFilter('coprime', 3))}")

# the empty-average convention: no even degrees in an odd-order group
t = character_table(cat.group("C15"))
avg = acd(t, EVEN)
print(f"\nC15 has {avg.count} even-degree characters; "
      f"the average is exactly {avg}")

# degrees divisible by p: for these projective groups the average is p itself
for p, name in ((5, "A5"), (7, "PSL2_7"), (11, "PSL2_11"), (13, "PSL2_13")):
    t = character_table(cat.group(name))
    print(f"acd over degrees divisible by {p:2d} in {name}: "
          f"{acd(t, DegreeFilter('divisible', p))}")
