"""First steps: build a permutation group and print its exact character table.

Character values are sums of roots of unity, stored as eigenvalue
multiplicities: the value at a class of elements of order n is a vector
saying how often each n-th root of unity occurs.  Everything is exact;
there is no floating point anywhere in the table.
"""

from chardeg import Group, character_table, parse_cycles

# the alternating group on 5 points, the smallest nonsolvable group
a5 = Group([parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)],
           degree=5, name="A5")
print(f"built {a5.name}: order {a5.order}")

table = character_table(a5)
cd = table.classes
print(f"\n{cd.num_classes} conjugacy classes")
print("element orders:", cd.orders)
print("class sizes:   ", cd.sizes)

print("\ncharacter table (rows in canonical order):")
for chi in table.chars:
    rendered = " | ".join(f"{v}" for v in chi.values)
    print(f"  degree {chi.degree}:  {rendered}")

# the table was validated at construction: row and column orthogonality,
# degree divisibility, and the sum-of-squares identity all hold exactly
print("\nsum of squared degrees:", sum(d * d for d in table.degrees()),
      "= group order", a5.order)

# the two degree-3 characters see the golden ratio at the 5-cycles:
# 1 + z5 + z5^4 and 1 + z5^2 + z5^3 are (1 +- sqrt 5)/2 ... exactly
chi3 = [c for c in table.chars if c.degree == 3][0]
print("\na degree-3 value at a 5-cycle:", chi3.values[3],
      "~", round(chi3.values[3].complex().real, 6))
