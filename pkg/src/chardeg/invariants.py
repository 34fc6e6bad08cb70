"""Average character degree invariants and degree-counting functions.

Everything returns exact rationals.  The average of an empty set of degrees
is 0 by convention, uniformly across all filters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .chars import (Character, CharacterTable, inner_product,
                    kernel_classes_contain, restrict_character)
from .errors import ChardegError
from .groups import Group


@dataclass(frozen=True)
class DegreeFilter:
    """Selects characters by degree: all, even, divisible by p, coprime to p."""

    kind: str  # "all" | "even" | "divisible" | "coprime"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("all", "even", "divisible", "coprime"):
            raise ValueError(f"unknown filter kind {self.kind!r}")
        if self.kind in ("divisible", "coprime"):
            if self.p is None or not _is_prime(self.p):
                raise ValueError("filter needs a prime p")

    def accepts(self, degree: int) -> bool:
        if self.kind == "all":
            return True
        if self.kind == "even":
            return degree % 2 == 0
        if self.kind == "divisible":
            return degree % self.p == 0
        return degree % self.p != 0


ALL = DegreeFilter("all")
EVEN = DegreeFilter("even")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class RationalAverage:
    """An exact average together with how many degrees went into it."""

    value: Fraction
    count: int

    @staticmethod
    def of(degrees) -> "RationalAverage":
        degrees = list(degrees)
        if not degrees:
            return RationalAverage(Fraction(0), 0)
        return RationalAverage(Fraction(sum(degrees), len(degrees)), len(degrees))

    def __str__(self):
        return format_rational(self.value)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def degrees(table: CharacterTable) -> Counter:
    """Multiset of irreducible character degrees; n_d is its multiplicity."""
    return Counter(table.degrees())


def n_d(table: CharacterTable, d: int, modulo: Group | None = None,
        mode: str | None = None) -> int:
    """Number of degree-d characters, optionally split by a normal subgroup.

    mode "quotient" counts characters with N inside the kernel (n_d(G/N));
    mode "relative" counts the rest (n_d(G|N)); the two add up to n_d(G).
    """
    if modulo is None:
        return sum(1 for c in table.chars if c.degree == d)
    if mode not in ("quotient", "relative"):
        raise ValueError("mode must be 'quotient' or 'relative' with a subgroup")
    want_in_kernel = mode == "quotient"
    return sum(
        1 for c in table.chars
        if c.degree == d
        and kernel_classes_contain(table, c, modulo) == want_in_kernel)


def acd(table: CharacterTable, filt: DegreeFilter = ALL) -> RationalAverage:
    """Average degree over the characters passing the filter."""
    return RationalAverage.of(
        c.degree for c in table.chars if filt.accepts(c.degree))


def acd_rel(table: CharacterTable, n: Group, warn=None) -> RationalAverage:
    """Average degree over Irr(G|N) = {chi : N not in Ker(chi)}.

    A trivial N makes the set empty; that returns 0 with a warning, matching
    the empty-average convention.
    """
    if n.order == 1 and warn is not None:
        warn("acd_rel with trivial subgroup: Irr(G|1) is empty, average is 0")
    return RationalAverage.of(
        c.degree for c in table.chars
        if not kernel_classes_contain(table, c, n))


def lies_over(group: Group, table: CharacterTable, chi: Character,
              n: Group, n_table: CharacterTable, theta: Character) -> bool:
    """True iff theta is a constituent of the restriction of chi to n."""
    restricted = restrict_character(group, chi, n)
    return inner_product(n_table, restricted, theta) > 0


def acd_over(table: CharacterTable, n: Group, n_table: CharacterTable,
             theta: Character) -> RationalAverage:
    """Average degree over Irr(G|theta), the characters lying over theta."""
    if inner_product(n_table, theta, theta) != 1:
        raise ChardegError("theta is not an irreducible character of n")
    return RationalAverage.of(
        c.degree for c in table.chars
        if lies_over(table.group, table, c, n, n_table, theta))


def theorem_A_inequality_equiv(table: CharacterTable) -> bool:
    """Check the algebraic equivalence behind the 16/5 threshold.

    acd(G) < 16/5 holds iff sum over d >= 4 of (5d-16) n_d is smaller than
    11 n_1 + 6 n_2 + n_3.  This must hold for every group; returning False
    would signal a table bug.
    """
    counts = degrees(table)
    lhs_small = acd(table).value < Fraction(16, 5)
    weighted = sum((5 * d - 16) * k for d, k in counts.items() if d >= 4)
    bound = 11 * counts.get(1, 0) + 6 * counts.get(2, 0) + counts.get(3, 0)
    return lhs_small == (weighted < bound)
