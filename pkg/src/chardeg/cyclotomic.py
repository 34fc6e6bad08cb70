"""Exact arithmetic with sums of roots of unity.

A value is a coefficient vector over the n-th roots of unity: ``coeffs[k]``
multiplies zeta_n^k.  Character values carry their canonical form (the
eigenvalue multiplicities of a representing matrix), but the arithmetic here
is valid for arbitrary integer vectors.

Exact questions (is this value zero / rational / equal to another) are
answered by rewriting in the power basis of Q(zeta_n): the reduction of x^k
modulo the n-th cyclotomic polynomial is precomputed once per n, making the
rewrite an integer matrix-vector product.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending degree, exact integers."""
    if n == 1:
        return (-1, 1)
    # divide x^n - 1 by the product of Phi_d over proper divisors d of n
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (remainder must vanish)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert not any(num[: len(den) - 1]), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def _reduction_matrix(n: int):
    """n x phi(n) integer matrix: row k holds x^k reduced mod Phi_n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    current = [0] * deg
    current[0] = 1 if deg > 0 else 0
    if deg == 0:  # cannot happen (phi has positive degree for n >= 1)
        raise ValueError(n)
    for _ in range(n):
        rows.append(tuple(current))
        # multiply by x modulo Phi_n
        lead = current[-1]
        current = [0] + current[:-1]
        if lead:
            for j in range(deg):
                current[j] -= lead * phi[j]
    max_entry = max((abs(e) for row in rows for e in row), default=0)
    arr = np.array(rows, dtype=np.int64)
    return rows, arr, max_entry, deg


def reduce_to_power_basis(coeffs, n: int) -> tuple:
    """Coordinates of sum(coeffs[k] * zeta_n^k) in the power basis of
    Q(zeta_n).  Exact; uses int64 when provably overflow-free."""
    rows, arr, max_entry, deg = _reduction_matrix(n)
    ints = all(isinstance(c, int) for c in coeffs)
    if ints:
        total = sum(abs(c) for c in coeffs)
        if total * max(max_entry, 1) < 2**62:
            vec = np.asarray(list(coeffs), dtype=np.int64)
            return tuple(int(v) for v in vec @ arr)
    out = [0] * deg
    for k, c in enumerate(coeffs):
        if c:
            row = rows[k]
            for j in range(deg):
                out[j] += c * row[j]
    return tuple(out)


class CycValue:
    """An exact element of Z[zeta_n] (or Q[zeta_n] with Fraction coeffs)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != n:
            raise ValueError("coefficient vector must have length n")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("CycValue is immutable")

    @staticmethod
    def from_rational(r, n: int = 1) -> "CycValue":
        return CycValue(n, (r,) + (0,) * (n - 1))

    @staticmethod
    def root_of_unity(n: int, k: int = 1) -> "CycValue":
        coeffs = [0] * n
        coeffs[k % n] = 1
        return CycValue(n, coeffs)

    def embed(self, m: int) -> "CycValue":
        """Rewrite over the m-th roots (n must divide m)."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"{self.n} does not divide {m}")
        step = m // self.n
        coeffs = [0] * m
        for k, c in enumerate(self.coeffs):
            coeffs[k * step] = c
        return CycValue(m, coeffs)

    def _common(self, other: "CycValue"):
        m = self.n * other.n // gcd(self.n, other.n)
        return self.embed(m), other.embed(m)

    def __add__(self, other: "CycValue") -> "CycValue":
        a, b = self._common(other)
        return CycValue(a.n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __sub__(self, other: "CycValue") -> "CycValue":
        a, b = self._common(other)
        return CycValue(a.n, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __mul__(self, other: "CycValue") -> "CycValue":
        a, b = self._common(other)
        out = [0] * a.n
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[(i + j) % a.n] += x * y
        return CycValue(a.n, out)

    def scale(self, r) -> "CycValue":
        return CycValue(self.n, tuple(r * c for c in self.coeffs))

    def conjugate(self) -> "CycValue":
        out = [0] * self.n
        for k, c in enumerate(self.coeffs):
            out[(-k) % self.n] = c
        return CycValue(self.n, out)

    def is_zero(self) -> bool:
        return not any(reduce_to_power_basis(self.coeffs, self.n))

    def rational(self):
        """The value as a Fraction if it is rational, else None."""
        coords = reduce_to_power_basis(self.coeffs, self.n)
        if any(coords[1:]):
            return None
        return Fraction(coords[0])

    def value_eq(self, other: "CycValue") -> bool:
        """Equality as complex numbers (not as formal vectors)."""
        return (self - other).is_zero()

    def __eq__(self, other) -> bool:
        return (isinstance(other, CycValue) and self.n == other.n
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"CycValue({self.n}, {list(self.coeffs)})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                root = f"z{self.n}" if k == 1 else f"z{self.n}^{k}"
                terms.append(root if c == 1 else f"{c}*{root}")
        return "+".join(terms).replace("+-", "-") if terms else "0"

    def complex(self) -> complex:
        """Float approximation (display / heuristics only)."""
        out = 0j
        for k, c in enumerate(self.coeffs):
            if c:
                out += complex(c) * np.exp(2j * np.pi * k / self.n)
        return out
