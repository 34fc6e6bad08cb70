"""Independent brute-force character tables for small groups.

This is the slow cross-check path for the modular engine: everything is
done over the rationals.  Elements are enumerated by plain closure, classes
by conjugating with every element, class matrices by a literal double loop,
and the common eigenvectors of the class matrices are found over the
cyclotomic field Q(zeta_E) with exact Fraction arithmetic.

Eigenvalues of a class matrix are central character values, i.e. of the
form (class size / degree) * (sum of 'degree' roots of unity), a finite
candidate set at this scale.  Numerics (numpy eigenvalues) only steer which
candidates to try; every accepted eigenvalue is certified by an exact
nullspace computation, and the eigenspace dimensions must sum to the full
dimension, so a missed or misidentified root cannot pass silently.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, isqrt

import numpy as np

from .perms import Permutation

ORACLE_ORDER_BOUND = 24


# -- tiny exact cyclotomic field Q[x]/Phi_n ---------------------------------

def _poly_div(num, den):
    num = list(num)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    rem = num[: len(den) - 1]
    while rem and rem[-1] == 0:
        rem.pop()
    return out, rem


def _cyclotomic(n: int):
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            q, rem = _poly_div(poly, _cyclotomic(d))
            assert not rem
            poly = q
    return poly


class CycloField:
    """Q(zeta_n) with elements as coefficient tuples in the power basis."""

    def __init__(self, n: int):
        self.n = n
        self.phi = _cyclotomic(n)
        self.deg = len(self.phi) - 1
        self.zero = (Fraction(0),) * self.deg
        self.one = self.from_rational(Fraction(1))
        self._zeta_pows = self._powers()

    def _powers(self):
        pows = []
        current = list(self.one)
        for _ in range(self.n):
            pows.append(tuple(current))
            current = [Fraction(0)] + current  # multiply by x
            lead = current.pop()
            if lead:
                for j in range(self.deg):
                    current[j] -= lead * self.phi[j]
        return pows

    def from_rational(self, r) -> tuple:
        out = [Fraction(0)] * self.deg
        out[0] = Fraction(r)
        return tuple(out)

    def zeta(self, k: int) -> tuple:
        return self._zeta_pows[k % self.n]

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def scale(self, a, r):
        return tuple(x * r for x in a)

    def mul(self, a, b):
        prod = [Fraction(0)] * (2 * self.deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        for i in range(len(prod) - 1, self.deg - 1, -1):
            c = prod[i]
            if c:
                prod[i] = Fraction(0)
                for j in range(self.deg):
                    prod[i - self.deg + j] -= c * self.phi[j]
        return tuple(prod[: self.deg])

    def inv(self, a):
        # extended Euclid on (a as polynomial, Phi_n)
        r0, r1 = list(self.phi), list(a)
        while r1 and r1[-1] == 0:
            r1.pop()
        if not r1:
            raise ZeroDivisionError("inverse of zero field element")
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            if len(r1) == 1:
                c = r1[0]
                return tuple(
                    (s1[i] / c if i < len(s1) else Fraction(0))
                    for i in range(self.deg))
            q, rem = _poly_div(r0, r1)
            new_s = self._poly_sub(s0, self._poly_mul(q, s1))
            r0, r1 = r1, rem if rem else [Fraction(0)]
            while len(r1) > 1 and r1[-1] == 0:
                r1.pop()
            s0, s1 = s1, new_s

    @staticmethod
    def _poly_mul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out

    @staticmethod
    def _poly_sub(a, b):
        n = max(len(a), len(b))
        return [(a[i] if i < len(a) else Fraction(0))
                - (b[i] if i < len(b) else Fraction(0)) for i in range(n)]

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)

    def eq(self, a, b) -> bool:
        return all(x == y for x, y in zip(a, b))

    def conj(self, a):
        out = self.zero
        for j, c in enumerate(a):
            if c:
                term = self.scale(self.zeta((-j) % self.n) if j else self.one, c)
                out = self.add(out, term)
        return out

    def rational(self, a):
        if any(a[1:]):
            return None
        return a[0]

    def to_complex(self, a) -> complex:
        return sum(float(c) * np.exp(2j * np.pi * j / self.n)
                   for j, c in enumerate(a) if c)


# -- exact linear algebra over the field -------------------------------------

def _rref(rows, field):
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = None
        for rr in range(row, nrows):
            if not field.is_zero(rows[rr][col]):
                pivot = rr
                break
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = field.inv(rows[row][col])
        rows[row] = [field.mul(inv, x) for x in rows[row]]
        for rr in range(nrows):
            if rr != row and not field.is_zero(rows[rr][col]):
                factor = rows[rr][col]
                rows[rr] = [field.sub(x, field.mul(factor, y))
                            for x, y in zip(rows[rr], rows[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return rows[:row], pivots


def _nullspace(rows, field, ncols):
    reduced, pivots = _rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [field.zero] * ncols
        vec[f] = field.one
        for ri, c in enumerate(pivots):
            vec[c] = field.sub(field.zero, reduced[ri][f])
        basis.append(vec)
    return basis


# -- brute-force group data ---------------------------------------------------

def _closure(generators, degree):
    identity = Permutation.identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        frontier = new
    return sorted(elements)


def _classes(elements):
    element_set = set(elements)
    assigned = {}
    classes = []
    for x in elements:
        if x in assigned:
            continue
        members = sorted({g.inverse() * x * g for g in element_set})
        for m in members:
            assigned[m] = len(classes)
        classes.append(members)
    ranking = sorted(range(len(classes)),
                     key=lambda i: (classes[i][0].order(), len(classes[i]),
                                    classes[i][0].images))
    classes = [classes[i] for i in ranking]
    return classes


def oracle_table(generators, degree: int):
    """Exact (degree, values) rows plus the class list, order-<=-24 groups.

    Values are elements of Q(zeta_E) in the power basis; rows are unsorted.
    """
    elements = _closure(generators, degree)
    order = len(elements)
    if order > ORACLE_ORDER_BOUND:
        raise ValueError(f"oracle is limited to order <= {ORACLE_ORDER_BOUND}")
    classes = _classes(elements)
    reps = [c[0] for c in classes]
    sizes = [len(c) for c in classes]
    orders = [r.order() for r in reps]
    r = len(classes)
    exponent = 1
    for n in orders:
        exponent = exponent // gcd(exponent, n) * n
    field = CycloField(exponent)

    class_index = {}
    for ci, members in enumerate(classes):
        for m in members:
            class_index[m] = ci

    def class_matrix(i):
        a = [[0] * r for _ in range(r)]
        rep_pos = {rep: k for k, rep in enumerate(reps)}
        for j in range(r):
            for x in classes[i]:
                for y in classes[j]:
                    k = rep_pos.get(x * y)
                    if k is not None:
                        a[j][k] += 1
        return a

    # simultaneous eigenspace splitting over Q(zeta_E)
    identity_basis = []
    for i in range(r):
        row = [field.zero] * r
        row[i] = field.one
        identity_basis.append(row)
    subspaces = [(identity_basis, list(range(r)))]
    matrix_index = 1
    while any(len(b) > 1 for b, _ in subspaces):
        assert matrix_index < r, "class matrices exhausted"
        a = class_matrix(matrix_index)
        a_field = [[field.from_rational(x) for x in row] for row in a]
        candidates = _eigen_candidates(field, sizes[matrix_index],
                                       orders[matrix_index], order)
        new_subspaces = []
        for basis, pivots in subspaces:
            m = len(basis)
            if m == 1:
                new_subspaces.append((basis, pivots))
                continue
            image = [_vec_mat_t(vec, a_field, field) for vec in basis]
            action = [[image[i][c] for c in pivots] for i in range(m)]
            total_dim = 0
            for value in _numeric_guided_eigenvalues(action, field, candidates):
                shifted = [[field.sub(action[jj][ii],
                                      value if ii == jj else field.zero)
                            for jj in range(m)] for ii in range(m)]
                coords = _nullspace(shifted, field, m)
                if not coords:
                    continue
                vectors = []
                for coord in coords:
                    vec = [field.zero] * r
                    for ci, basis_row in zip(coord, basis):
                        if not field.is_zero(ci):
                            vec = [field.add(x, field.mul(ci, y))
                                   for x, y in zip(vec, basis_row)]
                    vectors.append(vec)
                reduced, piv = _rref(vectors, field)
                new_subspaces.append((reduced, piv))
                total_dim += len(reduced)
            assert total_dim == m, "eigenspaces did not fill the subspace"
        subspaces = new_subspaces
        matrix_index += 1

    rows = []
    for basis, _ in subspaces:
        w = basis[0]
        w = [field.mul(field.inv(w[0]), x) for x in w]
        total = field.zero
        for k in range(r):
            term = field.mul(w[k], field.conj(w[k]))
            total = field.add(total, field.scale(term, Fraction(1, sizes[k])))
        ratio = field.rational(total)
        assert ratio is not None and ratio > 0, "degree identity not rational"
        d_sq = Fraction(order) / ratio
        assert d_sq.denominator == 1, "degree squared not integral"
        d = isqrt(d_sq.numerator)
        assert d * d == d_sq.numerator, "degree squared not a perfect square"
        values = [field.scale(field.mul(field.from_rational(d), w[k]),
                              Fraction(1, sizes[k])) for k in range(r)]
        rows.append((d, values))
    assert sum(d * d for d, _ in rows) == order
    return rows, classes, field


def _vec_mat_t(vec, a_field, field):
    """Row vector times the transpose of a (vector stays in the row space)."""
    r = len(vec)
    out = []
    for j in range(r):
        acc = field.zero
        for i in range(r):
            if not field.is_zero(vec[i]):
                acc = field.add(acc, field.mul(vec[i], a_field[j][i]))
        out.append(acc)
    return out


def _eigen_candidates(field, size, n, order):
    """All possible eigenvalues of this class matrix with their complex
    approximations: (size/d) * (sum of d roots of unity of order dividing n)."""
    out = []
    degrees = [d for d in range(1, isqrt(order) + 1) if order % d == 0]
    roots = [field.zeta(j * (field.n // n)) for j in range(n)]
    root_complex = [np.exp(2j * np.pi * j / n) for j in range(n)]
    for d in degrees:
        factor = Fraction(size, d)
        for combo in combinations_with_replacement(range(n), d):
            value = field.zero
            approx = 0j
            for j in combo:
                value = field.add(value, roots[j])
                approx += root_complex[j]
            out.append((field.scale(value, factor), complex(approx) * size / d))
    return out


def verify_against_oracle(group, table) -> None:
    """Assert that the modular-engine table equals the brute-force one up to
    row order (exact value equality over Q(zeta_E))."""
    rows, classes, field = oracle_table(list(group.generators), group.degree)
    cd = table.classes
    assert [c[0] for c in classes] == list(cd.reps), \
        "oracle and engine disagree on conjugacy classes"

    def embed(v):
        out = field.zero
        step = field.n // v.n
        for k, c in enumerate(v.coeffs):
            if c:
                out = field.add(out, field.scale(field.zeta(k * step), c))
        return out

    engine_rows = [(chi.degree, [embed(v) for v in chi.values])
                   for chi in table.chars]
    assert len(engine_rows) == len(rows)
    used = set()
    for d, values in rows:
        match = None
        for i, (de, ve) in enumerate(engine_rows):
            if i in used or de != d:
                continue
            if all(field.eq(x, y) for x, y in zip(values, ve)):
                match = i
                break
        assert match is not None, f"oracle row of degree {d} has no partner"
        used.add(match)
    assert len(used) == len(engine_rows)


def _numeric_guided_eigenvalues(action, field, candidates):
    """Exact eigenvalues of the action matrix, distinct, numerically guided."""
    m = len(action)
    numeric = np.array([[field.to_complex(x) for x in row] for row in action])
    eigs = np.linalg.eigvals(numeric)
    clusters: list[complex] = []
    for e in eigs:
        if not any(abs(e - c) < 1e-6 for c in clusters):
            clusters.append(complex(e))
    found = []
    for target in clusters:
        ranked = sorted((abs(target - approx), idx)
                        for idx, (_, approx) in enumerate(candidates))
        exact = None
        for dist, idx in ranked[:8]:
            if dist > 1e-3:
                break
            cand = candidates[idx][0]
            if any(field.eq(cand, f) for f in found):
                continue  # same exact value already certified
            shifted = [[field.sub(action[jj][ii],
                                  cand if ii == jj else field.zero)
                        for jj in range(m)] for ii in range(m)]
            if _nullspace(shifted, field, m):
                exact = cand
                break
        if exact is not None:
            found.append(exact)
    return found
