"""Exact character tables and character arithmetic.

The table rows come from the modular engine in ``dixon``; this module owns
the exact layer: canonical ordering, orthogonality validation, inner
products, restriction, tensor products, kernels, extension tests and the
Gallagher correspondence check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from . import dixon
from .cyclotomic import CycValue, reduce_to_power_basis
from .errors import TableError
from .groups import (DEFAULT_ELEMENT_BOUND, ClassData, Group, Subgroup,
                     class_fusion, conjugacy_classes)
from .perms import Permutation


class Character:
    """One irreducible character: degree plus a CycValue per class."""

    __slots__ = ("degree", "values", "kernel_classes", "_embedded")

    def __init__(self, degree: int, values):
        self.degree = degree
        self.values = tuple(values)
        identity_value = CycValue.from_rational(degree)
        self.kernel_classes = frozenset(
            j for j, v in enumerate(self.values) if v.value_eq(identity_value))
        self._embedded = None

    def embedded(self, exponent: int) -> tuple:
        """Values as length-``exponent`` integer tuples (sort key)."""
        if self._embedded is None:
            self._embedded = tuple(v.embed(exponent).coeffs for v in self.values)
        return self._embedded

    def __repr__(self):
        return f"<Character degree={self.degree}>"


class CharacterTable:
    """The exact table of a group, rows in canonical order.

    Canonical row order: degree ascending, then lexicographic on the values
    embedded over the group exponent.  Construction validates #rows, the
    degree sum of squares, degree divisibility, and exact row and column
    orthogonality; failures raise TableError.
    """

    def __init__(self, group: Group, classes: ClassData, chars,
                 exponent: int, prime: int, root: int, validate: bool = True):
        self.group = group
        self.classes = classes
        self.exponent = exponent
        self.dixon_prime = prime
        self.primitive_root = root
        self.chars = tuple(sorted(
            chars, key=lambda c: (c.degree, c.embedded(exponent))))
        self._np_rows = None
        if validate:
            self._validate()

    # -- numpy embedding for the exact inner-product loop ------------------

    def _rows(self) -> list[list[np.ndarray]]:
        if self._np_rows is None:
            e = self.exponent
            self._np_rows = [
                [_embed_np(v, e) for v in chi.values] for chi in self.chars]
        return self._np_rows

    def _validate(self) -> None:
        g, cd = self.group, self.classes
        r = cd.num_classes
        if len(self.chars) != r:
            raise TableError("character count differs from class count")
        if sum(c.degree ** 2 for c in self.chars) != g.order:
            raise TableError("degree squares do not sum to the group order")
        for c in self.chars:
            if g.order % c.degree:
                raise TableError(f"degree {c.degree} does not divide |G|")
        for i in range(len(self.chars)):
            for j in range(i, len(self.chars)):
                expected = Fraction(1 if i == j else 0)
                if inner_product(self, self.chars[i], self.chars[j]) != expected:
                    raise TableError(f"row orthogonality fails at ({i},{j})")
        rows = self._rows()
        for a in range(r):
            for b in range(a, r):
                total = np.zeros(self.exponent, dtype=np.int64)
                for row in rows:
                    total += _convolve_conj(row[a], row[b], self.exponent)
                expected = cd.centralizer_order(a) if a == b else 0
                coords = reduce_to_power_basis([int(x) for x in total],
                                               self.exponent)
                if any(coords[1:]) or coords[0] != expected:
                    raise TableError(f"column orthogonality fails at ({a},{b})")

    def degrees(self) -> list[int]:
        return [c.degree for c in self.chars]

    def principal(self) -> Character:
        """The all-ones row (not necessarily row 0 in canonical order)."""
        one = Fraction(1)
        for c in self.chars:
            if c.degree == 1 and all(v.rational() == one for v in c.values):
                return c
        raise TableError("no principal character found (table corrupt)")

    def to_data(self) -> "TableData":
        cd = self.classes
        return TableData(
            name=self.group.name or "",
            order=self.group.order,
            exponent=self.exponent,
            dixon_prime=self.dixon_prime,
            primitive_root=self.primitive_root,
            classes=[(cd.orders[i], cd.sizes[i]) for i in range(cd.num_classes)],
            characters=[(c.degree, [(v.n, list(v.coeffs)) for v in c.values])
                        for c in self.chars],
        )

    def __repr__(self):
        return (f"<CharacterTable {self.group!r} "
                f"degrees={self.degrees()}>")


@dataclass
class TableData:
    """Serializable snapshot of a table (the export format)."""

    name: str
    order: int
    exponent: int
    dixon_prime: int
    primitive_root: int
    classes: list  # (element order, class size) per class
    characters: list  # (degree, [(n, mult list), ...]) per character

    def to_json(self) -> str:
        payload = {
            "format": 1,
            "name": self.name,
            "order": self.order,
            "exponent": self.exponent,
            "dixon_prime": self.dixon_prime,
            "primitive_root": self.primitive_root,
            "classes": [{"order": o, "size": s} for o, s in self.classes],
            "characters": [
                {"degree": d, "values": [[n, mult] for n, mult in values]}
                for d, values in self.characters
            ],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "TableData":
        payload = json.loads(text)
        if payload.get("format") != 1:
            raise TableError("unknown table format")
        return TableData(
            name=payload["name"],
            order=payload["order"],
            exponent=payload["exponent"],
            dixon_prime=payload["dixon_prime"],
            primitive_root=payload["primitive_root"],
            classes=[(c["order"], c["size"]) for c in payload["classes"]],
            characters=[(c["degree"], [(n, list(mult)) for n, mult in c["values"]])
                        for c in payload["characters"]],
        )


def character_table(group: Group, bound: int = DEFAULT_ELEMENT_BOUND,
                    validate: bool = True) -> CharacterTable:
    """Exact character table via the modular engine (cached per group)."""
    key = "character_table"
    if key not in group._cache:
        cd = conjugacy_classes(group, bound)
        exponent = 1
        for n in cd.orders:
            exponent = exponent // gcd(exponent, n) * n
        p = dixon.dixon_prime(group.order, exponent)
        z = dixon.primitive_root(p)
        omegas = dixon.central_character_vectors(cd, p)
        chars = []
        for w in omegas:
            d = dixon.character_degree(w, cd, p)
            chars.append(Character(d, dixon.lift_character(w, d, cd, p, z)))
        group._cache[key] = CharacterTable(group, cd, chars, exponent, p, z,
                                           validate=validate)
    return group._cache[key]


# -- class function arithmetic ---------------------------------------------

def _embed_np(v: CycValue, exponent: int) -> np.ndarray:
    out = np.zeros(exponent, dtype=np.int64)
    step = exponent // v.n
    for k, c in enumerate(v.coeffs):
        if c:
            out[k * step] += c
    return out


def _convolve_conj(a: np.ndarray, b: np.ndarray, exponent: int) -> np.ndarray:
    """Cyclic convolution of a with the conjugate (index-reversal) of b."""
    b_conj = np.roll(b[::-1], 1)
    full = np.convolve(a, b_conj)
    out = full[:exponent].copy()
    out[: full.shape[0] - exponent] += full[exponent:]
    return out


def _values_of(f) -> tuple:
    return f.values if isinstance(f, Character) else tuple(f)


def inner_product(table: CharacterTable, a, b) -> Fraction:
    """(1/|G|) sum over classes of size * a(g) * conj(b(g)), exact."""
    va, vb = _values_of(a), _values_of(b)
    cd = table.classes
    e = table.exponent
    total = np.zeros(e, dtype=np.int64)
    for k in range(cd.num_classes):
        conv = _convolve_conj(_embed_np(va[k], e), _embed_np(vb[k], e), e)
        total += cd.sizes[k] * conv
    coords = reduce_to_power_basis([int(x) for x in total], e)
    if any(coords[1:]):
        raise TableError("inner product of class functions is not rational")
    return Fraction(coords[0], table.group.order)


def tensor(a, b) -> list[CycValue]:
    """Pointwise product of two class functions on the same table."""
    va, vb = _values_of(a), _values_of(b)
    return [x * y for x, y in zip(va, vb)]


def restrict_character(group: Group, chi, h: Group) -> list[CycValue]:
    """Values of chi on the classes of the subgroup h (via class fusion)."""
    fusion = class_fusion(group, h)
    values = _values_of(chi)
    return [values[ci] for ci in fusion]


def kernel_classes_contain(table: CharacterTable, chi: Character,
                           n: Group) -> bool:
    """True iff the subgroup n lies inside Ker(chi)."""
    cd = table.classes
    return all(cd.class_of(g) in chi.kernel_classes for g in n.generators)


def kernel_subgroup(group: Group, chi: Character) -> Subgroup:
    """Ker(chi) as a subgroup: the union of the kernel classes."""
    cd = conjugacy_classes(group)
    target = sum(cd.sizes[j] for j in chi.kernel_classes)
    gens: list[Permutation] = []
    current = Subgroup(group, gens)
    if current.order == target:
        return current
    for j in sorted(chi.kernel_classes):
        for member in cd.members[j]:
            if member not in current:
                gens.append(member)
                current = Subgroup(group, gens)
                if current.order == target:
                    return current
    raise TableError("kernel classes do not close into a subgroup")


def extensions_of(group: Group, n: Group, theta: Character,
                  warn=None) -> list[Character]:
    """All chi in Irr(G) with chi(1) = theta(1) restricting to theta exactly."""
    if isinstance(n, Subgroup) and not n.is_normal():
        if warn is not None:
            warn("extension test on a non-normal subgroup")
    table = character_table(group)
    out = []
    for chi in table.chars:
        if chi.degree != theta.degree:
            continue
        restricted = restrict_character(group, chi, n)
        if all(x.value_eq(y) for x, y in zip(restricted, theta.values)):
            out.append(chi)
    return out


@dataclass
class GallagherResult:
    passed: bool
    details: list[str]


def gallagher_check(group: Group, n: Group, psi: Character) -> GallagherResult:
    """Verify the multiplication map beta -> beta*psi on Irr(G/N).

    Requires psi to restrict irreducibly to n; then every product with a
    character trivial on n must be irreducible and all products distinct.
    """
    details = []
    g_table = character_table(group)
    n_table = character_table(n)
    restricted = restrict_character(group, psi, n)
    norm = inner_product(n_table, restricted, restricted)
    if norm != 1:
        return GallagherResult(False, [
            f"precondition failed: restriction has norm {norm}, not 1"])
    betas = [chi for chi in g_table.chars
             if kernel_classes_contain(g_table, chi, n)]
    products = []
    for beta in betas:
        prod = tensor(beta, psi)
        norm = inner_product(g_table, prod, prod)
        if norm != 1:
            details.append(
                f"product with degree-{beta.degree} character is reducible "
                f"(norm {norm})")
            continue
        products.append(prod)
    distinct = True
    for i in range(len(products)):
        for j in range(i + 1, len(products)):
            if all(x.value_eq(y) for x, y in zip(products[i], products[j])):
                distinct = False
                details.append(f"products {i} and {j} coincide")
    passed = distinct and len(products) == len(betas)
    if passed:
        details.append(
            f"{len(betas)} products, all irreducible and distinct")
    return GallagherResult(passed, details)
