"""Permutation groups: construction, conjugacy classes, normal structure.

Groups are immutable after construction; expensive per-group data (class
data, element lists, derived series) is cached lazily on the instance.  All
orderings are canonical so repeated runs produce identical output.
"""

from __future__ import annotations

from collections import deque
from math import gcd

from .bsgs import StabilizerChain
from .errors import GroupTooLargeError, NotMemberError, NotNormalError
from .perms import Permutation

# Full element enumeration (classes, quotients) is only attempted below this
# size.  This is an artifact-level bound, not a mathematical one.
DEFAULT_ELEMENT_BOUND = 10**6


class Group:
    """A finite permutation group on {0, ..., degree-1}.

    Generators are deduplicated, identity-free and sorted by image tuple, so
    any two Groups built from the same generating set are indistinguishable.
    """

    def __init__(self, generators, degree: int, name: str | None = None,
                 _base_prefix=()):
        self.degree = degree
        gens = sorted({g for g in generators if not g.is_identity()})
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.chain = StabilizerChain(self.generators, degree, _base_prefix)
        self.order: int = self.chain.order()
        self.name = name
        self._cache: dict = {}

    # -- basic queries ----------------------------------------------------

    def __contains__(self, p: Permutation) -> bool:
        return self.chain.contains(p)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def elements(self, bound: int = DEFAULT_ELEMENT_BOUND) -> list[Permutation]:
        """All elements in canonical order (cached)."""
        if self.order > bound:
            raise GroupTooLargeError(
                f"group order {self.order} exceeds element bound {bound}")
        if "elements" not in self._cache:
            self._cache["elements"] = list(self.chain.elements())
        return self._cache["elements"]

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i:])

    def is_trivial(self) -> bool:
        return self.order == 1

    def subgroup(self, generators, name=None) -> "Subgroup":
        return Subgroup(self, generators, name=name)

    def exponent(self) -> int:
        cd = conjugacy_classes(self)
        e = 1
        for n in cd.orders:
            e = e // gcd(e, n) * n
        return e

    def __repr__(self):
        label = self.name or "Group"
        return f"<{label} degree={self.degree} order={self.order}>"


class Subgroup(Group):
    """A group with a reference to the parent it lives in.

    Every generator is checked for parent membership at construction.
    """

    def __init__(self, parent: Group, generators, name=None):
        generators = list(generators)
        for g in generators:
            if g not in parent:
                raise NotMemberError(f"{g} is not an element of the parent group")
        super().__init__(generators, parent.degree, name=name)
        self.parent = parent

    def is_normal(self) -> bool:
        for s in self.generators:
            for g in self.parent.generators:
                if s.conjugate(g) not in self:
                    return False
        return True


class ClassData:
    """Conjugacy classes of a group in canonical order.

    Classes are sorted by (element order, class size, lexicographically least
    member); the representative of a class is its least member.  The
    ``element_index`` map covers every group element.
    """

    def __init__(self, group: Group, bound: int = DEFAULT_ELEMENT_BOUND):
        elements = group.elements(bound)
        gens = group.generators
        index = {}
        raw_classes = []
        for e in elements:  # canonical order makes discovery deterministic
            if e in index:
                continue
            members = [e]
            index[e] = len(raw_classes)
            queue = [e]
            while queue:
                x = queue.pop()
                for g in gens:
                    y = x.conjugate(g)
                    if y not in index:
                        index[y] = len(raw_classes)
                        members.append(y)
                        queue.append(y)
            raw_classes.append(members)

        for members in raw_classes:
            members.sort()
        order_key = [(members[0].order() if not members[0].is_identity() else 1)
                     for members in raw_classes]
        # identity has order 1 and sorts first
        ranking = sorted(range(len(raw_classes)),
                         key=lambda i: (order_key[i], len(raw_classes[i]),
                                        raw_classes[i][0].images))
        self.group = group
        self.members: list[list[Permutation]] = [raw_classes[i] for i in ranking]
        self.reps: list[Permutation] = [m[0] for m in self.members]
        self.sizes: list[int] = [len(m) for m in self.members]
        self.orders: list[int] = [r.order() for r in self.reps]
        self.element_index: dict[Permutation, int] = {}
        for ci, members in enumerate(self.members):
            for e in members:
                self.element_index[e] = ci
        self.inverse_class: list[int] = [
            self.element_index[r.inverse()] for r in self.reps]
        # power_class[i][e] = class of reps[i]**e for e in 0..orders[i]-1
        self.power_class: list[list[int]] = []
        for i, r in enumerate(self.reps):
            row = []
            p = self.group.identity()
            for _ in range(self.orders[i]):
                row.append(self.element_index[p])
                p = p * r
            self.power_class.append(row)

        assert sum(self.sizes) == group.order
        assert all(group.order % s == 0 for s in self.sizes)

    @property
    def num_classes(self) -> int:
        return len(self.reps)

    def class_of(self, p: Permutation) -> int:
        try:
            return self.element_index[p]
        except KeyError:
            raise NotMemberError("element not in group (class lookup failed)")

    def centralizer_order(self, i: int) -> int:
        return self.group.order // self.sizes[i]


def conjugacy_classes(group: Group, bound: int = DEFAULT_ELEMENT_BOUND) -> ClassData:
    if "classes" not in group._cache:
        group._cache["classes"] = ClassData(group, bound)
    return group._cache["classes"]


# -- normal structure ------------------------------------------------------

def normal_closure(group: Group, elems) -> Subgroup:
    """Smallest normal subgroup of ``group`` containing ``elems``."""
    gens = []
    for e in elems:
        if e not in group:
            raise NotMemberError("normal_closure input is not a group element")
        if not e.is_identity() and e not in gens:
            gens.append(e)
    h = Subgroup(group, gens)
    while True:
        new = []
        for s in h.generators:
            for g in group.generators:
                c = s.conjugate(g)
                if c not in h:
                    new.append(c)
        if not new:
            return h
        h = Subgroup(group, list(h.generators) + new)


def commutator_subgroup(group: Group) -> Subgroup:
    gens = group.generators
    comms = []
    for a in gens:
        for b in gens:
            c = a.inverse() * b.inverse() * a * b
            if not c.is_identity():
                comms.append(c)
    return normal_closure(group, comms)


def derived_series(group: Group) -> list[Group]:
    """G > G' > G'' > ... until stabilization (last repeat dropped)."""
    if "derived_series" not in group._cache:
        series: list[Group] = [group]
        current = group
        while True:
            nxt = commutator_subgroup(current)
            if nxt.order == current.order:
                break
            series.append(nxt)
            current = nxt
            if current.order == 1:
                break
        group._cache["derived_series"] = series
    return group._cache["derived_series"]


def is_solvable(group: Group) -> bool:
    return derived_series(group)[-1].order == 1


def is_perfect(group: Group) -> bool:
    return commutator_subgroup(group).order == group.order


def center(group: Group) -> Subgroup:
    """The center, read off as the union of the size-1 conjugacy classes."""
    cd = conjugacy_classes(group)
    central = [cd.reps[i] for i in range(cd.num_classes)
               if cd.sizes[i] == 1 and not cd.reps[i].is_identity()]
    # keep the generating set small: greedy sweep in canonical order
    gens: list[Permutation] = []
    h = Subgroup(group, [])
    for z in central:
        if z not in h:
            gens.append(z)
            h = Subgroup(group, gens)
    return h


def minimal_normal_subgroups(group: Group) -> list[Subgroup]:
    """All minimal nontrivial normal subgroups.

    Every minimal normal subgroup is the normal closure of any of its
    nonidentity elements, so closures of class representatives cover them.
    """
    cd = conjugacy_classes(group)
    seen: dict[tuple, Subgroup] = {}
    for i in range(cd.num_classes):
        if cd.reps[i].is_identity():
            continue
        n = normal_closure(group, [cd.reps[i]])
        key = _subgroup_key(n)
        if key not in seen:
            seen[key] = n
    subs = sorted(seen.values(), key=lambda s: (s.order, _subgroup_key(s)))
    minimal = []
    for n in subs:
        if not any(m.order < n.order and all(g in n for g in m.generators)
                   for m in minimal):
            minimal.append(n)
    return minimal


def _subgroup_key(s: Group) -> tuple:
    return (s.order, tuple(e.images for e in s.elements()))


def solvable_radical(group: Group) -> Subgroup:
    """Largest solvable normal subgroup.

    Built by absorbing solvable minimal normal subgroups of successive
    quotients until the quotient has none left.
    """
    radical_gens: list[Permutation] = []
    while True:
        radical = Subgroup(group, radical_gens)
        q = quotient_group(group, radical)
        candidates = [m for m in minimal_normal_subgroups(q.group)
                      if is_solvable(m)]
        if not candidates:
            return radical
        lift = [q.preimage(x) for x in candidates[0].generators]
        radical_gens = list(radical.generators) + lift


class Quotient:
    """A quotient group together with its projection data.

    ``group`` is a faithful permutation realization of G/N; ``gen_images``
    lists the image of each generator of the source, which is what fiber
    products and radical lifting need.
    """

    def __init__(self, source: Group, kernel: Group, group: Group,
                 gen_images: list[Permutation], project_fn):
        self.source = source
        self.kernel = kernel
        self.group = group
        self.gen_images = gen_images
        self._project_fn = project_fn
        self._word_table: dict[Permutation, Permutation] | None = None

    def project(self, p: Permutation) -> Permutation:
        if p not in self.source:
            raise NotMemberError("cannot project a non-element")
        return self._project_fn(p)

    def preimage(self, q: Permutation) -> Permutation:
        """Some source element mapping to ``q`` (BFS word evaluation)."""
        if self.kernel.order == 1:
            if q not in self.source:
                raise NotMemberError("element is not in the quotient's image")
            return q
        if self._word_table is None:
            table = {self.group.identity(): self.source.identity()}
            queue = deque([self.group.identity()])
            while queue:
                x = queue.popleft()
                for img, src in zip(self.gen_images, self.source.generators):
                    y = x * img
                    if y not in table:
                        table[y] = table[x] * src
                        queue.append(y)
            self._word_table = table
        try:
            return self._word_table[q]
        except KeyError:
            raise NotMemberError("element is not in the quotient's image")


def quotient_group(group: Group, n: Group,
                   bound: int = DEFAULT_ELEMENT_BOUND) -> Quotient:
    """Faithful action of G/N, preferring the action on N-orbits when it is
    faithful, otherwise on right cosets of N."""
    for s in n.generators:
        for g in group.generators:
            if s.conjugate(g) not in n:
                raise NotNormalError("quotient by a non-normal subgroup")
    if n.order == 1:
        return Quotient(group, n, group, list(group.generators), lambda p: p)
    if n.order == group.order:
        trivial = Group([], 1)
        ident = Permutation.identity(1)
        return Quotient(group, n, trivial,
                        [ident for _ in group.generators], lambda p: ident)

    target = group.order // n.order

    # cheap attempt: G permutes the N-orbits; faithful iff image has order |G:N|
    orbit_of = _orbit_labels(n, group.degree)
    num_orbits = max(orbit_of) + 1
    if num_orbits > 1:
        def act_orbits(p: Permutation) -> Permutation:
            images = [0] * num_orbits
            seen = [False] * num_orbits
            for pt in range(group.degree):
                o = orbit_of[pt]
                if not seen[o]:
                    seen[o] = True
                    images[o] = orbit_of[p[pt]]
            return Permutation(images)

        images = [act_orbits(g) for g in group.generators]
        img_group = Group(images, num_orbits)
        if img_group.order == target:
            return Quotient(group, n, img_group, images,
                            lambda p: act_orbits(p))

    # general case: action on right cosets of N, labeled by BFS discovery
    n_elements = n.elements(bound)
    if target > bound:
        raise GroupTooLargeError("coset space exceeds the element bound")

    def signature(x: Permutation) -> tuple:
        return min((m * x).images for m in n_elements)

    sigs = {signature(group.identity()): 0}
    reps = [group.identity()]
    queue = deque([0])
    while queue:
        ci = queue.popleft()
        for g in group.generators:
            y = reps[ci] * g
            sig = signature(y)
            if sig not in sigs:
                idx = len(reps)
                sigs[sig] = idx
                reps.append(y)
                queue.append(idx)
    assert len(reps) == target, "coset enumeration mismatch"

    def act_cosets(p: Permutation) -> Permutation:
        return Permutation([sigs[signature(r * p)] for r in reps])

    images = [act_cosets(g) for g in group.generators]
    img_group = Group(images, target)
    assert img_group.order == target
    return Quotient(group, n, img_group, images, act_cosets)


def _orbit_labels(n: Group, degree: int) -> list[int]:
    """Label each point with the index of its N-orbit (orbits sorted by
    least point)."""
    label = [-1] * degree
    next_label = 0
    for pt in range(degree):
        if label[pt] != -1:
            continue
        stack = [pt]
        label[pt] = next_label
        while stack:
            x = stack.pop()
            for g in n.generators:
                y = g[x]
                if label[y] == -1:
                    label[y] = next_label
                    stack.append(y)
        next_label += 1
    return label


def is_p_solvable(group: Group, p: int) -> bool:
    """True iff every chief factor is a p-group or a p'-group."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if is_solvable(group):
        return True
    return _p_solvable_rec(group, p)


def _p_solvable_rec(group: Group, p: int) -> bool:
    if group.order == 1:
        return True
    if group.order % p != 0:
        return True
    mns = minimal_normal_subgroups(group)
    n = mns[0]
    if not n.is_abelian() and n.order % p == 0:
        return False
    q = quotient_group(group, n)
    return _p_solvable_rec(q.group, p)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def class_fusion(group: Group, h: Group) -> list[int]:
    """Map each conjugacy class of h to the class of ``group`` containing it.

    h must act on the same points as ``group`` (a subgroup in the literal
    sense); lookups go through the parent's element index.
    """
    parent_cd = conjugacy_classes(group)
    hcd = conjugacy_classes(h)
    return [parent_cd.class_of(rep) for rep in hcd.reps]
