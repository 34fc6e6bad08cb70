"""Deterministic Schreier-Sims: base and strong generating set construction.

The chain supports exact order, membership tests, and canonical element
enumeration.  Everything is deterministic: orbits are explored in BFS order
with generators in list order, so equal input yields identical chains.
"""

from __future__ import annotations

from .perms import Permutation


class StabilizerChain:
    """BSGS data for a permutation group.

    ``base_prefix`` forces the given points to head the base (useful for
    computing kernels of coordinate projections); trivial levels this creates
    are kept so the prefix is honored literally.
    """

    def __init__(self, generators, degree: int, base_prefix=()):
        self.degree = degree
        gens = []
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.base: list[int] = []
        # level_gens[i] generates the stabilizer of base[:i]
        self.level_gens: list[list[Permutation]] = []
        self.transversals: list[dict[int, Permutation]] = []
        for b in base_prefix:
            self._append_level(b)
        self._build(gens)

    def _append_level(self, point: int) -> None:
        self.base.append(point)
        self.level_gens.append([])
        self.transversals.append({point: Permutation.identity(self.degree)})

    def _rebuild_transversal(self, i: int) -> None:
        b = self.base[i]
        trans = {b: Permutation.identity(self.degree)}
        queue = [b]
        while queue:
            x = queue.pop(0)
            t = trans[x]
            for s in self.level_gens[i]:
                y = s[x]
                if y not in trans:
                    trans[y] = t * s
                    queue.append(y)
        self.transversals[i] = trans

    def _sift(self, g: Permutation, start: int):
        """Reduce g through levels >= start; return (residue, stuck level)."""
        for j in range(start, len(self.base)):
            x = g[self.base[j]]
            if x == self.base[j]:
                continue
            t = self.transversals[j].get(x)
            if t is None:
                return g, j
            g = g * t.inverse()
        return g, len(self.base)

    def _add_generator(self, g: Permutation, level: int) -> None:
        """Register g as a generator of every level up to ``level``."""
        if level == len(self.base):
            for pt in range(self.degree):
                if g[pt] != pt:
                    self._append_level(pt)
                    break
        for l in range(level + 1):
            if all(g[self.base[k]] == self.base[k] for k in range(l)):
                if g not in self.level_gens[l]:
                    self.level_gens[l].append(g)

    def _build(self, gens: list[Permutation]) -> None:
        for g in gens:
            residue, j = self._sift(g, 0)
            if not residue.is_identity():
                self._add_generator(residue, j)
        for i in range(len(self.base)):
            self._rebuild_transversal(i)
        # bottom-up Schreier generator closure
        i = len(self.base) - 1
        while i >= 0:
            self._rebuild_transversal(i)
            restart = False
            points = list(self.transversals[i].keys())
            for x in points:
                t_x = self.transversals[i][x]
                for s in self.level_gens[i]:
                    y = s[x]
                    schreier = t_x * s * self.transversals[i][y].inverse()
                    if schreier.is_identity():
                        continue
                    residue, j = self._sift(schreier, i + 1)
                    if residue.is_identity():
                        continue
                    self._add_generator(residue, j)
                    for l in range(i + 1, min(j + 1, len(self.base))):
                        self._rebuild_transversal(l)
                    if j < len(self.base):
                        self._rebuild_transversal(j)
                    i = min(j, len(self.base) - 1)
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    def order(self) -> int:
        n = 1
        for trans in self.transversals:
            n *= len(trans)
        return n

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = self._sift(g, 0)
        return residue.is_identity()

    def strong_generators(self) -> list[Permutation]:
        return list(self.level_gens[0]) if self.base else []

    def stabilizer_generators(self, k: int) -> list[Permutation]:
        """Generators of the pointwise stabilizer of base[:k]."""
        if k >= len(self.base):
            return []
        return list(self.level_gens[k])

    def elements(self):
        """Yield all group elements in a canonical, reproducible order."""
        identity = Permutation.identity(self.degree)
        if not self.base:
            yield identity
            return

        def rec(i: int):
            if i == len(self.base):
                yield identity
                return
            level = [self.transversals[i][x] for x in sorted(self.transversals[i])]
            for rest in rec(i + 1):
                for t in level:
                    yield rest * t

        yield from rec(0)
