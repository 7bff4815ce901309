"""Deterministic Schreier-Sims for permutation groups.

The stabilizer chain stores explicit transversals: ``transversals[i][b]`` is
a permutation mapping ``base[i]`` to ``b`` and fixing ``base[:i]``.  That
costs memory proportional to degree * sum of orbit lengths, which is fine for
the degrees handled here (a few hundred points).
"""

from __future__ import annotations

import math
import random

from .perm import Permutation


class Bsgs:
    def __init__(self, degree, base, strong, transversals):
        self.degree = degree
        self.base = base
        self.strong = strong
        self.transversals = transversals
        self._inverses = [dict() for _ in transversals]
        self._reps = [list(t.values()) for t in transversals]

    @property
    def strong_generators(self) -> list[Permutation]:
        seen = {}
        for level in self.strong:
            for g in level:
                seen.setdefault(g.key, g)
        return list(seen.values())

    @property
    def orbit_lengths(self) -> list[int]:
        return [len(t) for t in self.transversals]

    @property
    def order(self) -> int:
        return math.prod(self.orbit_lengths)

    def _inv(self, level, point):
        cache = self._inverses[level]
        u = cache.get(point)
        if u is None:
            u = cache[point] = self.transversals[level][point].inverse()
        return u

    def sift(self, g: Permutation, start: int = 0):
        """Strip ``g`` through the chain; returns (residue, level reached)."""
        for level in range(start, len(self.base)):
            b = g(self.base[level])
            if b not in self.transversals[level]:
                return g, level
            if b != self.base[level]:
                g = g * self._inv(level, b)
        return g, len(self.base)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        h, level = self.sift(g)
        return level == len(self.base) and h.is_identity()

    __contains__ = contains

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniform random element: one transversal element per level."""
        g = Permutation.identity(self.degree)
        for reps in reversed(self._reps):
            g = g * reps[rng.randrange(len(reps))]
        return g

    def __repr__(self):
        return f"<Bsgs degree={self.degree} order={self.order} base_len={len(self.base)}>"


def _orbit_transversal(n, point, gens):
    trans = {point: Permutation.identity(n)}
    queue = [point]
    for p in queue:
        u = trans[p]
        for s in gens:
            q = s(p)
            if q not in trans:
                trans[q] = u * s
                queue.append(q)
    return trans


def bsgs_build(generators) -> Bsgs:
    """Base and strong generating set for the group generated by ``generators``."""
    generators = list(generators)
    if not generators:
        raise ValueError("at least one generator is required")
    n = generators[0].degree
    gens = [g for g in {g.key: g for g in generators}.values() if not g.is_identity()]
    base: list[int] = []
    for g in gens:
        if all(g(b) == b for b in base):
            base.append(g.first_moved())
    strong = [[g for g in gens if all(g(b) == b for b in base[:i])] for i in range(len(base))]
    trans = [_orbit_transversal(n, base[i], strong[i]) for i in range(len(base))]
    chain = Bsgs(n, base, strong, trans)

    i = len(base) - 1
    while i >= 0:
        restart = None
        for b, u in list(trans[i].items()):
            for s in strong[i]:
                sb = s(b)
                sg = u * s * chain._inv(i, sb) if sb != base[i] else u * s
                if sg.is_identity():
                    continue
                h, j = chain.sift(sg, i + 1)
                if j == len(base) and h.is_identity():
                    continue
                if j == len(base):
                    base.append(h.first_moved())
                    strong.append([])
                    trans.append({})
                    chain._inverses.append({})
                    chain._reps.append([])
                for level in range(i + 1, j + 1):
                    strong[level].append(h)
                    trans[level] = _orbit_transversal(n, base[level], strong[level])
                    chain._inverses[level] = {}
                    chain._reps[level] = list(trans[level].values())
                restart = j
                break
            if restart is not None:
                break
        if restart is not None:
            i = restart
        else:
            i -= 1
    return chain
