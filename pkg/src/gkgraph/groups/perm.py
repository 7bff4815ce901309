"""Permutations of {0..n-1} stored as image arrays.

Products compose left to right: ``(a * b)[i] == b[a[i]]``, so a point is
moved first by ``a`` and then by ``b``.  For degree <= 256 the images live in
a ``bytes`` object and composition is a single ``bytes.translate`` call.
"""

from __future__ import annotations

import math

_BYTES_LIMIT = 256


class Permutation:
    __slots__ = ("_img", "_table")

    kind = "perm"

    def __init__(self, images):
        images = list(images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ValueError("not a permutation of 0..n-1")
        self._img = bytes(images) if n <= _BYTES_LIMIT else tuple(images)
        self._table = None

    @classmethod
    def _raw(cls, img):
        p = object.__new__(cls)
        p._img = img
        p._table = None
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._raw(bytes(range(n)) if n <= _BYTES_LIMIT else tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> Permutation:
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self._img)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def key(self):
        return self._img

    def __call__(self, point: int) -> int:
        return self._img[point]

    def __mul__(self, other: Permutation) -> Permutation:
        a = self._img
        if isinstance(a, bytes):
            tab = other._table
            if tab is None:
                b = other._img
                tab = other._table = b + bytes(range(len(b), 256))
            return Permutation._raw(a.translate(tab))
        b = other._img
        return Permutation._raw(tuple([b[i] for i in a]))

    def inverse(self) -> Permutation:
        a = self._img
        inv = [0] * len(a)
        for i, j in enumerate(a):
            inv[j] = i
        return Permutation._raw(bytes(inv) if isinstance(a, bytes) else tuple(inv))

    def __pow__(self, e: int) -> Permutation:
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_identity(self) -> bool:
        a = self._img
        return a == (bytes(range(len(a))) if isinstance(a, bytes) else tuple(range(len(a))))

    def cycle_lengths(self) -> list[int]:
        a = self._img
        seen = bytearray(len(a))
        out = []
        for start in range(len(a)):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = 1
                j = a[j]
                length += 1
            out.append(length)
        return out

    def order(self) -> int:
        """lcm of the cycle lengths."""
        return math.lcm(*set(self.cycle_lengths())) if self._img else 1

    def first_moved(self):
        for i, j in enumerate(self._img):
            if i != j:
                return i
        return None

    def cycles(self) -> list[tuple[int, ...]]:
        a = self._img
        seen = set()
        out = []
        for start in range(len(a)):
            if start in seen or a[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = a[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = a[j]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
