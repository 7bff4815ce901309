"""Materialized finite groups and breadth-first closure."""

from __future__ import annotations

import itertools

from ..errors import BudgetExceeded, IncompatibleGenerators
from .linear import AffineElem, FpfCertificate, MatrixElem, kernel_vector
from .perm import Permutation

DEFAULT_BUDGET = 2_000_000


def element_order(g) -> int:
    """Least n >= 1 with g^n = 1."""
    return g.order()


def _signature(g):
    if isinstance(g, Permutation):
        return ("perm", g.degree, None)
    if isinstance(g, MatrixElem):
        return ("matrix", g.n, g.field)
    if isinstance(g, AffineElem):
        return ("affine", g.A.n, g.A.field)
    raise IncompatibleGenerators(f"unsupported element type {type(g).__name__}")


def _check_compatible(gens):
    if not gens:
        raise IncompatibleGenerators("at least one generator is required")
    sig = _signature(gens[0])
    for g in gens[1:]:
        other = _signature(g)
        if other[:2] != sig[:2] or other[2] is not sig[2]:
            raise IncompatibleGenerators(f"generators disagree: {sig[:2]} vs {other[:2]}")
    return sig


def _identity_like(g):
    if isinstance(g, Permutation):
        return Permutation.identity(g.degree)
    if isinstance(g, MatrixElem):
        return MatrixElem.identity(g.field, g.n)
    return AffineElem.identity(g.A.field, g.A.n)


class EnumeratedGroup:
    """A finite group held as its full element list.

    ``elements`` lists every member exactly once, identity first, in the
    breadth-first order in which the closure discovered them.
    """

    def __init__(self, members: dict, generators, kind: str):
        self._members = members
        self.elements = list(members.values())
        self.generators = list(generators)
        self.kind = kind

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self):
        return self.elements[0]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g.key in self._members

    def lookup(self, key):
        return self._members.get(key)

    def __repr__(self):
        return f"<EnumeratedGroup kind={self.kind} order={self.order}>"


def generate(generators, budget: int = DEFAULT_BUDGET) -> EnumeratedGroup:
    """Breadth-first closure of ``generators`` under right multiplication.

    Generators are deduplicated and sorted by canonical key first, so the
    element listing is reproducible.
    """
    generators = list(generators)
    sig = _check_compatible(generators)
    gens = sorted({g.key: g for g in generators}.values(), key=lambda g: g.key)
    one = _identity_like(gens[0])
    members = {one.key: one}
    queue = [one]
    i = 0
    while i < len(queue):
        g = queue[i]
        i += 1
        for s in gens:
            h = g * s
            k = h.key
            if k not in members:
                members[k] = h
                queue.append(h)
                if len(members) > budget:
                    raise BudgetExceeded(len(members), budget)
    return EnumeratedGroup(members, gens, sig[0])


def from_elements(elements, generators, kind: str) -> EnumeratedGroup:
    """Wrap an already-closed element list (identity must come first)."""
    members = {}
    for g in elements:
        members.setdefault(g.key, g)
    return EnumeratedGroup(members, generators, kind)


def semidirect(field, d: int, complement: EnumeratedGroup, budget: int = DEFAULT_BUDGET) -> EnumeratedGroup:
    """The affine group {(t, A) : t in F^d, A in complement}.

    Elements are listed complement-major (complement in its own order, then
    translations in increasing encoding order).
    """
    if complement.kind != "matrix":
        raise IncompatibleGenerators("complement must be a matrix group")
    for A in complement.generators:
        if A.field is not field or A.n != d:
            raise IncompatibleGenerators(f"complement acts on {A.field}^{A.n}, expected {field}^{d}")
    total = field.q**d * complement.order
    if total > budget:
        raise BudgetExceeded(total, budget)
    vectors = list(itertools.product(range(field.q), repeat=d))
    members = {}
    for A in complement.elements:
        for t in vectors:
            g = AffineElem._raw(t, A)
            members[g.key] = g
    eye = MatrixElem.identity(field, d)
    gens = []
    for j in range(d):
        for i in range(field.k):
            t = [0] * d
            t[j] = field.p**i
            gens.append(AffineElem._raw(tuple(t), eye))
    gens += [AffineElem._raw((0,) * d, A) for A in complement.generators]
    return EnumeratedGroup(members, gens, "affine")


def is_fixed_point_free(complement: EnumeratedGroup) -> FpfCertificate:
    """True iff det(A - I) != 0 for every non-identity A in the complement."""
    checked = 0
    for A in complement.elements:
        if A.is_identity():
            continue
        checked += 1
        v = kernel_vector(A.field, A.n, A.minus_identity())
        if v is not None:
            return FpfCertificate(False, checked, (A, v))
    return FpfCertificate(True, checked, None)
