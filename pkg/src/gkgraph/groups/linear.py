"""Invertible matrices and affine maps over a finite field.

Entries and vectors hold integer field encodings (see ``finfield``); the
owning :class:`FiniteField` does the arithmetic.  Matrices act on column
vectors, and affine pairs compose as ``(t1, A1)(t2, A2) = (t1 + A1 t2, A1 A2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..finfield import FieldElement, FiniteField


def _encode(field, x):
    if isinstance(x, FieldElement):
        if x.field is not field:
            raise ValueError(f"entry from {x.field}, expected {field}")
        return x.value
    return field.embed(x)


def _row_reduce(field, rows, ncols):
    """Reduced row echelon form in place; returns the pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def determinant(field, n, entries) -> int:
    rows = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
    det = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c]), None)
        if pr is None:
            return 0
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            det = field.neg(det)
        piv = rows[c][c]
        det = field.mul(det, piv)
        inv = field.inv(piv)
        for i in range(c + 1, n):
            if rows[i][c]:
                f = field.mul(rows[i][c], inv)
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[c])]
    return det


def kernel_vector(field, n, entries):
    """A nonzero solution of M v = 0, or None when M is invertible."""
    rows = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
    pivots = _row_reduce(field, rows, n)
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    f = free[0]
    v = [0] * n
    v[f] = 1
    for r, c in enumerate(pivots):
        v[c] = field.neg(rows[r][f])
    return tuple(v)


class MatrixElem:
    __slots__ = ("field", "n", "entries", "_order")

    kind = "matrix"

    def __init__(self, field: FiniteField, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        entries = tuple(_encode(field, x) for r in rows for x in r)
        if determinant(field, n, entries) == 0:
            raise ValueError("matrix is singular")
        self.field = field
        self.n = n
        self.entries = entries
        self._order = None

    @classmethod
    def _raw(cls, field, n, entries):
        m = object.__new__(cls)
        m.field = field
        m.n = n
        m.entries = entries
        m._order = None
        return m

    @classmethod
    def identity(cls, field, n) -> MatrixElem:
        return cls._raw(field, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def key(self):
        return self.entries

    @property
    def degree(self):
        return self.n

    def rows(self) -> list[list[FieldElement]]:
        n = self.n
        return [[FieldElement(self.field, self.entries[i * n + j]) for j in range(n)] for i in range(n)]

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self.entries[i * self.n + j])

    def __mul__(self, other: MatrixElem) -> MatrixElem:
        F, n = self.field, self.n
        a, b = self.entries, other.entries
        add, mul = F.add, F.mul
        if n == 2:
            a0, a1, a2, a3 = a
            b0, b1, b2, b3 = b
            return MatrixElem._raw(F, 2, (
                add(mul(a0, b0), mul(a1, b2)), add(mul(a0, b1), mul(a1, b3)),
                add(mul(a2, b0), mul(a3, b2)), add(mul(a2, b1), mul(a3, b3)),
            ))
        out = []
        for i in range(n):
            row = a[i * n:(i + 1) * n]
            for j in range(n):
                s = 0
                for k in range(n):
                    s = add(s, mul(row[k], b[k * n + j]))
                out.append(s)
        return MatrixElem._raw(F, n, tuple(out))

    def apply(self, v: tuple) -> tuple:
        """The column vector M v."""
        F, n, a = self.field, self.n, self.entries
        add, mul = F.add, F.mul
        if n == 2:
            return (add(mul(a[0], v[0]), mul(a[1], v[1])), add(mul(a[2], v[0]), mul(a[3], v[1])))
        out = []
        for i in range(n):
            s = 0
            for k in range(n):
                s = add(s, mul(a[i * n + k], v[k]))
            out.append(s)
        return tuple(out)

    def det(self) -> FieldElement:
        return FieldElement(self.field, determinant(self.field, self.n, self.entries))

    def trace(self) -> FieldElement:
        s = 0
        for i in range(self.n):
            s = self.field.add(s, self.entries[i * self.n + i])
        return FieldElement(self.field, s)

    def inverse(self) -> MatrixElem:
        F, n = self.field, self.n
        rows = [list(self.entries[i * n:(i + 1) * n]) + [1 if j == i else 0 for j in range(n)]
                for i in range(n)]
        _row_reduce(F, rows, n)
        return MatrixElem._raw(F, n, tuple(x for r in rows for x in r[n:]))

    def minus_identity(self) -> tuple:
        F, n = self.field, self.n
        return tuple(F.sub(x, 1) if i % (n + 1) == 0 else x for i, x in enumerate(self.entries))

    def scale(self, c) -> MatrixElem:
        c = _encode(self.field, c)
        return MatrixElem._raw(self.field, self.n, tuple(self.field.mul(c, x) for x in self.entries))

    def is_identity(self) -> bool:
        n = self.n
        return all(x == (1 if i % (n + 1) == 0 else 0) for i, x in enumerate(self.entries))

    def __pow__(self, e: int) -> MatrixElem:
        if e < 0:
            return self.inverse() ** (-e)
        result, base = MatrixElem.identity(self.field, self.n), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def order(self) -> int:
        if self._order is None:
            g, k = self, 1
            while not g.is_identity():
                g = g * self
                k += 1
            self._order = k
        return self._order

    def __eq__(self, other):
        return (isinstance(other, MatrixElem) and self.field is other.field
                and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "MatrixElem(" + repr(self.rows()) + ")"


class AffineElem:
    """The affine map v -> A v + t; ``t`` is the translation (kernel) part."""

    __slots__ = ("t", "A")

    kind = "affine"

    def __init__(self, t, A: MatrixElem):
        if len(t) != A.n:
            raise ValueError("translation length does not match matrix dimension")
        self.t = tuple(_encode(A.field, x) for x in t)
        self.A = A

    @classmethod
    def _raw(cls, t, A):
        g = object.__new__(cls)
        g.t = t
        g.A = A
        return g

    @classmethod
    def identity(cls, field, d) -> AffineElem:
        return cls._raw((0,) * d, MatrixElem.identity(field, d))

    @property
    def field(self):
        return self.A.field

    @property
    def degree(self):
        return self.A.n

    @property
    def key(self):
        return (self.t, self.A.entries)

    def __mul__(self, other: AffineElem) -> AffineElem:
        F = self.A.field
        v = self.A.apply(other.t)
        return AffineElem._raw(tuple(F.add(x, y) for x, y in zip(self.t, v)), self.A * other.A)

    def inverse(self) -> AffineElem:
        F = self.A.field
        Ai = self.A.inverse()
        return AffineElem._raw(tuple(F.neg(x) for x in Ai.apply(self.t)), Ai)

    def is_identity(self) -> bool:
        return not any(self.t) and self.A.is_identity()

    def order(self) -> int:
        """(t, A)^n = (t + At + ... + A^(n-1) t, I) for n = ord(A)."""
        F = self.A.field
        n = self.A.order()
        acc = v = self.t
        for _ in range(n - 1):
            v = self.A.apply(v)
            acc = tuple(F.add(x, y) for x, y in zip(acc, v))
        return n if not any(acc) else n * F.p

    def as_matrix(self) -> MatrixElem:
        """The (d+1)x(d+1) block matrix [[A, t], [0, 1]]."""
        d, F = self.A.n, self.A.field
        rows = []
        for i in range(d):
            rows.append(list(self.A.entries[i * d:(i + 1) * d]) + [self.t[i]])
        rows.append([0] * d + [1])
        return MatrixElem._raw(F, d + 1, tuple(x for r in rows for x in r))

    def __eq__(self, other):
        return isinstance(other, AffineElem) and self.key == other.key and self.A.field is other.A.field

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"AffineElem(t={self.t}, A={self.A.entries})"


@dataclass(frozen=True)
class FpfCertificate:
    """Outcome of a fixed-point-freeness check.

    ``witness`` is a pair (A, v) with A v = v and v != 0 when the check fails.
    """

    ok: bool
    checked: int
    witness: tuple | None = None

    def __bool__(self):
        return self.ok
