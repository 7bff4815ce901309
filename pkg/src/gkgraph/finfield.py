"""Arithmetic in GF(p^k).

An element is stored as an integer ``0 <= v < p**k`` whose base-p digits are
the polynomial coefficients, low degree first: ``v = c0 + c1*p + c2*p**2 ...``.
Polynomial arithmetic modulo the field's modulus is only used to build the
exp/log and Zech tables; after that every operation is a few table lookups,
which is what the group enumerations need.
"""

from __future__ import annotations

import functools
import itertools
import math

from .errors import (
    DegreeOutOfRange,
    DivisionByZero,
    MixedFields,
    NonPrimeCharacteristic,
    ZeroElement,
)

MAX_FIELD_SIZE = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over GF(p): coefficient lists, low degree first -------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, m, p):
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _trim(a)
    return a


def poly_mulmod(a, b, m, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return poly_mod(prod, m, p)


def is_irreducible(f, p) -> bool:
    """Trial division by every monic polynomial of degree at most deg(f)/2."""
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not poly_mod(list(f), list(low) + [1], p):
                return False
    return True


def _monic_candidates(p, k):
    # low-degree coefficient varies slowest: lexicographic order on (c0, ..., c_{k-1})
    for low in itertools.product(range(p), repeat=k):
        yield tuple(low) + (1,)


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for f in _monic_candidates(p, k):
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable for prime p


class FiniteField:
    """The field GF(p^k); use :func:`make_field` rather than the constructor."""

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = smallest_irreducible(p, k)
        self._build_tables()

    # -- construction -------------------------------------------------------

    def _to_poly(self, v):
        out = []
        while v:
            v, c = divmod(v, self.p)
            out.append(c)
        return out

    def _from_poly(self, poly):
        v = 0
        for c in reversed(poly):
            v = v * self.p + c
        return v

    def _poly_pow(self, base, e):
        result, m, p = [1], list(self.modulus), self.p
        while e:
            if e & 1:
                result = poly_mulmod(result, base, m, p)
            base = poly_mulmod(base, base, m, p)
            e >>= 1
        return result

    def _build_tables(self):
        q, p = self.q, self.p
        q1 = q - 1
        m = list(self.modulus)
        factors = prime_factors(q1) if q1 > 1 else []
        for g in range(1, q):
            gp = self._to_poly(g)
            if all(self._poly_pow(gp, q1 // r) != [1] for r in factors):
                break
        self.primitive = g
        exp = [0] * (2 * q1)
        log = [-1] * q
        cur = [1]
        gp = self._to_poly(g)
        for i in range(q1):
            v = self._from_poly(cur)
            exp[i] = exp[i + q1] = v
            log[v] = i
            cur = poly_mulmod(cur, gp, m, p)
        # zech[n] = log(1 + g^n), or -1 when 1 + g^n = 0
        zech = [-1] * q1
        for n in range(q1):
            v = exp[n]
            c0 = v % p
            w = v - c0 + (c0 + 1) % p
            zech[n] = log[w] if w else -1
        self._exp, self._log, self._zech = exp, log, zech
        self._neg_one_log = log[p - 1] if p > 2 else 0

    # -- raw arithmetic on integer encodings --------------------------------

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        log = self._log
        la = log[a]
        d = log[b] - la
        if d < 0:
            d += self.q - 1
        z = self._zech[d]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        if a == 0:
            return 0
        return self._exp[self._log[a] + self._neg_one_log]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        la = self._log[a]
        return self._exp[(self.q - 1 - la) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def embed(self, n: int) -> int:
        """Encoding of the integer ``n`` reduced into the prime subfield."""
        return n % self.p

    def coeffs_of(self, v: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            v, c = divmod(v, self.p)
            out.append(c)
        return tuple(out)

    # -- element API --------------------------------------------------------

    def __call__(self, n: int) -> FieldElement:
        return FieldElement(self, self.embed(n))

    def element(self, coeffs) -> FieldElement:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise ValueError(f"expected at most {self.k} coefficients")
        return FieldElement(self, self._from_poly([c % self.p for c in coeffs]))

    def from_index(self, v: int) -> FieldElement:
        if not 0 <= v < self.q:
            raise ValueError(f"index {v} outside GF({self.q})")
        return FieldElement(self, v)

    def gen(self) -> FieldElement:
        """The polynomial variable x (a primitive element only by accident)."""
        return self.element([0, 1]) if self.k > 1 else self(0)

    def primitive_element(self) -> FieldElement:
        return FieldElement(self, self.primitive)

    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.q)]

    def __len__(self):
        return self.q

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return make_field, (self.p, self.k)


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs_of(self.value)

    def _other(self, other):
        if isinstance(other, int):
            return self.field.embed(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field is not self.field:
            raise MixedFields(f"{self.field} vs {other.field}")
        return other.value

    def _wrap(self, v):
        return FieldElement(self.field, v)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise DivisionByZero("division by zero field element")
        return self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.field.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.power(self.value, e))

    def inverse(self):
        return self._wrap(self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == self.field.embed(other)
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.value))

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.value}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else (f"{c if c > 1 else ''}x" + (f"^{i}" if i > 1 else "")))
        return " + ".join(terms) if terms else "0"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, k: int) -> FiniteField:
    return FiniteField(p, k)


def make_field(p: int, k: int = 1) -> FiniteField:
    """The unique field object for GF(p^k).

    The modulus is the lexicographically smallest monic irreducible
    polynomial of degree k, coefficients compared low degree first.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if not isinstance(k, int) or k < 1:
        raise DegreeOutOfRange(f"extension degree must be >= 1, got {k}")
    if p**k > MAX_FIELD_SIZE:
        raise DegreeOutOfRange(f"GF({p}^{k}) exceeds the field size budget {MAX_FIELD_SIZE}")
    return _cached_field(p, k)


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.field is not b.field:
        raise MixedFields(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def sqrt(a: FieldElement) -> FieldElement | None:
    """A square root of ``a`` or None.

    Brute-force scan of the whole field; of the two roots the one with the
    lexicographically smaller coefficient vector is returned.
    """
    field = a.field
    roots = [v for v in range(field.q) if field.mul(v, v) == a.value]
    if not roots:
        return None
    return FieldElement(field, min(roots, key=field.coeffs_of))


def mult_order(a: FieldElement) -> int:
    if a.value == 0:
        raise ZeroElement("zero has no multiplicative order")
    q1 = a.field.q - 1
    return q1 // math.gcd(a.field._log[a.value], q1)
