"""Finite fields GF(p^m) with full lookup tables.

Elements are the integers ``0 .. q-1``. The base-``p`` digits of an element,
least significant first, are the coefficients of its polynomial
representative modulo the defining polynomial. Addition is therefore
digit-wise addition mod ``p``; multiplication goes through log/antilog
tables built from a primitive element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DivisionByZero, FieldMismatch, NotPrime, ReducibleModulus, UnsupportedOrder

TABLE_LIMIT = 256

# Conway polynomials, coefficients low degree first.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    """Remainder of ``a`` divided by monic-or-not ``b`` over GF(p)."""
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        a = _poly_trim(a)
    return a


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree up to deg/2."""
    poly = _poly_trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


class FieldSpec:
    """The field GF(p^m), immutable once built.

    >>> F = FieldSpec(2, 2)
    >>> F.mul(2, 2)
    3
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**m
        if q > TABLE_LIMIT:
            raise UnsupportedOrder(f"q={q} exceeds table limit {TABLE_LIMIT}")
        if m == 1:
            modulus = None
        else:
            if modulus is None:
                modulus = DEFAULT_MODULI.get((p, m))
                if modulus is None:
                    raise UnsupportedOrder(f"no default modulus for GF({p}^{m})")
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ReducibleModulus(f"modulus must be monic of degree {m}: {modulus}")
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        digits = np.array([[(v // p**i) % p for i in range(m)] for v in range(q)], dtype=np.int64)
        weights = p ** np.arange(m, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        neg = ((-digits) % p) @ weights

        # find a primitive element by brute force; tables are tiny
        exp = None
        for g in range(1, q):
            powers = [1]
            for _ in range(q - 2):
                powers.append(self._slow_mul(powers[-1], g))
            if len(set(powers)) == q - 1:
                exp = powers
                self.primitive = g
                break
        log = np.zeros(q, dtype=np.int64)
        for i, v in enumerate(exp):
            log[v] = i
        exp_arr = np.array(exp + exp, dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        nz = np.arange(1, q)
        mul[1:, 1:] = exp_arr[(log[nz][:, None] + log[nz][None, :])]
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp_arr[(q - 1 - log[1:]) % (q - 1)]

        self.digits = digits
        self.add_table = add.astype(np.uint8)
        self.neg_table = neg.astype(np.uint8)
        self.sub_table = self.add_table[:, self.neg_table]
        self.mul_table = mul.astype(np.uint8)
        self.inv_table = inv.astype(np.uint8)
        self.log_table = log
        self.exp_table = np.array(exp, dtype=np.int64)
        for t in (self.digits, self.add_table, self.neg_table, self.sub_table,
                  self.mul_table, self.inv_table, self.log_table, self.exp_table):
            t.flags.writeable = False

    def _slow_mul(self, a, b):
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da = [(a // p**i) % p for i in range(m)]
        db = [(b // p**i) % p for i in range(m)]
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        r = _poly_mod(prod, list(self.modulus), p)
        return sum(c * p**i for i, c in enumerate(r))

    # -- identity -----------------------------------------------------------

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.m == 1:
            return f"FieldSpec(p={self.p})"
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    # -- arithmetic (works on ints and integer arrays) -----------------------

    @staticmethod
    def _out(r):
        return int(r) if np.ndim(r) == 0 else r

    def add(self, a, b):
        return self._out(self.add_table[a, b])

    def sub(self, a, b):
        return self._out(self.sub_table[a, b])

    def mul(self, a, b):
        return self._out(self.mul_table[a, b])

    def neg(self, a):
        return self._out(self.neg_table[a])

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise DivisionByZero("inverse of 0")
        return self._out(self.inv_table[a])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 to a negative power")
            return 1 if e == 0 else 0
        return int(self.exp_table[(self.log_table[a] * e) % (self.q - 1)])

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DivisionByZero("0 has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def elements(self) -> list[int]:
        return list(range(self.q))

    def nonzero(self) -> list[int]:
        return list(range(1, self.q))

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        out = {"p": self.p, "m": self.m}
        if self.m > 1:
            out["modulus"] = list(self.modulus)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> FieldSpec:
        return field_new(obj["p"], obj.get("m", 1), obj.get("modulus"))


_cache: dict = {}


def field_new(p: int, m: int = 1, modulus=None) -> FieldSpec:
    """Build (or fetch a cached) GF(p^m)."""
    key = (p, m, None if modulus is None else tuple(modulus))
    spec = _cache.get(key)
    if spec is None:
        spec = _cache[key] = FieldSpec(p, m, modulus)
    return spec


def gf(q: int, modulus=None) -> FieldSpec:
    """GF(q) for a prime power ``q`` with the default modulus."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1 or not is_prime(p):
        raise NotPrime(f"{q} is not a prime power")
    return field_new(p, m, modulus)


def elements(spec: FieldSpec) -> list[FieldElement]:
    return [FieldElement(spec, v) for v in range(spec.q)]


@dataclass(frozen=True)
class FieldElement:
    """A single field element; convenient for interactive use.

    Bulk routines work on raw integer arrays through :class:`FieldSpec`.
    """

    spec: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.spec.q:
            raise ValueError(f"{self.value} is not an element of GF({self.spec.q})")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(f"{self.spec} vs {other.spec}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return FieldElement(self.spec, int(other)).value
        return NotImplemented

    def _wrap(self, v):
        return FieldElement(self.spec, int(v))

    def __add__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else self._wrap(self.spec.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else self._wrap(self.spec.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else self._wrap(self.spec.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else self._wrap(self.spec.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else self._wrap(self.spec.div(self.value, o))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.spec.pow(self.value, e))

    def inv(self):
        return self._wrap(self.spec.inv(self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF({self.spec.q})({self.value})"
