"""Exact arithmetic in GF(p^m).

An element is the residue of a polynomial over GF(p) modulo a monic
irreducible polynomial of degree m.  Internally an element is stored as the
integer ``sum(d_i * p**i)`` built from its coefficient digits (constant term
first), and the field keeps exp/log tables with respect to a primitive
element so that matrices can be processed as numpy integer arrays.

Text notation follows the usual power-of-a-primitive convention::

    0 | 1 | w | w^<k>

where ``w`` is the designated primitive element.
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import FieldError, FieldMismatchError, ParseError

MAX_ORDER = 1 << 16
# Above this order full q*q multiplication tables are not materialised.
_TABLE_LIMIT = 256

DEFAULT_POLYS = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    16: (1, 1, 0, 0, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over GF(p), coefficient lists constant term first ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _trim(a)
    return a


def _polymulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _polymod(prod, mod, p)


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    for code in range(p ** degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim(list(poly))
    m = len(poly) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not _polymod(poly, divisor, p):
                return False
    return True


def _digits(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(value % p)
        value //= p
    return out


def _undigits(digits: Sequence[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


class Field:
    """The finite field GF(p^m) defined by ``poly`` with generator ``primitive``.

    ``poly`` lists the m+1 coefficients from the constant term upward.
    ``primitive`` is an element code (see module docstring); by default the
    residue of x is used when it generates the multiplicative group, and the
    smallest generator otherwise.
    """

    def __init__(self, p: int, m: int, poly: Sequence[int] | None = None,
                 primitive: int | None = None):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be at least 1")
        q = p ** m
        if q > MAX_ORDER:
            raise FieldError(f"field order {q} exceeds the supported maximum {MAX_ORDER}")
        if poly is None:
            poly = DEFAULT_POLYS.get(q) or _default_poly(p, m)
        poly = tuple(int(c) for c in poly)
        if len(poly) != m + 1 or poly[-1] != 1:
            raise FieldError(f"defining polynomial must be monic of degree {m}")
        if any(not 0 <= c < p for c in poly):
            raise FieldError(f"polynomial coefficients must lie in [0, {p})")
        if not is_irreducible(poly, p):
            raise FieldError(f"polynomial {poly} is reducible over GF({p})")

        self.p, self.m, self.q, self.poly = p, m, q, poly
        if primitive is None:
            primitive = self._default_primitive()
        elif not 0 < primitive < q or not self._generates(primitive):
            raise FieldError(f"element code {primitive} is not a primitive element")
        self.primitive = int(primitive)
        self._build_tables()

    # -- construction helpers ------------------------------------------------
    def _slow_mul(self, a: int, b: int) -> int:
        da = _trim(_digits(a, self.p, self.m))
        db = _trim(_digits(b, self.p, self.m))
        r = _polymulmod(da, db, self.poly, self.p)
        return _undigits(r + [0] * (self.m - len(r)), self.p)

    def _slow_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def _generates(self, g: int) -> bool:
        order = self.q - 1
        if order == 1:
            return g == 1
        return all(self._slow_pow(g, order // r) != 1 for r in _prime_factors(order))

    def _default_primitive(self) -> int:
        x = self.p if self.m > 1 else None
        if x is not None and self._generates(x):
            return x
        for g in range(1, self.q):
            if self._generates(g):
                return g
        raise FieldError("no primitive element found")  # unreachable for a field

    def _build_tables(self) -> None:
        q = self.q
        exp = np.zeros(2 * q, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            if log[x] != -1:
                raise FieldError("primitive element has order below q-1")
            log[x] = i
            x = self._slow_mul(x, self.primitive)
        exp[q - 1:2 * (q - 1)] = exp[:q - 1]
        self._exp, self._log = exp, log
        self._exp.setflags(write=False)
        self._log.setflags(write=False)
        inv = np.zeros(q, dtype=np.int64)
        nz = np.arange(1, q)
        inv[1:] = exp[(q - 1 - log[nz]) % (q - 1)]
        self._inv = inv
        digits = np.array([_digits(v, self.p, self.m) for v in range(q)], dtype=np.int64)
        self._digit_table = digits
        self._place = self.p ** np.arange(self.m, dtype=np.int64)
        if self.p == 2:
            self._neg = np.arange(q, dtype=np.int64)
        else:
            self._neg = ((-digits) % self.p) @ self._place
        self._mul_table = None
        if q <= _TABLE_LIMIT:
            a = np.arange(q)
            la = log[a]
            s = (la[:, None] + la[None, :]) % (q - 1)
            table = exp[s]
            table[0, :] = 0
            table[:, 0] = 0
            self._mul_table = table

    # -- value semantics -----------------------------------------------------
    def _key(self):
        return (self.p, self.m, self.poly, self.primitive)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Field(p={self.p}, m={self.m}, poly={self.poly}, primitive={self.primitive})"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.q

    # -- scalar access -------------------------------------------------------
    def __call__(self, value) -> Felt:
        if isinstance(value, Felt):
            self.check(value)
            return value
        if isinstance(value, str):
            return parse_elem(self, value)
        value = int(value)
        if not 0 <= value < self.q:
            raise FieldError(f"element code {value} outside [0, {self.q})")
        return Felt(self, value)

    def from_digits(self, digits: Sequence[int]) -> Felt:
        if len(digits) != self.m or any(not 0 <= d < self.p for d in digits):
            raise FieldError(f"need {self.m} digits in [0, {self.p})")
        return Felt(self, _undigits(digits, self.p))

    @property
    def zero(self) -> Felt:
        return Felt(self, 0)

    @property
    def one(self) -> Felt:
        return Felt(self, 1)

    @property
    def w(self) -> Felt:
        return Felt(self, self.primitive)

    def power_of_w(self, k: int) -> Felt:
        return Felt(self, int(self._exp[k % (self.q - 1)]))

    def check(self, x: Felt) -> None:
        if x.field is not self and x.field != self:
            raise FieldMismatchError(f"element of {x.field!r} used in {self!r}")

    # -- vectorised arithmetic on integer codes -------------------------------
    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        s = (self._digit_table[a] + self._digit_table[b]) % self.p
        return s @ self._place

    def neg(self, a):
        return self._neg[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._mul_table is not None:
            return self._mul_table[a, b]
        a, b = np.broadcast_arrays(a, b)
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._inv[a]

    def sum(self, a, axis=-1):
        """Field sum along ``axis`` of an array of element codes."""
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        # the digit table appends a trailing axis, so resolve negative axes first
        digits = self._digit_table[a].sum(axis=axis % a.ndim) % self.p
        return digits @ self._place

    def dot(self, a, b) -> int:
        return int(self.sum(self.mul(a, b)))

    def log_of(self, value: int) -> int:
        if value == 0:
            raise FieldError("logarithm of zero")
        return int(self._log[value])

    # -- enumeration ---------------------------------------------------------
    def elements(self) -> list[Felt]:
        """All q elements: zero first, then the powers 1, w, w^2, ..."""
        return [self.zero] + self.nonzero_elements()

    def nonzero_elements(self) -> list[Felt]:
        return [Felt(self, int(v)) for v in self._exp[: self.q - 1]]


def _default_poly(p: int, m: int) -> tuple[int, ...]:
    """First monic irreducible polynomial (by coefficient code) with x primitive."""
    if m == 1:
        return (0, 1)
    fallback = None
    for coeffs in _monic_polys(p, m):
        if coeffs[0] == 0 or not is_irreducible(coeffs, p):
            continue
        if fallback is None:
            fallback = tuple(coeffs)
        try:
            Field(p, m, coeffs, primitive=p)
        except FieldError:
            continue
        return tuple(coeffs)
    return fallback


@functools.lru_cache(maxsize=None)
def GF(q: int) -> Field:
    """Default field of order ``q`` (x^2+x+1, x^3+x+1, x^4+x+1 for q = 4, 8, 16)."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1 or not _is_prime(p):
        raise FieldError(f"{q} is not a prime power")
    return Field(p, m)


class Felt:
    """An element of a :class:`Field`; immutable."""

    __slots__ = ("_field", "_value")

    def __init__(self, field: Field, value: int):
        object.__setattr__(self, "_field", field)
        object.__setattr__(self, "_value", int(value))

    def __setattr__(self, name, value):
        raise AttributeError("Felt is immutable")

    @property
    def field(self) -> Field:
        return self._field

    @property
    def value(self) -> int:
        return self._value

    @property
    def digits(self) -> tuple[int, ...]:
        return tuple(_digits(self._value, self._field.p, self._field.m))

    def _other(self, other) -> int:
        if isinstance(other, Felt):
            self._field.check(other)
            return other._value
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Felt(self._field, int(self._field.add(self._value, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Felt(self._field, int(self._field.sub(self._value, o)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Felt(self._field, int(self._field.sub(o, self._value)))

    def __neg__(self):
        return Felt(self._field, int(self._field.neg(self._value)))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Felt(self._field, int(self._field.mul(self._value, o)))

    __rmul__ = __mul__

    def inv(self) -> Felt:
        if self._value == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return Felt(self._field, int(self._field._inv[self._value]))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * Felt(self._field, o).inv()

    def __pow__(self, e: int):
        e = int(e)
        if self._value == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return Felt(self._field, 1 if e == 0 else 0)
        f = self._field
        k = (int(f._log[self._value]) * e) % (f.q - 1)
        return Felt(f, int(f._exp[k]))

    def sqrt(self) -> Felt:
        return sqrt(self)

    def __eq__(self, other):
        if isinstance(other, Felt):
            return self._field == other._field and self._value == other._value
        if isinstance(other, int) and other in (0, 1):
            return self._value == other
        return NotImplemented

    def __hash__(self):
        return hash((self._field, self._value))

    def __bool__(self):
        return self._value != 0

    def __repr__(self):
        return render_elem(self)

    __str__ = __repr__


def sqrt(x: Felt) -> Felt:
    """The unique square root in characteristic 2, computed as x^(q/2)."""
    f = x.field
    if f.p != 2:
        raise FieldError("square roots are only provided in characteristic 2")
    return x ** (f.q // 2)


def elements(field: Field) -> list[Felt]:
    return field.elements()


def nonzero_elements(field: Field) -> list[Felt]:
    return field.nonzero_elements()


_ELEM_RE = re.compile(r"^(?:(0)|(1)|w(?:\^(-?\d+))?)$")


def parse_code(field: Field, text: str) -> int:
    """Parse ``0 | 1 | w | w^k`` into an element code (exponent taken mod q-1)."""
    t = text.strip()
    match = _ELEM_RE.match(t)
    if not match:
        raise ParseError(f"malformed field element {text!r}")
    if match.group(1):
        return 0
    if match.group(2):
        return 1
    k = int(match.group(3)) if match.group(3) is not None else 1
    return int(field._exp[k % (field.q - 1)])


def parse_elem(field: Field, text: str) -> Felt:
    return Felt(field, parse_code(field, text))


def render_code(field: Field, value: int) -> str:
    if value == 0:
        return "0"
    k = int(field._log[value])
    if k == 0:
        return "1"
    return "w" if k == 1 else f"w^{k}"


def render_elem(x: Felt) -> str:
    return render_code(x.field, x.value)


def as_codes(field: Field, values: Iterable) -> list[int]:
    """Element codes for a mix of Felts, ints and element strings."""
    out = []
    for v in values:
        if isinstance(v, Felt):
            field.check(v)
            out.append(v.value)
        elif isinstance(v, str):
            out.append(parse_code(field, v))
        else:
            iv = int(v)
            if not 0 <= iv < field.q:
                raise FieldError(f"element code {iv} outside [0, {field.q})")
            out.append(iv)
    return out
