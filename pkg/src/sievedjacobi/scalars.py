"""Exact scalars: rationals and the cyclotomic fields Q(zeta_N).

Rationals are plain :class:`fractions.Fraction` values.  An element of
Q(zeta_N) is stored as a residue modulo the N-th cyclotomic polynomial,
with integer numerators over one positive common denominator kept in lowest
terms, so equal elements are structurally equal.
"""
import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache

from . import densepoly


def fmt_fraction(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_fraction(text):
    """Parse "p/q" or "p" exactly.  Decimal and float notation is rejected."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    m = _RATIONAL_RE.match(str(text))
    if not m:
        raise ValueError(f"not an exact rational (expected p/q): {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = densepoly.exact_div(p, list(cyclotomic_polynomial(d)))
    assert all(Fraction(c).denominator == 1 for c in p)
    return tuple(int(c) for c in p)


def euler_phi(n):
    return len(cyclotomic_polynomial(n)) - 1


class _Context:
    """Reduction tables for one order N."""

    def __init__(self, order):
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        d = self.degree = len(self.modulus) - 1
        # x^i mod Phi_N for 0 <= i < max(2d - 1, N); integer since Phi_N is monic
        size = max(2 * d - 1, order, d + 1)
        table = []
        cur = [0] * d
        cur[0] = 1
        for _ in range(size):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * self.modulus[i]
        self.xpow = table


@lru_cache(maxsize=None)
def _context(order):
    return _Context(order)


class Cyclo:
    """Element of Q(zeta_N), zeta_N = exp(2 pi i / N)."""

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order, coeffs=(), _raw=None):
        self.order = order
        ctx = _context(order)
        if _raw is not None:
            num, den = _raw
        else:
            coeffs = [Fraction(c) for c in coeffs]
            if len(coeffs) > ctx.degree:
                # reduce a longer polynomial in zeta modulo Phi_N
                red = [Fraction(0)] * ctx.degree
                for i, c in enumerate(coeffs):
                    if c:
                        row = ctx.xpow[i] if i < len(ctx.xpow) else _xpow_far(ctx, i)
                        for j, v in enumerate(row):
                            red[j] += c * v
                coeffs = red
            coeffs = coeffs + [Fraction(0)] * (ctx.degree - len(coeffs))
            den = 1
            for c in coeffs:
                den = den * c.denominator // math.gcd(den, c.denominator)
            num = [int(c * den) for c in coeffs]
        g = math.gcd(den, *num)
        if g != 1:
            num = [v // g for v in num]
            den //= g
        self._num = tuple(num)
        self._den = den
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def _make(cls, order, num, den):
        if den < 0:
            num = [-v for v in num]
            den = -den
        return cls(order, _raw=(num, den))

    @classmethod
    def from_rational(cls, order, x):
        x = Fraction(x)
        d = _context(order).degree
        return cls._make(order, [x.numerator] + [0] * (d - 1), x.denominator)

    @classmethod
    def zero(cls, order):
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order):
        return cls.from_rational(order, 1)

    # -- inspection ---------------------------------------------------
    @property
    def coeffs(self):
        return tuple(Fraction(v, self._den) for v in self._num)

    def is_zero(self):
        return not any(self._num)

    def is_rational(self):
        return not any(self._num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("cyclotomic element is not rational")
        return Fraction(self._num[0], self._den)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return (self.order == other.order and self._den == other._den
                    and self._num == other._num)
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_fraction() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self.order, self._num, self._den))
        return self._hash

    def __repr__(self):
        return f"Cyclo({self.order}, [{', '.join(fmt_fraction(c) for c in self.coeffs)}])"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(fmt_fraction(c))
            else:
                mono = f"z{self.order}" + (f"^{i}" if i > 1 else "")
                terms.append(mono if c == 1 else f"{fmt_fraction(c)}*{mono}")
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        return [fmt_fraction(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, order, data):
        return cls(order, [parse_fraction(s) for s in data])

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: Q(zeta_{self.order}) vs Q(zeta_{other.order})")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.from_rational(self.order, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        da, db = self._den, other._den
        if da == db:
            num = [x + y for x, y in zip(self._num, other._num)]
            return Cyclo._make(self.order, num, da)
        num = [x * db + y * da for x, y in zip(self._num, other._num)]
        return Cyclo._make(self.order, num, da * db)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.order, _raw=([-v for v in self._num], self._den))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._num, other._num
        den = self._den * other._den
        if not any(b[1:]):
            c = b[0]
            return Cyclo._make(self.order, [v * c for v in a], den)
        if not any(a[1:]):
            c = a[0]
            return Cyclo._make(self.order, [v * c for v in b], den)
        ctx = _context(self.order)
        d = ctx.degree
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        res = conv[:d]
        for i in range(d, 2 * d - 1):
            c = conv[i]
            if c:
                row = ctx.xpow[i]
                for j in range(d):
                    if row[j]:
                        res[j] += c * row[j]
        return Cyclo._make(self.order, res, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        if self.is_rational():
            return Cyclo.from_rational(self.order, 1 / self.to_fraction())
        inv = densepoly.invmod(list(self.coeffs), list(_context(self.order).modulus))
        return Cyclo(self.order, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclo.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        """Complex conjugate, zeta -> zeta^(-1)."""
        ctx = _context(self.order)
        n = self.order
        res = [0] * ctx.degree
        for i, c in enumerate(self._num):
            if c:
                row = ctx.xpow[(-i) % n]
                for j, v in enumerate(row):
                    res[j] += c * v
        return Cyclo._make(self.order, res, self._den)

    def embed_complex(self):
        return embed_complex(self)


def _xpow_far(ctx, i):
    # zeta^N = 1, so reduce the exponent first
    return ctx.xpow[i % ctx.order]


def root_power(order, k):
    """q^k with q = exp(2 pi i / order)."""
    ctx = _context(order)
    row = ctx.xpow[k % order]
    return Cyclo._make(order, list(row), 1)


def embed_complex(a):
    """Double-precision value of a at zeta_N = exp(2 pi i / N)."""
    n = a.order
    total = 0j
    for i, c in enumerate(a.coeffs):
        if c:
            total += float(c) * cmath.exp(2j * math.pi * i / n)
    return total


def field_arithmetic(a, b, op):
    ops = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    if a.order != b.order:
        raise ValueError("order mismatch")
    return ops[op]()
