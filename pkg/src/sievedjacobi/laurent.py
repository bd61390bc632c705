"""Sparse Laurent polynomials and rational Laurent functions over Q(zeta_N).

A :class:`LaurentPoly` is a finite map exponent -> nonzero :class:`Cyclo`.
A :class:`RationalLaurent` is an unreduced quotient num/den; equality is
decided by cross-multiplication, never by gcd reduction.
"""
from fractions import Fraction

import numpy as np

from .scalars import Cyclo, embed_complex, fmt_fraction, root_power


class LaurentPoly:
    __slots__ = ("order", "terms")

    def __init__(self, order, terms=None):
        self.order = order
        clean = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, Cyclo):
                    c = Cyclo.from_rational(order, c)
                elif c.order != order:
                    raise ValueError("coefficient order mismatch")
                if not c.is_zero():
                    clean[int(e)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, order, c):
        return cls(order, {0: c})

    @classmethod
    def monomial(cls, order, e, c=1):
        return cls(order, {e: c})

    @classmethod
    def from_x_poly(cls, order, coeffs):
        """Evaluate sum c_i x^i at x = z + 1/z."""
        x = cls(order, {1: 1, -1: 1})
        result = cls(order)
        for c in reversed(list(coeffs)):
            result = result * x + cls.constant(order, c)
        return result

    @classmethod
    def _raw(cls, order, terms):
        obj = cls.__new__(cls)
        obj.order = order
        obj.terms = terms
        return obj

    # -- inspection ---------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def min_exp(self):
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self.terms)

    def max_exp(self):
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self.terms)

    def coefficient(self, e):
        return self.terms.get(e, Cyclo.zero(self.order))

    def is_symmetric(self):
        return all(self.terms.get(-e) == c for e, c in self.terms.items())

    def is_antisymmetric(self):
        return all(self.terms.get(-e) == -c for e, c in self.terms.items())

    def is_rational(self):
        return all(c.is_rational() for c in self.terms.values())

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.order == other.order and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(self.order, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def __repr__(self):
        return f"LaurentPoly({self.order}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            cs = str(c)
            if not c.is_rational():
                cs = f"({cs})"
            if e == 0:
                parts.append(cs)
            else:
                mono = "z" if e == 1 else f"z^{e}"
                parts.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(parts)

    # -- ring operations ----------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.order != self.order:
                raise ValueError("order mismatch")
            return other
        if isinstance(other, (int, Fraction, Cyclo)):
            return LaurentPoly.constant(self.order, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del terms[e]
                else:
                    terms[e] = s
        return LaurentPoly._raw(self.order, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not isinstance(c, Cyclo):
            c = Cyclo.from_rational(self.order, c)
        if c.is_zero():
            return LaurentPoly(self.order)
        return LaurentPoly._raw(self.order, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                p = c1 * c2
                s = terms.get(e)
                terms[e] = p if s is None else s + p
        return LaurentPoly(self.order, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers of Laurent polynomials are not polynomials")
        result = LaurentPoly.constant(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k):
        """z^k * f."""
        return LaurentPoly._raw(self.order, {e + k: c for e, c in self.terms.items()})

    def divmod(self, other):
        """Division as ordinary polynomials after factoring out lowest powers.

        Returns (quotient, remainder) with f = quotient*g + remainder; the
        remainder is zero exactly when g divides f in the Laurent ring.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly(self.order), LaurentPoly(self.order)
        gmin, gmax = other.min_exp(), other.max_exp()
        lead_inv = other.terms[gmax].inverse()
        rem = dict(self.shift(-self.min_exp()).terms)
        g = {e - gmin: c for e, c in other.terms.items()}
        gdeg = gmax - gmin
        quot = {}
        while rem:
            top = max(rem)
            if top < gdeg:
                break
            c = rem[top] * lead_inv
            s = top - gdeg
            quot[s] = c
            for e, v in g.items():
                k = e + s
                val = rem.get(k)
                val = -(v * c) if val is None else val - v * c
                if val.is_zero():
                    rem.pop(k, None)
                else:
                    rem[k] = val
        shift = self.min_exp() - gmin
        q = LaurentPoly._raw(self.order, quot).shift(shift)
        r = LaurentPoly._raw(self.order, rem).shift(self.min_exp())
        return q, r

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact Laurent polynomial division")
        return q

    def divides(self, other):
        """True when self divides other exactly."""
        return other.divmod(self)[1].is_zero()

    # -- substitutions and derivatives --------------------------------
    def substitute(self, c, e):
        """f(c * z^e) for a root of unity c and e in {+1, -1}."""
        if e not in (1, -1):
            raise ValueError("substitute only supports z -> c*z or z -> c/z")
        if isinstance(c, int):
            c = root_power(self.order, 0) * c
        terms = {}
        cache = {}
        for k, v in self.terms.items():
            if k not in cache:
                cache[k] = c ** k
            terms[e * k] = v * cache[k]
        return LaurentPoly._raw(self.order, terms)

    def reflect(self, k):
        """R_k f(z) = f(q^k / z)."""
        return self._rootsub(k, -1)

    def rotate(self, k):
        """T_k f(z) = f(q^k z)."""
        return self._rootsub(k, 1)

    def _rootsub(self, k, e):
        n = self.order
        terms = {}
        for m, v in self.terms.items():
            p = (k * m) % n
            terms[e * m] = v if p == 0 else v * root_power(n, p)
        return LaurentPoly._raw(self.order, terms)

    def power_substitute(self, m):
        """f(z^m)."""
        if m == 0:
            raise ValueError("power_substitute requires m != 0")
        return LaurentPoly._raw(self.order, {m * e: c for e, c in self.terms.items()})

    def derivative(self):
        return LaurentPoly._raw(
            self.order, {e - 1: c * e for e, c in self.terms.items() if e != 0})

    def z_ddz(self, m=1):
        """z f'(z) for m = 1, z^2 f''(z) for m = 2."""
        if m == 1:
            return LaurentPoly._raw(
                self.order, {e: c * e for e, c in self.terms.items() if e != 0})
        if m == 2:
            return LaurentPoly._raw(
                self.order,
                {e: c * (e * (e - 1)) for e, c in self.terms.items() if e not in (0, 1)})
        raise ValueError("z_ddz supports m in {1, 2}")

    def reverse(self, n):
        """z^n f(1/z) for an ordinary polynomial of degree <= n."""
        if self.terms and (self.min_exp() < 0 or self.max_exp() > n):
            raise ValueError("reverse expects an ordinary polynomial of degree <= n")
        return LaurentPoly._raw(self.order, {n - e: c for e, c in self.terms.items()})

    def to_x_poly(self):
        """Coefficients (ascending) of p with p(z + 1/z) = f(z)."""
        if not self.is_symmetric():
            raise ValueError("to_x_poly needs a symmetric Laurent polynomial")
        if not self.terms:
            return []
        f = self
        top = f.max_exp()
        coeffs = [Cyclo.zero(self.order)] * (top + 1)
        x = LaurentPoly(self.order, {1: 1, -1: 1})
        while f.terms:
            d = f.max_exp()
            c = f.terms[d]
            coeffs[d] = c
            f = f - (x ** d).scale(c)
        return coeffs

    # -- numerics and serialization -----------------------------------
    def evaluate(self, z):
        """Complex values at the points z (numpy array or scalar)."""
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        for e, c in self.terms.items():
            out = out + embed_complex(c) * z ** e
        return out

    def to_json(self):
        return {str(e): self.terms[e].to_json() for e in sorted(self.terms)}

    @classmethod
    def from_json(cls, order, data):
        return cls(order, {int(e): Cyclo.from_json(order, v) for e, v in data.items()})

    def csv_rows(self):
        rows = []
        for e in sorted(self.terms):
            c = self.terms[e]
            value = fmt_fraction(c.to_fraction()) if c.is_rational() else " ".join(c.to_json())
            rows.append((e, value))
        return rows


def _as_poly(order, f):
    if isinstance(f, LaurentPoly):
        return f
    return LaurentPoly.constant(order, f)


class RationalLaurent:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.constant(num.order, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.order != den.order:
            raise ValueError("order mismatch")
        # strip the monomial content of den so unit multiples compare equal
        lo, hi = den.min_exp(), den.max_exp()
        lead = den.terms[hi]
        if lo != 0 or lead != 1:
            inv = lead.inverse()
            den = den.shift(-lo).scale(inv)
            num = num.shift(-lo).scale(inv)
        self.num = num
        self.den = den

    @property
    def order(self):
        return self.num.order

    @classmethod
    def lift(cls, f, order=None):
        if isinstance(f, RationalLaurent):
            return f
        if isinstance(f, LaurentPoly):
            return cls(f)
        return cls(LaurentPoly.constant(order, f))

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.divides(self.num)

    def to_laurent(self):
        if self.den == 1:
            return self.num
        return self.num.exact_div(self.den)

    def _common(self, other):
        """Numerators of self and other over a shared denominator."""
        a, b = self.den, other.den
        if a == b:
            return self.num, other.num, a
        q, r = b.divmod(a)
        if r.is_zero():
            return self.num * q, other.num, b
        q, r = a.divmod(b)
        if r.is_zero():
            return self.num, other.num * q, a
        return self.num * b, other.num * a, a * b

    def _coerce(self, other):
        if isinstance(other, RationalLaurent):
            if other.order != self.order:
                raise ValueError("order mismatch")
            return other
        if isinstance(other, (LaurentPoly, int, Fraction, Cyclo)):
            return RationalLaurent(_as_poly(self.order, other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        x, y, d = self._common(other)
        return RationalLaurent(x + y, d)

    __radd__ = __add__

    def __neg__(self):
        return RationalLaurent(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return RationalLaurent(self.num.scale(other), self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalLaurent(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalLaurent(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"RationalLaurent(({self.num}) / ({self.den}))"

    def substitute(self, c, e):
        return RationalLaurent(self.num.substitute(c, e), self.den.substitute(c, e))

    def reflect(self, k):
        return RationalLaurent(self.num.reflect(k), self.den.reflect(k))

    def rotate(self, k):
        return RationalLaurent(self.num.rotate(k), self.den.rotate(k))

    def derivative(self):
        p, q = self.num, self.den
        return RationalLaurent(p.derivative() * q - p * q.derivative(), q * q)

    def z_ddz(self, m=1):
        if m == 1:
            p, q = self.num, self.den
            return RationalLaurent(p.z_ddz(1) * q - p * q.z_ddz(1), q * q)
        if m == 2:
            z2 = LaurentPoly.monomial(self.order, 2)
            return self.derivative().derivative() * z2
        raise ValueError("z_ddz supports m in {1, 2}")

    def evaluate(self, z):
        return self.num.evaluate(z) / self.den.evaluate(z)


def arith(f, g, op):
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown operation {op!r}")

