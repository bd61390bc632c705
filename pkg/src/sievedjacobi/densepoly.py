# Dense univariate polynomials over Q as lists of coefficients in ascending
# order, e.g. [1, 0, 3] is 1 + 3x^2.  The zero polynomial is [].
from fractions import Fraction


def normalize(p):
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return list(p[:n])


def degree(p):
    return len(normalize(p)) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, c in enumerate(b):
        res[i] = res[i] + c
    return normalize(res)


def sub(a, b):
    return add(a, [-c for c in b])


def scale(a, c):
    return normalize([c * x for x in a])


def mul(a, b):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            res[i + j] += x * y
    return normalize(res)


def divmod_(a, b):
    """Long division a = q*b + r with deg r < deg b."""
    a = normalize(a)
    b = normalize(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = [Fraction(x) for x in a]
    for shift in range(len(a) - len(b), -1, -1):
        c = r[shift + len(b) - 1]
        if not c:
            continue
        c = Fraction(c) / lead
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] -= c * y
    return normalize(q), normalize(r)


def exact_div(a, b):
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def invmod(a, m):
    """Inverse of a modulo m over Q by the extended Euclidean algorithm."""
    r0, r1 = normalize(m), normalize(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible modulo m")
    return scale(s0, 1 / Fraction(r0[0]))


def compose_affine(p, a, b):
    """p(a*x + b)."""
    res = []
    for c in reversed(normalize(p)):
        res = add(mul(res, [b, a]), [c])
    return res
