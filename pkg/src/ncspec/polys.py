"""Dense univariate polynomials over Q and F_p.

A polynomial is a tuple of coefficients, constant term first, with no
trailing zeros; ``()`` is the zero polynomial.  Used to factor minimal
polynomials when splitting the center of a semisimple algebra.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import List, Tuple

from .exactlin import FieldSpec, kernel

Poly = Tuple


def trim(c) -> Poly:
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    return len(f) - 1


def _norm(F: FieldSpec, c) -> Poly:
    return trim(F(x) for x in c)


def add(F, f, g) -> Poly:
    n = max(len(f), len(g))
    f = tuple(f) + (F.zero,) * (n - len(f))
    g = tuple(g) + (F.zero,) * (n - len(g))
    return _norm(F, (a + b for a, b in zip(f, g)))


def sub(F, f, g) -> Poly:
    n = max(len(f), len(g))
    f = tuple(f) + (F.zero,) * (n - len(f))
    g = tuple(g) + (F.zero,) * (n - len(g))
    return _norm(F, (a - b for a, b in zip(f, g)))


def mul(F, f, g) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _norm(F, out)


def scale(F, f, c) -> Poly:
    return _norm(F, (c * a for a in f))


def monic(F, f) -> Poly:
    if not f:
        return ()
    return scale(F, f, F.inv(f[-1]))


def divmod_poly(F, f, g) -> Tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    q = [F.zero] * max(len(f) - len(g) + 1, 0)
    inv = F.inv(g[-1])
    dg = len(g) - 1
    while len(f) - 1 >= dg and f:
        c = F(f[-1] * inv)
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = F(f[shift + i] - c * b)
        f = list(trim(f))
    return trim(q), trim(f)


def mod(F, f, g) -> Poly:
    return divmod_poly(F, f, g)[1]


def gcd(F, f, g) -> Poly:
    while g:
        f, g = g, mod(F, f, g)
    return monic(F, f)


def ext_gcd(F, f, g):
    """Return (d, u, v) with u f + v g = d, d monic."""
    r0, r1 = tuple(f), tuple(g)
    s0, s1 = (F.one,), ()
    t0, t1 = (), (F.one,)
    while r1:
        q, r = divmod_poly(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return (), s0, t0
    c = F.inv(r0[-1])
    return scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)


def derivative(F, f) -> Poly:
    return _norm(F, [i * a for i, a in enumerate(f)][1:])


def evaluate(F, f, x):
    acc = F.zero
    for a in reversed(f):
        acc = F(acc * x + a)
    return acc


def powmod(F, f, e: int, m) -> Poly:
    result = (F.one,)
    base = mod(F, f, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        e >>= 1
    return result


def from_roots(F, roots) -> Poly:
    f = (F.one,)
    for r in roots:
        f = mul(F, f, (F(-r), F.one))
    return f


# --------------------------------------------------------------------------
# Factorization over F_p


def _pth_root(F, f) -> Poly:
    # f' = 0 over F_p: f(x) = g(x^p), and a^p = a on F_p
    p = F.p
    return trim(f[i] for i in range(0, len(f), p))


def squarefree_decomposition(F: FieldSpec, f) -> List[Tuple[Poly, int]]:
    """Monic squarefree factors with multiplicities (Yun; p-th roots over F_p)."""
    f = monic(F, f)
    if degree(f) < 1:
        return []
    out: dict = {}
    _sqf(F, f, 1, out)
    return sorted(out.items(), key=lambda t: (t[1], t[0]))


def _sqf(F, f, mult, out):
    if degree(f) < 1:
        return
    df = derivative(F, f)
    if not df:
        _sqf(F, _pth_root(F, f), mult * F.p, out)
        return
    c = gcd(F, f, df)
    w = divmod_poly(F, f, c)[0]
    i = 1
    while degree(w) >= 1:
        y = gcd(F, w, c)
        z = divmod_poly(F, w, y)[0]
        if degree(z) >= 1:
            key = monic(F, z)
            out[key] = out.get(key, 0) + i * mult
        w = y
        c = divmod_poly(F, c, y)[0]
        i += 1
    if degree(c) >= 1:
        # remaining factor is a p-th power
        _sqf(F, _pth_root(F, monic(F, c)), mult * F.p, out)


def berlekamp(F: FieldSpec, f) -> List[Poly]:
    """Irreducible factors of a monic squarefree polynomial over F_p."""
    if not F.is_finite:
        raise ValueError("Berlekamp factorization needs a prime field")
    f = monic(F, f)
    n = degree(f)
    if n <= 1:
        return [f] if n == 1 else []
    p = F.p
    # Q[i] = x^(i p) mod f; kernel of (Q - I)^T spans the Berlekamp subalgebra
    xp = powmod(F, (F.zero, F.one), p, f)
    rows = []
    cur = (F.one,)
    for i in range(n):
        row = list(cur) + [F.zero] * (n - len(cur))
        row[i] = F(row[i] - 1)
        rows.append(row)
        cur = mod(F, mul(F, cur, xp), f)
    # v (as coefficient vector) is in the subalgebra iff sum_i v_i (Q_i - e_i) = 0
    cols = [tuple(rows[i][j] for i in range(n)) for j in range(n)]
    space = kernel(F, cols, n)
    r = space.dim
    if r == 1:
        return [f]
    factors = [f]
    for v in space.basis:
        v = trim(v)
        if degree(v) < 1:
            continue
        new = []
        for g in factors:
            if degree(g) == 1:
                new.append(g)
                continue
            # v^p - v = prod_s (v - s) vanishes mod f, so the gcds below partition g
            rest = g
            for s in range(p):
                if degree(rest) < 1:
                    break
                d = gcd(F, rest, sub(F, v, (F(s),)))
                if degree(d) >= 1:
                    new.append(d)
                    rest = divmod_poly(F, rest, d)[0]
        factors = new
        if len(factors) == r:
            break
    return sorted(factors)


def factor_fp(F: FieldSpec, f) -> List[Tuple[Poly, int]]:
    """Complete factorization over F_p into monic irreducibles."""
    out = []
    for g, m in squarefree_decomposition(F, f):
        for h in berlekamp(F, g):
            out.append((h, m))
    return sorted(out, key=lambda t: (degree(t[0]), t[0], t[1]))


def roots_fp(F: FieldSpec, f) -> List[int]:
    return [x for x in range(F.p) if evaluate(F, f, x) == 0]


# --------------------------------------------------------------------------
# Rational polynomials


def _integer_primitive(f) -> Tuple[int, ...]:
    den = 1
    for a in f:
        den = den * Fraction(a).denominator // igcd(den, Fraction(a).denominator)
    ints = [int(Fraction(a) * den) for a in f]
    g = 0
    for a in ints:
        g = igcd(g, a)
    return tuple(a // g for a in ints) if g else tuple(ints)


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(f) -> List[Fraction]:
    """Distinct rational roots by the rational root theorem."""
    F = FieldSpec(0)
    f = trim(Fraction(a) for a in f)
    roots = []
    while f and f[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        f = f[1:]
    if degree(f) < 1:
        return roots
    c = _integer_primitive(f)
    for num in _divisors(c[0]):
        for den in _divisors(c[-1]):
            for s in (1, -1):
                r = Fraction(s * num, den)
                if r not in roots and evaluate(F, f, r) == 0:
                    roots.append(r)
    return sorted(roots)


def factor_rational(f) -> List[Tuple[Poly, int]]:
    """Monic irreducible factors over Q with multiplicities.

    Linear factors come from the rational root theorem; a cofactor of degree
    2 or 3 with no rational root is irreducible.  Larger cofactors are handed
    to sympy's factorization over QQ.
    """
    F = FieldSpec(0)
    out = []
    for g, m in squarefree_decomposition(F, f):
        rest = g
        for r in rational_roots(g):
            out.append(((-r, Fraction(1)), m))
            rest = divmod_poly(F, rest, (-r, Fraction(1)))[0]
        if degree(rest) in (2, 3):
            out.append((monic(F, rest), m))
        elif degree(rest) >= 4:
            for h in _sympy_factor(rest):
                out.append((h, m))
    return sorted(out, key=lambda t: (degree(t[0]), t[0], t[1]))


def _sympy_factor(f) -> List[Poly]:
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(a.numerator, a.denominator) * x**i for i, a in enumerate(f))
    _, facs = sympy.factor_list(expr, x, domain="QQ")
    out = []
    for h, m in facs:
        coeffs = sympy.Poly(h, x).all_coeffs()[::-1]
        g = monic(FieldSpec(0), tuple(Fraction(int(c.p), int(c.q)) for c in coeffs))
        out.extend([g] * m)
    return out


def factor(F: FieldSpec, f) -> List[Tuple[Poly, int]]:
    if F.is_finite:
        return factor_fp(F, f)
    return factor_rational(f)
