from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ncspec import polys
from ncspec.exactlin import GF, QQ


def monic_polys(p, d):
    for tail in product(range(p), repeat=d):
        yield tuple(tail) + (1,)


def irreducible_by_brute_force(p, f):
    F = GF(p)
    d = polys.degree(f)
    for e in range(1, d // 2 + 1):
        for g in monic_polys(p, e):
            if not polys.mod(F, f, g):
                return False
    return True


def expand(F, factors):
    out = (F.one,)
    for g, m in factors:
        for _ in range(m):
            out = polys.mul(F, out, g)
    return out


def test_division_identity():
    f, g = (Fraction(1), 0, 0, Fraction(1)), (Fraction(1), Fraction(1))
    q, r = polys.divmod_poly(QQ, f, g)
    assert polys.add(QQ, polys.mul(QQ, q, g), r) == polys.trim(f)


def test_berlekamp_on_all_small_squarefree_polys():
    for p in (2, 3):
        F = GF(p)
        for d in range(1, 5):
            for f in monic_polys(p, d):
                fac = polys.factor_fp(F, f)
                assert expand(F, fac) == f
                for g, _ in fac:
                    assert irreducible_by_brute_force(p, g)


@pytest.mark.filterwarnings("ignore::DeprecationWarning")
def test_factor_fp_agrees_with_sympy():
    x = sympy.Symbol("x")
    for p in (5, 7):
        F = GF(p)
        for f in [(1, 0, 0, 0, 1), (2, 3, 0, 1, 1, 1), (0, 0, 1, 1)]:
            ours = sorted(polys.degree(g) for g, m in polys.factor_fp(F, f) for _ in range(m))
            expr = sum(c * x**i for i, c in enumerate(f))
            _, theirs = sympy.factor_list(expr, x, modulus=p)
            assert ours == sorted(sympy.degree(h, x) for h, m in theirs for _ in range(m))


def test_rational_roots_and_factorization():
    # (x - 1/2)^2 (x + 3) (x^2 + 1)
    F = QQ
    f = polys.mul(F, polys.from_roots(F, [Fraction(1, 2), Fraction(1, 2), Fraction(-3)]),
                  (Fraction(1), 0, Fraction(1)))
    assert polys.rational_roots(f) == [Fraction(-3), Fraction(1, 2)]
    fac = polys.factor(F, f)
    assert expand(F, fac) == polys.monic(F, f)
    assert sorted((polys.degree(g), m) for g, m in fac) == [(1, 1), (1, 2), (2, 1)]


def test_quartic_goes_through_sympy():
    # x^4 - 5x^2 + 6 = (x^2 - 2)(x^2 - 3)
    fac = polys.factor(QQ, (6, 0, -5, 0, 1))
    assert sorted(g for g, _ in fac) == [(-3, 0, 1), (-2, 0, 1)]


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=2, max_size=7))
def test_factor_fp_reconstructs(coeffs):
    F = GF(7)
    f = polys.trim(coeffs)
    if polys.degree(f) < 1:
        return
    f = polys.monic(F, f)
    assert expand(F, polys.factor_fp(F, f)) == f


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=5))
def test_gcd_divides_both(coeffs):
    F = QQ
    f = polys.trim(Fraction(c) for c in coeffs)
    g = (Fraction(-1), Fraction(0), Fraction(1))
    h = polys.gcd(F, f, g)
    if h:
        assert not polys.mod(F, g, h)
        if f:
            assert not polys.mod(F, f, h)
