"""Prime spectra of finite-dimensional algebras and their Zariski topology.

A prime P of a finite-dimensional algebra A has simple quotient A/P, so
Spec A is read off the semisimple quotient A/rad(A): one prime per central
primitive idempotent of A/rad(A).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import isqrt
from typing import List, Optional

from . import polys
from .algebra import Algebra, center, quotient_algebra
from .exactlin import Subspace, preimage, rank
from .ideals import (
    Ideal,
    jacobson_radical,
    preimage_under_hom,
)
from .topology import FiniteSpace, mask_of, members
from .rng import SplitMix64

__all__ = [
    "NonSplitCenter",
    "RankUncertified",
    "PrimeIdeal",
    "SpecSet",
    "ClosedSet",
    "GoldieRank",
    "central_primitive_idempotents",
    "minimal_polynomial",
    "spec",
    "is_prime",
    "definitional_prime_oracle",
    "v_of",
    "i_of",
    "closure",
    "minimal_primes_over",
    "goldie_rank",
    "spec_n",
    "all_closed_sets",
    "CLOSED_SET_CAP",
]

CLOSED_SET_CAP = 16
RANDOM_CANDIDATES = 64
CANDIDATE_SEED = 0x5EED


class NonSplitCenter(ArithmeticError):
    """The center of a semisimple quotient could not be split into fields."""


class RankUncertified(ArithmeticError):
    """No candidate produced a certified minimal left ideal."""


# --------------------------------------------------------------------------
# Polynomials evaluated in an algebra


def minimal_polynomial(a: Algebra, x, unit=None) -> tuple:
    """Monic minimal polynomial of x in the unital algebra with identity ``unit``."""
    F = a.field
    e = a.unit if unit is None else tuple(unit)
    powers = [e]
    while True:
        nxt = a.mult(powers[-1], x)
        # solve nxt = sum c_k powers[k]
        coeffs = preimage([(v,) for v in powers + [nxt]], a.zero_space())
        if not coeffs.is_zero:
            rel = coeffs.basis[0]
            # last coordinate is the pivot-free one only if a relation involves nxt
            if rel[-1]:
                c = F.inv(rel[-1])
                return polys.trim(F(r * c) for r in rel)
            raise AssertionError("powers of x became dependent without x^k")
        powers.append(nxt)
        if len(powers) > a.dim + 1:
            raise AssertionError("minimal polynomial degree exceeds dimension")


def poly_at(a: Algebra, f, x, unit=None) -> tuple:
    e = a.unit if unit is None else tuple(unit)
    acc = a.zero()
    for c in reversed(f):
        acc = a.add(a.mult(acc, x), a.scale(c, e))
    return acc


def _crt_idempotents(a: Algebra, x, unit, factors) -> List[tuple]:
    """Orthogonal idempotents, one per coprime factor of the minimal polynomial."""
    F = a.field
    m = (F.one,)
    for f in factors:
        m = polys.mul(F, m, f)
    out = []
    for f in factors:
        g = polys.divmod_poly(F, m, f)[0]
        d, u, _ = polys.ext_gcd(F, g, f)
        if d != (F.one,):
            raise AssertionError("factors are not coprime")
        h = polys.mod(F, polys.mul(F, u, g), m)
        out.append(poly_at(a, h, x, unit))
    return out


def _candidate_elements(a: Algebra, space: Subspace, seed: int, count: int):
    F = a.field
    basis = list(space.basis)
    yield from basis
    for u, w in combinations(basis, 2):
        yield a.add(u, w)
        yield a.sub(u, w)
    rng = SplitMix64(seed)
    for _ in range(count):
        coeffs = [F(rng.randint(-3, 3)) for _ in basis]
        yield space.combine(coeffs)


def _split_piece(a: Algebra, e, zbasis) -> Optional[List[tuple]]:
    """Split the idempotent e of the center, or return None if eZ is a field."""
    F = a.field
    ez = a.span(a.mult(e, z) for z in zbasis)
    d = ez.dim
    if d <= 1:
        return None
    if F.is_finite:
        # Berlekamp subalgebra of eZ: its dimension counts the field factors
        p = F.p
        imgs = [(a.sub(a.power(w, p), w),) for w in ez.basis]
        fixed = preimage(imgs, a.zero_space())
        if fixed.dim == 1:
            return None
        line = a.span([e])
        for c in fixed.basis:
            x = ez.combine(c)
            if not line.contains(x):
                break
        else:
            raise AssertionError("Berlekamp subalgebra lies on the identity line")
        m = minimal_polynomial(a, x, e)
        factors = [f for f, _ in polys.factor_fp(F, m)]
        return _crt_idempotents(a, x, e, factors)
    for w in _candidate_elements(a, ez, CANDIDATE_SEED, RANDOM_CANDIDATES):
        w = a.mult(w, e)
        m = minimal_polynomial(a, w, e)
        facs = polys.factor_rational(m)
        if len(facs) >= 2:
            if any(mult > 1 for _, mult in facs):
                raise AssertionError("center of a semisimple algebra has nilpotents")
            return _crt_idempotents(a, w, e, [f for f, _ in facs])
        if polys.degree(m) == d:
            return None
    raise NonSplitCenter(f"could not split a {d}-dimensional piece of the center over Q")


def central_primitive_idempotents(a: Algebra) -> List[tuple]:
    """Central primitive idempotents of a semisimple algebra, sorted by coordinates."""
    if "cpi" in a._memo:
        return a._memo["cpi"]
    zbasis = center(a).basis
    done = []
    todo = [a.unit]
    while todo:
        e = todo.pop()
        pieces = _split_piece(a, e, zbasis)
        if pieces is None:
            done.append(e)
        else:
            todo.extend(x for x in pieces if any(x))
    done.sort(key=lambda v: tuple(str(x) for x in v))
    a._memo["cpi"] = done
    return done


# --------------------------------------------------------------------------
# Primes


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime ideal with the dimension of its simple quotient."""

    ideal: Ideal
    quotient_dim: int

    @property
    def carrier(self) -> Subspace:
        return self.ideal.carrier

    @property
    def parent(self) -> Algebra:
        return self.ideal.parent

    def describe(self) -> str:
        return self.ideal.describe()

    def __repr__(self):
        return f"Prime({self.describe()}, quotient dim {self.quotient_dim})"


@dataclass(frozen=True)
class SpecSet:
    algebra: Algebra
    primes: tuple
    radical: Ideal

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __getitem__(self, i) -> PrimeIdeal:
        return self.primes[i]

    @property
    def full(self) -> int:
        return (1 << len(self.primes)) - 1

    def index(self, ideal) -> int:
        carrier = ideal.carrier
        for k, p in enumerate(self.primes):
            if p.carrier == carrier:
                return k
        raise KeyError("not a prime of this spectrum")

    def describe_mask(self, mask: int) -> list:
        return [self.primes[i].describe() for i in members(mask)]


def spec(a: Algebra) -> SpecSet:
    """Spec A: preimages of the complements of the Wedderburn components."""
    if "spec" in a._memo:
        return a._memo["spec"]
    rad = jacobson_radical(a)
    q, pi = quotient_algebra(a, rad)
    primes = []
    for e in central_primitive_idempotents(q):
        comp = q.span(q.mult(x, e) for x in q.basis())
        rest = q.sub(q.unit, e)
        other = q.span(q.mult(x, rest) for x in q.basis())
        primes.append(PrimeIdeal(preimage_under_hom(pi, other), comp.dim))
    primes.sort(key=lambda p: p.ideal.sort_key())
    out = SpecSet(a, tuple(primes), rad)
    a._memo["spec"] = out
    return out


def _num_components(q: Algebra) -> int:
    return len(central_primitive_idempotents(q))


def is_prime(a: Algebra, i: Ideal) -> bool:
    """A/I is simple: zero radical and a single Wedderburn component."""
    if i.is_whole:
        return False
    q, _ = quotient_algebra(a, i)
    if not jacobson_radical(q).is_zero:
        return False
    return _num_components(q) == 1


ORACLE_CAP = 1 << 16


def _coset_representatives(a: Algebra, i: Ideal, cap: int = ORACLE_CAP):
    F = a.field
    reps = i.carrier.complement_columns()
    d = len(reps)
    if F.is_finite and F.p**d <= cap:
        # every nonzero coset up to scalars: first nonzero coordinate is 1
        from itertools import product

        for lead in range(d):
            for tail in product(range(F.p), repeat=d - lead - 1):
                v = [0] * a.dim
                v[reps[lead]] = 1
                for k, t in zip(reps[lead + 1 :], tail):
                    v[k] = t
                yield tuple(v)
        return
    basis = [a.basis_vector(c) for c in reps]
    yield from basis
    for u, w in combinations(basis, 2):
        yield a.add(u, w)
        yield a.sub(u, w)


# verdicts depend only on the structure constants and the ideal
_ORACLE_CACHE: dict = {}


def definitional_prime_oracle(a: Algebra, i: Ideal, cap: int = ORACLE_CAP) -> bool:
    """Primeness straight from the definition: x A y in I forces x or y in I.

    For each coset x not in I the set {y : x e_k y in I for all k} is a linear
    subspace and must equal I.  Over a finite field with at most 2^16 cosets,
    x runs over every nonzero coset (up to scalars), which makes the test
    exact; otherwise (or when there are more than ``cap`` cosets) x runs
    over basis cosets and their pairwise sums and differences.
    """
    if i.is_whole:
        return False
    key = (str(a.field), a.mul, i.carrier.basis, cap)
    if key in _ORACLE_CACHE:
        return _ORACLE_CACHE[key]
    B = a.basis()
    out = True
    for x in _coset_representatives(a, i, cap):
        xe = [a.mult(x, e) for e in B]
        images = [tuple(a.mult(u, b) for u in xe) for b in B]
        ys = preimage(images, i.carrier)
        if ys != i.carrier:
            out = False
            break
    _ORACLE_CACHE[key] = out
    return out


# --------------------------------------------------------------------------
# Zariski topology


def v_of(s: SpecSet, x) -> int:
    """Mask of primes containing x (an ideal, a subspace, or element vectors)."""
    if hasattr(x, "carrier"):
        vecs = x.carrier.basis
    elif isinstance(x, Subspace):
        vecs = x.basis
    else:
        vecs = [getattr(v, "coords", v) for v in x]
    return mask_of(k for k, p in enumerate(s.primes) if all(p.carrier.contains(v) for v in vecs))


def i_of(s: SpecSet, mask: int) -> Ideal:
    """Intersection of the primes in ``mask`` (the whole algebra if empty)."""
    a = s.algebra
    key = ("I", mask)
    if key not in a._memo:
        out = a.full_space()
        for k in members(mask):
            out = out & s.primes[k].carrier
        a._memo[key] = Ideal(a, out)
    return a._memo[key]


def closure(s: SpecSet, mask: int) -> int:
    return v_of(s, i_of(s, mask))


@dataclass(frozen=True)
class ClosedSet:
    spec: SpecSet
    mask: int

    @property
    def defining_ideal(self) -> Ideal:
        return i_of(self.spec, self.mask)

    def members(self) -> List[PrimeIdeal]:
        return [self.spec.primes[i] for i in members(self.mask)]


def minimal_primes_over(s: SpecSet, i) -> List[PrimeIdeal]:
    over = [p for p in s.primes if i.carrier.issubset(p.carrier)]
    return [
        p for p in over
        if not any(q is not p and q.carrier.issubset(p.carrier) and q.carrier != p.carrier
                   for q in over)
    ]


def minimal_primes_mask(s: SpecSet, i) -> int:
    return mask_of(s.index(p.ideal) for p in minimal_primes_over(s, i))


def all_closed_sets(s: SpecSet) -> FiniteSpace:
    """Every U with U = V(I(U)), found by enumerating subsets."""
    if "space" in s.algebra._memo:
        return s.algebra._memo["space"]
    n = len(s.primes)
    if n > CLOSED_SET_CAP:
        raise ValueError(f"{n} primes exceed the closed-set enumeration cap of {CLOSED_SET_CAP}")
    closed = [u for u in range(1 << n) if closure(s, u) == u]
    space = FiniteSpace(n, closed)
    s.algebra._memo["space"] = space
    return space


# --------------------------------------------------------------------------
# Goldie rank


@dataclass(frozen=True)
class GoldieRank:
    """Goldie rank n of A/P = M_n(D) with s = dim of a minimal left ideal."""

    rank: int
    min_left_ideal_dim: int
    quotient_dim: int
    center_dim: int

    def certificate_ok(self) -> bool:
        s = self.min_left_ideal_dim
        return self.quotient_dim == self.rank * s and s % self.rank == 0


def _left_ideal_dim(q: Algebra, x) -> int:
    return rank(q.field, q.right_mul_operator(x), q.dim)


def _zero_divisors(q: Algebra, z) -> List[tuple]:
    """g(z) for proper factors g of the minimal polynomial of z (zero divisors when nonzero)."""
    F = q.field
    m = minimal_polynomial(q, z)
    if polys.degree(m) <= 1:
        return []
    facs = polys.factor(F, m)
    if len(facs) == 1 and facs[0][1] == 1:
        return []
    out = []
    for f, _ in facs:
        for g in (f, polys.divmod_poly(F, m, f)[0]):
            if polys.degree(g) >= 1:
                v = poly_at(q, g, z)
                if any(v):
                    out.append(v)
    return out


def _candidates(q: Algebra):
    B = q.basis()
    yield from B
    for x in B:
        for y in B:
            yield q.mult(x, y)
    rng = SplitMix64(CANDIDATE_SEED)
    F = q.field
    randoms = [tuple(F(rng.randint(-3, 3)) for _ in range(q.dim)) for _ in range(RANDOM_CANDIDATES)]
    yield from randoms
    for z in B + randoms:
        yield from _zero_divisors(q, z)


def _search_min_left_ideal(q: Algebra, target: int) -> int:
    """Smallest dim(A x) over the candidates, improved by left multiplication."""
    best, best_x = q.dim, q.unit
    for x in _candidates(q):
        if not any(x):
            continue
        s = _left_ideal_dim(q, x)
        if s < best:
            best, best_x = s, x
            if best == target:
                return best
    # descend: u x generates a left ideal inside A x
    improved = True
    while improved and best > target:
        improved = False
        for u in q.basis():
            y = q.mult(u, best_x)
            if any(y):
                s = _left_ideal_dim(q, y)
                if s < best:
                    best, best_x, improved = s, y, True
                    break
    return best


def _exhaustive_min_left_ideal(q: Algebra) -> int:
    from itertools import product

    best = q.dim
    for v in product(range(q.field.p), repeat=q.dim):
        if any(v):
            best = min(best, _left_ideal_dim(q, v))
    return best


def goldie_rank(a: Algebra, p) -> GoldieRank:
    """Goldie rank of the simple quotient A/P.

    A/P = M_n(D) with center K.  dim(A/P)/dim K = (n m)^2 where m^2 = dim_K D;
    put N = n m.  Every nonzero left ideal has dimension at least dim(A/P)/N,
    with equality exactly when m = 1, so finding one of that size certifies
    n = N.  Over F_p, D is commutative and n = N outright.
    """
    ideal = p.ideal if isinstance(p, PrimeIdeal) else p
    key = ("goldie", ideal.carrier)
    if key in a._memo:
        return a._memo[key]
    q, _ = quotient_algebra(a, ideal)
    c = center(q).dim
    dq = q.dim
    if dq % c:
        raise RankUncertified("center dimension does not divide the quotient dimension")
    big_n = isqrt(dq // c)
    if big_n * big_n * c != dq:
        raise RankUncertified("quotient is not simple: dim/center is not a square")
    target = dq // big_n
    s = dq if big_n == 1 else _search_min_left_ideal(q, target)
    if s != target:
        if q.field.is_finite and q.field.p ** q.dim <= ORACLE_CAP:
            s = _exhaustive_min_left_ideal(q)
        elif q.field.is_finite:
            s = target
        if s != target:
            raise RankUncertified(
                f"smallest principal left ideal found has dim {s}, expected {target}"
            )
    out = GoldieRank(dq // s, s, dq, c)
    if not out.certificate_ok():
        raise RankUncertified("divisibility certificate failed")
    a._memo[key] = out
    return out


def spec_n(s: SpecSet, n: int) -> int:
    """Mask of primes whose quotient has Goldie rank at most n."""
    return mask_of(k for k, p in enumerate(s.primes) if goldie_rank(s.algebra, p).rank <= n)
