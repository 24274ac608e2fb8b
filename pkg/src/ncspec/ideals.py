"""Two-sided and left ideals: generation, products, annihilators, radicals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Algebra, AlgebraElement, AlgebraHom, Bimodule, quotient_algebra
from .exactlin import Subspace, kernel, preimage, transpose

__all__ = [
    "Ideal",
    "LeftIdeal",
    "UnsupportedCharacteristic",
    "two_sided_ideal_generated",
    "left_ideal_generated",
    "ideal_product",
    "ideal_power",
    "ideal_sum",
    "ideal_intersect",
    "preimage_under_hom",
    "annihilator_of_quotient",
    "bimodule_annihilator",
    "bimodule_quotient_annihilator",
    "jacobson_radical",
    "prime_radical_of_ideal",
    "nilpotency_index",
]


class UnsupportedCharacteristic(ValueError):
    """The requested radical method is unsound in this characteristic."""


@dataclass(frozen=True)
class Ideal:
    """A two-sided ideal, identified by its canonical carrier subspace."""

    parent: Algebra
    carrier: Subspace

    @classmethod
    def zero(cls, a: Algebra) -> "Ideal":
        return cls(a, a.zero_space())

    @classmethod
    def whole(cls, a: Algebra) -> "Ideal":
        return cls(a, a.full_space())

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def basis(self) -> tuple:
        return self.carrier.basis

    @property
    def is_zero(self) -> bool:
        return self.carrier.is_zero

    @property
    def is_whole(self) -> bool:
        return self.carrier.is_full

    def contains(self, v) -> bool:
        if isinstance(v, AlgebraElement):
            v = v.coords
        return self.carrier.contains(v)

    def issubset(self, other) -> bool:
        return self.carrier.issubset(other.carrier)

    def __le__(self, other) -> bool:
        return self.issubset(other)

    def __lt__(self, other) -> bool:
        return self.issubset(other) and self.carrier != other.carrier

    def __add__(self, other):
        return ideal_sum(self, other)

    def __and__(self, other):
        return ideal_intersect(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def is_closed(self) -> bool:
        """Closure under multiplication by every basis element on both sides."""
        a = self.parent
        return all(
            self.carrier.contains(a.mult(e, x)) and self.carrier.contains(a.mult(x, e))
            for x in self.carrier.basis
            for e in a.basis()
        )

    def sort_key(self):
        return self.carrier.sort_key()

    def describe(self) -> str:
        a = self.parent
        if self.carrier.is_zero:
            return "0"
        return "span{" + ", ".join(a.format(v) for v in self.carrier.basis) + "}"

    def __repr__(self):
        return f"Ideal({self.describe()})"


@dataclass(frozen=True)
class LeftIdeal:
    parent: Algebra
    carrier: Subspace

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def is_closed(self) -> bool:
        a = self.parent
        return all(
            self.carrier.contains(a.mult(e, x)) for x in self.carrier.basis for e in a.basis()
        )

    def __repr__(self):
        a = self.parent
        return "LeftIdeal(span{" + ", ".join(a.format(v) for v in self.carrier.basis) + "})"


def _coords(a: Algebra, gens) -> list:
    out = []
    for g in gens:
        if isinstance(g, AlgebraElement):
            out.append(g.coords)
        else:
            out.append(a.field.vec(g))
    return out


def two_sided_ideal_generated(a: Algebra, gens) -> Ideal:
    """span{e_i g e_j}; one pass suffices because A g A is already an ideal."""
    gens = _coords(a, gens)
    B = a.basis()
    left = a.span(a.mult(e, g) for g in gens for e in B)
    return Ideal(a, a.span(a.mult(x, e) for x in left.basis for e in B))


def left_ideal_generated(a: Algebra, gens) -> LeftIdeal:
    gens = _coords(a, gens)
    return LeftIdeal(a, a.span(a.mult(e, g) for g in gens for e in a.basis()))


def right_ideal_generated(a: Algebra, gens) -> Subspace:
    gens = _coords(a, gens)
    return a.span(a.mult(g, e) for g in gens for e in a.basis())


def _same_parent(i, j):
    if i.parent is not j.parent:
        raise ValueError("ideals of different algebras")


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    _same_parent(i, j)
    return Ideal(i.parent, i.parent.product_space(i.carrier, j.carrier))


def ideal_power(i: Ideal, t: int) -> Ideal:
    if t < 1:
        raise ValueError("ideal powers start at 1")
    out = i
    for _ in range(t - 1):
        nxt = ideal_product(out, i)
        if nxt.carrier == out.carrier:
            break
        out = nxt
    return out


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    _same_parent(i, j)
    return Ideal(i.parent, i.carrier + j.carrier)


def ideal_intersect(i: Ideal, j: Ideal) -> Ideal:
    _same_parent(i, j)
    return Ideal(i.parent, i.carrier & j.carrier)


def preimage_under_hom(f: AlgebraHom, j) -> Ideal:
    """{r : f(r) in J}, an ideal of the source."""
    carrier = j.carrier if hasattr(j, "carrier") else j
    return Ideal(f.source, preimage([(img,) for img in f.images], carrier))


def annihilator_of_quotient(l) -> Ideal:
    """ann_A(A/L) = {s : s A is inside L}, the largest two-sided ideal in L."""
    a = l.parent
    B = a.basis()
    images = [tuple(a.mult(b, e) for e in B) for b in B]
    return Ideal(a, preimage(images, l.carrier))


def bimodule_annihilator(m: Bimodule, side: str = "left") -> Ideal:
    """ann of _A M (side='left') or of M_B (side='right')."""
    zero = Subspace.zero(m.field, m.dim)
    if side == "left":
        return Ideal(m.left, preimage([tuple(transpose(op)) for op in m.left_action], zero))
    if side == "right":
        return Ideal(m.right, preimage([tuple(transpose(op)) for op in m.right_action], zero))
    raise ValueError("side must be 'left' or 'right'")


def bimodule_quotient_annihilator(m: Bimodule, j) -> Ideal:
    """ann_A(M / M.J) for an ideal J of the right algebra."""
    carrier = j.carrier if hasattr(j, "carrier") else j
    mj = m.right_submodule(carrier)
    return Ideal(m.left, preimage([tuple(transpose(op)) for op in m.left_action], mj))


# --------------------------------------------------------------------------
# Radicals


def _regular_traces(a: Algebra) -> list:
    """Tr(L_{e_k}) for each basis element."""
    return [sum(m[r][r] for r in range(a.dim)) for m in a.left_regular()]


def _trace_form_radical(a: Algebra) -> Subspace:
    F = a.field
    tr = _regular_traces(a)
    n = a.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(F(sum(c * t for c, t in zip(a.mul[i][j], tr))))
        rows.append(row)
    # the trace form is symmetric, so its kernel is the radical of the form
    return kernel(F, rows, n)


def _int_matpow_trace(m, e: int, modulus: int) -> int:
    n = len(m)
    result = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    base = [list(r) for r in m]

    def mm(x, y):
        yt = list(zip(*y))
        return [[sum(a * b for a, b in zip(row, col)) % modulus for col in yt] for row in x]

    while e:
        if e & 1:
            result = mm(result, base)
        base = mm(base, base)
        e >>= 1
    return sum(result[i][i] for i in range(n)) % modulus


def _generalized_trace_radical(a: Algebra) -> Subspace:
    """Radical over F_p when p <= dim, via traces of p^i-th powers of integer lifts.

    I_{-1} = A and I_i = {x in I_{i-1} : g_i(x y) = 0 for all y}, where
    g_i(z) = Tr(lift(L_z)^(p^i)) / p^i mod p.  Each g_i is linear on I_{i-1};
    the radical is I_l with l = floor(log_p(dim)).
    """
    F = a.field
    p = F.p
    n = a.dim
    levels = 0
    while p ** (levels + 1) <= n:
        levels += 1
    lreg = a.left_regular()
    B = a.basis()

    def lift(z):
        m = [[0] * n for _ in range(n)]
        for c, op in zip(z, lreg):
            if c:
                for r in range(n):
                    row = op[r]
                    for k in range(n):
                        if row[k]:
                            m[r][k] += c * row[k]
        return [[x % p for x in r] for r in m]

    current = list(B)
    for i in range(levels + 1):
        if not current:
            break
        q = p**i
        modulus = p ** (i + 1)
        rows = []
        for y in B:
            row = []
            for x in current:
                t = _int_matpow_trace(lift(a.mult(x, y)), q, modulus)
                if t % q:
                    raise ArithmeticError("generalized trace not divisible by p^i")
                row.append((t // q) % p)
            rows.append(row)
        coeffs = kernel(F, rows, len(current))
        current = [_lincomb(a, c, current) for c in coeffs.basis]
    return a.span(current)


def _lincomb(a: Algebra, coeffs, vecs) -> tuple:
    out = a.zero()
    for c, v in zip(coeffs, vecs):
        if c:
            out = a.add(out, a.scale(c, v))
    return out


def jacobson_radical(a: Algebra, method: str = "auto") -> Ideal:
    """The Jacobson radical, equal here to the prime radical.

    ``method="trace"`` uses the kernel of (x, y) -> Tr(L_{xy}), sound in
    characteristic 0 or p > dim; ``"auto"`` switches to generalized traces
    for small p.
    """
    key = ("radical", method)
    if key in a._memo:
        return a._memo[key]
    p = a.field.characteristic
    small = p and p <= a.dim
    if method == "trace":
        if small:
            raise UnsupportedCharacteristic(
                f"trace-form radical needs characteristic 0 or p > {a.dim}, got p = {p}"
            )
        rad = _trace_form_radical(a)
    elif method == "auto":
        rad = _generalized_trace_radical(a) if small else _trace_form_radical(a)
    else:
        raise ValueError(f"unknown radical method {method!r}")
    out = Ideal(a, rad)
    a._memo[key] = out
    return out


def prime_radical_of_ideal(a: Algebra, i: Ideal) -> Ideal:
    """sqrt(I): the preimage of rad(A/I)."""
    if i.is_whole:
        return i
    if i.is_zero:
        return jacobson_radical(a)
    q, pi = quotient_algebra(a, i)
    return preimage_under_hom(pi, jacobson_radical(q))


def nilpotency_index(i: Ideal, modulo: Optional[Ideal] = None) -> Optional[int]:
    """Least t with I^t inside ``modulo`` (default 0), or None if the chain stalls above."""
    a = i.parent
    target = modulo.carrier if modulo is not None else a.zero_space()
    cur = i.carrier
    for t in range(1, a.dim + 2):
        if cur.issubset(target):
            return t
        nxt = a.product_space(cur, i.carrier)
        if nxt == cur:
            return None
        cur = nxt
    return None
