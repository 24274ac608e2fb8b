"""Exact scalars over Q and F_p, and canonical-form linear algebra.

Field elements are plain Python values: ``fractions.Fraction`` over the
rationals and ``int`` residues in ``[0, p)`` over a prime field.  Matrices are
lists (or tuples) of row tuples; the field is always passed explicitly.

Subspaces are stored by their reduced row-echelon basis, so two subspaces are
equal as sets exactly when their stored bases are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

__all__ = [
    "FieldSpec",
    "QQ",
    "GF",
    "Subspace",
    "rref",
    "rank",
    "solve",
    "kernel",
    "preimage",
    "mat_mul",
    "mat_vec",
    "identity_matrix",
    "zero_matrix",
    "transpose",
    "subspace_sum",
    "subspace_intersect",
    "subspace_contains",
    "ShapeError",
]


class ShapeError(ValueError):
    """Incompatible matrix or subspace dimensions."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (characteristic 0) or the prime field F_p."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or prime, got {c}")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime_field"

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def __call__(self, x):
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, p)) % p
        return int(x) % p

    def vec(self, xs: Iterable) -> tuple:
        return tuple(self(x) for x in xs)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return 1 / x if p == 0 else pow(x, -1, p)

    def elements(self):
        """All elements of a finite field."""
        if self.characteristic == 0:
            raise ValueError("the rationals are not enumerable")
        return range(self.characteristic)

    def format(self, x) -> str:
        if self.characteristic == 0:
            x = Fraction(x)
            return f"{x.numerator}/{x.denominator}"
        return f"{x} mod {self.characteristic}"

    def parse(self, s) -> object:
        if not isinstance(s, str):
            return self(s)
        text = s.strip()
        if " mod " in text:
            r, _, p = text.partition(" mod ")
            if int(p) != self.characteristic:
                raise ValueError(f"scalar {s!r} is not in {self}")
            return int(r) % self.characteristic
        return self(Fraction(text))

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    @classmethod
    def from_string(cls, s: str) -> "FieldSpec":
        s = s.strip()
        if s in ("Q", "QQ"):
            return cls(0)
        if s.startswith("Fp:"):
            return cls(int(s[3:]))
        if s.startswith("F") and s[1:].isdigit():
            return cls(int(s[1:]))
        raise ValueError(f"unknown field {s!r}; expected 'Q' or 'Fp:<p>'")


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


# --------------------------------------------------------------------------
# Dense matrices


def identity_matrix(F: FieldSpec, n: int) -> list:
    one, zero = F.one, F.zero
    return [tuple(one if i == j else zero for j in range(n)) for i in range(n)]


def zero_matrix(F: FieldSpec, rows: int, cols: int) -> list:
    return [tuple([F.zero] * cols) for _ in range(rows)]


def transpose(m: Sequence[Sequence]) -> list:
    return [tuple(col) for col in zip(*m)]


def mat_mul(F: FieldSpec, a, b) -> list:
    p = F.characteristic
    bt = list(zip(*b))
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        r = []
        for col in bt:
            s = sum(x * col[k] for k, x in nz)
            r.append(s % p if p else Fraction(s))
        out.append(tuple(r))
    return out


def mat_vec(F: FieldSpec, a, v) -> tuple:
    p = F.characteristic
    nz = [(k, x) for k, x in enumerate(v) if x]
    out = []
    for row in a:
        s = sum(row[k] * x for k, x in nz)
        out.append(s % p if p else Fraction(s))
    return tuple(out)


def _rref_rows(F: FieldSpec, rows: Iterable[Sequence], ncols: int):
    """Row-reduce; return (nonzero rows as lists, pivot columns)."""
    p = F.characteristic
    if p:
        m = [[x % p for x in r] for r in rows]
    else:
        m = [[x if type(x) is Fraction else Fraction(x) for x in r] for r in rows]
    for r in m:
        if len(r) != ncols:
            raise ShapeError(f"row of length {len(r)} in a {ncols}-column matrix")
    pivots = []
    prow = 0
    nrows = len(m)
    for c in range(ncols):
        if prow == nrows:
            break
        sel = None
        for i in range(prow, nrows):
            if m[i][c]:
                sel = i
                break
        if sel is None:
            continue
        m[prow], m[sel] = m[sel], m[prow]
        piv = m[prow]
        if p:
            inv = pow(piv[c], -1, p)
            if inv != 1:
                piv = [(x * inv) % p for x in piv]
        else:
            inv = 1 / piv[c]
            if inv != 1:
                piv = [x * inv for x in piv]
        m[prow] = piv
        support = [k for k in range(c, ncols) if piv[k]]
        for i in range(nrows):
            if i != prow:
                row = m[i]
                f = row[c]
                if f:
                    if p:
                        for k in support:
                            row[k] = (row[k] - f * piv[k]) % p
                    else:
                        for k in support:
                            row[k] = row[k] - f * piv[k]
        pivots.append(c)
        prow += 1
    return m[:prow], pivots


def rref(F: FieldSpec, m: Sequence[Sequence], ncols: Optional[int] = None) -> list:
    """Reduced row-echelon form of ``m`` with zero rows dropped."""
    if ncols is None:
        ncols = len(m[0]) if len(m) else 0
    rows, _ = _rref_rows(F, m, ncols)
    return [tuple(r) for r in rows]


def rank(F: FieldSpec, m: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    if ncols is None:
        ncols = len(m[0]) if len(m) else 0
    return len(_rref_rows(F, m, ncols)[1])


def kernel(F: FieldSpec, a: Sequence[Sequence], ncols: Optional[int] = None) -> "Subspace":
    """Null space {x : a x = 0} as a canonical subspace of F^ncols."""
    if ncols is None:
        if not len(a):
            raise ShapeError("ncols required for an empty matrix")
        ncols = len(a[0])
    rows, pivots = _rref_rows(F, a, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    zero, one = F.zero, F.one
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in zip(rows, pivots):
            if r[fc]:
                v[pc] = -r[fc] % F.p if F.p else -r[fc]
        basis.append(v)
    return Subspace.span(F, ncols, basis)


def solve(F: FieldSpec, a: Sequence[Sequence], b: Sequence[Sequence]) -> Optional[list]:
    """Some x with a x = b, or None if the system is inconsistent.

    ``b`` is a matrix with one column per right-hand side.  The returned x is
    the pivot solution (free variables set to zero).
    """
    if len(a) != len(b):
        raise ShapeError(f"{len(a)} equations but {len(b)} right-hand rows")
    n = len(a[0]) if len(a) else 0
    k = len(b[0]) if len(b) else 0
    aug = [tuple(ra) + tuple(rb) for ra, rb in zip(a, b)]
    rows, pivots = _rref_rows(F, aug, n + k)
    x = [[F.zero] * k for _ in range(n)]
    for r, pc in zip(rows, pivots):
        if pc >= n:
            return None
        x[pc] = r[n:]
    return [tuple(r) for r in x]


# --------------------------------------------------------------------------
# Subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n held in reduced row-echelon form."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, F: FieldSpec, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        vectors = list(vectors)
        if not vectors:
            return cls(F, n, ())
        return cls(F, n, tuple(rref(F, vectors, n)))

    @classmethod
    def zero(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, ())

    @classmethod
    def full(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, tuple(identity_matrix(F, n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> tuple:
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of v modulo the subspace; zero exactly on members.

        The remainder vanishes at every pivot column, so the non-pivot
        entries give coordinates on the quotient space.
        """
        p = self.field.characteristic
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            f = v[pc]
            if f:
                if p:
                    for k in range(pc, self.ambient_dim):
                        if row[k]:
                            v[k] = (v[k] - f * row[k]) % p
                else:
                    for k in range(pc, self.ambient_dim):
                        if row[k]:
                            v[k] = v[k] - f * row[k]
        return tuple(v)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise ShapeError(f"vector of length {len(v)} in ambient dim {self.ambient_dim}")
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of a member vector on the stored basis."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return tuple(v[pc] for pc in self.pivots)

    def combine(self, coords: Sequence) -> tuple:
        F = self.field
        p = F.characteristic
        out = [0] * self.ambient_dim
        for c, row in zip(coords, self.basis):
            if c:
                for k, x in enumerate(row):
                    if x:
                        out[k] += c * x
        return tuple(x % p for x in out) if p else tuple(Fraction(x) for x in out)

    def issubset(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains(r) for r in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubset(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def complement_columns(self) -> tuple:
        piv = set(self.pivots)
        return tuple(c for c in range(self.ambient_dim) if c not in piv)

    def sort_key(self):
        p = self.field.characteristic
        return tuple(tuple(int(x) if p else (x.numerator, x.denominator) for x in r) for r in self.basis)


def _check_ambient(u: Subspace, w: Subspace) -> None:
    if u.ambient_dim != w.ambient_dim or u.field != w.field:
        raise ShapeError(
            f"subspaces of {u.field}^{u.ambient_dim} and {w.field}^{w.ambient_dim}"
        )


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    _check_ambient(u, w)
    if not w.basis:
        return u
    if not u.basis:
        return w
    return Subspace.span(u.field, u.ambient_dim, u.basis + w.basis)


def subspace_intersect(u: Subspace, w: Subspace) -> Subspace:
    _check_ambient(u, w)
    if not u.basis or not w.basis:
        return Subspace.zero(u.field, u.ambient_dim)
    coeffs = preimage([(b,) for b in u.basis], w)
    return Subspace.span(u.field, u.ambient_dim, (u.combine(c) for c in coeffs.basis))


def subspace_contains(u: Subspace, v: Sequence) -> bool:
    return u.contains(v)


def preimage(images: Sequence[Sequence[Sequence]], target: Subspace) -> Subspace:
    """Solve a family of membership constraints in one linear system.

    ``images[i]`` is a tuple of vectors (all in the ambient space of
    ``target``) attached to the i-th unknown.  Returns the subspace of
    coefficient vectors c with ``sum_i c_i * images[i][k]`` in ``target`` for
    every k.
    """
    F = target.field
    n = len(images)
    if n == 0:
        return Subspace.zero(F, 0)
    columns = []
    for blocks in images:
        col = []
        for v in blocks:
            col.extend(target.reduce(v))
        columns.append(col)
    height = len(columns[0])
    if any(len(c) != height for c in columns):
        raise ShapeError("unknowns carry different numbers of image vectors")
    if height == 0:
        return Subspace.full(F, n)
    rows = [tuple(col[r] for col in columns) for r in range(height)]
    rows = [r for r in rows if any(r)]
    if not rows:
        return Subspace.full(F, n)
    return kernel(F, rows, n)
