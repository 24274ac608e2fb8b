"""Finite-dimensional unital associative algebras given by structure constants.

An :class:`Algebra` stores ``mul[i][j]``, the coordinate vector of
``e_i * e_j``, and the coordinates of its unit.  Elements are handled
internally as coordinate tuples; :class:`AlgebraElement` wraps them with
operators for interactive use.

Matrices of linear maps act on column vectors: entry ``[k][j]`` of
``left_mul_operator(x)`` is the ``e_k`` coefficient of ``x * e_j``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, List, Sequence, Tuple

from .exactlin import (
    FieldSpec,
    Subspace,
    identity_matrix,
    mat_mul,
    mat_vec,
    preimage,
    transpose,
)

__all__ = [
    "Algebra",
    "AlgebraElement",
    "AlgebraHom",
    "Bimodule",
    "ValidationError",
    "matrix_algebra",
    "upper_triangular_algebra",
    "group_algebra",
    "direct_product",
    "subalgebra_from_generators",
    "quotient_algebra",
    "regular_bimodule",
    "identity_hom",
    "center",
    "centralizer",
]


class ValidationError(ValueError):
    """Structure constants, homomorphism or bimodule data fail an axiom."""


def _combo_label(labels: Sequence[str], v: Sequence, F: FieldSpec) -> str:
    terms = []
    for lab, c in zip(labels, v):
        if not c:
            continue
        if c == 1:
            terms.append(lab)
        elif F.is_finite and c == F.p - 1 or (not F.is_finite and c == -1):
            terms.append("-" + lab)
        else:
            terms.append(f"{c}*{lab}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


class Algebra:
    """A finite-dimensional unital associative algebra over Q or F_p."""

    def __init__(self, field: FieldSpec, mul, unit, labels=None, validate: bool = True):
        self.field = field
        n = len(mul)
        self.dim = n
        self.mul = tuple(tuple(field.vec(mul[i][j]) for j in range(n)) for i in range(n))
        self.unit = field.vec(unit)
        if labels is None:
            labels = [f"b{i}" for i in range(n)]
        self.labels = tuple(str(x) for x in labels)
        if len(self.labels) != n or len(self.unit) != n:
            raise ValidationError("labels, unit and mul table disagree on the dimension")
        for i in range(n):
            if len(mul[i]) != n:
                raise ValidationError(f"mul row {i} has {len(mul[i])} entries, expected {n}")
            for j in range(n):
                if len(self.mul[i][j]) != n:
                    raise ValidationError(f"mul[{i}][{j}] has the wrong length")
        self._terms = tuple(
            tuple(tuple((k, c) for k, c in enumerate(self.mul[i][j]) if c) for j in range(n))
            for i in range(n)
        )
        self._memo = {}
        if validate:
            self.validate()

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field}, basis={list(self.labels)})"

    # ---- elements

    def zero(self) -> tuple:
        return tuple([self.field.zero] * self.dim)

    def basis_vector(self, i: int) -> tuple:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def basis(self) -> List[tuple]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def element(self, coords) -> "AlgebraElement":
        return AlgebraElement(self, self.field.vec(coords))

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit)

    def e(self, label) -> "AlgebraElement":
        i = self.labels.index(label) if isinstance(label, str) else label
        return AlgebraElement(self, self.basis_vector(i))

    def mult(self, x: Sequence, y: Sequence) -> tuple:
        """Product of two coordinate vectors."""
        p = self.field.characteristic
        out = [0] * self.dim
        terms = self._terms
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in xs:
            row = terms[i]
            for j, b in ys:
                t = row[j]
                if t:
                    ab = a * b
                    for k, c in t:
                        out[k] += ab * c
        if p:
            return tuple(v % p for v in out)
        return tuple(v if type(v) is Fraction else Fraction(v) for v in out)

    def add(self, x, y) -> tuple:
        p = self.field.characteristic
        if p:
            return tuple((a + b) % p for a, b in zip(x, y))
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y) -> tuple:
        p = self.field.characteristic
        if p:
            return tuple((a - b) % p for a, b in zip(x, y))
        return tuple(a - b for a, b in zip(x, y))

    def scale(self, c, x) -> tuple:
        p = self.field.characteristic
        if p:
            return tuple((c * a) % p for a in x)
        return tuple(c * a for a in x)

    def power(self, x, k: int) -> tuple:
        result = self.unit
        base = tuple(x)
        while k:
            if k & 1:
                result = self.mult(result, base)
            base = self.mult(base, base)
            k >>= 1
        return result

    def commutator(self, x, y) -> tuple:
        return self.sub(self.mult(x, y), self.mult(y, x))

    # ---- regular representation

    def left_mul_operator(self, x) -> list:
        cols = [self.mult(x, e) for e in self.basis()]
        return transpose(cols)

    def right_mul_operator(self, x) -> list:
        cols = [self.mult(e, x) for e in self.basis()]
        return transpose(cols)

    def left_regular(self) -> list:
        if "lreg" not in self._memo:
            self._memo["lreg"] = [self.left_mul_operator(e) for e in self.basis()]
        return self._memo["lreg"]

    def right_regular(self) -> list:
        if "rreg" not in self._memo:
            self._memo["rreg"] = [self.right_mul_operator(e) for e in self.basis()]
        return self._memo["rreg"]

    # ---- subspace helpers

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def product_space(self, u: Subspace, w: Subspace) -> Subspace:
        """span{x y : x in u, y in w}."""
        return self.span(self.mult(x, y) for x in u.basis for y in w.basis)

    def format(self, x) -> str:
        return _combo_label(self.labels, x, self.field)

    # ---- validation

    def validate(self) -> None:
        """Check unit law and associativity on all basis pairs/triples."""
        n = self.dim
        B = self.basis()
        for i in range(n):
            if self.mult(self.unit, B[i]) != B[i] or self.mult(B[i], self.unit) != B[i]:
                raise ValidationError(
                    f"unit law fails at basis element {self.labels[i]!r}"
                )
        for i in range(n):
            for j in range(n):
                ij = self.mul[i][j]
                for k in range(n):
                    lhs = self.mult(ij, B[k])
                    rhs = self.mult(B[i], self.mul[j][k])
                    if lhs != rhs:
                        raise ValidationError(
                            "associativity fails at triple "
                            f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                        )

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.mul[i][j] == self.mul[j][i] for i in range(n) for j in range(i))

    def same_structure(self, other: "Algebra") -> bool:
        return (
            self.field == other.field
            and self.mul == other.mul
            and self.unit == other.unit
            and self.labels == other.labels
        )


class AlgebraElement:
    """An element of an algebra with arithmetic operators."""

    __slots__ = ("parent", "coords")

    def __init__(self, parent: Algebra, coords):
        if len(coords) != parent.dim:
            raise ValueError(f"{len(coords)} coordinates for a {parent.dim}-dim algebra")
        self.parent = parent
        self.coords = tuple(coords)

    def _other(self, y):
        if isinstance(y, AlgebraElement):
            if y.parent is not self.parent:
                raise ValueError("elements of different algebras")
            return y.coords
        return self.parent.scale(self.parent.field(y), self.parent.unit)

    def __add__(self, y):
        return AlgebraElement(self.parent, self.parent.add(self.coords, self._other(y)))

    __radd__ = __add__

    def __sub__(self, y):
        return AlgebraElement(self.parent, self.parent.sub(self.coords, self._other(y)))

    def __rsub__(self, y):
        return AlgebraElement(self.parent, self.parent.sub(self._other(y), self.coords))

    def __neg__(self):
        return AlgebraElement(self.parent, self.parent.scale(self.parent.field(-1), self.coords))

    def __mul__(self, y):
        if isinstance(y, AlgebraElement):
            return multiply(self, y)
        return AlgebraElement(self.parent, self.parent.scale(self.parent.field(y), self.coords))

    def __rmul__(self, c):
        return AlgebraElement(self.parent, self.parent.scale(self.parent.field(c), self.coords))

    def __pow__(self, k: int):
        return AlgebraElement(self.parent, self.parent.power(self.coords, k))

    def __eq__(self, y):
        return isinstance(y, AlgebraElement) and y.parent is self.parent and y.coords == self.coords

    def __hash__(self):
        return hash((id(self.parent), self.coords))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return self.parent.format(self.coords)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.parent is not y.parent:
        raise ValueError("cannot multiply elements of different algebras")
    return AlgebraElement(x.parent, x.parent.mult(x.coords, y.coords))


def left_mul_operator(x: AlgebraElement) -> list:
    return x.parent.left_mul_operator(x.coords)


class AlgebraHom:
    """A unital homomorphism given by the images of the source basis."""

    def __init__(self, source: Algebra, target: Algebra, images, validate: bool = True):
        if source.field != target.field:
            raise ValidationError("homomorphism between algebras over different fields")
        if len(images) != source.dim:
            raise ValidationError(f"{len(images)} basis images for a {source.dim}-dim source")
        self.source = source
        self.target = target
        self.images = tuple(target.field.vec(v) for v in images)
        for v in self.images:
            if len(v) != target.dim:
                raise ValidationError("basis image has the wrong length")
        self._memo = {}
        if validate:
            self.validate()

    @classmethod
    def from_matrix(cls, source, target, matrix, validate=True) -> "AlgebraHom":
        """Build from the (target dim x source dim) matrix F."""
        return cls(source, target, transpose(matrix) if source.dim else [], validate)

    @property
    def matrix(self) -> list:
        if not self.images:
            return [() for _ in range(self.target.dim)]
        return transpose(self.images)

    def __call__(self, x):
        if isinstance(x, AlgebraElement):
            return AlgebraElement(self.target, self.apply(x.coords))
        return self.apply(x)

    def apply(self, x: Sequence) -> tuple:
        p = self.target.field.characteristic
        out = [0] * self.target.dim
        for c, img in zip(x, self.images):
            if c:
                for k, v in enumerate(img):
                    if v:
                        out[k] += c * v
        if p:
            return tuple(v % p for v in out)
        return tuple(Fraction(v) for v in out)

    def image_of(self, u: Subspace) -> Subspace:
        return self.target.span(self.apply(v) for v in u.basis)

    def validate(self) -> None:
        R, S = self.source, self.target
        if self.apply(R.unit) != S.unit:
            raise ValidationError("homomorphism does not preserve the unit")
        for i in range(R.dim):
            for j in range(R.dim):
                lhs = self.apply(R.mul[i][j])
                rhs = S.mult(self.images[i], self.images[j])
                if lhs != rhs:
                    raise ValidationError(
                        "multiplicativity fails at basis pair "
                        f"({R.labels[i]}, {R.labels[j]})"
                    )

    def kernel(self) -> Subspace:
        return preimage([(img,) for img in self.images], self.target.zero_space())

    def is_injective(self) -> bool:
        return self.kernel().is_zero

    def is_surjective(self) -> bool:
        return self.image_of(self.source.full_space()).is_full

    def compose(self, other: "AlgebraHom") -> "AlgebraHom":
        """self o other."""
        return AlgebraHom(other.source, self.target, [self.apply(v) for v in other.images])


def identity_hom(a: Algebra) -> AlgebraHom:
    return AlgebraHom(a, a, a.basis(), validate=False)


class Bimodule:
    """An A-B-bimodule with exact action matrices on a finite carrier.

    ``left_action[i]`` is the matrix of ``v -> a_i . v`` and
    ``right_action[j]`` the matrix of ``v -> v . b_j``.
    """

    def __init__(self, left: Algebra, right: Algebra, dim: int, left_action, right_action,
                 validate: bool = True):
        self.left = left
        self.right = right
        self.dim = dim
        self.field = left.field
        self.left_action = [tuple(tuple(r) for r in m) for m in left_action]
        self.right_action = [tuple(tuple(r) for r in m) for m in right_action]
        if validate:
            self.validate()

    def _op(self, mats, coords):
        F = self.field
        p = F.characteristic
        out = [[0] * self.dim for _ in range(self.dim)]
        for c, m in zip(coords, mats):
            if c:
                for r in range(self.dim):
                    row = m[r]
                    orow = out[r]
                    for k in range(self.dim):
                        if row[k]:
                            orow[k] += c * row[k]
        if p:
            return [tuple(x % p for x in r) for r in out]
        return [tuple(Fraction(x) for x in r) for r in out]

    def left_operator(self, a) -> list:
        return self._op(self.left_action, a)

    def right_operator(self, b) -> list:
        return self._op(self.right_action, b)

    def act_left(self, a, v) -> tuple:
        return mat_vec(self.field, self.left_operator(a), v)

    def act_right(self, v, b) -> tuple:
        return mat_vec(self.field, self.right_operator(b), v)

    def carrier(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def right_submodule(self, j: Subspace) -> Subspace:
        """M.J for a subspace J of the right algebra."""
        vecs = []
        mats = [self.right_operator(b) for b in j.basis]
        for m in mats:
            vecs.extend(transpose(m))
        return Subspace.span(self.field, self.dim, vecs)

    def left_submodule(self, i: Subspace) -> Subspace:
        vecs = []
        for a in i.basis:
            vecs.extend(transpose(self.left_operator(a)))
        return Subspace.span(self.field, self.dim, vecs)

    def validate(self) -> None:
        A, B, F, m = self.left, self.right, self.field, self.dim
        ident = identity_matrix(F, m)
        if len(self.left_action) != A.dim or len(self.right_action) != B.dim:
            raise ValidationError("one action matrix per basis element is required")
        if [tuple(r) for r in self.left_operator(A.unit)] != ident:
            raise ValidationError("left action is not unital")
        if [tuple(r) for r in self.right_operator(B.unit)] != ident:
            raise ValidationError("right action is not unital")
        L, R = self.left_action, self.right_action
        for i in range(A.dim):
            for j in range(A.dim):
                if mat_mul(F, L[i], L[j]) != self.left_operator(A.mul[i][j]):
                    raise ValidationError(
                        f"left action fails at pair ({A.labels[i]}, {A.labels[j]})"
                    )
        for i in range(B.dim):
            for j in range(B.dim):
                if mat_mul(F, R[j], R[i]) != self.right_operator(B.mul[i][j]):
                    raise ValidationError(
                        f"right action fails at pair ({B.labels[i]}, {B.labels[j]})"
                    )
        for i in range(A.dim):
            for j in range(B.dim):
                if mat_mul(F, L[i], R[j]) != mat_mul(F, R[j], L[i]):
                    raise ValidationError(
                        f"actions do not commute at ({A.labels[i]}, {B.labels[j]})"
                    )


def regular_bimodule(f: AlgebraHom, orientation: str = "R-S") -> Bimodule:
    """The target S of f as a bimodule, with f transporting one side.

    ``"R-S"``: R acts on the left through f, S on the right (restriction of
    scalars).  ``"S-R"``: S on the left, R on the right through f (extension of
    scalars).
    """
    R, S = f.source, f.target
    lreg = S.left_regular()
    rreg = S.right_regular()
    if orientation == "R-S":
        left = [S.left_mul_operator(img) for img in f.images]
        return Bimodule(R, S, S.dim, left, rreg, validate=False)
    if orientation == "S-R":
        right = [S.right_mul_operator(img) for img in f.images]
        return Bimodule(S, R, S.dim, lreg, right, validate=False)
    raise ValueError(f"orientation must be 'R-S' or 'S-R', got {orientation!r}")


# --------------------------------------------------------------------------
# Constructors


def matrix_algebra(field: FieldSpec, n: int) -> Algebra:
    """M_n(k) on matrix units e_ij, ordered row-major."""
    idx = [(i, j) for i in range(n) for j in range(n)]
    pos = {ij: k for k, ij in enumerate(idx)}
    d = n * n
    zero = [0] * d
    mul = []
    for (i, j) in idx:
        row = []
        for (k, l) in idx:
            v = list(zero)
            if j == k:
                v[pos[(i, l)]] = 1
            row.append(v)
        mul.append(row)
    unit = [1 if i == j else 0 for (i, j) in idx]
    labels = [f"e{i + 1}{j + 1}" for (i, j) in idx]
    return Algebra(field, mul, unit, labels)


def upper_triangular_algebra(field: FieldSpec, n: int) -> Algebra:
    """T_n(k) on the matrix units e_ij with i <= j, ordered row-major."""
    idx = [(i, j) for i in range(n) for j in range(n) if i <= j]
    pos = {ij: k for k, ij in enumerate(idx)}
    d = len(idx)
    mul = []
    for (i, j) in idx:
        row = []
        for (k, l) in idx:
            v = [0] * d
            if j == k:
                v[pos[(i, l)]] = 1
            row.append(v)
        mul.append(row)
    unit = [1 if i == j else 0 for (i, j) in idx]
    labels = [f"e{i + 1}{j + 1}" for (i, j) in idx]
    return Algebra(field, mul, unit, labels)


def _check_group(table) -> int:
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise ValidationError("Cayley table must be a nonempty square array")
    for r in table:
        for x in r:
            if not 0 <= x < n:
                raise ValidationError(f"Cayley table entry {x} out of range")
    ident = None
    for e in range(n):
        if all(table[e][g] == g and table[g][e] == g for g in range(n)):
            ident = e
            break
    if ident is None:
        raise ValidationError("Cayley table has no identity element")
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ValidationError(f"Cayley table is not associative at ({a}, {b}, {c})")
    for g in range(n):
        if not any(table[g][h] == ident for h in range(n)):
            raise ValidationError(f"element {g} has no inverse")
    return ident


def group_algebra(field: FieldSpec, cayley_table, names=None) -> Algebra:
    ident = _check_group(cayley_table)
    n = len(cayley_table)
    mul = []
    for g in range(n):
        row = []
        for h in range(n):
            v = [0] * n
            v[cayley_table[g][h]] = 1
            row.append(v)
        mul.append(row)
    unit = [1 if g == ident else 0 for g in range(n)]
    labels = names or [f"g{g}" for g in range(n)]
    return Algebra(field, mul, unit, labels)


def cyclic_group_table(n: int) -> list:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def symmetric_group_table(n: int = 3):
    """Cayley table of S_n on permutations in lexicographic order."""
    from itertools import permutations

    perms = list(permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(a[b[k]] for k in range(n))] for b in perms] for a in perms]
    names = ["".join(str(x + 1) for x in p) for p in perms]
    return table, names


def direct_product(a: Algebra, b: Algebra) -> Algebra:
    if a.field != b.field:
        raise ValidationError("direct product of algebras over different fields")
    n, m = a.dim, b.dim
    d = n + m
    mul = []
    for i in range(d):
        row = []
        for j in range(d):
            v = [0] * d
            if i < n and j < n:
                v[:n] = a.mul[i][j]
            elif i >= n and j >= n:
                v[n:] = b.mul[i - n][j - n]
            row.append(v)
        mul.append(row)
    unit = list(a.unit) + list(b.unit)
    labels = [f"({x},0)" for x in a.labels] + [f"(0,{x})" for x in b.labels]
    return Algebra(a.field, mul, unit, labels)


def product_projection(a: Algebra, b: Algebra, prod: Algebra, which: int = 0) -> AlgebraHom:
    """Projection of ``prod = direct_product(a, b)`` onto a factor."""
    n, m = a.dim, b.dim
    imgs = []
    for i in range(n + m):
        if which == 0:
            imgs.append(a.basis_vector(i) if i < n else a.zero())
        else:
            imgs.append(b.basis_vector(i - n) if i >= n else b.zero())
    return AlgebraHom(prod, a if which == 0 else b, imgs)


def subspace_algebra(a: Algebra, sub: Subspace) -> Tuple[Algebra, AlgebraHom]:
    """The subalgebra carried by a multiplicatively closed subspace containing 1."""
    basis = sub.basis
    mul = [[sub.coordinates(a.mult(x, y)) for y in basis] for x in basis]
    unit = sub.coordinates(a.unit)
    labels = [a.format(v) for v in basis]
    alg = Algebra(a.field, mul, unit, labels)
    return alg, AlgebraHom(alg, a, list(basis), validate=False)


def subalgebra_from_generators(a: Algebra, gens) -> Tuple[Algebra, AlgebraHom]:
    """Smallest unital subalgebra containing ``gens`` with its inclusion."""
    gens = [g.coords if isinstance(g, AlgebraElement) else a.field.vec(g) for g in gens]
    cur = a.span([a.unit] + gens)
    for _ in range(a.dim + 1):
        nxt = cur + a.product_space(cur, cur)
        if nxt == cur:
            break
        cur = nxt
    return subspace_algebra(a, cur)


def quotient_algebra(a: Algebra, ideal) -> Tuple[Algebra, AlgebraHom]:
    """A / I on the non-pivot coordinates of I's canonical basis."""
    carrier = ideal.carrier if hasattr(ideal, "carrier") else ideal
    if carrier.is_full:
        raise ValidationError("quotient by the whole algebra")
    reps = carrier.complement_columns()

    def proj(v):
        r = carrier.reduce(v)
        return tuple(r[c] for c in reps)

    B = a.basis()
    mul = [[proj(a.mult(B[i], B[j])) for j in reps] for i in reps]
    unit = proj(a.unit)
    labels = [a.labels[c] for c in reps]
    q = Algebra(a.field, mul, unit, labels, validate=False)
    pi = AlgebraHom(a, q, [proj(b) for b in B], validate=False)
    return q, pi


# --------------------------------------------------------------------------
# Centers and centralizers


def centralizer(a: Algebra, sub_vectors: Sequence[Sequence]) -> Subspace:
    """{s : s x = x s for every given x}."""
    B = a.basis()
    sub_vectors = list(sub_vectors)
    if not sub_vectors:
        return a.full_space()
    images = [tuple(a.commutator(b, x) for x in sub_vectors) for b in B]
    coeffs = preimage(images, a.zero_space())
    return coeffs


def center(a: Algebra) -> Subspace:
    if "center" not in a._memo:
        a._memo["center"] = centralizer(a, a.basis())
    return a._memo["center"]
