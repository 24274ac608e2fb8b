"""Finite topological spaces, correspondences and functors on closed-set lattices.

Subsets of an n-point space are int bitmasks (bit i = point i).  A space is
given by its family of closed sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Iterable, List, Tuple

__all__ = [
    "Check",
    "FiniteSpace",
    "Correspondence",
    "FunctorOnClosed",
    "corr_image",
    "corr_preimage",
    "corr_strong_preimage",
    "is_continuous",
    "phi_upper",
    "phi_lower",
    "is_left_adjoint",
    "members",
    "mask_of",
    "all_topologies",
    "topologies_up_to_homeomorphism",
]


def members(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for i in points:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Check:
    """Outcome of a decision procedure; falsy on failure, with a witness."""

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


class FiniteSpace:
    """A topology on ``{0, ..., n-1}`` given by its closed sets."""

    def __init__(self, n: int, closed: Iterable[int], validate: bool = True):
        self.n = n
        self.full = (1 << n) - 1
        self.closed = frozenset(closed)
        self._closure = {}
        if validate:
            self.validate()

    def validate(self) -> None:
        if 0 not in self.closed or self.full not in self.closed:
            raise ValueError("closed sets must include the empty set and the whole space")
        for u in self.closed:
            if u & ~self.full:
                raise ValueError(f"closed set {u:b} has points outside the space")
        for u, v in combinations(self.closed, 2):
            if (u | v) not in self.closed or (u & v) not in self.closed:
                raise ValueError("closed sets are not a lattice under union and intersection")

    @classmethod
    def discrete(cls, n: int) -> "FiniteSpace":
        return cls(n, range(1 << n), validate=False)

    def sorted_closed(self) -> List[int]:
        return sorted(self.closed, key=lambda m: (bin(m).count("1"), m))

    def is_closed(self, mask: int) -> bool:
        return mask in self.closed

    def closure(self, mask: int) -> int:
        c = self._closure.get(mask)
        if c is None:
            c = self.full
            for u in self.closed:
                if mask & ~u == 0:
                    c &= u
            self._closure[mask] = c
        return c

    def subspace(self, points: int) -> Tuple["FiniteSpace", List[int]]:
        """Relative topology on ``points``; also returns the original indices."""
        idx = members(points)

        def compress(m):
            return mask_of(k for k, i in enumerate(idx) if m >> i & 1)

        return FiniteSpace(len(idx), {compress(u & points) for u in self.closed}), idx

    def __eq__(self, other):
        return isinstance(other, FiniteSpace) and self.n == other.n and self.closed == other.closed

    def __hash__(self):
        return hash((self.n, self.closed))

    def __repr__(self):
        return f"FiniteSpace(n={self.n}, closed={len(self.closed)})"


@dataclass(frozen=True)
class Correspondence:
    """A map from points of ``source`` to subsets (bitmasks) of ``target``."""

    source: FiniteSpace
    target: FiniteSpace
    table: Tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.source.n:
            raise ValueError("one image set per source point is required")

    def image(self, mask: int) -> int:
        return corr_image(self, mask)

    def preimage(self, mask: int) -> int:
        return corr_preimage(self, mask)

    def strong_preimage(self, mask: int) -> int:
        return corr_strong_preimage(self, mask)

    @property
    def single_valued(self) -> bool:
        return all(bin(t).count("1") == 1 for t in self.table)

    def restrict(self, source_points: int, target_points: int) -> "Correspondence":
        """Restriction between relative subspaces; images are cut down to ``target_points``."""
        xs, xi = self.source.subspace(source_points)
        ys, yi = self.target.subspace(target_points)
        pos = {i: k for k, i in enumerate(yi)}
        table = tuple(
            mask_of(pos[j] for j in members(self.table[i] & target_points)) for i in xi
        )
        return Correspondence(xs, ys, table)


def corr_image(c: Correspondence, u: int) -> int:
    out = 0
    for i in members(u):
        out |= c.table[i]
    return out


def corr_preimage(c: Correspondence, v: int) -> int:
    return mask_of(i for i, t in enumerate(c.table) if t & v)


def corr_strong_preimage(c: Correspondence, v: int) -> int:
    return mask_of(i for i, t in enumerate(c.table) if t & ~v == 0)


def is_continuous(c: Correspondence) -> Check:
    """Strong preimages of closed sets are closed; witness = offending closed set."""
    for v in c.target.sorted_closed():
        if not c.source.is_closed(corr_strong_preimage(c, v)):
            return Check(False, v)
    return Check(True)


@dataclass(frozen=True)
class FunctorOnClosed:
    """An inclusion-preserving map between closed-set lattices."""

    source: FiniteSpace
    target: FiniteSpace
    table: Dict[int, int] = field(hash=False)

    def __call__(self, u: int) -> int:
        return self.table[u]

    def is_monotone(self) -> Check:
        for u in self.source.closed:
            for w in self.source.closed:
                if u & ~w == 0 and self.table[u] & ~self.table[w] != 0:
                    return Check(False, (u, w))
        return Check(True)

    def same_as(self, other: "FunctorOnClosed") -> bool:
        return self.table == other.table


def phi_upper(c: Correspondence) -> FunctorOnClosed:
    """U -> closure of c(U)."""
    return FunctorOnClosed(
        c.source, c.target, {u: c.target.closure(corr_image(c, u)) for u in c.source.closed}
    )


def phi_lower(c: Correspondence) -> FunctorOnClosed:
    """V -> closure of the strong preimage of V."""
    return FunctorOnClosed(
        c.target,
        c.source,
        {v: c.source.closure(corr_strong_preimage(c, v)) for v in c.target.closed},
    )


def is_left_adjoint(phi: FunctorOnClosed, psi: FunctorOnClosed) -> Check:
    """phi U <= V iff U <= psi V for all closed U, V; witness = (U, V)."""
    if phi.source != psi.target or phi.target != psi.source:
        raise ValueError("functors do not run between the same pair of spaces")
    for u in phi.source.sorted_closed():
        pu = phi.table[u]
        for v in phi.target.sorted_closed():
            if (pu & ~v == 0) != (u & ~psi.table[v] == 0):
                return Check(False, (u, v))
    return Check(True)


def all_topologies(n: int) -> List[FiniteSpace]:
    """Every topology on n labelled points (brute force; n <= 4)."""
    if n > 4:
        raise ValueError("topology enumeration is capped at 4 points")
    full = (1 << n) - 1
    inner = [m for m in range(1, full)]
    out = []
    for bits in range(1 << len(inner)):
        fam = {0, full} | {inner[k] for k in range(len(inner)) if bits >> k & 1}
        if all((u | v) in fam and (u & v) in fam for u in fam for v in fam):
            out.append(FiniteSpace(n, fam, validate=False))
    return out


def topologies_up_to_homeomorphism(n: int) -> List[FiniteSpace]:
    from itertools import permutations

    seen = set()
    reps = []
    perms = list(permutations(range(n)))
    for t in all_topologies(n):
        if t.closed in seen:
            continue
        reps.append(t)
        for p in perms:
            seen.add(frozenset(mask_of(p[i] for i in members(u)) for u in t.closed))
    return reps
