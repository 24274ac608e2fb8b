"""Seeded instance generators, shipped fixtures and brute-force oracles.

Every instance is a unital homomorphism f: R -> S produced from an
``InstanceSpec`` by a SplitMix64 stream, so the same spec always yields the
same algebras.  ``oracle_cross_check`` runs every identity the library is
supposed to satisfy on one instance and collects failures instead of raising.
"""

from __future__ import annotations

import json
import time

import numpy as np
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

from .algebra import (
    Algebra,
    AlgebraHom,
    ValidationError,
    cyclic_group_table,
    direct_product,
    group_algebra,
    identity_hom,
    matrix_algebra,
    product_projection,
    quotient_algebra,
    regular_bimodule,
    subalgebra_from_generators,
    subspace_algebra,
    symmetric_group_table,
    upper_triangular_algebra,
)
from .correspondence import (
    alpha_annihilator,
    analyze_hom,
    extension_annihilator,
    ideal_family,
    lambda_functor,
    lying_over_check,
    r_alpha,
    r_of,
    radical_ideals,
    rho_functor,
    semiprime_contraction_case,
    stratified_continuity_check,
    theta_alpha,
    union_of_powers_check,
)
from .exactlin import QQ, FieldSpec, GF
from .ideals import (
    Ideal,
    ideal_product,
    ideal_power,
    jacobson_radical,
    nilpotency_index,
    preimage_under_hom,
    prime_radical_of_ideal,
    two_sided_ideal_generated,
)
from .rng import SplitMix64
from .spectrum import (
    ORACLE_CAP,
    all_closed_sets,
    definitional_prime_oracle,
    goldie_rank,
    i_of,
    is_prime,
    spec,
    v_of,
)
from .topology import members, phi_upper

__all__ = [
    "InstanceSpec",
    "Instance",
    "Fixture",
    "FIXTURES",
    "KINDS",
    "ALLOWED_PRIMES",
    "generate_instance",
    "principal_ideals",
    "exhaustive_ideal_enumeration",
    "oracle_cross_check",
    "fuzz",
    "fuzz_specs",
]

KINDS = ("subalgebra_of_matrix", "triangular", "group_algebra", "product", "quotient")
ALLOWED_PRIMES = (2, 3, 5, 7, 11, 13)
MAX_DIM = 9
MAX_SOURCE_DIM = 6
QUICK_ORACLE_CAP = 1 << 10


@dataclass(frozen=True)
class InstanceSpec:
    seed: int
    field: FieldSpec = QQ
    kind: Optional[str] = None
    max_dim: int = MAX_DIM
    max_source_dim: int = MAX_SOURCE_DIM

    def __post_init__(self):
        if self.field.is_finite and self.field.p not in ALLOWED_PRIMES:
            raise ValueError(f"p must be one of {ALLOWED_PRIMES}, got {self.field.p}")
        if self.kind is not None and self.kind not in KINDS:
            raise ValueError(f"unknown instance kind {self.kind!r}")
        if not 1 <= self.max_dim <= MAX_DIM:
            raise ValueError(f"max_dim must lie in 1..{MAX_DIM}")
        if not 1 <= self.max_source_dim <= self.max_dim:
            raise ValueError("max_source_dim must lie in 1..max_dim")


@dataclass
class Instance:
    spec: InstanceSpec
    kind: str
    description: str
    hom: AlgebraHom
    matrix_size: Optional[int] = None  # set when S = M_n and f is injective

    @property
    def source(self) -> Algebra:
        return self.hom.source

    @property
    def target(self) -> Algebra:
        return self.hom.target


# --------------------------------------------------------------------------
# Building blocks


def _relabel(a: Algebra, labels) -> Algebra:
    return Algebra(a.field, a.mul, a.unit, labels, validate=False)


def _rehome(f: AlgebraHom, source: Algebra) -> AlgebraHom:
    return AlgebraHom(source, f.target, f.images, validate=False)


def _random_matrix(rng: SplitMix64, F: FieldSpec, n: int, pattern) -> tuple:
    v = [0] * (n * n)
    for k in pattern:
        v[k] = rng.randint(-2, 2)
    return F.vec(v)


def _small_sub_of_matrix(rng, F, n, max_dim, attempts=24):
    """A random unital subalgebra of M_n of dimension at most ``max_dim``."""
    S = matrix_algebra(F, n)
    cells = list(range(n * n))
    for _ in range(attempts):
        gens = []
        for _ in range(1 + rng.below(2)):
            size = 1 + rng.below(min(len(cells), 4))
            gens.append(_random_matrix(rng, F, n, rng.sample(cells, size)))
        R, f = subalgebra_from_generators(S, gens)
        if R.dim <= max_dim:
            return R, f
    # the diagonal always fits
    diag = [S.basis_vector(i * n + i) for i in range(n)]
    return subalgebra_from_generators(S, diag)


def _gen_subalgebra_of_matrix(rng, spec):
    F = spec.field
    n = 2 if spec.max_dim < 9 else rng.choice([2, 3])
    R, f = _small_sub_of_matrix(rng, F, n, spec.max_source_dim)
    return f, f"subalgebra of dim {R.dim} in M{n}", n


def _gen_triangular(rng, spec):
    F = spec.field
    variant = rng.below(3)
    if variant == 0:
        n = rng.choice([2, 3])
        S = upper_triangular_algebra(F, n)
        diag = [S.e(f"e{i}{i}").coords for i in range(1, n + 1)]
        _, f = subalgebra_from_generators(S, diag)
        return f, f"diagonal in T{n}", None
    if variant == 1:
        n = 2 if spec.max_dim < 9 or spec.max_source_dim < 6 else rng.choice([2, 3])
        S = matrix_algebra(F, n)
        gens = [S.e(f"e{i}{j}").coords for i in range(1, n + 1) for j in range(i, n + 1)]
        _, f = subalgebra_from_generators(S, gens)
        return f, f"T{n} in M{n}", n
    T3 = upper_triangular_algebra(F, 3)
    R, f = _sub_of(rng, T3, spec.max_source_dim)
    return f, f"subalgebra of dim {R.dim} in T3", None


def _sub_of(rng, S: Algebra, max_dim: int, attempts=24):
    F = S.field
    for _ in range(attempts):
        gens = []
        for _ in range(1 + rng.below(2)):
            coords = [0] * S.dim
            for k in rng.sample(range(S.dim), 1 + rng.below(min(S.dim, 3))):
                coords[k] = rng.randint(-2, 2)
            gens.append(F.vec(coords))
        R, f = subalgebra_from_generators(S, gens)
        if R.dim <= max_dim:
            return R, f
    return subalgebra_from_generators(S, [])


GROUPS = ("C2", "C3", "C4", "S3")


def _group(name):
    if name == "S3":
        return symmetric_group_table(3)
    n = int(name[1:])
    return cyclic_group_table(n), [f"g{k}" for k in range(n)]


def _group_ok(F: FieldSpec, name: str) -> bool:
    order = {"C2": 2, "C3": 3, "C4": 4, "S3": 6}[name]
    return not F.is_finite or order % F.p != 0


def _cyclic_subgroup(table, g) -> List[int]:
    ident = next(e for e in range(len(table)) if all(table[e][x] == x for x in range(len(table))))
    out, cur = [ident], g
    while cur != ident:
        out.append(cur)
        cur = table[cur][g]
    return sorted(out)


def _group_hom_algebra(G: Algebra, H: Algebra, phi: List[int]) -> AlgebraHom:
    return AlgebraHom(G, H, [H.basis_vector(phi[g]) for g in range(G.dim)])


def _gen_group_algebra(rng, spec):
    F = spec.field
    names = [g for g in GROUPS if _group_ok(F, g)]
    name = rng.choice(names)
    table, labels = _group(name)
    G = group_algebra(F, table, labels)
    order = len(table)
    variant = rng.below(3)
    if variant == 0:
        # subgroup inclusion kH -> kG
        g = rng.below(order)
        H = _cyclic_subgroup(table, g)
        R, f = subspace_algebra(G, G.span(G.basis_vector(h) for h in H))
        R = _relabel(R, [G.labels[h] for h in H])
        return _rehome(f, R), f"k<{G.labels[g]}> in k{name}", None
    if variant == 1 or order == 1:
        # augmentation kG -> k
        k = group_algebra(F, [[0]], ["1"])
        return _group_hom_algebra(G, k, [0] * order), f"augmentation of k{name}", None
    if name == "S3":
        sign = []
        for p in labels:
            perm = [int(c) - 1 for c in p]
            inv = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
            sign.append(inv % 2)
        C2 = group_algebra(F, cyclic_group_table(2), ["g0", "g1"])
        return _group_hom_algebra(G, C2, sign), "sign map kS3 -> kC2", None
    if name == "C4":
        C2 = group_algebra(F, cyclic_group_table(2), ["g0", "g1"])
        return _group_hom_algebra(G, C2, [g % 2 for g in range(order)]), "kC4 -> kC2", None
    return identity_hom(G), f"identity on k{name}", None


def _base_algebra(rng, F: FieldSpec, max_dim: int) -> Tuple[Algebra, str]:
    """A small algebra to feed product and quotient constructions."""
    choices = [("k", 1), ("k x k", 2), ("T2", 3), ("<1,e12>", 2), ("M2", 4), ("sub M2", 4)]
    choices = [c for c in choices if c[1] <= max_dim]
    name, _ = rng.choice(choices)
    if name == "k":
        return group_algebra(F, [[0]], ["1"]), name
    if name == "k x k":
        return _relabel(direct_product(group_algebra(F, [[0]], ["1"]),
                                       group_algebra(F, [[0]], ["1"])), ["a", "b"]), name
    if name == "T2":
        return upper_triangular_algebra(F, 2), name
    if name == "<1,e12>":
        M2 = matrix_algebra(F, 2)
        R, _ = subalgebra_from_generators(M2, [M2.e("e12").coords])
        return _relabel(R, ["1", "e12"]), name
    if name == "M2":
        return matrix_algebra(F, 2), name
    R, _ = _small_sub_of_matrix(rng, F, 2, 4)
    return _relabel(R, [f"r{k}" for k in range(R.dim)]), f"subalgebra of M2 of dim {R.dim}"


def _random_proper_ideal(rng, a: Algebra) -> Optional[Ideal]:
    s = spec(a)
    options = [jacobson_radical(a)] + [p.ideal for p in s]
    nonzero = [i for i in options if not i.is_zero and not i.is_whole]
    x = a.element([rng.randint(-1, 1) for _ in range(a.dim)]).coords
    gen = two_sided_ideal_generated(a, [x])
    if not gen.is_zero and not gen.is_whole:
        nonzero.append(gen)
    return rng.choice(nonzero) if nonzero else None


def _gen_product(rng, spec):
    F = spec.field
    A, an = _base_algebra(rng, F, spec.max_source_dim)
    variant = rng.below(2)
    if variant == 0 or 2 * A.dim > spec.max_dim:
        B, bn = _base_algebra(rng, F, min(spec.max_dim - A.dim, spec.max_source_dim))
        P = direct_product(A, B)
        if P.dim <= spec.max_source_dim:
            return product_projection(A, B, P, 0), f"projection ({an}) x ({bn}) -> {an}", None
        A, an = group_algebra(F, [[0]], ["1"]), "k"
    P = direct_product(A, A)
    imgs = [P.add(P.basis_vector(i), P.basis_vector(A.dim + i)) for i in range(A.dim)]
    return AlgebraHom(A, P, imgs), f"diagonal {an} -> ({an}) x ({an})", None


def _gen_quotient(rng, spec):
    F = spec.field
    A, an = _base_algebra(rng, F, spec.max_source_dim)
    I = _random_proper_ideal(rng, A)
    if I is None:
        return identity_hom(A), f"identity on {an}", None
    Q, pi = quotient_algebra(A, I)
    if rng.chance(1, 2) and A.dim + Q.dim <= spec.max_dim:
        # the graph a -> (a, pi(a)) of the quotient map
        P = direct_product(A, Q)
        imgs = [tuple(A.basis_vector(k)) + tuple(pi.images[k]) for k in range(A.dim)]
        return AlgebraHom(A, P, imgs), f"graph of {an} -> {an}/I", None
    return AlgebraHom(A, Q, pi.images), f"{an} -> {an}/I with dim I = {I.dim}", None


GENERATORS: Dict[str, Callable] = {
    "subalgebra_of_matrix": _gen_subalgebra_of_matrix,
    "triangular": _gen_triangular,
    "group_algebra": _gen_group_algebra,
    "product": _gen_product,
    "quotient": _gen_quotient,
}


def _pick_kind(rng, F: FieldSpec) -> str:
    """40% matrix subalgebras, 20% triangular, 20% group algebras, 20% product/quotient."""
    x = rng.below(10)
    if x < 4:
        return "subalgebra_of_matrix"
    if x < 6:
        return "triangular"
    if x < 8:
        if any(_group_ok(F, g) for g in GROUPS):
            return "group_algebra"
        return "triangular"
    return "product" if x == 8 else "quotient"


def generate_instance(s: InstanceSpec) -> Instance:
    """Deterministic (R, S, f) for the given spec; every structure is validated."""
    rng = SplitMix64(s.seed)
    kind = s.kind or _pick_kind(rng, s.field)
    if kind == "group_algebra" and not any(_group_ok(s.field, g) for g in GROUPS):
        raise ValueError(f"no group in {GROUPS} has order prime to {s.field.p}")
    f, desc, n = GENERATORS[kind](rng, s)
    f.source.validate()
    f.target.validate()
    f.validate()
    if f.source.dim > s.max_source_dim or f.target.dim > s.max_dim:
        raise AssertionError(f"generator {kind} exceeded the size bounds")
    if n is not None and not f.is_injective():
        n = None
    return Instance(s, kind, desc, f, n)


def fuzz_specs(count: int, fields=(GF(5), GF(7), QQ), base_seed: int = 0) -> List[InstanceSpec]:
    return [InstanceSpec(base_seed + k, fields[k % len(fields)]) for k in range(count)]


# --------------------------------------------------------------------------
# Fixtures


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    build: Callable[[FieldSpec], AlgebraHom]
    expected: Dict[str, object]

    def hom(self, F: FieldSpec = QQ) -> AlgebraHom:
        return self.build(F)

    def verify(self, F: FieldSpec = QQ) -> Dict[str, Tuple[object, object]]:
        """Expected-versus-actual for every listed flag; empty when all agree."""
        a = analyze_hom(self.hom(F))
        actual = dict(a.flags())
        actual["t_values"] = list(a.t_values)
        actual["consistent"] = a.consistent
        if a.prime_pair_criterion.witness is not None:
            actual["prime_pair_witness"] = tuple(a.prime_pair_criterion.witness)
        else:
            actual["prime_pair_witness"] = None
        return {k: (v, actual.get(k)) for k, v in self.expected.items() if actual.get(k) != v}


def _ex_nilpotent_in_m2(F):
    M2 = matrix_algebra(F, 2)
    R, f = subalgebra_from_generators(M2, [M2.e("e12").coords])
    return _rehome(f, _relabel(R, ["1", "e12"]))


def _ex_diag_in(S):
    n = int(S.labels[-1][-1])
    _, f = subalgebra_from_generators(S, [S.e(f"e{i}{i}").coords for i in range(1, n + 1)])
    return f


FIXTURES: Dict[str, Fixture] = {
    f.name: f
    for f in [
        Fixture(
            "ex-nilpotent-m2",
            "R = k1 + k e12 inside S = M2(k): r is continuous and single-valued, yet the "
            "strong preimage of V_R(I) is {0} while V_S(<f(I)>) is empty",
            _ex_nilpotent_in_m2,
            {
                "single_valued": True,
                "continuous": True,
                "condition_2prime": True,
                "adjoint": True,
                "prime_pair_criterion": True,
                "nearly_centralizing_primes": True,
                "nearly_centralizing_ideals": True,
                "t_values": [2],
                "consistent": True,
            },
        ),
        Fixture(
            "ex-diag-t2",
            "diagonal k x k inside T2(k): r is a continuous bijection but lambda has no "
            "right adjoint in rho",
            lambda F: _ex_diag_in(upper_triangular_algebra(F, 2)),
            {
                "single_valued": True,
                "continuous": True,
                "condition_2prime": False,
                "adjoint": False,
                "prime_pair_criterion": False,
                "nearly_centralizing_primes": False,
                "nearly_centralizing_ideals": False,
                "centralizing": False,
                "t_values": [1, None],
                "prime_pair_witness": (0, 1),
                "consistent": True,
            },
        ),
        Fixture(
            "ex-diag-m2",
            "diagonal k x k inside M2(k): r sends the zero ideal to both primes",
            lambda F: _ex_diag_in(matrix_algebra(F, 2)),
            {
                "single_valued": False,
                "continuous": True,
                "condition_2prime": False,
                "adjoint": False,
                "prime_pair_criterion": False,
                "nearly_centralizing_primes": False,
                "nearly_centralizing_ideals": False,
                "consistent": True,
            },
        ),
    ]
}


# --------------------------------------------------------------------------
# Exhaustive oracles over small prime fields


def _enumerable(a: Algebra) -> bool:
    F = a.field
    return F.is_finite and F.p**a.dim <= ORACLE_CAP


def _projective_points(p: int, d: int):
    """One representative per line of F_p^d: first nonzero coordinate equal to 1."""
    for lead in range(d):
        for tail in product(range(p), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


# identical structure constants give identical ideal lattices
_PRINCIPAL_CACHE: Dict[tuple, List[Ideal]] = {}


def principal_ideals(a: Algebra) -> List[Ideal]:
    """The distinct ideals A x A over every nonzero x (F_p, p^dim <= 2^16)."""
    if not _enumerable(a):
        raise ValueError("principal ideal enumeration needs F_p with p^dim <= 2^16")
    if "principal" in a._memo:
        return a._memo["principal"]
    key = (a.field.p, a.mul)
    if key in _PRINCIPAL_CACHE:
        out = [Ideal(a, i.carrier) for i in _PRINCIPAL_CACHE[key]]
        a._memo["principal"] = out
        return out
    B = a.basis()
    # A x A is spanned by e_i x e_j = sum_k x_k e_i e_k e_j
    sandwich = [[a.mult(a.mult(ei, ek), ej) for ei in B for ej in B] for ek in B]
    p = a.field.p
    seen = {}
    for x in _projective_points(p, a.dim):
        vecs = [[0] * a.dim for _ in range(a.dim * a.dim)]
        for k, c in enumerate(x):
            if c:
                for idx, v in enumerate(sandwich[k]):
                    row = vecs[idx]
                    for m, t in enumerate(v):
                        if t:
                            row[m] += c * t
        sub = a.span([[t % p for t in row] for row in vecs])
        seen.setdefault(sub, Ideal(a, sub))
    out = sorted(seen.values(), key=lambda i: (i.dim, i.sort_key()))
    a._memo["principal"] = out
    _PRINCIPAL_CACHE[key] = out
    return out


def exhaustive_ideal_enumeration(a: Algebra) -> List[Ideal]:
    """Every two-sided ideal: sums of principal ideals, closed under joins."""
    if "all_ideals" in a._memo:
        return a._memo["all_ideals"]
    found = {a.zero_space(): Ideal.zero(a)}
    gens = principal_ideals(a)
    for g in gens:
        found.setdefault(g.carrier, g)
    frontier = list(found.values())
    while frontier:
        new = []
        for i in frontier:
            for g in gens:
                s = i.carrier + g.carrier
                if s not in found:
                    found[s] = Ideal(a, s)
                    new.append(found[s])
        frontier = new
    out = sorted(found.values(), key=lambda i: (i.dim, i.sort_key()))
    a._memo["all_ideals"] = out
    return out


def grouped_prime_oracle(a: Algebra, i: Ideal) -> bool:
    """The definitional prime test with x grouped by the ideal A x A it generates.

    {y : x A y in I} = {y : (A x A) y in I}, so checking one representative
    ideal A x A + I per principal ideal A x A not inside I covers every x.
    """
    if i.is_whole:
        return False
    from .exactlin import preimage

    B = a.basis()
    for g in principal_ideals(a):
        if g.carrier.issubset(i.carrier):
            continue
        j = g.carrier + i.carrier
        images = [tuple(a.mult(u, b) for u in j.basis) for b in B]
        if preimage(images, i.carrier) != i.carrier:
            return False
    return True


# --------------------------------------------------------------------------
# Cross-checks


@dataclass
class CheckReport:
    seed: Optional[int]
    description: str
    failures: List[str] = field(default_factory=list)
    passed: List[str] = field(default_factory=list)

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        if ok:
            self.passed.append(name)
        else:
            self.failures.append(f"{name}: {detail}" if detail else name)

    @property
    def ok(self) -> bool:
        return not self.failures


def _radical_alpha_pairs(m, ideals):
    for j1 in ideals:
        for j2 in ideals:
            yield j1, j2


def _bimodule_identities(report: CheckReport, m, label: str) -> None:
    A, B = m.left, m.right
    sB = spec(B)
    ideals = radical_ideals(sB)
    alpha = {j.carrier: alpha_annihilator(m, j) for j in ideals}
    ok = True
    for j1 in ideals:
        for j2 in ideals:
            lhs = ideal_product(alpha[j1.carrier], alpha[j2.carrier])
            rhs = alpha_annihilator(m, ideal_product(j1, j2))
            if not lhs.issubset(rhs):
                ok = False
                report.record(f"alpha products ({label})", False, j1.describe() + " , " + j2.describe())
                break
        if not ok:
            break
    if ok:
        report.record(f"alpha products ({label})", True)
    ok = True
    for j in ideals + [ideal_power(j, 2) for j in ideals]:
        ja = alpha_annihilator(m, j)
        mid = alpha_annihilator(m, prime_radical_of_ideal(B, j))
        top = prime_radical_of_ideal(A, ja)
        if not (ja.issubset(mid) and mid.issubset(top)):
            ok = False
            report.record(f"alpha radicals ({label})", False, j.describe())
            break
    if ok:
        report.record(f"alpha radicals ({label})", True)
    theta = theta_alpha(m)
    phi = phi_upper(r_alpha(m))
    report.record(f"theta equals phi of r(alpha) ({label})", theta.same_as(phi))


def oracle_cross_check(inst, exhaustive: bool = False) -> CheckReport:
    """Run every invariant on an ``Instance`` (or a bare hom); failures become entries."""
    if isinstance(inst, AlgebraHom):
        inst = Instance(InstanceSpec(0, inst.source.field), "hom", "", inst)
    f = inst.hom
    R, S = f.source, f.target
    report = CheckReport(inst.spec.seed, inst.description)
    try:
        R.validate()
        S.validate()
        f.validate()
    except ValidationError as exc:
        report.record("validation", False, str(exc))
        return report
    report.record("validation", True)

    for name, a in (("R", R), ("S", S)):
        s = spec(a)
        rad = jacobson_radical(a)
        report.record(f"radical nilpotent ({name})", nilpotency_index(rad) is not None)
        report.record(f"radical is intersection of primes ({name})",
                      i_of(s, s.full).carrier == rad.carrier)
        report.record(f"spec primes pass prime tests ({name})",
                      all(is_prime(a, p.ideal) and definitional_prime_oracle(a, p.ideal, cap=QUICK_ORACLE_CAP)
                          for p in s))
        ranks = [goldie_rank(a, p) for p in s]
        report.record(f"goldie certificates ({name})", all(g.certificate_ok() for g in ranks))
        space = all_closed_sets(s)
        report.record(f"closed sets are all subsets ({name})", len(space.closed) == 1 << len(s))
        if exhaustive and _enumerable(a):
            ideals = exhaustive_ideal_enumeration(a)
            bad = [i for i in ideals if is_prime(a, i) != grouped_prime_oracle(a, i)]
            report.record(f"is_prime matches definition on all ideals ({name})", not bad,
                          bad[0].describe() if bad else "")
            primes = {i.carrier for i in ideals if is_prime(a, i)}
            report.record(f"spec equals enumerated primes ({name})",
                          primes == {p.carrier for p in s})

    # nilpotency of rad(R) inside M_n
    if inst.matrix_size:
        n = inst.matrix_size
        rad = jacobson_radical(R)
        report.record("radical of a matrix subalgebra", rad.is_zero or
                      ideal_power(rad, n).is_zero)

    analysis = analyze_hom(f)
    report.record("equivalent conditions agree", analysis.consistent,
                  "; ".join(analysis.inconsistencies))
    report.record("lying over", bool(lying_over_check(f)))

    sS, sR = spec(S), spec(R)
    r = r_of(f)
    ok = all(
        (sS.full & ~r.preimage(v)) == r.strong_preimage(sR.full & ~v)
        for v in range(sR.full + 1)
    )
    report.record("complement duality", ok)

    # radical reduction: lambda and rho only see radicals
    ok = True
    for j in ideal_family(S):
        if v_of(sR, preimage_under_hom(f, j)) != v_of(sR, preimage_under_hom(f, prime_radical_of_ideal(S, j))):
            ok = False
            break
    for i in ideal_family(R):
        if v_of(sS, extension_annihilator(f, i)) != v_of(sS, extension_annihilator(f, prime_radical_of_ideal(R, i))):
            ok = False
            break
    report.record("lambda and rho depend on radicals only", ok)

    ok = True
    for i in radical_ideals(sR):
        vi = v_of(sR, i)
        vis = v_of(sS, extension_annihilator(f, i))
        for j in radical_ideals(sS):
            if v_of(sR, preimage_under_hom(f, j)) & ~vi == 0 and v_of(sS, j) & ~vis != 0:
                ok = False
    report.record("contraction containment forces extension containment", ok)

    report.record("union of powers formula", bool(union_of_powers_check(f)))
    semi = semiprime_contraction_case(f)
    report.record("semiprime contractions", semi.ok or semi.witness[0] == "not semiprime")
    for n in (1, 2, 3):
        c = stratified_continuity_check(f, n)
        report.record(f"stratified continuity n={n}", bool(c), str(c.witness))

    # uniqueness of the right adjoint: rho must be the largest V with lambda V inside U
    lam, rho = lambda_functor(f), rho_functor(f)
    if analysis.adjoint:
        ok = True
        for u in lam.target.closed:
            best = 0
            for v in lam.source.closed:
                if lam(v) & ~u == 0:
                    best |= v
            if best != rho(u):
                ok = False
        report.record("right adjoint is unique", ok)

    _bimodule_identities(report, regular_bimodule(f, "R-S"), "restriction")
    _bimodule_identities(report, regular_bimodule(f, "S-R"), "extension")
    report.record("restriction bimodule gives r", r_alpha(regular_bimodule(f, "R-S")).table == r.table)
    return report


# --------------------------------------------------------------------------
# Fuzz driver


def fuzz(specs, check: bool = True):
    """Yield one record per instance: seed, flags, consistency, timing (seconds)."""
    for s in specs:
        t0 = time.perf_counter()
        inst = generate_instance(s)
        analysis = analyze_hom(inst.hom)
        failures = []
        if check:
            failures = oracle_cross_check(inst).failures
        yield {
            "seed": s.seed,
            "field": str(s.field),
            "kind": inst.kind,
            "description": inst.description,
            "dims": [inst.source.dim, inst.target.dim],
            "flags": analysis.flags(),
            "consistency": analysis.consistent and not failures,
            "failures": failures,
            "timing": round(time.perf_counter() - t0, 6),
        }


def fuzz_lines(specs, check: bool = True):
    for rec in fuzz(specs, check):
        yield json.dumps(rec, sort_keys=True)


# --------------------------------------------------------------------------
# Brute force over all correspondences between small finite spaces


def _closure_table(space) -> "np.ndarray":
    return np.array([space.closure(m) for m in range(1 << space.n)], dtype=np.uint8)


def adjoint_continuity_sweep(x, y):
    """For every correspondence c: X -> Y, whether phi_lower(c) is right adjoint
    to phi_upper(c), and whether c is continuous.

    Correspondence number k sends point i to the mask (k >> (m i)) & (2^m - 1),
    where m = |Y|.  Returns two boolean arrays indexed by k.
    """

    n, m = x.n, y.n
    count = 1 << (m * n)
    k = np.arange(count, dtype=np.int64)
    full_y = (1 << m) - 1
    images = [((k >> (m * i)) & full_y).astype(np.uint8) for i in range(n)]
    cl_x, cl_y = _closure_table(x), _closure_table(y)
    closed_x = np.zeros(1 << n, dtype=bool)
    closed_x[list(x.closed)] = True

    continuous = np.ones(count, dtype=bool)
    lower = {}
    for v in y.closed:
        sp = np.zeros(count, dtype=np.uint8)
        for i in range(n):
            sp |= ((images[i] & (full_y ^ v)) == 0).astype(np.uint8) << i
        continuous &= closed_x[sp]
        lower[v] = cl_x[sp]
    upper = {}
    for u in x.closed:
        img = np.zeros(count, dtype=np.uint8)
        for i in members(u):
            img |= images[i]
        upper[u] = cl_y[img]
    adjoint = np.ones(count, dtype=bool)
    for u in x.closed:
        for v in y.closed:
            adjoint &= ((upper[u] & (full_y ^ v)) == 0) == ((lower[v] | u) == lower[v])
    return adjoint, continuous


def correspondence_from_index(x, y, k: int):
    from .topology import Correspondence

    full_y = (1 << y.n) - 1
    return Correspondence(x, y, tuple((k >> (y.n * i)) & full_y for i in range(x.n)))
