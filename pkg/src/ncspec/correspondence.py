"""The contraction correspondence of a homomorphism and the adjointness test.

For a unital homomorphism f: R -> S of finite-dimensional algebras this
module computes

* r: Spec S -> Spec R, P -> primes of R minimal over f^{-1}(P);
* I^S = ann_S(S / S f(I)), the largest ideal of S inside S f(I);
* lambda: V_S(J) -> V_R(f^{-1}(J)) and rho: V_R(I) -> V_S(I^S);

and decides, independently, the four equivalent descriptions of "lambda is
a left adjoint to rho":

(i)   lambda -| rho, checked pair by pair on the closed-set lattices;
(ii)  r is single-valued and continuous and r^[-1] V_R(I) = V_S(I^S);
(iii) for every prime Q of R, f(Q)^t S lies in S f(Q) for some t;
(iv)  the same containment for every ideal I of R;

plus the prime-pair criterion Q^S in P => Q in sqrt(f^{-1}(P)).

Statements quantified over all ideals of R are checked on the radical
ideals I(U).  Both sides of each identity only depend on sqrt(I)
(V(I) = V(sqrt I), and V_S(I^S) = V_S((sqrt I)^S)), so this is no loss; a
few non-radical powers are also run to guard the reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .algebra import AlgebraHom, Bimodule
from .exactlin import Subspace
from .ideals import (
    Ideal,
    annihilator_of_quotient,
    bimodule_quotient_annihilator,
    ideal_power,
    ideal_product,
    left_ideal_generated,
    preimage_under_hom,
    prime_radical_of_ideal,
    two_sided_ideal_generated,
)
from .spectrum import (
    SpecSet,
    all_closed_sets,
    i_of,
    minimal_primes_mask,
    spec,
    spec_n,
    v_of,
)
from .topology import (
    Check,
    Correspondence,
    FunctorOnClosed,
    is_continuous,
    is_left_adjoint,
    members,
)
from .algebra import centralizer

__all__ = [
    "SpecCorrespondence",
    "HomAnalysis",
    "r_of",
    "r_alpha",
    "alpha_annihilator",
    "extension_annihilator",
    "lambda_functor",
    "rho_functor",
    "theta_alpha",
    "condition_2prime",
    "prime_pair_criterion",
    "criterion_3_13",
    "lying_over_check",
    "lemma_3_14_check",
    "nearly_centralizing_check",
    "nearly_centralizing_primes",
    "nearly_centralizing_ideals",
    "is_centralizing",
    "centralizing_check",
    "analyze_hom",
    "theorem_3_15_verify",
    "stratified_continuity_check",
    "prop_2_9_check",
    "semiprime_contraction_case",
    "union_of_powers_check",
    "formula_2_4iv_check",
    "radical_ideals",
    "ideal_family",
]


@dataclass(frozen=True)
class SpecCorrespondence(Correspondence):
    """A correspondence between prime spectra; masks index the sorted primes."""

    source_spec: Optional[SpecSet] = None
    target_spec: Optional[SpecSet] = None

    def describe(self) -> List[List[str]]:
        return [self.target_spec.describe_mask(t) for t in self.table]


# --------------------------------------------------------------------------
# Ideals attached to f


def _ideal_of(x, a) -> Ideal:
    if isinstance(x, Ideal):
        return x
    if isinstance(x, Subspace):
        return Ideal(a, x)
    return Ideal(a, a.span(x))


def extension_annihilator(f: AlgebraHom, i) -> Ideal:
    """I^S = ann_S(S / S f(I))."""
    i = _ideal_of(i, f.source)
    key = ("ext", i.carrier)
    if key not in f._memo:
        left = left_ideal_generated(f.target, [f.apply(v) for v in i.basis])
        f._memo[key] = annihilator_of_quotient(left)
    return f._memo[key]


def contraction(f: AlgebraHom, j) -> Ideal:
    """f^{-1}(J)."""
    j = _ideal_of(j, f.target)
    key = ("contract", j.carrier)
    if key not in f._memo:
        f._memo[key] = preimage_under_hom(f, j)
    return f._memo[key]


def alpha_annihilator(m: Bimodule, j) -> Ideal:
    """J^alpha = ann_A(M / M J) for an ideal J of the right algebra."""
    return bimodule_quotient_annihilator(m, j)


def _sqrt(a, i: Ideal) -> Ideal:
    key = ("sqrt", i.carrier)
    if key not in a._memo:
        a._memo[key] = prime_radical_of_ideal(a, i)
    return a._memo[key]


# --------------------------------------------------------------------------
# Correspondences


def _spaces(f: AlgebraHom):
    sS, sR = spec(f.target), spec(f.source)
    return sS, sR, all_closed_sets(sS), all_closed_sets(sR)


def r_of(f: AlgebraHom) -> SpecCorrespondence:
    """P -> primes of R minimal over f^{-1}(P)."""
    if "r" in f._memo:
        return f._memo["r"]
    sS, sR, xS, xR = _spaces(f)
    table = tuple(minimal_primes_mask(sR, contraction(f, p.ideal)) for p in sS)
    out = SpecCorrespondence(xS, xR, table, sS, sR)
    f._memo["r"] = out
    return out


def r_alpha(m: Bimodule) -> SpecCorrespondence:
    """Spec B -> Spec A, P -> primes of A minimal over P^alpha (empty if P^alpha = A)."""
    sB, sA = spec(m.right), spec(m.left)
    table = tuple(minimal_primes_mask(sA, alpha_annihilator(m, p.ideal)) for p in sB)
    return SpecCorrespondence(all_closed_sets(sB), all_closed_sets(sA), table, sB, sA)


def theta_alpha(m: Bimodule) -> FunctorOnClosed:
    """Closed V of Spec B -> V_A(I(V)^alpha)."""
    sB, sA = spec(m.right), spec(m.left)
    xB, xA = all_closed_sets(sB), all_closed_sets(sA)
    table = {v: v_of(sA, alpha_annihilator(m, i_of(sB, v))) for v in xB.closed}
    return FunctorOnClosed(xB, xA, table)


def lambda_functor(f: AlgebraHom) -> FunctorOnClosed:
    """V_S(J) -> V_R(f^{-1}(J)), tabulated with J = I(V)."""
    sS, sR, xS, xR = _spaces(f)
    table = {v: v_of(sR, contraction(f, i_of(sS, v))) for v in xS.closed}
    return FunctorOnClosed(xS, xR, table)


def rho_functor(f: AlgebraHom) -> FunctorOnClosed:
    """V_R(I) -> V_S(I^S), tabulated with I = I(U)."""
    sS, sR, xS, xR = _spaces(f)
    table = {u: v_of(sS, extension_annihilator(f, i_of(sR, u))) for u in xR.closed}
    return FunctorOnClosed(xR, xS, table)


def radical_ideals(s: SpecSet) -> List[Ideal]:
    """I(U) for every closed U, in lattice order (smallest U first)."""
    space = all_closed_sets(s)
    return [i_of(s, u) for u in space.sorted_closed()]


def ideal_family(a) -> List[Ideal]:
    """Radical ideals, their powers, and products of pairs of primes, deduplicated."""
    s = spec(a)
    seen = {}
    for i in radical_ideals(s):
        seen.setdefault(i.carrier, i)
        cur = i
        while True:
            nxt = ideal_product(cur, i)
            if nxt.carrier == cur.carrier:
                break
            seen.setdefault(nxt.carrier, nxt)
            cur = nxt
    for p in s:
        for q in s:
            pq = ideal_product(p.ideal, q.ideal)
            seen.setdefault(pq.carrier, pq)
    return sorted(seen.values(), key=lambda i: (i.dim, i.sort_key()))


def _non_radical_samples(a) -> List[Ideal]:
    out = []
    for i in radical_ideals(spec(a)):
        sq = ideal_power(i, 2)
        if sq.carrier != i.carrier:
            out.append(sq)
    return out


# --------------------------------------------------------------------------
# The conditions


def condition_2prime(f: AlgebraHom, extra: bool = True) -> Check:
    """r^[-1] V_R(I) = V_S(I^S) for all radical I; witness = the failing ideal.

    With ``extra`` the squares of radical ideals are also tried.
    """
    r = r_of(f)
    sS, sR = r.source_spec, r.target_spec
    ideals = radical_ideals(sR)
    if extra:
        ideals = ideals + _non_radical_samples(f.source)
    for i in ideals:
        lhs = r.strong_preimage(v_of(sR, i))
        rhs = v_of(sS, extension_annihilator(f, i))
        if lhs != rhs:
            return Check(False, {"ideal": i, "strong_preimage": lhs, "v_of_extension": rhs})
    return Check(True)


def prime_pair_criterion(f: AlgebraHom) -> Check:
    """For all P in Spec S, Q in Spec R: Q^S in P implies Q in sqrt(f^{-1}(P)).

    Witness = (P index, Q index), first in lexicographic prime order.
    """
    sS, sR = spec(f.target), spec(f.source)
    for ip, p in enumerate(sS):
        root = _sqrt(f.source, contraction(f, p.ideal))
        for iq, q in enumerate(sR):
            if extension_annihilator(f, q.ideal).issubset(p.ideal) and not q.ideal.issubset(root):
                return Check(False, (ip, iq))
    return Check(True)


def lying_over_check(f: AlgebraHom) -> Check:
    """Every P in Spec S has Q minimal over f^{-1}(P) with Q^S in P; witness = P index."""
    r = r_of(f)
    sS, sR = r.source_spec, r.target_spec
    for ip, p in enumerate(sS):
        if not any(
            extension_annihilator(f, sR[iq].ideal).issubset(p.ideal) for iq in members(r.table[ip])
        ):
            return Check(False, ip)
    return Check(True)


def nearly_centralizing_check(f: AlgebraHom, q) -> Optional[int]:
    """Least t with f(Q)^t S inside S f(Q), or None once the chain stabilizes outside."""
    S = f.target
    q = _ideal_of(q, f.source)
    fq = f.image_of(q.carrier)
    target = left_ideal_generated(S, fq.basis).carrier
    cur = S.product_space(fq, S.full_space())
    for t in range(1, S.dim + 2):
        if cur.issubset(target):
            return t
        nxt = S.product_space(fq, cur)
        if nxt == cur:
            return None
        cur = nxt
    return None


def nearly_centralizing_primes(f: AlgebraHom) -> List[Optional[int]]:
    return [nearly_centralizing_check(f, q.ideal) for q in spec(f.source)]


def nearly_centralizing_ideals(f: AlgebraHom) -> Check:
    """The containment for every ideal in ``ideal_family(R)``; witness = failing ideal."""
    for i in ideal_family(f.source):
        if nearly_centralizing_check(f, i) is None:
            return Check(False, i)
    return Check(True)


def centralizing_check(f: AlgebraHom) -> Check:
    """S = f(R) C with C the centralizer of f(R) in S; witness = (dim C, dim f(R) C).

    Any generating set of elements commuting with f(R) lies in C, so this
    is the same as S being generated over f(R) by such elements.
    """
    S = f.target
    c = centralizer(S, f.images)
    span = S.product_space(f.image_of(f.source.full_space()), c)
    return Check(True) if span.is_full else Check(False, (c.dim, span.dim))


def is_centralizing(f: AlgebraHom) -> bool:
    return bool(centralizing_check(f))


def _single_valued(r: SpecCorrespondence) -> Check:
    for ip, t in enumerate(r.table):
        if bin(t).count("1") != 1:
            return Check(False, ip)
    return Check(True)


# --------------------------------------------------------------------------
# The full analysis


@dataclass
class HomAnalysis:
    """Every condition of the adjointness equivalence, computed independently."""

    source_spec: SpecSet
    target_spec: SpecSet
    r_table: tuple
    single_valued: Check
    continuous: Check
    condition_2prime: Check
    adjoint: Check
    prime_pair_criterion: Check
    t_values: List[Optional[int]]
    nearly_centralizing_ideals: Check
    centralizing: Check
    lying_over: Check
    inconsistencies: List[str] = field(default_factory=list)

    @property
    def nearly_centralizing_primes(self) -> bool:
        return all(t is not None for t in self.t_values)

    @property
    def condition_ii(self) -> bool:
        return bool(self.single_valued and self.continuous and self.condition_2prime)

    @property
    def consistent(self) -> bool:
        return not self.inconsistencies

    def flags(self) -> Dict[str, bool]:
        return {
            "single_valued": bool(self.single_valued),
            "continuous": bool(self.continuous),
            "condition_2prime": bool(self.condition_2prime),
            "adjoint": bool(self.adjoint),
            "prime_pair_criterion": bool(self.prime_pair_criterion),
            "nearly_centralizing_primes": self.nearly_centralizing_primes,
            "nearly_centralizing_ideals": bool(self.nearly_centralizing_ideals),
            "centralizing": bool(self.centralizing),
            "lying_over": bool(self.lying_over),
        }

    def witnesses(self) -> Dict[str, object]:
        sS, sR = self.source_spec, self.target_spec
        out = {}
        if not self.single_valued:
            ip = self.single_valued.witness
            out["single_valued"] = {
                "prime": _ideal_json(sS[ip].ideal),
                "image": sR.describe_mask(self.r_table[ip]),
            }
        if not self.continuous:
            out["continuous"] = {"closed_set": self.continuous.witness}
        if not self.condition_2prime:
            w = self.condition_2prime.witness
            out["condition_2prime"] = {
                "ideal": _ideal_json(w["ideal"]),
                "strong_preimage": w["strong_preimage"],
                "v_of_extension": w["v_of_extension"],
            }
        if not self.adjoint:
            u, v = self.adjoint.witness
            out["adjoint"] = {"source_closed": u, "target_closed": v}
        if not self.prime_pair_criterion:
            ip, iq = self.prime_pair_criterion.witness
            out["prime_pair_criterion"] = {
                "P": _ideal_json(sS[ip].ideal),
                "Q": _ideal_json(sR[iq].ideal),
                "P_index": ip,
                "Q_index": iq,
            }
        if not self.nearly_centralizing_primes:
            iq = next(k for k, t in enumerate(self.t_values) if t is None)
            out["nearly_centralizing_primes"] = {"Q": _ideal_json(sR[iq].ideal), "Q_index": iq}
        if not self.nearly_centralizing_ideals:
            out["nearly_centralizing_ideals"] = {
                "ideal": _ideal_json(self.nearly_centralizing_ideals.witness)
            }
        if not self.centralizing:
            cdim, sdim = self.centralizing.witness
            out["centralizing"] = {"centralizer_dim": cdim, "span_dim": sdim}
        if not self.lying_over:
            out["lying_over"] = {"P": _ideal_json(sS[self.lying_over.witness].ideal)}
        return out

    def to_json(self) -> dict:
        sS, sR = self.source_spec, self.target_spec
        return {
            "spec_S": [_prime_json(p) for p in sS],
            "spec_R": [_prime_json(p) for p in sR],
            "correspondence": [members(t) for t in self.r_table],
            "flags": self.flags(),
            "t_values": list(self.t_values),
            "witnesses": self.witnesses(),
            "consistent": self.consistent,
            "inconsistencies": list(self.inconsistencies),
        }


def _ideal_json(i: Ideal) -> dict:
    a = i.parent
    F = a.field
    return {
        "basis": [[F.format(x) for x in v] for v in i.basis],
        "text": i.describe(),
    }


def _prime_json(p) -> dict:
    d = _ideal_json(p.ideal)
    d["quotient_dim"] = p.quotient_dim
    return d


def analyze_hom(f: AlgebraHom) -> HomAnalysis:
    """Compute every flag independently and record any disagreement."""
    if "analysis" in f._memo:
        return f._memo["analysis"]
    r = r_of(f)
    lam, rho = lambda_functor(f), rho_functor(f)
    out = HomAnalysis(
        source_spec=r.source_spec,
        target_spec=r.target_spec,
        r_table=r.table,
        single_valued=_single_valued(r),
        continuous=is_continuous(r),
        condition_2prime=condition_2prime(f),
        adjoint=is_left_adjoint(lam, rho),
        prime_pair_criterion=prime_pair_criterion(f),
        t_values=nearly_centralizing_primes(f),
        nearly_centralizing_ideals=nearly_centralizing_ideals(f),
        centralizing=centralizing_check(f),
        lying_over=lying_over_check(f),
    )
    verdicts = {
        "adjoint": bool(out.adjoint),
        "single_valued and continuous and condition_2prime": out.condition_ii,
        "prime_pair_criterion": bool(out.prime_pair_criterion),
        "nearly_centralizing_primes": out.nearly_centralizing_primes,
        "nearly_centralizing_ideals": bool(out.nearly_centralizing_ideals),
    }
    if len(set(verdicts.values())) != 1:
        out.inconsistencies.append(
            "equivalent conditions disagree: "
            + ", ".join(f"{k}={v}" for k, v in verdicts.items())
        )
    if out.centralizing and not out.adjoint:
        out.inconsistencies.append("centralizing but not adjoint")
    if not out.lying_over:
        out.inconsistencies.append("no minimal prime Q with Q^S inside P")
    f._memo["analysis"] = out
    return out


# --------------------------------------------------------------------------
# Further identities


def stratified_continuity_check(f: AlgebraHom, n: int) -> Check:
    """r restricts to a continuous map Spec_n S -> Spec_n R.

    Also checks, for every radical ideal I and its non-radical square, that
    r^[-1](V_R(I)) meets Spec_n S in V_S(<f(I)^n>) meets Spec_n S.
    """
    r = r_of(f)
    sS, sR = r.source_spec, r.target_spec
    mS, mR = spec_n(sS, n), spec_n(sR, n)
    for ip in members(mS):
        if r.table[ip] & ~mR:
            return Check(False, ("rank", ip))
    restricted = r.restrict(mS, mR)
    cont = is_continuous(restricted)
    if not cont:
        return Check(False, ("continuity", cont.witness))
    S = f.target
    for i in radical_ideals(sR) + _non_radical_samples(f.source):
        lhs = r.strong_preimage(v_of(sR, i)) & mS
        fin = f.image_of(ideal_power(i, n).carrier) if n > 0 else S.full_space()
        rhs = v_of(sS, two_sided_ideal_generated(S, fin.basis)) & mS
        if lhs != rhs:
            return Check(False, ("identity", i))
    return Check(True)


def semiprime_contraction_case(f: AlgebraHom) -> Check:
    """Whether every contraction f^{-1}(P) is semiprime.

    When it is, r^[-1] V_R(I) = V_S(<f(I)>) is checked for every radical I,
    and a failure is returned as Check(False, ("identity", I)).  Otherwise
    the result is Check(False, ("not semiprime", P index)).
    """
    r = r_of(f)
    sS, sR = r.source_spec, r.target_spec
    for ip, p in enumerate(sS):
        c = contraction(f, p.ideal)
        if _sqrt(f.source, c).carrier != c.carrier:
            return Check(False, ("not semiprime", ip))
    for i in radical_ideals(sR):
        lhs = r.strong_preimage(v_of(sR, i))
        rhs = v_of(sS, two_sided_ideal_generated(f.target, f.image_of(i.carrier).basis))
        if lhs != rhs:
            return Check(False, ("identity", i))
    return Check(True)


def _power_space(S, u: Subspace, t: int) -> Subspace:
    cur = u
    for _ in range(t - 1):
        cur = S.product_space(cur, u)
    return cur


def union_of_powers_check(f: AlgebraHom) -> Check:
    """r^[-1] V_R(I) = union over t of V_S(<f(I)^t>) for radical I and their squares."""
    r = r_of(f)
    sS, sR = r.source_spec, r.target_spec
    S = f.target
    for i in radical_ideals(sR) + _non_radical_samples(f.source):
        lhs = r.strong_preimage(v_of(sR, i))
        fi = f.image_of(i.carrier)
        union = 0
        cur = fi
        prev = None
        while prev != cur:
            union |= v_of(sS, two_sided_ideal_generated(S, cur.basis))
            prev, cur = cur, S.product_space(cur, fi)
        if lhs != union:
            return Check(False, i)
    return Check(True)


# Names matching the numbered statements these checks instantiate.
theorem_3_15_verify = analyze_hom
criterion_3_13 = prime_pair_criterion
lemma_3_14_check = lying_over_check
prop_2_9_check = stratified_continuity_check
formula_2_4iv_check = union_of_powers_check
