"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import time

import pytest

from ncspec.algebra import group_algebra, matrix_algebra, symmetric_group_table
from ncspec.correspondence import (
    analyze_hom,
    lying_over_check,
    r_of,
    stratified_continuity_check,
)
from ncspec.exactlin import GF, QQ
from ncspec.harness import (
    FIXTURES,
    InstanceSpec,
    adjoint_continuity_sweep,
    correspondence_from_index,
    exhaustive_ideal_enumeration,
    fuzz_specs,
    generate_instance,
    oracle_cross_check,
)
from ncspec.ideals import ideal_power, jacobson_radical, two_sided_ideal_generated
from ncspec.rng import SplitMix64
from ncspec.spectrum import definitional_prime_oracle, goldie_rank, is_prime, spec, v_of
from ncspec.topology import (
    is_continuous,
    is_left_adjoint,
    phi_lower,
    phi_upper,
    topologies_up_to_homeomorphism,
)

from conftest import record

FUZZ_COUNT = 500
FUZZ_BUDGET_SECONDS = 60.0
EX1_BUDGET_SECONDS = 0.1
SMALL_FIELD_SEEDS = 40  # instances per field for the F2 / F3 oracle sweep

IDENTITY_CHECKS = (
    "alpha products",
    "alpha radicals",
    "theta equals phi of r(alpha)",
    "lambda and rho depend on radicals only",
    "contraction containment forces extension containment",
    "complement duality",
    "union of powers formula",
)


@pytest.fixture(scope="module")
def corpus():
    """The 500-instance fuzz corpus over F5, F7 and Q with every cross-check."""
    t0 = time.perf_counter()
    out = []
    for s in fuzz_specs(FUZZ_COUNT):
        inst = generate_instance(s)
        out.append((inst, analyze_hom(inst.hom), oracle_cross_check(inst)))
    return out, time.perf_counter() - t0


def test_criterion_1_nilpotent_subalgebra_example():
    t0 = time.perf_counter()
    f = FIXTURES["ex-nilpotent-m2"].hom(QQ)
    R, S = f.source, f.target
    sS, sR = spec(S), spec(R)
    r = r_of(f)
    I = sR[0].ideal
    lhs = r.strong_preimage(v_of(sR, I))
    rhs = v_of(sS, two_sided_ideal_generated(S, f.image_of(I.carrier).basis))
    elapsed = time.perf_counter() - t0
    checks = {
        "Spec S = {0}": len(sS) == 1 and sS[0].ideal.is_zero,
        "Spec R = {I}": len(sR) == 1 and I.describe() == "span{e12}",
        "r continuous": bool(is_continuous(r)),
        "strong preimage = {0}": lhs == 0b1,
        "V_S(<f(I)>) empty": rhs == 0,
        "runtime": elapsed < EX1_BUDGET_SECONDS,
    }
    ok = all(checks.values())
    record(1, ok, f"{elapsed * 1000:.1f} ms" if ok else str([k for k, v in checks.items() if not v]))
    assert ok, checks


def test_criterion_2_equivalent_conditions_agree(corpus):
    instances, elapsed = corpus
    fixtures_ok = all(analyze_hom(fx.hom(QQ)).consistent for fx in FIXTURES.values())
    bad = [inst.spec.seed for inst, a, _ in instances if not a.consistent]
    fields = {str(inst.spec.field) for inst, _, _ in instances}
    adjoint = sum(1 for _, a, _ in instances if a.adjoint)
    ok = (
        fixtures_ok
        and not bad
        and len(instances) >= FUZZ_COUNT
        and fields == {"Fp:5", "Fp:7", "Q"}
        and all(inst.source.dim <= 6 for inst, _, _ in instances)
        and elapsed < FUZZ_BUDGET_SECONDS
    )
    record(2, ok, f"{len(instances)} instances, {adjoint} adjoint, "
                  f"{len(bad)} inconsistent, {elapsed:.1f} s")
    assert ok, (bad, elapsed)


def test_criterion_3_condition_2prime_is_stronger():
    f = FIXTURES["ex-diag-t2"].hom(QQ)
    a = analyze_hom(f)
    ip, iq = a.prime_pair_criterion.witness
    P, Q = a.source_spec[ip].ideal, a.target_spec[iq].ideal
    ok = (
        bool(a.single_valued)
        and bool(a.continuous)
        and not a.condition_2prime
        and not a.adjoint
        and (ip, iq) == (0, 1)
        and P.describe() == "span{e12, e22}"
        and Q.describe() == "span{e11}"
    )
    record(3, ok, f"witness (P{ip + 1}, Q{iq + 1}) = ({P.describe()}, {Q.describe()})")
    assert ok


def test_criterion_4_radical_of_matrix_subalgebra(corpus):
    instances, _ = corpus
    checked = 0
    bad = []
    for inst, _, _ in instances:
        if inst.matrix_size in (2, 3):
            checked += 1
            rad = jacobson_radical(inst.source)
            if not (rad.is_zero or ideal_power(rad, inst.matrix_size).is_zero):
                bad.append(inst.spec.seed)
    ok = checked > 0 and not bad
    record(4, ok, f"{checked} subalgebras of M2/M3, {len(bad)} failures")
    assert ok, bad


def test_criterion_5_lying_over(corpus):
    instances, _ = corpus
    bad = [inst.spec.seed for inst, _, _ in instances if not lying_over_check(inst.hom)]
    ok = not bad
    record(5, ok, f"{len(instances)} homomorphisms, {len(bad)} failures")
    assert ok, bad


def test_criterion_6_adjoint_iff_continuous():
    reps = [t for n in range(5) for t in topologies_up_to_homeomorphism(n)]
    total = discrepancies = 0
    rng = SplitMix64(6)
    sample_bad = 0
    sampled = 0
    for x in reps:
        for y in reps:
            adjoint, continuous = adjoint_continuity_sweep(x, y)
            total += len(adjoint)
            discrepancies += int((adjoint != continuous).sum())
            # scalar re-check of a few correspondences with the library functions
            for _ in range(2):
                k = rng.below(len(adjoint))
                c = correspondence_from_index(x, y, k)
                lib_adj = bool(is_left_adjoint(phi_upper(c), phi_lower(c)))
                lib_cont = bool(is_continuous(c))
                sampled += 1
                if lib_adj != bool(adjoint[k]) or lib_cont != bool(continuous[k]):
                    sample_bad += 1
    ok = discrepancies == 0 and sample_bad == 0 and len(reps) == 47
    record(6, ok, f"{len(reps)} spaces, {total} correspondences, {discrepancies} discrepancies, "
                  f"{sampled} scalar re-checks")
    assert ok


def test_criterion_7_prime_oracle_equivalence():
    ideals = mismatches = algebras = 0
    for p in (2, 3):
        for k in range(SMALL_FIELD_SEEDS):
            inst = generate_instance(InstanceSpec(7000 + k, GF(p)))
            for a in (inst.source, inst.target):
                if p**a.dim > 1 << 16:
                    continue
                algebras += 1
                for i in exhaustive_ideal_enumeration(a):
                    ideals += 1
                    if is_prime(a, i) != definitional_prime_oracle(a, i):
                        mismatches += 1
    ok = mismatches == 0 and ideals > 0
    record(7, ok, f"{algebras} algebras, {ideals} ideals, {mismatches} mismatches")
    assert ok


def test_criterion_8_identities(corpus):
    instances, _ = corpus
    failures = []
    for inst, _, report in instances:
        for line in report.failures:
            if any(line.startswith(name) for name in IDENTITY_CHECKS):
                failures.append((inst.spec.seed, line))
        present = {name for name in IDENTITY_CHECKS
                   if any(p.startswith(name) for p in report.passed + report.failures)}
        if present != set(IDENTITY_CHECKS):
            failures.append((inst.spec.seed, "missing checks"))
    ok = not failures
    record(8, ok, f"{len(IDENTITY_CHECKS)} identity families on {len(instances)} instances, "
                  f"{len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_9_goldie_ranks_and_stratified_continuity():
    m2 = matrix_algebra(QQ, 2)
    m3 = matrix_algebra(QQ, 3)
    table, names = symmetric_group_table(3)
    qs3 = group_algebra(QQ, table, names)
    r2 = [goldie_rank(m2, p) for p in spec(m2)]
    r3 = [goldie_rank(m3, p) for p in spec(m3)]
    rs3 = [goldie_rank(qs3, p) for p in spec(qs3)]
    ranks_ok = (
        [g.rank for g in r2] == [2]
        and [g.rank for g in r3] == [3]
        and sorted(g.rank for g in rs3) == [1, 1, 2]
        and all(g.certificate_ok() for g in r2 + r3 + rs3)
    )
    strat_ok = all(
        bool(stratified_continuity_check(fx.hom(QQ), n))
        for fx in FIXTURES.values()
        for n in (1, 2, 3)
    )
    ok = ranks_ok and strat_ok
    record(9, ok, f"M2 {r2[0].rank}, M3 {r3[0].rank}, Q[S3] {sorted(g.rank for g in rs3)}; "
                  f"stratified continuity {'holds' if strat_ok else 'fails'}")
    assert ok
