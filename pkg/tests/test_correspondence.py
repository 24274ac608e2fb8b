import pytest

from ncspec.algebra import (
    identity_hom,
    matrix_algebra,
    quotient_algebra,
    regular_bimodule,
    upper_triangular_algebra,
)
from ncspec.correspondence import (
    analyze_hom,
    centralizing_check,
    condition_2prime,
    contraction,
    extension_annihilator,
    ideal_family,
    lambda_functor,
    lying_over_check,
    nearly_centralizing_check,
    prime_pair_criterion,
    r_alpha,
    r_of,
    rho_functor,
    semiprime_contraction_case,
    stratified_continuity_check,
    theta_alpha,
    union_of_powers_check,
)
from ncspec.exactlin import GF, QQ
from ncspec.harness import FIXTURES, InstanceSpec, generate_instance
from ncspec.ideals import jacobson_radical
from ncspec.spectrum import spec
from ncspec.topology import is_left_adjoint, phi_upper


def test_identity_hom_is_as_good_as_it_gets():
    t3 = upper_triangular_algebra(QQ, 3)
    a = analyze_hom(identity_hom(t3))
    assert all(a.flags().values())
    assert a.t_values == [1, 1, 1]
    assert r_of(identity_hom(t3)).table == (1, 2, 4)


def test_surjection_is_centralizing_and_adjoint():
    t2 = upper_triangular_algebra(QQ, 2)
    _, pi = quotient_algebra(t2, jacobson_radical(t2))
    a = analyze_hom(pi)
    assert a.centralizing and a.adjoint and a.consistent


def test_nilpotent_subalgebra_example():
    f = FIXTURES["ex-nilpotent-m2"].hom(QQ)
    R, S = f.source, f.target
    i = spec(R)[0].ideal
    # S f(I) = S e12 = span{e12, e22} holds no nonzero two-sided ideal of M2
    assert extension_annihilator(f, i).is_zero
    assert contraction(f, spec(S)[0].ideal).is_zero
    assert nearly_centralizing_check(f, i) == 2
    a = analyze_hom(f)
    assert a.adjoint and not a.centralizing
    assert centralizing_check(f).witness == (2, 2)


def test_diagonal_in_triangular_fails_at_named_pair():
    f = FIXTURES["ex-diag-t2"].hom(QQ)
    assert prime_pair_criterion(f).witness == (0, 1)
    w = condition_2prime(f).witness
    assert w["strong_preimage"] != w["v_of_extension"]
    assert bool(lying_over_check(f))


@pytest.mark.parametrize("name", sorted(FIXTURES))
@pytest.mark.parametrize("F", [QQ, GF(5), GF(2)])
def test_fixtures_match_expectations_over_several_fields(name, F):
    assert FIXTURES[name].verify(F) == {}


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_lambda_rho_adjointness_matches_flag(name):
    f = FIXTURES[name].hom(QQ)
    assert bool(is_left_adjoint(lambda_functor(f), rho_functor(f))) == bool(analyze_hom(f).adjoint)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_identities_on_fixtures(name):
    f = FIXTURES[name].hom(QQ)
    assert union_of_powers_check(f)
    case = semiprime_contraction_case(f)
    # the identity with <f(I)> is only claimed when contractions are semiprime
    assert case or case.witness[0] == "not semiprime"
    for n in (1, 2, 3):
        assert stratified_continuity_check(f, n)


def test_semiprime_case_detects_non_semiprime_contraction():
    case = semiprime_contraction_case(FIXTURES["ex-nilpotent-m2"].hom(QQ))
    assert case.witness == ("not semiprime", 0)
    assert semiprime_contraction_case(FIXTURES["ex-diag-t2"].hom(QQ))


def test_bimodule_correspondence_recovers_contraction():
    for name in FIXTURES:
        f = FIXTURES[name].hom(QQ)
        m = regular_bimodule(f, "R-S")
        assert r_alpha(m).table == r_of(f).table
        assert theta_alpha(m).same_as(phi_upper(r_alpha(m)))


def test_ideal_family_contains_radical_powers():
    t3 = upper_triangular_algebra(QQ, 3)
    dims = {i.dim for i in ideal_family(t3)}
    assert {0, 1, 3, 6} <= dims


@pytest.mark.parametrize("field", [QQ, GF(7)])
def test_generated_instances_are_consistent(field):
    for seed in range(25):
        inst = generate_instance(InstanceSpec(seed, field))
        a = analyze_hom(inst.hom)
        assert a.consistent, (seed, a.inconsistencies)
        assert a.lying_over
        if a.centralizing:
            assert a.adjoint


def test_matrix_algebra_into_itself_twice():
    m2 = matrix_algebra(QQ, 2)
    a = analyze_hom(identity_hom(m2))
    assert a.t_values == [1]
