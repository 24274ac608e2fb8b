import pytest

from ncspec.algebra import (
    cyclic_group_table,
    direct_product,
    group_algebra,
    matrix_algebra,
    symmetric_group_table,
    upper_triangular_algebra,
)
from ncspec.exactlin import GF, QQ
from ncspec.harness import InstanceSpec, exhaustive_ideal_enumeration, generate_instance
from ncspec.ideals import Ideal, jacobson_radical
from ncspec.spectrum import (
    all_closed_sets,
    central_primitive_idempotents,
    definitional_prime_oracle,
    goldie_rank,
    i_of,
    is_prime,
    minimal_polynomial,
    minimal_primes_mask,
    spec,
    spec_n,
    v_of,
)


def s3(F):
    table, names = symmetric_group_table(3)
    return group_algebra(F, table, names)


def test_spectrum_of_triangular_algebra():
    t2 = upper_triangular_algebra(QQ, 2)
    s = spec(t2)
    assert [p.describe() for p in s] == ["span{e12, e22}", "span{e11, e12}"]
    assert [p.quotient_dim for p in s] == [1, 1]
    assert s.radical.describe() == "span{e12}"
    # T2 has both points closed
    assert len(all_closed_sets(s).closed) == 4


def test_simple_algebra_has_one_prime():
    s = spec(matrix_algebra(QQ, 3))
    assert len(s) == 1 and s[0].ideal.is_zero and s[0].quotient_dim == 9


@pytest.mark.parametrize("F,ranks", [
    (QQ, [1, 1, 2]),
    (GF(5), [1, 1, 2]),
    (GF(2), [1, 2]),
    (GF(3), [1, 1]),
])
def test_goldie_ranks_of_s3(F, ranks):
    a = s3(F)
    got = [goldie_rank(a, p) for p in spec(a)]
    assert sorted(g.rank for g in got) == ranks
    assert all(g.certificate_ok() for g in got)


@pytest.mark.parametrize("F,dims", [(QQ, [1, 1, 2]), (GF(5), [1, 1, 1, 1]), (GF(3), [1, 1, 2])])
def test_group_algebra_of_c4(F, dims):
    # Q[C4] = Q x Q x Q(i); over F3 the factor x^2 + 1 stays irreducible
    a = group_algebra(F, cyclic_group_table(4))
    assert sorted(p.quotient_dim for p in spec(a)) == dims
    # commutative quotients are fields
    assert all(goldie_rank(a, p).rank == 1 for p in spec(a))


def test_goldie_rank_of_matrix_algebra_over_f2():
    a = matrix_algebra(GF(2), 3)
    g = goldie_rank(a, spec(a)[0])
    assert (g.rank, g.min_left_ideal_dim) == (3, 3)


def test_central_idempotents_are_orthogonal_and_sum_to_one():
    for a in (s3(QQ), s3(GF(5)), group_algebra(QQ, cyclic_group_table(4))):
        es = central_primitive_idempotents(a)
        total = a.zero()
        for i, e in enumerate(es):
            assert a.mult(e, e) == e
            for x in a.basis():
                assert a.mult(e, x) == a.mult(x, e)
            for f in es[i + 1:]:
                assert a.mult(e, f) == a.zero()
            total = a.add(total, e)
        assert total == a.unit


def test_minimal_polynomial_of_nilpotent_and_idempotent():
    m = matrix_algebra(QQ, 2)
    assert minimal_polynomial(m, m.e("e12").coords) == (0, 0, 1)
    assert minimal_polynomial(m, m.e("e11").coords) == (0, -1, 1)


def test_galois_connection_between_ideals_and_closed_sets():
    t3 = upper_triangular_algebra(QQ, 3)
    s = spec(t3)
    for mask in range(1 << len(s)):
        i = i_of(s, mask)
        assert v_of(s, i) & mask == mask
        assert i_of(s, v_of(s, i)) == i
    assert i_of(s, 0).is_whole
    assert i_of(s, s.full) == jacobson_radical(t3)
    assert minimal_primes_mask(s, Ideal.zero(t3)) == s.full


def test_spec_n_filters_by_rank():
    a = direct_product(matrix_algebra(QQ, 2), QQ_line())
    s = spec(a)
    assert bin(spec_n(s, 1)).count("1") == 1
    assert spec_n(s, 2) == s.full


def QQ_line():
    return matrix_algebra(QQ, 1)


@pytest.mark.parametrize("p", [2, 3])
def test_primes_are_exactly_the_enumerated_primes(p):
    for seed in range(8):
        inst = generate_instance(InstanceSpec(seed, GF(p)))
        for a in (inst.source, inst.target):
            if p ** a.dim > 1 << 12:
                continue
            enumerated = {i.carrier for i in exhaustive_ideal_enumeration(a)
                          if definitional_prime_oracle(a, i)}
            assert enumerated == {q.carrier for q in spec(a)}
            for i in exhaustive_ideal_enumeration(a):
                assert is_prime(a, i) == (i.carrier in enumerated)
