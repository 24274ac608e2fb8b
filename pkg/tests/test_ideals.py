import pytest

from ncspec.algebra import (
    cyclic_group_table,
    group_algebra,
    matrix_algebra,
    subalgebra_from_generators,
    symmetric_group_table,
    upper_triangular_algebra,
)
from ncspec.exactlin import GF, QQ
from ncspec.harness import exhaustive_ideal_enumeration
from ncspec.ideals import (
    Ideal,
    UnsupportedCharacteristic,
    ideal_power,
    jacobson_radical,
    nilpotency_index,
    prime_radical_of_ideal,
    two_sided_ideal_generated,
)

F2, F3 = GF(2), GF(3)


def s3(F):
    table, names = symmetric_group_table(3)
    return group_algebra(F, table, names)


def largest_nilpotent_ideal(a):
    """Sum of every nilpotent ideal, found by enumerating all ideals."""
    out = Ideal.zero(a)
    for i in exhaustive_ideal_enumeration(a):
        if ideal_power(i, a.dim + 1).is_zero:
            out = out + i
    return out


@pytest.mark.parametrize("a,dim", [
    (s3(F2), 1),
    (group_algebra(F2, cyclic_group_table(4)), 3),
    (s3(F3), 4),
    (upper_triangular_algebra(F2, 2), 1),
    (upper_triangular_algebra(F3, 3), 3),
    (matrix_algebra(F2, 2), 0),
])
def test_radical_over_small_fields(a, dim):
    rad = jacobson_radical(a)
    assert rad.dim == dim
    assert rad == largest_nilpotent_ideal(a)


def test_radical_over_q():
    assert jacobson_radical(s3(QQ)).is_zero
    t3 = upper_triangular_algebra(QQ, 3)
    rad = jacobson_radical(t3)
    assert rad.describe() == "span{e12, e13, e23}"
    assert nilpotency_index(rad) == 3


def test_trace_method_refuses_small_characteristic():
    with pytest.raises(UnsupportedCharacteristic):
        jacobson_radical(s3(F2), method="trace")
    assert jacobson_radical(s3(GF(7)), method="trace").is_zero


def test_generated_ideals_in_matrix_algebra_are_trivial():
    m = matrix_algebra(QQ, 3)
    assert two_sided_ideal_generated(m, [m.e("e13").coords]).is_whole
    assert two_sided_ideal_generated(m, []).is_zero


def test_ideal_lattice_operations():
    t2 = upper_triangular_algebra(QQ, 2)
    j = two_sided_ideal_generated(t2, [t2.e("e12").coords])
    a = two_sided_ideal_generated(t2, [t2.e("e11").coords])
    assert j <= a and (a * a) == a
    assert (j * j).is_zero
    assert (a & two_sided_ideal_generated(t2, [t2.e("e22").coords])) == j
    assert prime_radical_of_ideal(t2, Ideal.zero(t2)) == j


def test_ideal_counts_over_f2():
    assert len(exhaustive_ideal_enumeration(matrix_algebra(F2, 2))) == 2
    assert len(exhaustive_ideal_enumeration(upper_triangular_algebra(F2, 2))) == 5


def test_matrix_subalgebra_radical_is_nilpotent():
    m = matrix_algebra(QQ, 3)
    sub, _ = subalgebra_from_generators(m, [m.e("e12"), m.e("e23"), m.e("e33")])
    rad = jacobson_radical(sub)
    assert not rad.is_zero and ideal_power(rad, 3).is_zero
