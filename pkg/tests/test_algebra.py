import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncspec.algebra import (
    Algebra,
    AlgebraHom,
    ValidationError,
    center,
    cyclic_group_table,
    direct_product,
    group_algebra,
    identity_hom,
    matrix_algebra,
    product_projection,
    quotient_algebra,
    regular_bimodule,
    subalgebra_from_generators,
    symmetric_group_table,
    upper_triangular_algebra,
)
from ncspec.exactlin import GF, QQ
from ncspec.ideals import two_sided_ideal_generated

F5 = GF(5)


def test_matrix_units_multiply():
    m = matrix_algebra(QQ, 2)
    assert m.e("e12") * m.e("e21") == m.e("e11")
    assert m.e("e21") * m.e("e12") == m.e("e22")
    assert not (m.e("e12") * m.e("e12"))
    assert m.one() == m.e("e11") + m.e("e22")


def test_group_algebra_of_s3():
    table, names = symmetric_group_table(3)
    a = group_algebra(QQ, table, names)
    assert a.dim == 6 and not a.is_commutative()
    assert center(a).dim == 3
    c4 = group_algebra(QQ, cyclic_group_table(4))
    assert c4.is_commutative() and center(c4).dim == 4


def test_center_of_matrix_and_triangular():
    assert center(matrix_algebra(QQ, 3)).dim == 1
    assert center(upper_triangular_algebra(QQ, 2)).dim == 1


def test_non_associative_table_names_the_triple():
    # basis 1, x with x*x = 1 + x is fine; corrupt one product
    good = Algebra(QQ, [[[1, 0], [0, 1]], [[0, 1], [1, 1]]], [1, 0], ["1", "x"])
    assert good.dim == 2
    m = matrix_algebra(QQ, 2)
    mul = [[list(v) for v in row] for row in m.mul]
    mul[1][2] = [0, 0, 0, 1]  # e12 * e21 should be e11
    with pytest.raises(ValidationError, match=r"associativity fails at triple \("):
        Algebra(QQ, mul, m.unit, m.labels)


def test_bad_unit_is_reported():
    with pytest.raises(ValidationError, match="unit law"):
        Algebra(QQ, [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [0, 1])


def test_hom_validation():
    t2 = upper_triangular_algebra(QQ, 2)
    m2 = matrix_algebra(QQ, 2)
    # inclusion T2 -> M2
    incl = AlgebraHom(t2, m2, [m2.e("e11").coords, m2.e("e12").coords, m2.e("e22").coords])
    assert incl.is_injective() and not incl.is_surjective()
    with pytest.raises(ValidationError):
        AlgebraHom(t2, m2, [m2.e("e11").coords, m2.e("e21").coords, m2.e("e22").coords])
    with pytest.raises(ValidationError):
        AlgebraHom(t2, m2, [m2.zero(), m2.zero(), m2.zero()])


def test_direct_product_and_projection():
    a, b = matrix_algebra(QQ, 2), upper_triangular_algebra(QQ, 2)
    p = direct_product(a, b)
    assert p.dim == 7
    pr = product_projection(a, b, p, which=1)
    assert pr.is_surjective() and pr.kernel().dim == 4


def test_quotient_by_radical_of_t2():
    t2 = upper_triangular_algebra(QQ, 2)
    i = two_sided_ideal_generated(t2, [t2.e("e12").coords])
    q, pi = quotient_algebra(t2, i)
    assert q.dim == 2 and q.is_commutative()
    assert pi.kernel() == i.carrier


def test_subalgebra_is_idempotent():
    m = matrix_algebra(F5, 2)
    sub, incl = subalgebra_from_generators(m, [m.e("e12")])
    assert sub.dim == 2
    again, _ = subalgebra_from_generators(m, [incl.apply(b) for b in sub.basis()])
    assert again.dim == sub.dim
    whole, _ = subalgebra_from_generators(m, [m.e("e12"), m.e("e21")])
    assert whole.dim == 4


def test_regular_bimodule_actions_commute():
    t2 = upper_triangular_algebra(QQ, 2)
    m2 = matrix_algebra(QQ, 2)
    f = AlgebraHom(t2, m2, [m2.e("e11").coords, m2.e("e12").coords, m2.e("e22").coords])
    for orientation in ("R-S", "S-R"):
        regular_bimodule(f, orientation).validate()
    with pytest.raises(ValueError):
        regular_bimodule(f, "X")


def test_identity_and_composition():
    a = matrix_algebra(QQ, 2)
    i = identity_hom(a)
    assert i.compose(i).matrix == i.matrix


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=4, max_size=4),
       st.lists(st.integers(0, 4), min_size=4, max_size=4),
       st.lists(st.integers(0, 4), min_size=4, max_size=4))
def test_matrix_algebra_is_associative(x, y, z):
    m = matrix_algebra(F5, 2)
    x, y, z = m.element(x), m.element(y), m.element(z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
