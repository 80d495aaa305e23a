from fractions import Fraction
from itertools import product

import pytest

import leibcohom as L
from leibcohom.linalg import QQ, GF, Matrix
from leibcohom.leibniz import (check_leibniz_identity, check_morphism,
                               AlgebraMorphism, DifferentialLieAlgebra,
                               derived_bracket_algebra, free_leibniz_truncated)


def test_lambda6_brackets(lambda6):
    e1, e2, e3 = (lambda6.basis_vector(i) for i in range(3))
    assert lambda6.bracket(e1, e3) == e2
    assert lambda6.bracket(e3, e3) == e1
    zero = [QQ.zero()] * 3
    assert lambda6.bracket(zero, e3) == zero


def test_lambda6_is_leibniz(lambda6):
    assert check_leibniz_identity(lambda6).ok


def test_abelian_is_leibniz():
    assert check_leibniz_identity(L.LeibnizAlgebra.zero_bracket(QQ, 4)).ok


def test_dim1_idempotent_violates():
    alg = L.LeibnizAlgebra(QQ, 1, [[[1]]])
    v = check_leibniz_identity(alg)
    assert not v.ok
    triples = [t for t, _ in v.violations]
    assert (0, 0, 0) in triples
    # residual = LHS - RHS = e_1 - 0
    assert v.violations[0][1] == [Fraction(1)]


def test_identity_morphism(lambda6):
    phi = AlgebraMorphism(lambda6, lambda6, Matrix.identity(QQ, 3))
    assert check_morphism(phi).ok


def diag(entries):
    return Matrix.from_rows(QQ, [[entries[i] if i == j else 0
                                  for j in range(3)] for i in range(3)])


def test_diag_automorphism(lambda6):
    # c -> diag(c^2, c^3, c) is an automorphism family; c = -1
    phi = AlgebraMorphism(lambda6, lambda6, diag([1, -1, -1]))
    assert check_morphism(phi).ok


def test_diag_non_morphism(lambda6):
    phi = AlgebraMorphism(lambda6, lambda6, diag([-1, 1, 1]))
    v = check_morphism(phi)
    assert not v.ok
    assert (2, 2) in [p for p, _ in v.violations]


def test_morphism_composition_closed(lambda6):
    a = AlgebraMorphism(lambda6, lambda6, diag([1, -1, -1]))
    b = AlgebraMorphism(lambda6, lambda6, diag([1, -1, -1]))
    assert check_morphism(a.compose(b)).ok


def two_dim_dgla():
    # [x, y] = y, d(x) = y, d(y) = 0
    z = 0
    structure = [[[z, z], [z, 1]], [[z, -1], [z, z]]]
    d = Matrix.from_rows(QQ, [[0, 0], [1, 0]])
    return DifferentialLieAlgebra(QQ, 2, structure, d)


def test_dgla_validates():
    assert two_dim_dgla().validate().ok


def test_derived_bracket_two_dim():
    alg = derived_bracket_algebra(two_dim_dgla())
    x, y = alg.basis_vector(0), alg.basis_vector(1)
    assert alg.bracket(x, x) == y
    zero = [QQ.zero()] * 2
    assert alg.bracket(x, y) == zero
    assert alg.bracket(y, x) == zero
    assert alg.bracket(y, y) == zero
    assert check_leibniz_identity(alg).ok


def test_derived_bracket_abelian():
    z = 0
    structure = [[[z, z], [z, z]], [[z, z], [z, z]]]
    d = Matrix.from_rows(QQ, [[0, 0], [1, 0]])
    alg = derived_bracket_algebra(DifferentialLieAlgebra(QQ, 2, structure, d))
    assert all(x == QQ.zero() for row in alg.structure for v in row for x in v)


def test_derived_bracket_zero_differential():
    dgla = two_dim_dgla()
    dgla.differential = Matrix.zero(QQ, 2, 2)
    alg = derived_bracket_algebra(dgla)
    assert all(x == QQ.zero() for row in alg.structure for v in row for x in v)


def test_derived_bracket_rejects_bad_dgla():
    bad = two_dim_dgla()
    bad.differential = Matrix.from_rows(QQ, [[1, 0], [0, 0]])  # d^2 != 0
    with pytest.raises(ValueError):
        derived_bracket_algebra(bad)


def test_free_leibniz_one_letter():
    alg, words = free_leibniz_truncated(1, 3)
    assert words == [(0,), (0, 0), (0, 0, 0)]
    v, vv, vvv = (alg.basis_vector(i) for i in range(3))
    assert alg.bracket(v, v) == vv
    assert alg.bracket(vv, v) == vvv
    assert alg.bracket(v, vv) == [QQ.zero()] * 3


def test_free_leibniz_truncation_degree_one():
    alg, _ = free_leibniz_truncated(3, 1)
    z = QQ.zero()
    assert all(x == z for row in alg.structure for v in row for x in v)


def test_free_leibniz_two_letters_degree_two():
    alg, words = free_leibniz_truncated(2, 2)
    i = words.index((0,))
    j = words.index((1,))
    out = alg.bracket(alg.basis_vector(i), alg.basis_vector(j))
    expected = alg.basis_vector(words.index((0, 1)))
    assert out == expected


def test_free_leibniz_identity_exact():
    alg, _ = free_leibniz_truncated(2, 3)
    assert check_leibniz_identity(alg).ok


def test_catalog_lambda6():
    entry = L.catalog("lambda6")
    nonzero = sum(1 for i in range(3) for j in range(3)
                  if any(x != QQ.zero() for x in entry.algebra.structure[i][j]))
    assert entry.algebra.dim == 3 and nonzero == 2


def test_catalog_abelian():
    entry = L.catalog("abelian_3")
    assert all(x == QQ.zero() for row in entry.algebra.structure
               for v in row for x in v)


def test_catalog_derived2_action_matrix():
    entry = L.catalog("derived2_f2_z2")
    assert entry.algebra.field == GF(2)
    assert entry.action.psi(1).data == [[1, 0], [1, 1]]
    assert L.validate_action(entry.action).ok


def test_catalog_unknown_name():
    with pytest.raises(KeyError):
        L.catalog("nope")


def test_catalog_entries_all_leibniz():
    for name in ["lambda6", "lambda6_z2", "abelian_1", "abelian_2", "abelian_3",
                 "free_leib(2,3)_perm", "derived2_f2_z2"]:
        entry = L.catalog(name)
        assert check_leibniz_identity(entry.algebra).ok, name
        if entry.action is not None:
            assert L.validate_action(entry.action).ok, name
