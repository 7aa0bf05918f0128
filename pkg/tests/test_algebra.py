import numpy as np
import pytest
from hypothesis import given, strategies as st

from strategies import arrays, fields
from ybelab.algebra import (
    Algebra,
    Bimodule,
    BimoduleAlgebra,
    InvalidStructure,
    MatchedPair,
    ShapeError,
    change_basis,
    direct_sum,
    dual_bimodule,
    matched_pair_sum,
    regular_bimodule,
    regular_bimodule_algebra,
    semidirect_sum,
    split_algebra,
    validate_algebra,
    validate_bimodule,
    validate_bimodule_algebra,
    validate_matched_pair,
    zero_bimodule,
)
from ybelab.field import QQ, Field
from ybelab.fixtures import FIXTURES, dual_numbers, fixture, m2, nil2, ut2, zero_alg2


@pytest.mark.parametrize("name", sorted(FIXTURES))
@pytest.mark.parametrize("f", [QQ, Field(2), Field(3)], ids=str)
def test_fixtures_are_associative(name, f):
    assert validate_algebra(fixture(name, f)).passed


def test_failing_table_witness():
    f = QQ
    c = f.zeros(2, 2, 2)
    # e1e1=e1, e1e2=e2, e2e1=e1 and the perturbed e2e2=e1
    c[0, 0, 0] = c[0, 1, 1] = c[1, 0, 0] = c[1, 1, 0] = 1
    rep = validate_algebra(c, f)
    assert not rep.passed
    # (e2 e1) e2 = e1 e2 = e2 against e2 (e1 e2) = e2 e2 = e1
    assert rep["assoc"].witness == (1, 0, 1)
    assert rep["assoc"].residual == (-1, 1)


def test_unperturbed_table_is_associative():
    f = QQ
    c = f.zeros(2, 2, 2)
    c[0, 0, 0] = c[0, 1, 1] = c[1, 0, 0] = c[1, 1, 1] = 1
    assert validate_algebra(c, f).passed


def test_shape_errors():
    with pytest.raises(ShapeError):
        Algebra(QQ, np.zeros((2, 2, 3), dtype=object))
    with pytest.raises(TypeError):
        validate_algebra(np.zeros((2, 2, 2), dtype=object))


def test_regular_actions():
    A = nil2()
    V = regular_bimodule(A)
    assert A.field.equal(V.left[0], A.field.array([[0, 0], [1, 0]]))
    assert A.field.equal(V.right[0], V.left[0])
    U = ut2()
    # L(E11): E11 -> E11, E12 -> E12, E22 -> 0
    assert U.field.equal(regular_bimodule(U).left[0], U.field.array([[1, 0, 0], [0, 1, 0], [0, 0, 0]]))
    Z = regular_bimodule(zero_alg2())
    assert QQ.is_zero(Z.left) and QQ.is_zero(Z.right)


def test_products_and_actions_agree():
    U = ut2()
    V = regular_bimodule(U)
    for i in range(3):
        for j in range(3):
            prod = U.mul(U.basis(i), U.basis(j))
            assert U.field.equal(V.act_left(U.basis(i), U.basis(j)), prod)
            assert U.field.equal(V.act_right(U.basis(i), U.basis(j)), prod)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_dual_pairing(name):
    A = fixture(name)
    V = regular_bimodule(A)
    D = dual_bimodule(V)
    f = A.field
    n = A.dim
    for x in range(n):
        for u in range(n):
            for v in range(n):
                # <u* l*(x), v> = <u*, l(x) v> and <r*(x) u*, v> = <u*, v r(x)>
                assert D.right[x][:, u][v] == V.left[x][u, v]
                assert D.left[x][:, u][v] == V.right[x][u, v]
    assert validate_bimodule(A, D).passed
    twice = dual_bimodule(D)
    assert f.equal(twice.left, V.left) and f.equal(twice.right, V.right)


def test_dual_of_zero_is_zero():
    A = nil2()
    D = dual_bimodule(zero_bimodule(A, 3))
    assert QQ.is_zero(D.left) and QQ.is_zero(D.right)


def test_bimodule_validation_examples():
    A = nil2()
    assert validate_bimodule(A, zero_bimodule(A, 2)).passed
    assert validate_bimodule(A, regular_bimodule(A)).passed
    left = A.field.zeros(2, 2, 2)
    left[0] = A.field.identity(2)
    rep = validate_bimodule(A, Bimodule(A, left, A.field.zeros(2, 2, 2)))
    assert not rep.passed
    # L(e1 e1) = L(e2) = 0 against L(e1)^2 = I
    assert rep["left-module"].witness == (0, 0)


def test_bimodule_algebra_examples():
    A = nil2()
    assert validate_bimodule_algebra(A, regular_bimodule(A)).passed
    assert validate_bimodule_algebra(A, regular_bimodule_algebra(A)).passed
    # Nil2 with L(e1) removed stays compatible: every affected term lands on e1 e2 = 0
    R = regular_bimodule_algebra(A)
    left = R.left.copy()
    left[0] = A.field.zeros(2, 2)
    assert validate_bimodule_algebra(A, BimoduleAlgebra(A, left, R.right, R.d)).passed
    # DualNum with its own product and right action removed: (u r(x)) o w = 0 but u o (l(x) w) != 0
    D = dual_numbers()
    R = regular_bimodule_algebra(D)
    bad = BimoduleAlgebra(D, R.left, D.field.zeros(2, 2, 2), R.d)
    rep = validate_bimodule_algebra(D, bad)
    assert [c.id for c in rep.checks if not c.passed] == ["eq:twoalg3b"]
    assert rep["eq:twoalg3b"].witness == (0, 0, 0)


def test_semidirect_sums():
    A = nil2()
    C = semidirect_sum(A, regular_bimodule(A))
    assert C.dim == 4 and validate_algebra(C).passed
    D = semidirect_sum(A, dual_bimodule(regular_bimodule(A)))
    assert D.dim == 4 and validate_algebra(D).passed
    Z = semidirect_sum(A, zero_bimodule(A, 2))
    assert QQ.equal(Z.c[:2, :2, :2], A.c)
    assert QQ.is_zero(Z.c[2:]) and QQ.is_zero(Z.c[:, 2:])
    with pytest.raises(InvalidStructure):
        left = A.field.zeros(2, 2, 2)
        left[0] = A.field.identity(2)
        semidirect_sum(A, Bimodule(A, left, A.field.zeros(2, 2, 2)))


def test_semidirect_equals_matched_pair_sum():
    A = dual_numbers()
    R = regular_bimodule_algebra(A)
    z = A.field.zeros(2, 2, 2)
    mp = MatchedPair(A, R.as_algebra(), R.left, R.right, z, z)
    assert validate_matched_pair(mp).passed
    assert matched_pair_sum(mp).same_as(semidirect_sum(A, R))


def test_zero_matched_pair():
    A, B = zero_alg2(), zero_alg2()
    z = QQ.zeros(2, 2, 2)
    mp = MatchedPair(A, B, z, z, z, z)
    assert validate_matched_pair(mp).passed
    assert QQ.is_zero(matched_pair_sum(mp).c)


def test_ut2_split():
    U = ut2()
    mp = split_algebra(U, [0, 2], [1])
    f = U.field
    # lA(E11) E12 = E12 and E12 rA(E22) = E12
    assert mp.lA[0][0, 0] == 1 and mp.lA[1][0, 0] == 0
    assert mp.rA[1][0, 0] == 1 and mp.rA[0][0, 0] == 0
    assert f.is_zero(mp.lB) and f.is_zero(mp.rB)
    assert validate_matched_pair(mp).passed
    assert matched_pair_sum(mp).same_as(U.permuted([0, 2, 1]))


def test_split_closure():
    assert validate_matched_pair(split_algebra(ut2(), [1], [0, 2])).passed
    C = m2()
    # E12 E21 = E11 leaves the span of {E12, E21}
    with pytest.raises(InvalidStructure):
        split_algebra(C, [1, 2], [0, 3])
    with pytest.raises(ValueError):
        split_algebra(C, [0], [1])


def test_block_diagonal_split_has_zero_actions():
    C = direct_sum(nil2(), dual_numbers())
    mp = split_algebra(C, [0, 1], [2, 3])
    f = C.field
    for name in ("lA", "rA", "lB", "rB"):
        assert f.is_zero(getattr(mp, name))
    assert mp.A.same_as(nil2()) and mp.B.same_as(dual_numbers())


def test_strict_mode_is_stronger():
    # M2 = span{E11, E12} + span{E21, E22} is a genuine matched pair
    mp = split_algebra(m2(), [0, 1], [2, 3])
    assert validate_matched_pair(mp).passed
    strict = validate_matched_pair(mp, strict=True)
    assert strict["eq:2.8:lhs=0"].witness == (1, 0, 0)
    assert strict["eq:2.9:lhs=0"].witness == (0, 1, 0)


@given(st.data())
def test_change_basis_preserves_associativity(data):
    f = data.draw(fields())
    P = data.draw(arrays(f, (3, 3)))
    if not f.is_invertible(P):
        return
    B = change_basis(ut2(f), P)
    assert validate_algebra(B).passed
    assert change_basis(B, f.inverse(P)).same_as(ut2(f))


@given(st.data())
def test_split_then_sum_roundtrip(data):
    f = data.draw(fields())
    P = f.zeros(4, 4)
    P[:2, :2] = data.draw(arrays(f, (2, 2)))
    P[2:, 2:] = data.draw(arrays(f, (2, 2)))
    if not f.is_invertible(P):
        return
    C = change_basis(m2(f), P)
    mp = split_algebra(C, [0, 1], [2, 3])
    assert validate_matched_pair(mp).passed
    assert matched_pair_sum(mp).same_as(C)


@given(st.data())
def test_dual_is_involutive(data):
    f = data.draw(fields())
    left = data.draw(arrays(f, (2, 3, 3)))
    right = data.draw(arrays(f, (2, 3, 3)))
    V = Bimodule(nil2(f), left, right)
    W = dual_bimodule(dual_bimodule(V))
    assert f.equal(W.left, V.left) and f.equal(W.right, V.right)


@given(st.data())
def test_random_actions_dual_validity_matches(data):
    f = data.draw(st.sampled_from([Field(2), Field(3)]))
    A = data.draw(st.sampled_from([nil2(f), dual_numbers(f), zero_alg2(f)]))
    left = data.draw(arrays(f, (2, 1, 1)))
    right = data.draw(arrays(f, (2, 1, 1)))
    V = Bimodule(A, left, right)
    assert validate_bimodule(A, V).passed == validate_bimodule(A, dual_bimodule(V)).passed
