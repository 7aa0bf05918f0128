import pytest
from hypothesis import given, strategies as st

from strategies import arrays, fields
from ybelab.algebra import dual_bimodule, regular_bimodule
from ybelab.field import QQ, Field, NoHalfError
from ybelab.fixtures import dual_numbers, nil2, ut2, zero_alg2
from ybelab.operators import OperatorContext, gmybe_array, o_operator_residual, rota_baxter_residual
from ybelab.tensors import (
    NotSymmetricError,
    aayb_residual,
    aguiar_map,
    aybe_residual,
    beta_circle_products,
    coproduct,
    coproduct_dual_table,
    dual_product,
    dual_product_is_associative,
    dual_product_table,
    eaybe_residual,
    gaybe_residual,
    invariance_tri_check,
    is_skew,
    is_symmetric,
    map_as_tensor,
    operator_form_array,
    operator_form_residual,
    switch13,
    sym_skew_split,
    tensor_as_map,
    transpose_t,
    weight_one_arrays,
)

SMALL = (nil2, dual_numbers, zero_alg2, ut2)


def flagship(f=QQ):
    U = ut2(f)
    t = f.zeros(3, 3)
    t[0, 1], t[1, 0] = 1, -1
    return U, f.array(t)


def dual_ctx(A, **kw):
    return OperatorContext(A, dual_bimodule(regular_bimodule(A)), check=False, **kw)


def test_tensor_map_convention():
    f = QQ
    assert f.is_zero(tensor_as_map(f.zeros(2, 2)))
    t = f.array([[0, 1], [0, 0]])
    F = tensor_as_map(t)
    # e1 (x) e2 sends e1* to e2 and e2* to 0
    assert list(F[:, 0]) == [0, 1] and list(F[:, 1]) == [0, 0]
    assert f.equal(transpose_t(t), f.array([[0, 0], [1, 0]]))


def test_split_examples():
    f = QQ
    s = f.array([[1, 2], [2, 3]])
    a, b = sym_skew_split(f, s)
    assert f.is_zero(a) and f.equal(b, s)
    k = f.array([[0, 2], [-2, 0]])
    a, b = sym_skew_split(f, k)
    assert f.equal(a, k) and f.is_zero(b)
    a, b = sym_skew_split(f, f.array([[0, 1], [0, 0]]))
    assert f.equal(a, f.array([["0", "1/2"], ["-1/2", "0"]]))
    assert f.equal(b, f.array([["0", "1/2"], ["1/2", "0"]]))
    with pytest.raises(NoHalfError):
        sym_skew_split(Field(2), Field(2).zeros(2, 2))


def test_aybe_examples():
    A = nil2()
    assert QQ.is_zero(aybe_residual(A, QQ.zeros(2, 2)))
    assert QQ.is_zero(aybe_residual(A, QQ.array([[0, 0], [0, 1]])))
    U, r = flagship()
    res = aybe_residual(U, r)
    assert res.shape == (3, 3, 3) and QQ.is_zero(res)


def test_aybe_nonsolution():
    A = nil2()
    # r = e1 (x) e1: only the r12 r13 term survives, giving e2 (x) e1 (x) e1
    res = aybe_residual(A, QQ.array([[1, 0], [0, 0]]))
    assert res[1, 0, 0] == 1 and int((res != 0).sum()) == 3


def test_switch13():
    f = QQ
    u = f.zeros(2, 2, 2)
    u[0, 1, 0] = 1
    assert f.equal(switch13(u), u)
    u[0, 0, 1] = 5
    assert switch13(u)[1, 0, 0] == 5
    assert f.equal(switch13(switch13(u)), u)


def test_eaybe_reductions():
    U, r = flagship()
    for eps in (0, 1, "1/4", -3):
        assert QQ.equal(eaybe_residual(U, r, eps), aybe_residual(U, r))
    t = QQ.array([[1, 2, 0], [0, 1, 0], [3, 0, 1]])
    assert QQ.equal(eaybe_residual(U, t, 0), aybe_residual(U, t))


def test_gaybe_examples():
    U, r = flagship()
    assert QQ.is_zero(gaybe_residual(U, r))
    assert QQ.is_zero(gaybe_residual(U, QQ.zeros(3, 3)))
    assert gaybe_residual(U, r).shape == (3, 3, 3, 3)


def test_invariance_examples():
    D = dual_numbers()
    assert invariance_tri_check(D, QQ.zeros(2, 2)) == (True, True, True)
    # s = x (x) x with x the nilpotent generator
    assert invariance_tri_check(D, QQ.array([[0, 0], [0, 1]])) == (True, True, True)
    assert invariance_tri_check(D, QQ.array([[1, 0], [0, 0]])) == (False, False, False)
    with pytest.raises(NotSymmetricError):
        invariance_tri_check(D, QQ.array([[0, 1], [0, 0]]))


def test_operator_form_examples():
    U, r = flagship()
    assert operator_form_residual(U, r).passed
    assert operator_form_residual(U, QQ.zeros(3, 3)).passed
    A = nil2()
    rep = operator_form_residual(A, QQ.array([[1, 0], [0, 0]]))
    assert not rep.passed and rep["eq:aybeform"].witness == (0, 0)


def test_coproduct_and_dual_product():
    U, r = flagship()
    assert QQ.is_zero(coproduct(U, QQ.zeros(3, 3)))
    zero = dual_product(U, QQ.zeros(3, 3))
    assert QQ.is_zero(zero.table) and zero.tag == "dual_product"
    assert dual_product_is_associative(U, r)


def test_aguiar_examples():
    A = nil2()
    assert QQ.is_zero(aguiar_map(A, QQ.zeros(2, 2)))
    assert QQ.is_zero(aguiar_map(A, QQ.array([[0, 0], [0, 1]])))
    # every triple product in Nil2 vanishes
    assert QQ.is_zero(aguiar_map(A, QQ.array([[1, 0], [0, 0]])))
    U = ut2()
    # r = E11 (x) E22: P(E12) = E11 E12 E22 = E12
    t = QQ.zeros(3, 3)
    t[0, 2] = 1
    P = aguiar_map(U, t)
    assert list(P[:, 1]) == [0, 1, 0] and QQ.is_zero(P[:, [0, 2]])


def test_beta_circle_examples():
    D = dual_numbers()
    plus, minus = beta_circle_products(D, QQ.zeros(2, 2))
    assert QQ.is_zero(plus.table) and QQ.is_zero(minus.table)
    s = QQ.array([[0, 0], [0, 1]])
    plus, minus = beta_circle_products(D, s)
    assert plus.is_associative(QQ) and minus.is_associative(QQ)
    assert (plus.tag, minus.tag) == ("circle_plus", "circle_minus")
    with pytest.raises(ValueError):
        beta_circle_products(D, QQ.array([[1, 0], [0, 0]]))


def test_weight_one_degenerates_for_skew():
    U, r = flagship()
    plus, minus = weight_one_arrays(U, r)
    weight0 = gmybe_array(dual_ctx(U), tensor_as_map(r))
    assert QQ.equal(plus, weight0)
    assert QQ.is_zero(plus) and QQ.is_zero(minus)


def test_flagship_three_routes():
    U, r = flagship()
    assert QQ.is_zero(aybe_residual(U, r))
    assert operator_form_residual(U, r).passed
    assert o_operator_residual(dual_ctx(U), tensor_as_map(r)).passed


# --- properties ------------------------------------------------------------------


@given(st.data())
def test_map_tensor_roundtrip(data):
    f = data.draw(fields())
    t = data.draw(arrays(f, (3, 3)))
    assert f.equal(map_as_tensor(tensor_as_map(t)), t)
    assert f.equal(transpose_t(transpose_t(t)), t)


@given(st.data())
def test_split_parts(data):
    f = data.draw(fields(odd=True))
    t = data.draw(arrays(f, (3, 3)))
    a, b = sym_skew_split(f, t)
    assert f.equal(f.reduce(a + b), t)
    assert is_skew(f, a) and is_symmetric(b)


@given(st.data())
def test_aayb_is_aybe_of_opposite(data):
    f = data.draw(fields())
    A = data.draw(st.sampled_from(SMALL))(f)
    t = data.draw(arrays(f, (A.dim, A.dim)))
    assert f.equal(aayb_residual(A, t), aybe_residual(A.opposite(), t))


@given(st.data())
def test_aayb_switch13_for_skew(data):
    f = data.draw(fields(odd=True))
    A = data.draw(st.sampled_from(SMALL))(f)
    t = data.draw(arrays(f, (A.dim, A.dim)))
    r = f.reduce(t - t.T)
    assert f.equal(aayb_residual(A, r), switch13(aybe_residual(A, r)))


@given(st.data())
def test_eaybe_equals_aybe_for_skew(data):
    f = data.draw(fields())
    A = data.draw(st.sampled_from(SMALL))(f)
    t = data.draw(arrays(f, (A.dim, A.dim)))
    r = f.reduce(t - t.T)
    eps = f.scalar(data.draw(st.integers(-3, 3)))
    assert f.equal(eaybe_residual(A, r, eps), aybe_residual(A, r))


@given(st.data())
def test_operator_form_iff_aybe(data):
    f = data.draw(fields())
    A = data.draw(st.sampled_from(SMALL))(f)
    t = data.draw(arrays(f, (A.dim, A.dim)))
    assert f.is_zero(aybe_residual(A, t)) == f.is_zero(operator_form_array(A, t))


@given(st.data())
def test_invariance_booleans_equal(data):
    f = data.draw(fields())
    A = data.draw(st.sampled_from(SMALL))(f)
    t = data.draw(arrays(f, (A.dim, A.dim)))
    s = f.reduce(t + t.T)
    inv, bal, hom = invariance_tri_check(A, s)
    assert inv == bal == hom


@given(st.data())
def test_dual_product_routes_agree(data):
    f = data.draw(fields())
    A = data.draw(st.sampled_from(SMALL))(f)
    t = data.draw(arrays(f, (A.dim, A.dim)))
    assert f.equal(coproduct_dual_table(A, t), dual_product_table(A, t))
    assert dual_product_is_associative(A, t) == f.is_zero(gaybe_residual(A, t))


@given(st.data())
def test_aguiar_map_rota_baxter(data):
    f = data.draw(fields())
    A = data.draw(st.sampled_from(SMALL))(f)
    t = data.draw(arrays(f, (A.dim, A.dim)))
    if not f.is_zero(aayb_residual(A, t)):
        return
    assert rota_baxter_residual(A, aguiar_map(A, t), 0).passed


@given(st.data())
def test_skew_aybe_iff_weight_zero_o_operator(data):
    f = data.draw(fields())
    A = data.draw(st.sampled_from(SMALL))(f)
    t = data.draw(arrays(f, (A.dim, A.dim)))
    r = f.reduce(t - t.T)
    assert f.is_zero(aybe_residual(A, r)) == o_operator_residual(dual_ctx(A), tensor_as_map(r)).passed


@given(st.data())
def test_circle_products_associative(data):
    f = data.draw(fields())
    A = data.draw(st.sampled_from(SMALL))(f)
    t = data.draw(arrays(f, (A.dim, A.dim)))
    s = f.reduce(t + t.T)
    if not all(invariance_tri_check(A, s)):
        return
    plus, minus = beta_circle_products(A, s)
    assert plus.is_associative(f) and minus.is_associative(f)
