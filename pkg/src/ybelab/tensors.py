"""Two-tensors r in A (x) A, the associative Yang-Baxter family of equations,
and the operator-side readings of r.

A tensor ``r = sum t[i, j] e_i (x) e_j`` is stored as the n x n array ``t``.
As a map A* -> A it is F_r(e*_i) = sum_j t[i, j] e_j, i.e. the matrix
``t.T`` in the (target x source) convention; r^t has matrix ``t``.  All
triple products below are closed two-index expansions in the structure
constants, so no unit is ever adjoined.
"""
from __future__ import annotations

import numpy as np

from .algebra import Algebra, associator, dual_bimodule, left_table, push, regular_bimodule, right_table, image_products
from .field import Field, exact_einsum
from .operators import ProductTable
from .report import Report, residual_check


class InternalConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


class NotSymmetricError(ValueError):
    pass


def tensor_as_map(t: np.ndarray) -> np.ndarray:
    return np.asarray(t, dtype=object).T.copy()


def map_as_tensor(F: np.ndarray) -> np.ndarray:
    return np.asarray(F, dtype=object).T.copy()


def transpose_t(t: np.ndarray) -> np.ndarray:
    return np.asarray(t, dtype=object).T.copy()


def is_symmetric(t) -> bool:
    t = np.asarray(t, dtype=object)
    return not np.any(t != t.T)


def is_skew(f: Field, t) -> bool:
    t = np.asarray(t, dtype=object)
    return f.is_zero(f.reduce(t + t.T))


def sym_skew_split(f: Field, t) -> tuple[np.ndarray, np.ndarray]:
    """(alpha, beta) = ((r - r^t)/2, (r + r^t)/2); needs characteristic != 2."""
    t = f.array(t)
    h = f.half
    return f.reduce(h * (t - t.T)), f.reduce(h * (t + t.T))


def aybe_residual(A: Algebra, t) -> np.ndarray:
    """r12 r13 + r13 r23 - r23 r12 as an n x n x n coefficient array."""
    f = A.field
    t = f.array(t)
    c = A.c
    E = exact_einsum
    out = E("pb,qc,pqa->abc", t, t, c) + E("ap,bq,pqk->abk", t, t, c) - E("pc,ax,pxb->abc", t, t, c)
    return f.reduce(out)


def aayb_residual(A: Algebra, t) -> np.ndarray:
    """r13 r12 - r12 r23 + r23 r13, expanded as
    sum a_i a_j (x) b_j (x) b_i - a_i (x) b_i a_j (x) b_j + a_j (x) a_i (x) b_i b_j."""
    f = A.field
    t = f.array(t)
    c = A.c
    E = exact_einsum
    out = E("pc,qb,pqa->abc", t, t, c) - E("ap,qc,pqb->abc", t, t, c) + E("aq,bp,pqc->abc", t, t, c)
    return f.reduce(out)


def switch13(u: np.ndarray) -> np.ndarray:
    return np.asarray(u, dtype=object).transpose(2, 1, 0).copy()


def eaybe_rhs(A: Algebra, t) -> np.ndarray:
    """(r13 + r31)(r23 + r32) without the mass factor."""
    f = A.field
    t = f.array(t)
    c = A.c
    E = exact_einsum
    # four terms: a_i(x)a_j(x)b_ib_j + a_i(x)b_j(x)b_ia_j + b_i(x)a_j(x)a_ib_j + b_i(x)b_j(x)a_ia_j
    out = (
        E("ap,bq,pqk->abk", t, t, c)
        + E("ap,qb,pqk->abk", t, t, c)
        + E("pa,bq,pqk->abk", t, t, c)
        + E("pa,qb,pqk->abk", t, t, c)
    )
    return f.reduce(out)


def eaybe_residual(A: Algebra, t, eps) -> np.ndarray:
    f = A.field
    return f.reduce(aybe_residual(A, t) - f.scalar(eps) * eaybe_rhs(A, t))


def gaybe_from_aybe(A: Algebra, U: np.ndarray) -> np.ndarray:
    """(id (x) id (x) L(x) - R(x) (x) id (x) id) U for every basis x, indexed [x, a, b, c]."""
    f = A.field
    c = A.c
    return f.reduce(exact_einsum("abk,xkc->xabc", U, c) - exact_einsum("kbc,kxa->xabc", U, c))


def gaybe_residual(A: Algebra, t) -> np.ndarray:
    return gaybe_from_aybe(A, aybe_residual(A, t))


def invariance_array(A: Algebra, s) -> np.ndarray:
    """(id (x) L(x) - R(x) (x) id) s, indexed [x, a, b]."""
    f = A.field
    s = f.array(s)
    c = A.c
    return f.reduce(exact_einsum("aq,xqb->xab", s, c) - exact_einsum("pb,pxa->xab", s, c))


def coproduct(A: Algebra, t) -> np.ndarray:
    """Delta(e_x) = (id (x) L(e_x) - R(e_x) (x) id) r, indexed [x, a, b]."""
    return invariance_array(A, t)


def invariance_tri_check(A: Algebra, s) -> tuple[bool, bool, bool]:
    """(invariant, balanced on (A*,R*,L*), bimodule homomorphism) for symmetric s."""
    f = A.field
    s = f.array(s)
    if not is_symmetric(s):
        raise NotSymmetricError("invariance_tri_check needs a symmetric tensor")
    inv = f.is_zero(invariance_array(A, s))
    D = dual_bimodule(regular_bimodule(A))
    S = tensor_as_map(s)
    bal = f.is_zero(f.reduce(left_table(D, S) - right_table(D, S)))
    # s(R*(x) a*) - x s(a*)  and  s(a* L*(x)) - s(a*) x
    hl = exact_einsum("xka,bk->xab", D.left, S) - exact_einsum("ja,xjb->xab", S, A.c)
    hr = exact_einsum("xka,bk->xab", D.right, S) - exact_einsum("ja,jxb->xab", S, A.c)
    hom = f.is_zero(f.reduce(hl)) and f.is_zero(f.reduce(hr))
    return inv, bal, hom


def dual_product_table(A: Algebra, t) -> np.ndarray:
    """a* * b* = R*(r(a*))b* - a* L*(r^t(b*)) on the dual basis, [k, l, :]."""
    f = A.field
    t = f.array(t)
    D = dual_bimodule(regular_bimodule(A))
    return f.reduce(left_table(D, tensor_as_map(t)) - right_table(D, t))


def coproduct_dual_table(A: Algebra, t) -> np.ndarray:
    """The transpose of the coproduct as a product on A*: (e*_k * e*_l)(e_s) = Delta(e_s)[k, l]."""
    return np.asarray(coproduct(A, t)).transpose(1, 2, 0).copy()


def dual_product(A: Algebra, t) -> ProductTable:
    f = A.field
    via_delta = coproduct_dual_table(A, t)
    via_ops = dual_product_table(A, t)
    if not f.equal(via_delta, via_ops):
        raise InternalConsistencyError("dual product: coproduct and operator formulas disagree")
    return ProductTable(via_ops, "dual_product")


def operator_form_array(A: Algebra, t) -> np.ndarray:
    """r(a*) r(b*) - r(R*(r(a*))b* - a* L*(r^t(b*))), indexed [a*, b*, :]."""
    f = A.field
    t = f.array(t)
    F = tensor_as_map(t)
    return f.reduce(image_products(A, F, F) - push(f, F, dual_product_table(A, t)))


def operator_form_residual(A: Algebra, t) -> Report:
    return Report((residual_check("eq:aybeform", operator_form_array(A, t), 2),))


def aguiar_map(A: Algebra, t) -> np.ndarray:
    """P(x) = sum t[i, j] e_i x e_j as a matrix."""
    f = A.field
    t = f.array(t)
    c = A.c
    # e_i e_k = sum_m c[i,k,m] e_m ; e_m e_j = sum_l c[m,j,l] e_l
    return f.einsum("ij,ikm,mjl->lk", t, c, c)


def beta_circle_products(A: Algebra, s, check: bool = True) -> tuple[ProductTable, ProductTable]:
    """a* (.)+- b* = -+2 R*(s(a*)) b* for symmetric invariant s."""
    f = A.field
    s = f.array(s)
    if check and not all(invariance_tri_check(A, s)):
        from .operators import GateError

        raise GateError("tensor is not a symmetric invariant tensor")
    D = dual_bimodule(regular_bimodule(A))
    lt = left_table(D, tensor_as_map(s))
    return ProductTable(f.reduce(-2 * lt), "circle_plus"), ProductTable(f.reduce(2 * lt), "circle_minus")


def weight_one_arrays(A: Algebra, t) -> tuple[np.ndarray, np.ndarray]:
    """O-operator residuals of weight 1 for r against (A*, (.)+, R*, L*) and
    for -r^t against (A*, (.)-, R*, L*), with 2 beta = r + r^t."""
    f = A.field
    t = f.array(t)
    D = dual_bimodule(regular_bimodule(A))
    two_beta = f.reduce(t + t.T)
    lt = left_table(D, tensor_as_map(two_beta))
    out = []
    for F, circ in ((tensor_as_map(t), -lt), (f.reduce(-t), lt)):
        star = left_table(D, F) + right_table(D, F) + circ
        out.append(f.reduce(image_products(A, F, F) - push(f, F, star)))
    return out[0], out[1]


def weight_one_residuals(A: Algebra, t) -> Report:
    plus, minus = weight_one_arrays(A, t)
    return Report((residual_check("eq:opweight1", plus, 2), residual_check("eq:topweight1", minus, 2)))


def dual_product_is_associative(A: Algebra, t) -> bool:
    f = A.field
    return f.is_zero(associator(f, dual_product(A, t).table))
