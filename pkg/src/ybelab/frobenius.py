"""Frobenius forms and transport of operators between A and A*.

Dual-basis convention: e*_i(e_j) = delta_ij.  The map phi: A -> A* with
B(x, y) = <phi(x), y> has matrix ``Bmat.T``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import Algebra, ShapeError, dual_bimodule, regular_bimodule
from .field import exact_einsum
from .operators import GateError, OperatorContext, balanced_residual, extended_o_residual, rota_baxter_residual
from .report import Check, Report, equivalence_check, residual_check
from .tensors import aybe_residual, eaybe_residual, invariance_tri_check, is_symmetric, map_as_tensor


class DegenerateForm(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class BilinearForm:
    algebra: Algebra
    Bmat: np.ndarray

    def __post_init__(self):
        f = self.algebra.field
        B = f.array(self.Bmat)
        n = self.algebra.dim
        if B.shape != (n, n):
            raise ShapeError(f"form matrix must be {n} x {n}, got {B.shape}")
        object.__setattr__(self, "Bmat", B)

    @property
    def field(self):
        return self.algebra.field

    @cached_property
    def symmetric(self) -> bool:
        return is_symmetric(self.Bmat)

    @cached_property
    def nondegenerate(self) -> bool:
        return self.field.is_invertible(self.Bmat)

    def __call__(self, x, y):
        f = self.field
        return f.scalar(f.einsum("i,ij,j->", f.array(x), self.Bmat, f.array(y)).item())


def invariance_residual(B: BilinearForm) -> np.ndarray:
    """B(e_i e_j, e_k) - B(e_i, e_j e_k), indexed [i, j, k]."""
    f = B.field
    c = B.algebra.c
    return f.reduce(exact_einsum("ijm,mk->ijk", c, B.Bmat) - exact_einsum("jkm,im->ijk", c, B.Bmat))


def validate_frobenius(A: Algebra, B: BilinearForm, require_symmetric: bool = False) -> Report:
    f = A.field
    if B.algebra.dim != A.dim:
        raise ShapeError("form is over an algebra of a different dimension")
    checks = [
        Check("nondegenerate", B.nondegenerate, detail={"rank": f.rank(B.Bmat)}),
        residual_check("invariant", invariance_residual(B), 3),
    ]
    if require_symmetric:
        checks.append(residual_check("symmetric", f.reduce(B.Bmat - B.Bmat.T), 2))
    return Report(tuple(checks))


def phi(B: BilinearForm) -> np.ndarray:
    if not B.nondegenerate:
        raise DegenerateForm("bilinear form is degenerate")
    return B.Bmat.T.copy()


def phi_inverse(B: BilinearForm) -> np.ndarray:
    return B.field.inverse(phi(B))


def form_from_invariant_tensor(A: Algebra, s) -> BilinearForm:
    """B with phi = s^{-1}, for s symmetric, invariant and invertible."""
    f = A.field
    s = f.array(s)
    if not is_symmetric(s) or not all(invariance_tri_check(A, s)):
        raise GateError("tensor is not symmetric and invariant")
    S = s.T  # s as a map A* -> A
    if not f.is_invertible(S):
        raise DegenerateForm("tensor is not invertible as a map A* -> A")
    return BilinearForm(A, f.inverse(S).T)


def adjoint_check(F, B: BilinearForm) -> dict[str, bool]:
    """Independent flags: B(F x, y) = B(x, F y) and B(F x, y) = -B(x, F y)."""
    f = B.field
    F = f.array(F)
    if F.shape != B.Bmat.shape:
        raise ShapeError("endomorphism and form have different sizes")
    left = f.reduce(F.T @ B.Bmat)
    right = f.reduce(B.Bmat @ F)
    return {
        "self_adjoint": f.equal(left, right),
        "skew_adjoint": f.is_zero(f.reduce(left + right)),
    }


def transport(F, B: BilinearForm) -> np.ndarray:
    """F o phi^{-1}: A* -> A."""
    f = B.field
    return f.reduce(f.array(F) @ phi_inverse(B))


def intertwining_checks(B: BilinearForm) -> Report:
    """phi(x R(y)) = phi(x) L*(y) and R*(y) phi(z) = phi(L(y) z) on basis pairs."""
    A = B.algebra
    f = A.field
    P = phi(B)
    D = dual_bimodule(regular_bimodule(A))
    xRy = exact_einsum("yjx,aj->yxa", A.R, P)
    phix_Lstar = exact_einsum("yaj,jx->yxa", D.right, P)
    Ly_z = exact_einsum("yjz,aj->yza", A.L, P)
    Rstar_phiz = exact_einsum("yaj,jz->yza", D.left, P)
    return Report((
        residual_check("eq:invariant1", f.reduce(xRy - phix_Lstar), 2),
        residual_check("eq:invariant2", f.reduce(Rstar_phiz - Ly_z), 2),
    ))


def _contexts(A: Algebra, kappa):
    reg = OperatorContext(A, regular_bimodule(A), kappa=kappa, check=False)
    dual = OperatorContext(A, dual_bimodule(regular_bimodule(A)), kappa=kappa, check=False)
    return reg, dual


def verify_frobenius_equivalence(alpha, beta, B: BilinearForm, kappa) -> Report:
    """Boolean equalities for the transport theorem on a symmetric Frobenius algebra.

    Item 1 is always evaluated (the balanced homomorphism gate is part of
    both sides).  Items 2a and 2b need beta to be a balanced homomorphism
    and alpha skew-adjoint; item 2c needs alpha skew-adjoint.  Items whose
    hypotheses fail are reported as skipped.
    """
    A = B.algebra
    f = A.field
    kappa = f.scalar(kappa)
    frob = validate_frobenius(A, B, require_symmetric=True)
    if not frob.passed:
        raise GateError("form is not a symmetric Frobenius form", frob)
    alpha, beta = f.array(alpha), f.array(beta)
    if not adjoint_check(beta, B)["self_adjoint"]:
        raise GateError("beta is not self-adjoint")
    reg, dual = _contexts(A, kappa)
    a_t, b_t = transport(alpha, B), transport(beta, B)
    base = extended_o_residual(reg, alpha, beta, gate="hom").passed
    moved = extended_o_residual(dual, a_t, b_t, gate="hom").passed
    checks = [equivalence_check("thm:equivalence:1", base, moved)]
    skew = adjoint_check(alpha, B)["skew_adjoint"]
    beta_hom = balanced_residual(reg.replace(kappa=1), beta, check_hom=True).passed
    for sign, s in (("+", 1), ("-", -1)):
        r = map_as_tensor(f.reduce(a_t + s * b_t))
        if skew and beta_hom:
            eps = f.scalar((kappa + 1) * f.inv(4))
            lhs = f.is_zero(eaybe_residual(A, r, eps))
            checks.append(equivalence_check("thm:equivalence:2a" + sign, lhs, base))
            if kappa == f.scalar(-1):
                checks.append(equivalence_check("thm:equivalence:2b" + sign, f.is_zero(aybe_residual(A, r)), base))
        else:
            checks.append(Check("thm:equivalence:2a" + sign, True, detail={"skipped": "hypotheses"}))
    if skew:
        lhs = f.is_zero(aybe_residual(A, map_as_tensor(a_t)))
        rhs = rota_baxter_residual(A, alpha, 0).passed
        checks.append(equivalence_check("thm:equivalence:2c", lhs, rhs))
    else:
        checks.append(Check("thm:equivalence:2c", True, detail={"skipped": "alpha not skew-adjoint"}))
    return Report(tuple(checks))
