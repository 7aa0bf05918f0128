"""Rota-Baxter operators, O-operators and their extended (modified) versions.

Operators ``R -> A`` are (dim A) x (dim R) matrices.  Every residual is an
array indexed by basis tuples of the source followed by target coordinates;
reports name each identity by its equation label.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    Algebra,
    Bimodule,
    ShapeError,
    associator,
    image_products,
    left_table,
    push,
    regular_bimodule_algebra,
    right_table,
    validate_bimodule_algebra,
    with_product,
    InvalidStructure,
)
from .field import Field, exact_combination, exact_einsum
from .report import Check, Report, equivalence_check, residual_check


class GateError(ValueError):
    """A precondition on the modification map failed."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report


GATES = ("hom", "balanced", None)


@dataclass(frozen=True, eq=False)
class OperatorContext:
    """An algebra A, an A-bimodule algebra R, a weight and two masses."""

    A: Algebra
    R: Bimodule
    lam: object = 0
    kappa: object = 0
    mu: object = 0
    check: bool = True

    def __post_init__(self):
        f = self.A.field
        if self.R.field != f:
            raise ValueError("field mismatch between A and R")
        for name in ("lam", "kappa", "mu"):
            object.__setattr__(self, name, f.scalar(getattr(self, name)))
        if self.check:
            rep = validate_bimodule_algebra(self.A, self.R)
            if not rep.passed:
                raise InvalidStructure("R is not an A-bimodule algebra", rep)

    @property
    def field(self) -> Field:
        return self.A.field

    @property
    def d(self) -> np.ndarray:
        return self.R.product

    def replace(self, **kw) -> "OperatorContext":
        args = dict(A=self.A, R=self.R, lam=self.lam, kappa=self.kappa, mu=self.mu, check=False)
        args.update(kw)
        return OperatorContext(**args)

    def as_map(self, alpha) -> np.ndarray:
        a = self.field.array(alpha)
        if a.shape != (self.A.dim, self.R.dim):
            raise ShapeError(f"map R -> A must be {self.A.dim} x {self.R.dim}, got {a.shape}")
        return a


def regular_context(A: Algebra, lam=0, kappa=0, mu=0) -> OperatorContext:
    """(A, ., L, R) as its own bimodule algebra."""
    return OperatorContext(A, regular_bimodule_algebra(A), lam, kappa, mu, check=False)


@dataclass(frozen=True, eq=False)
class ProductTable:
    table: np.ndarray
    tag: str

    @property
    def dim(self) -> int:
        return self.table.shape[0]

    def is_associative(self, f: Field) -> bool:
        return f.is_zero(associator(f, self.table))


# --- residual arrays -------------------------------------------------------


def rb_array(A: Algebra, P, lam) -> np.ndarray:
    """P(e_i)P(e_j) - P(P(e_i)e_j) - P(e_iP(e_j)) - lam P(e_ie_j), indexed [i, j, :]."""
    f = A.field
    P = f.array(P)
    lam = f.scalar(lam)
    c = A.c
    out = exact_combination(
        (1, "ai,bj,abk->ijk", P, P, c),
        (-1, "ai,ajk,lk->ijl", P, c, P),
        (-1, "bj,ibk,lk->ijl", P, c, P),
        (-lam, "ijk,lk->ijl", c, P),
    )
    return f.reduce(out)


def star_table(ctx: OperatorContext, alpha) -> np.ndarray:
    """u *_alpha v = l(alpha(u))v + u r(alpha(v)) + lam u o v."""
    f = ctx.field
    alpha = ctx.as_map(alpha)
    return f.reduce(left_table(ctx.R, alpha) + right_table(ctx.R, alpha) + ctx.lam * ctx.d)


def gmybe_array(ctx: OperatorContext, alpha, beta=None) -> np.ndarray:
    """Left minus right side of the extended O-operator identity, [u, v, :]."""
    f = ctx.field
    alpha = ctx.as_map(alpha)
    c, d, left, right = ctx.A.c, ctx.d, ctx.R.left, ctx.R.right
    # alpha(u)alpha(v) - alpha(l(alpha(u))v + u r(alpha(v)) + lam u o v), contracted in one pass
    terms = [
        (1, "ai,bj,abk->ijk", alpha, alpha, c),
        (-1, "ai,akj,lk->ijl", alpha, left, alpha),
        (-1, "aj,aki,lk->ijl", alpha, right, alpha),
        (-ctx.lam, "ijk,lk->ijl", d, alpha),
    ]
    if beta is not None:
        beta = ctx.as_map(beta)
        terms += [(-ctx.kappa, "ai,bj,abk->ijk", beta, beta, c), (-ctx.mu, "ijk,lk->ijl", d, beta)]
    return f.reduce(exact_combination(*terms))


def ksy_array(ctx: OperatorContext, beta) -> np.ndarray:
    beta = ctx.as_map(beta)
    return ctx.field.reduce(ctx.kappa * (left_table(ctx.R, beta) - right_table(ctx.R, beta)))


def mueq_array(ctx: OperatorContext, beta) -> np.ndarray:
    """mu (l(beta(u o v)) w - u r(beta(v o w))), indexed [u, v, w, :]."""
    f = ctx.field
    beta = ctx.as_map(beta)
    bd = push(f, beta, ctx.d)
    out = exact_einsum("uva,akw->uvwk", bd, ctx.R.left) - exact_einsum("vwa,aku->uvwk", bd, ctx.R.right)
    return f.reduce(ctx.mu * out)


def hom_arrays(ctx: OperatorContext, beta) -> tuple[np.ndarray, np.ndarray]:
    """beta(l(x)u) - x beta(u) and beta(u r(x)) - beta(u) x, both [x, u, :]."""
    f = ctx.field
    beta = ctx.as_map(beta)
    c = ctx.A.c
    left = exact_einsum("xku,ak->xua", ctx.R.left, beta) - exact_einsum("au,xak->xuk", beta, c)
    right = exact_einsum("xku,ak->xua", ctx.R.right, beta) - exact_einsum("au,axk->xuk", beta, c)
    return f.reduce(left), f.reduce(right)


def condition_array(ctx: OperatorContext, alpha) -> np.ndarray:
    """l(K(u,v))w - u r(K(v,w)) with K(u,v) = alpha(u)alpha(v) - alpha(u * v); [u, v, w, :]."""
    f = ctx.field
    alpha = ctx.as_map(alpha)
    K = image_products(ctx.A, alpha, alpha) - push(f, alpha, star_table(ctx, alpha))
    out = exact_einsum("uva,akw->uvwk", K, ctx.R.left) - exact_einsum("vwa,aku->uvwk", K, ctx.R.right)
    return f.reduce(out)


# --- reports ---------------------------------------------------------------


def rota_baxter_residual(A: Algebra, P, lam=0) -> Report:
    P = A.field.array(P)
    if P.shape != (A.dim, A.dim):
        raise ShapeError(f"operator must be {A.dim} x {A.dim}, got {P.shape}")
    return Report((residual_check("eq:rbo", rb_array(A, P, lam), 2, weight=A.field.format(lam)),))


def o_operator_residual(ctx: OperatorContext, alpha) -> Report:
    return Report((residual_check("eq:aop", gmybe_array(ctx, alpha), 2),))


def balanced_residual(ctx: OperatorContext, beta, check_hom: bool = True) -> Report:
    checks = [
        residual_check("eq:ksy", ksy_array(ctx, beta), 2),
        residual_check("eq:mueq", mueq_array(ctx, beta), 3),
    ]
    if check_hom:
        left, right = hom_arrays(ctx, beta)
        checks.append(residual_check("eq:bimoho:left", left, 2))
        checks.append(residual_check("eq:bimoho:right", right, 2))
    return Report(tuple(checks))


def _gate_report(ctx: OperatorContext, beta, gate) -> Report:
    if gate not in GATES:
        raise ValueError(f"gate must be one of {GATES}")
    if gate is None:
        return Report()
    rep = balanced_residual(ctx, beta, check_hom=(gate == "hom"))
    return Report(tuple(Check("gate:" + c.id, c.passed, c.witness, c.residual, c.detail) for c in rep.checks))


def extended_o_residual(ctx: OperatorContext, alpha, beta, gate: str | None = "hom") -> Report:
    """Gate checks (prefixed ``gate:``) followed by the identity itself.

    ``gate="hom"`` requires beta to be a balanced bimodule homomorphism of
    mass (kappa, mu), ``"balanced"`` only the balance conditions, ``None``
    evaluates the raw identity.
    """
    return _gate_report(ctx, beta, gate) + Report((residual_check("eq:gmybe", gmybe_array(ctx, alpha, beta), 2),))


def star_product(ctx: OperatorContext, alpha) -> ProductTable:
    return ProductTable(star_table(ctx, alpha), "star_alpha")


def assoc_criterion_check(ctx: OperatorContext, alpha) -> tuple[bool, bool]:
    """(associativity of *_alpha, vanishing of the criterion), computed separately."""
    f = ctx.field
    assoc = f.is_zero(associator(f, star_table(ctx, alpha)))
    criterion = f.is_zero(condition_array(ctx, alpha))
    return assoc, criterion


def diamond_gate(ctx: OperatorContext, beta) -> Report:
    """beta must be a balanced homomorphism of mass (-1, +-lam); both signs impose the same conditions."""
    return balanced_residual(ctx.replace(kappa=-1, mu=ctx.lam), beta, check_hom=True)


def diamond_products(ctx: OperatorContext, beta, bypass: bool = False) -> tuple[ProductTable, ProductTable]:
    f = ctx.field
    beta = ctx.as_map(beta)
    if not bypass:
        rep = diamond_gate(ctx, beta)
        if not rep.passed:
            raise GateError("beta is not a balanced homomorphism of mass (-1, +-lam)", rep)
    lt = left_table(ctx.R, beta)
    plus = f.reduce(ctx.lam * ctx.d - 2 * lt)
    minus = f.reduce(ctx.lam * ctx.d + 2 * lt)
    return ProductTable(plus, "diamond_plus"), ProductTable(minus, "diamond_minus")


def verify_ansatz(ctx: OperatorContext, dplus, dminus, bypass: bool = False) -> Report:
    """Both signs: (alpha, beta) extended O-operator of mass (-1, +-lam) iff
    delta_+- is an O-operator of weight 1 for the diamond products."""
    f = ctx.field
    half = f.half
    dplus, dminus = ctx.as_map(dplus), ctx.as_map(dminus)
    alpha = f.reduce(half * (dplus + dminus))
    beta = f.reduce(half * (dplus - dminus))
    gate = diamond_gate(ctx, beta)
    if not gate.passed and not bypass:
        raise GateError("antisymmetrizer fails the balanced homomorphism gate", gate)
    plus, minus = diamond_products(ctx, beta, bypass=True)
    checks = [Check("gate", gate.passed)]
    for sign, delta, table in (("+", dplus, plus), ("-", dminus, minus)):
        mu = ctx.lam if sign == "+" else -ctx.lam
        lhs = extended_o_residual(ctx.replace(kappa=-1, mu=mu), alpha, beta, gate=None).passed
        new = ctx.replace(R=with_product(ctx.R, table.table), lam=1)
        rhs = o_operator_residual(new, delta).passed
        checks.append(equivalence_check("thm:ansatz:" + sign, lhs, rhs))
    return Report(tuple(checks))


def check_averaging(A: Algebra, beta) -> Report:
    f = A.field
    beta = f.array(beta)
    bb = image_products(A, beta, beta)
    x_by = push(f, beta, exact_einsum("bj,ibk->ijk", beta, A.c))
    bx_y = push(f, beta, exact_einsum("ai,ajk->ijk", beta, A.c))
    return Report((
        residual_check("averaging:left", f.reduce(bb - x_by), 2),
        residual_check("averaging:right", f.reduce(bb - bx_y), 2),
    ))


def check_nijenhuis(A: Algebra, beta) -> Report:
    f = A.field
    beta = f.array(beta)
    bb = image_products(A, beta, beta)
    b2xy = push(f, f.reduce(beta @ beta), A.c)
    inner = exact_einsum("bj,ibk->ijk", beta, A.c) + exact_einsum("ai,ajk->ijk", beta, A.c)
    return Report((residual_check("nijenhuis", f.reduce(bb + b2xy - push(f, beta, inner)), 2),))


def pgmybe_array(A: Algebra, alpha, lam, kappa_hat) -> np.ndarray:
    """alpha(x)alpha(y) - alpha(alpha(x)y + x alpha(y) + lam xy) - kappa_hat xy."""
    f = A.field
    ctx = regular_context(A, lam=lam)
    return f.reduce(gmybe_array(ctx, alpha) - f.scalar(kappa_hat) * A.c)


def shift_equivalence(A: Algebra, alpha, lam) -> Report:
    """For both signs: alpha solves the identity with kappa_hat = -1 +- lam
    iff alpha +- id is Rota-Baxter of weight lam -+ 2 ("alpha +- 1" read as alpha +- id)."""
    f = A.field
    alpha = f.array(alpha)
    lam = f.scalar(lam)
    ident = f.identity(A.dim)
    # the kappa_hat-free part is shared by both signs
    quad = gmybe_array(regular_context(A, lam=lam), alpha)
    checks = []
    for sign, s in (("+", 1), ("-", -1)):
        lhs = f.is_zero(f.reduce(quad - f.scalar(-1 + s * lam) * A.c))
        rhs = rota_baxter_residual(A, f.reduce(alpha + s * ident), lam - 2 * s).passed
        checks.append(equivalence_check("co:mop:" + sign, lhs, rhs))
    return Report(tuple(checks))


def rescale(f: Field, alpha, lam):
    """An O-operator of nonzero weight lam divided by lam has weight 1."""
    lam = f.scalar(lam)
    if lam == 0:
        raise ZeroDivisionError("weight must be nonzero")
    return f.scale(f.inv(lam), f.array(alpha))
