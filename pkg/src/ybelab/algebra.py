"""Algebras, bimodules, bimodule algebras and matched pairs by structure constants.

Conventions (fixed everywhere in the package):

* ``c[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``.
* A linear map is a (target x source) matrix whose column ``j`` is the image
  of source basis vector ``j``.
* Actions are stored as matrix families ``left[i]`` / ``right[i]`` of shape
  (m, m), both applied to column vectors: ``l(e_i) v = left[i] @ v`` and
  ``v r(e_i) = right[i] @ v``.  The right-module axiom therefore reads
  ``right(x y) = right(y) @ right(x)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .field import Field, exact_einsum
from .report import Check, Report, residual_check


class ShapeError(ValueError):
    pass


class InvalidStructure(ValueError):
    """A construction received data that fails its validator."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report


def _shape(a: np.ndarray, shape: tuple, what: str):
    if np.shape(a) != shape:
        raise ShapeError(f"{what}: expected shape {shape}, got {np.shape(a)}")


@dataclass(frozen=True, eq=False)
class Algebra:
    field: Field
    c: np.ndarray
    labels: tuple[str, ...] | None = None
    name: str | None = None

    def __post_init__(self):
        c = np.asarray(self.c, dtype=object)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]) or c.shape[0] < 1:
            raise ShapeError(f"structure constants must be n x n x n with n >= 1, got {c.shape}")
        object.__setattr__(self, "c", self.field.array(c))
        if self.labels is not None and len(self.labels) != c.shape[0]:
            raise ShapeError("one label per basis vector")

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i + 1}"

    def mul(self, x, y) -> np.ndarray:
        return self.field.einsum("i,j,ijk->k", np.asarray(x, dtype=object), np.asarray(y, dtype=object), self.c)

    def basis(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = self.field.scalar(1)
        return v

    @property
    def L(self) -> np.ndarray:
        """Left multiplication matrices: ``L[i] @ y == e_i y``."""
        return self.c.transpose(0, 2, 1)

    @property
    def R(self) -> np.ndarray:
        """Right multiplication matrices: ``R[i] @ y == y e_i``."""
        return self.c.transpose(1, 2, 0)

    def opposite(self) -> "Algebra":
        return Algebra(self.field, self.c.transpose(1, 0, 2), self.labels)

    def permuted(self, order: Sequence[int]) -> "Algebra":
        """The same algebra in the basis ``e_{order[0]}, e_{order[1]}, ...``."""
        o = list(order)
        if sorted(o) != list(range(self.dim)):
            raise ValueError("order must be a permutation of the basis")
        c = self.c[np.ix_(o, o, o)]
        labels = tuple(self.labels[i] for i in o) if self.labels else None
        return Algebra(self.field, c, labels)

    def same_as(self, other: "Algebra") -> bool:
        return self.field == other.field and self.field.equal(self.c, other.c)


@dataclass(frozen=True, eq=False)
class Bimodule:
    """(V, l, r) over ``algebra``; ``left``/``right`` have shape (n, m, m)."""

    algebra: Algebra
    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        f = self.algebra.field
        left = f.array(self.left)
        right = f.array(self.right)
        n = self.algebra.dim
        if left.ndim != 3 or left.shape[0] != n or left.shape[1] != left.shape[2]:
            raise ShapeError(f"left actions must be {n} x m x m, got {left.shape}")
        _shape(right, left.shape, "right actions")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.left.shape[1]

    @property
    def product(self) -> np.ndarray:
        """Internal multiplication; zero for a plain bimodule."""
        return self.field.zeros(self.dim, self.dim, self.dim)

    def act_left(self, x, v) -> np.ndarray:
        return self.field.einsum("i,ijk,k->j", x, self.left, v)

    def act_right(self, v, x) -> np.ndarray:
        return self.field.einsum("i,ijk,k->j", x, self.right, v)


@dataclass(frozen=True, eq=False)
class BimoduleAlgebra(Bimodule):
    """(R, o, l, r): a bimodule that also carries a product ``d[i, j, k]``."""

    d: np.ndarray | None = None

    def __post_init__(self):
        super().__post_init__()
        m = self.dim
        d = self.field.zeros(m, m, m) if self.d is None else self.field.array(self.d)
        _shape(d, (m, m, m), "bimodule algebra product")
        object.__setattr__(self, "d", d)

    @property
    def product(self) -> np.ndarray:
        return self.d

    def as_algebra(self) -> Algebra:
        return Algebra(self.field, self.d)


def with_product(V: Bimodule, d: np.ndarray) -> BimoduleAlgebra:
    return BimoduleAlgebra(V.algebra, V.left, V.right, d)


def as_bimodule_algebra(V: Bimodule) -> BimoduleAlgebra:
    if isinstance(V, BimoduleAlgebra):
        return V
    return BimoduleAlgebra(V.algebra, V.left, V.right)


@dataclass(frozen=True, eq=False)
class MatchedPair:
    """(A, B, l_A, r_A, l_B, r_B): l_A, r_A act on B; l_B, r_B act on A."""

    A: Algebra
    B: Algebra
    lA: np.ndarray
    rA: np.ndarray
    lB: np.ndarray
    rB: np.ndarray

    def __post_init__(self):
        if self.A.field != self.B.field:
            raise ValueError("field mismatch between the two algebras")
        f = self.A.field
        n, m = self.A.dim, self.B.dim
        for name, shape in (("lA", (n, m, m)), ("rA", (n, m, m)), ("lB", (m, n, n)), ("rB", (m, n, n))):
            a = f.array(getattr(self, name))
            _shape(a, shape, name)
            object.__setattr__(self, name, a)

    @property
    def field(self) -> Field:
        return self.A.field

    @property
    def B_on_A(self) -> Bimodule:
        return Bimodule(self.B, self.lB, self.rB)

    @property
    def A_on_B(self) -> Bimodule:
        return Bimodule(self.A, self.lA, self.rA)


# --- bilinear tables -------------------------------------------------------
#
# A "table" T[i, j, :] holds the coordinates of some bilinear expression in
# the basis vectors (u_i, v_j).  Everything below is exact einsum arithmetic.


def left_table(V: Bimodule, alpha: np.ndarray) -> np.ndarray:
    """T[i, j] = l(alpha(v_i)) v_j for alpha: V -> A (n x m matrix)."""
    return V.field.einsum("ai,akj->ijk", alpha, V.left)


def right_table(V: Bimodule, alpha: np.ndarray) -> np.ndarray:
    """T[i, j] = v_i r(alpha(v_j))."""
    return V.field.einsum("aj,aki->ijk", alpha, V.right)


def image_products(A: Algebra, alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """T[i, j] = alpha(v_i) . beta(v_j) in A."""
    return A.field.einsum("ai,bj,abk->ijk", alpha, beta, A.c)


def push(f: Field, M: np.ndarray, T: np.ndarray) -> np.ndarray:
    """Apply the linear map ``M`` to the last axis of ``T``."""
    return f.einsum("...k,lk->...l", T, M)


def associator(f: Field, c: np.ndarray) -> np.ndarray:
    """(e_i e_j) e_k - e_i (e_j e_k), indexed [i, j, k, :]."""
    return f.reduce(exact_einsum("ijm,mkl->ijkl", c, c) - exact_einsum("jkm,iml->ijkl", c, c))


def is_associative(f: Field, c: np.ndarray) -> bool:
    return f.is_zero(associator(f, c))


# --- validators ------------------------------------------------------------


def validate_algebra(c, f: Field | None = None) -> Report:
    """Associativity over all basis triples; accepts raw constants or an Algebra."""
    if isinstance(c, Algebra):
        f, c = c.field, c.c
    if not isinstance(f, Field):
        raise TypeError("a Field is required")
    c = f.array(c)
    if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
        raise ShapeError(f"structure constants must be n x n x n, got {c.shape}")
    return Report((residual_check("assoc", associator(f, c), 3),))


def _module_checks(A: Algebra, left: np.ndarray, right: np.ndarray, prefix: str = "") -> tuple[Check, ...]:
    f = A.field
    # left(e_i e_j) - left(e_i) left(e_j)
    lhom = f.reduce(exact_einsum("ijk,kab->ijab", A.c, left) - exact_einsum("iab,jbc->ijac", left, left))
    # right(e_i e_j) - right(e_j) right(e_i)
    rhom = f.reduce(exact_einsum("ijk,kab->ijab", A.c, right) - exact_einsum("jab,ibc->ijac", right, right))
    # right(e_j) left(e_i) - left(e_i) right(e_j), indexed [i, j]
    comp = f.reduce(exact_einsum("jab,ibc->ijac", right, left) - exact_einsum("iab,jbc->ijac", left, right))
    return (
        residual_check(prefix + "left-module", lhom, 2),
        residual_check(prefix + "right-module", rhom, 2),
        residual_check(prefix + "compatibility", comp, 2),
    )


def validate_bimodule(A: Algebra, V: Bimodule) -> Report:
    if V.algebra.dim != A.dim:
        raise ShapeError("bimodule is over an algebra of a different dimension")
    return Report(_module_checks(A, V.left, V.right))


def bimodule_algebra_residuals(A: Algebra, left, right, d) -> dict[str, np.ndarray]:
    """Residual arrays for the three product-compatibility identities."""
    f = A.field
    # l(x)(v o w) - (l(x) v) o w      [x, v, w, :]
    e1 = f.reduce(exact_einsum("vwk,xak->xvwa", d, left) - exact_einsum("xkv,kwa->xvwa", left, d))
    # (v o w) r(x) - v o (w r(x))     [x, v, w, :]
    e2 = f.reduce(exact_einsum("vwk,xak->xvwa", d, right) - exact_einsum("xkw,vka->xvwa", right, d))
    # (v r(x)) o w - v o (l(x) w)     [x, v, w, :]
    e3 = f.reduce(exact_einsum("xkv,kwa->xvwa", right, d) - exact_einsum("xkw,vka->xvwa", left, d))
    return {"eq:twoalg1": e1, "eq:twoalg2": e2, "eq:twoalg3": e3}


def validate_bimodule_algebra(A: Algebra, R: Bimodule) -> Report:
    if R.algebra.dim != A.dim:
        raise ShapeError("bimodule algebra is over an algebra of a different dimension")
    f = A.field
    d = R.product
    lm, rm, comp = _module_checks(A, R.left, R.right)
    res = bimodule_algebra_residuals(A, R.left, R.right, d)
    return Report((
        residual_check("R:assoc", associator(f, d), 3),
        Check("eq:twoalg1a", lm.passed, lm.witness, lm.residual),
        residual_check("eq:twoalg1b", res["eq:twoalg1"], 3),
        Check("eq:twoalg2a", rm.passed, rm.witness, rm.residual),
        residual_check("eq:twoalg2b", res["eq:twoalg2"], 3),
        Check("eq:twoalg3a", comp.passed, comp.witness, comp.residual),
        residual_check("eq:twoalg3b", res["eq:twoalg3"], 3),
    ))


def matched_pair_residuals(mp: MatchedPair, strict: bool = False) -> dict[str, np.ndarray]:
    """Residuals of the six matched-pair compatibility identities.

    Index order: A-arguments are x, y; B-arguments are a, b (as in the
    defining identities).  In ``strict`` mode the two cross identities are
    additionally required to vanish on each side separately.
    """
    f = mp.field
    cA, cB = mp.A.c, mp.B.c
    lA, rA, lB, rB = mp.lA, mp.rA, mp.lB, mp.rB
    E = exact_einsum
    out = {}
    # l_A(x)(a o b) = l_A(x r_B(a)) b + (l_A(x) a) o b              [x, a, b, :]
    out["eq:2.4"] = E("abk,xqk->xabq", cB, lA) - (E("akx,kqb->xabq", rB, lA) + E("xka,kbq->xabq", lA, cB))
    # (a o b) r_A(x) = a r_A(l_B(b) x) + a o (b r_A(x))             [x, a, b, :]
    out["eq:2.5"] = E("abk,xqk->xabq", cB, rA) - (E("bkx,kqa->xabq", lB, rA) + E("xkb,akq->xabq", rA, cB))
    # l_B(a)(x y) = l_B(a r_A(x)) y + (l_B(a) x) y                  [a, x, y, :]
    out["eq:2.6"] = E("xyk,aqk->axyq", cA, lB) - (E("xka,kqy->axyq", rA, lB) + E("akx,kyq->axyq", lB, cA))
    # (x y) r_B(a) = x r_B(l_A(y) a) + x (y r_B(a))                 [a, x, y, :]
    out["eq:2.7"] = E("xyk,aqk->axyq", cA, rB) - (E("yka,kqx->axyq", lA, rB) + E("aky,xkq->axyq", rB, cA))
    # l_A(l_B(a) x) b + (a r_A(x)) o b = a r_A(x r_B(b)) + a o (l_A(x) b)   [x, a, b, :]
    lhs8 = E("akx,kqb->xabq", lB, lA) + E("xka,kbq->xabq", rA, cB)
    rhs8 = E("bkx,kqa->xabq", rB, rA) + E("xkb,akq->xabq", lA, cB)
    # l_B(l_A(x) a) y + (x r_B(a)) y = x r_B(a r_A(y)) + x (l_B(a) y)       [a, x, y, :]
    lhs9 = E("xka,kqy->axyq", lA, lB) + E("akx,kyq->axyq", rB, cA)
    rhs9 = E("yka,kqx->axyq", rA, rB) + E("aky,xkq->axyq", lB, cA)
    out["eq:2.8"] = lhs8 - rhs8
    out["eq:2.9"] = lhs9 - rhs9
    if strict:
        out["eq:2.8:lhs=0"] = lhs8
        out["eq:2.9:lhs=0"] = lhs9
    return {k: f.reduce(v) for k, v in out.items()}


def validate_matched_pair(mp: MatchedPair, strict: bool = False) -> Report:
    f = mp.field
    checks = [
        residual_check("A:assoc", associator(f, mp.A.c), 3),
        residual_check("B:assoc", associator(f, mp.B.c), 3),
    ]
    checks += _module_checks(mp.A, mp.lA, mp.rA, "A-bimodule B:")
    checks += _module_checks(mp.B, mp.lB, mp.rB, "B-bimodule A:")
    for k, v in matched_pair_residuals(mp, strict).items():
        checks.append(residual_check(k, v, 3))
    return Report(tuple(checks))


# --- constructions ---------------------------------------------------------


def regular_bimodule(A: Algebra) -> Bimodule:
    """(A, L, R)."""
    return Bimodule(A, A.L, A.R)


def regular_bimodule_algebra(A: Algebra) -> BimoduleAlgebra:
    """(A, ., L, R)."""
    return BimoduleAlgebra(A, A.L, A.R, A.c)


def dual_bimodule(V: Bimodule) -> Bimodule:
    """(V*, r*, l*) in the dual basis; the product (if any) is dropped."""
    return Bimodule(V.algebra, V.right.transpose(0, 2, 1), V.left.transpose(0, 2, 1))


def zero_bimodule(A: Algebra, m: int) -> Bimodule:
    z = A.field.zeros(A.dim, m, m)
    return Bimodule(A, z, z)


def matched_pair_sum(mp: MatchedPair, check: bool = True) -> Algebra:
    """A (+) B with basis [A | B] and the matched-pair product."""
    if check:
        rep = validate_matched_pair(mp)
        if not rep.passed:
            raise InvalidStructure("not a matched pair", rep)
    f = mp.field
    n, m = mp.A.dim, mp.B.dim
    c = f.zeros(n + m, n + m, n + m)
    c[:n, :n, :n] = mp.A.c
    c[n:, n:, n:] = mp.B.c
    # e_i f_q = e_i r_B(f_q) + l_A(e_i) f_q
    c[:n, n:, :n] = mp.rB.transpose(2, 0, 1)
    c[:n, n:, n:] = mp.lA.transpose(0, 2, 1)
    # f_p e_j = l_B(f_p) e_j + f_p r_A(e_j)
    c[n:, :n, :n] = mp.lB.transpose(0, 2, 1)
    c[n:, :n, n:] = mp.rA.transpose(2, 0, 1)
    labels = None
    if mp.A.labels or mp.B.labels:
        labels = tuple(mp.A.label(i) for i in range(n)) + tuple(mp.B.label(i) for i in range(m))
    return Algebra(f, c, labels)


def semidirect_sum(A: Algebra, R: Bimodule, check: bool = True) -> Algebra:
    """A |x R with (x1, v1)(x2, v2) = (x1 x2, l(x1) v2 + v1 r(x2) + v1 o v2)."""
    if check:
        rep = validate_bimodule_algebra(A, R)
        if not rep.passed:
            raise InvalidStructure("not an A-bimodule algebra", rep)
    f = A.field
    n, m = A.dim, R.dim
    c = f.zeros(n + m, n + m, n + m)
    c[:n, :n, :n] = A.c
    for i in range(n):
        for q in range(m):
            c[i, n + q, n:] = R.left[i][:, q]
            c[n + q, i, n:] = R.right[i][:, q]
    c[n:, n:, n:] = R.product
    return Algebra(f, c)


def split_algebra(C: Algebra, idxA: Sequence[int], idxB: Sequence[int]) -> MatchedPair:
    """Read off the matched pair of a direct-sum decomposition into two subalgebras."""
    a, b = list(idxA), list(idxB)
    if sorted(a + b) != list(range(C.dim)) or not a or not b:
        raise ValueError("idxA and idxB must partition the basis into two nonempty parts")
    n = len(a)
    c = C.permuted(a + b).c
    f = C.field
    if not f.is_zero(c[:n, :n, n:]):
        raise InvalidStructure("span of idxA is not a subalgebra")
    if not f.is_zero(c[n:, n:, :n]):
        raise InvalidStructure("span of idxB is not a subalgebra")
    A = Algebra(f, c[:n, :n, :n], tuple(C.label(i) for i in a) if C.labels else None)
    B = Algebra(f, c[n:, n:, n:], tuple(C.label(i) for i in b) if C.labels else None)
    return MatchedPair(
        A,
        B,
        lA=c[:n, n:, n:].transpose(0, 2, 1),
        rA=c[n:, :n, n:].transpose(1, 2, 0),
        lB=c[n:, :n, :n].transpose(0, 2, 1),
        rB=c[:n, n:, :n].transpose(1, 2, 0),
    )


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    f = A.field
    z = lambda r, s: f.zeros(r, s, s)  # noqa: E731
    return matched_pair_sum(MatchedPair(A, B, z(A.dim, B.dim), z(A.dim, B.dim), z(B.dim, A.dim), z(B.dim, A.dim)))


def change_basis(A: Algebra, P: np.ndarray) -> Algebra:
    """Structure constants in the basis whose vectors are the columns of ``P``."""
    f = A.field
    Pinv = f.inverse(P)
    return Algebra(f, f.einsum("ai,bj,abk,lk->ijl", P, P, A.c, Pinv))
