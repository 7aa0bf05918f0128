"""Exhaustive enumeration over prime fields and certified solution sets.

Candidates are numbered lexicographically by their free coefficients (the
first free coefficient is the most significant digit).  A search splits the
index range into contiguous chunks, filters them in worker processes, and
merges the survivors into a sorted tuple, so the output does not depend on
the number of workers or on scheduling.
"""
from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable

import numpy as np

from .algebra import Algebra, Bimodule, regular_bimodule_algebra
from .field import Field
from .operators import OperatorContext, extended_o_residual, gmybe_array, rb_array
from .report import Check, Report
from .tensors import (
    InternalConsistencyError,
    aayb_residual,
    aybe_residual,
    dual_product_is_associative,
    eaybe_residual,
    gaybe_residual,
    operator_form_array,
)

DEFAULT_BUDGET = 10**7
SYMMETRIES = (None, "symmetric", "skew")


class BudgetExceeded(RuntimeError):
    def __init__(self, count: int, budget: int):
        super().__init__(f"search space has {count} candidates, budget is {budget}")
        self.count = count
        self.budget = budget


class UnknownPredicate(KeyError):
    pass


def budget() -> int:
    return int(float(os.environ.get("YBELAB_BUDGET", DEFAULT_BUDGET)))


@dataclass(frozen=True)
class SearchSpace:
    field: Field
    shape: tuple[int, int]
    symmetry: str | None = None
    kind: str = "tensor"

    def __post_init__(self):
        if self.field.is_rational:
            raise ValueError("search runs over prime fields only")
        if self.symmetry not in SYMMETRIES:
            raise ValueError(f"symmetry must be one of {SYMMETRIES}")
        if self.symmetry and self.shape[0] != self.shape[1]:
            raise ValueError("symmetry constraints need a square shape")
        object.__setattr__(self, "shape", tuple(int(s) for s in self.shape))

    @property
    def free(self) -> list[tuple[int, int]]:
        return free_positions(self.shape, self.symmetry, self.field.characteristic)

    @property
    def count(self) -> int:
        return self.field.characteristic ** len(self.free)

    def candidate(self, index: int) -> np.ndarray:
        p = self.field.characteristic
        digits = []
        for _ in self.free:
            index, d = divmod(index, p)
            digits.append(d)
        digits.reverse()
        return fill(self.field, self.shape, self.symmetry, digits)

    def to_json(self) -> dict:
        return {"field": self.field.label, "shape": list(self.shape), "symmetry": self.symmetry, "kind": self.kind}


def free_positions(shape, symmetry, characteristic: int) -> list[tuple[int, int]]:
    rows, cols = shape
    if symmetry is None:
        return [(i, j) for i in range(rows) for j in range(cols)]
    # in characteristic 2 skew and symmetric coincide, diagonal included
    strict = symmetry == "skew" and characteristic != 2
    return [(i, j) for i in range(rows) for j in range(i + int(strict), cols)]


def fill(f: Field, shape, symmetry, values) -> np.ndarray:
    """The array whose free coefficients (in lexicographic order) are ``values``."""
    out = f.zeros(*shape)
    sign = -1 if symmetry == "skew" else 1
    for (i, j), v in zip(free_positions(shape, symmetry, f.characteristic), values):
        out[i, j] = f.scalar(v)
        if symmetry and i != j:
            out[j, i] = f.scalar(sign * v)
    return out


def enumerate_space(space: SearchSpace, start: int = 0, stop: int | None = None):
    """Yield (index, candidate) in lexicographic order."""
    count = space.count
    if count > budget():
        raise BudgetExceeded(count, budget())
    stop = count if stop is None else min(stop, count)
    for index in range(start, stop):
        yield index, space.candidate(index)


# --- predicates --------------------------------------------------------------


def _zero(f: Field, arr) -> bool:
    return f.is_zero(arr)


def _p_aybe(pr, t):
    return _zero(pr.algebra.field, aybe_residual(pr.algebra, t))


def _p_aayb(pr, t):
    return _zero(pr.algebra.field, aayb_residual(pr.algebra, t))


def _p_eaybe(pr, t):
    return _zero(pr.algebra.field, eaybe_residual(pr.algebra, t, pr.param("eps")))


def _p_gaybe(pr, t):
    return _zero(pr.algebra.field, gaybe_residual(pr.algebra, t))


def _p_operator_form(pr, t):
    return _zero(pr.algebra.field, operator_form_array(pr.algebra, t))


def _p_dual_assoc(pr, t):
    return dual_product_is_associative(pr.algebra, t)


def _p_rb(pr, P):
    return _zero(pr.algebra.field, rb_array(pr.algebra, P, pr.param("lam", 0)))


def _context(pr) -> OperatorContext:
    R = pr.module if pr.module is not None else regular_bimodule_algebra(pr.algebra)
    return OperatorContext(
        pr.algebra, R, pr.param("lam", 0), pr.param("kappa", 0), pr.param("mu", 0), check=False
    )


def _p_o_op(pr, alpha):
    return _zero(pr.algebra.field, gmybe_array(_context(pr), alpha))


def _p_ext_o(pr, alpha):
    return extended_o_residual(_context(pr), alpha, pr.beta, gate="hom").passed


def _p_aybe_hom_form(pr, t):
    """AYBE solutions supported on the A (x) V* and V* (x) A blocks of a double with |A| = n."""
    n = pr.param("n")
    f = pr.algebra.field
    if not (f.is_zero(t[:n, :n]) and f.is_zero(t[n:, n:])):
        return False
    return _p_aybe(pr, t)


PREDICATES: dict[str, Callable] = {
    "aybe": _p_aybe,
    "aayb": _p_aayb,
    "eaybe": _p_eaybe,
    "gaybe": _p_gaybe,
    "operator_form": _p_operator_form,
    "dual_assoc": _p_dual_assoc,
    "rb": _p_rb,
    "o_op": _p_o_op,
    "ext_o": _p_ext_o,
    "aybe_hom_form": _p_aybe_hom_form,
}


@dataclass(frozen=True, eq=False)
class Predicate:
    """A registered residual test bound to an algebra and parameters; picklable."""

    name: str
    algebra: Algebra
    params: tuple = ()
    module: Bimodule | None = None
    beta: np.ndarray | None = dc_field(default=None, repr=False)

    def __post_init__(self):
        if self.name not in PREDICATES:
            raise UnknownPredicate(f"unknown predicate {self.name!r}; known: {', '.join(sorted(PREDICATES))}")
        params = self.params.items() if isinstance(self.params, dict) else self.params
        f = self.algebra.field
        object.__setattr__(self, "params", tuple(sorted((k, f.scalar(v) if k != "n" else int(v)) for k, v in params)))

    def param(self, key, default=None):
        for k, v in self.params:
            if k == key:
                return v
        if default is None:
            raise KeyError(f"predicate {self.name!r} needs parameter {key!r}")
        return default

    @property
    def id(self) -> str:
        f = self.algebra.field
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={f.format(v) if k != 'n' else v}" for k, v in self.params)
        return f"{self.name}({inner})"

    def __call__(self, candidate) -> bool:
        return bool(PREDICATES[self.name](self, candidate))


# --- search ------------------------------------------------------------------


def flat(f: Field, arr) -> tuple:
    return tuple(f.format(x) for x in np.asarray(arr, dtype=object).ravel())


def _scan(space: SearchSpace, predicate: Predicate, start: int, stop: int) -> list[tuple]:
    f = space.field
    return [flat(f, cand) for _, cand in enumerate_space(space, start, stop) if predicate(cand)]


def _chunks(count: int, workers: int) -> list[tuple[int, int]]:
    pieces = max(1, min(count, workers * 4))
    step = -(-count // pieces)
    return [(s, min(s + step, count)) for s in range(0, count, step)]


@dataclass(frozen=True)
class SolutionSet:
    space: SearchSpace
    predicate: str
    solutions: tuple
    rejected: int

    @property
    def count(self) -> int:
        return len(self.solutions)

    def arrays(self) -> list[np.ndarray]:
        f = self.space.field
        return [f.array(np.array(s, dtype=object).reshape(self.space.shape)) for s in self.solutions]

    def __contains__(self, arr) -> bool:
        return flat(self.space.field, arr) in set(self.solutions)

    def to_json(self) -> dict:
        return {
            "space": self.space.to_json(),
            "predicate": self.predicate,
            "count": self.count,
            "rejected": self.rejected,
            "solutions": [list(s) for s in self.solutions],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def search(space: SearchSpace, predicate: Predicate, workers: int = 1) -> SolutionSet:
    count = space.count
    if count > budget():
        raise BudgetExceeded(count, budget())
    if predicate.algebra.field != space.field:
        raise ValueError("predicate and search space use different fields")
    chunks = _chunks(count, workers)
    if workers <= 1:
        found = [_scan(space, predicate, a, b) for a, b in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan, space, predicate, a, b) for a, b in chunks]
            found = [fu.result() for fu in futures]
    solutions = tuple(sorted(set().union(*map(set, found))))
    result = SolutionSet(space, predicate.id, solutions, count - len(solutions))
    for arr in result.arrays():
        if not predicate(arr):
            raise InternalConsistencyError(f"solution {flat(space.field, arr)} fails re-verification")
    return result


def compare_sets(s1: SolutionSet, s2: SolutionSet, bijection: Callable | None = None) -> Report:
    """Set equality of s2 with the image of s1 under ``bijection`` (array -> array)."""
    f = s1.space.field
    if f != s2.space.field:
        raise ValueError("solution sets are over different fields")
    if bijection is None:
        image = set(s1.solutions)
    else:
        image = {flat(f, bijection(a)) for a in s1.arrays()}
    if len(image) != s1.count:
        return Report((Check("set_equal", False, detail={"reason": "map is not injective on s1"}),))
    target = set(s2.solutions)
    missing = sorted(image - target)
    extra = sorted(target - image)
    detail = {"lhs": s1.count, "rhs": s2.count, "only_lhs": len(missing), "only_rhs": len(extra)}
    witness = None
    if missing or extra:
        witness = ("lhs", *missing[0]) if missing else ("rhs", *extra[0])
    return Report((Check("set_equal", not missing and not extra, witness, detail=detail),))


# --- seeded random instances --------------------------------------------------


def random_scalar(f: Field, rng: random.Random, bound: int = 3):
    """A residue over F_p; a fraction a/b with |a|, b <= bound over Q."""
    if f.is_rational:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return rng.randrange(f.characteristic)


def random_array(f: Field, shape, rng: random.Random, symmetry: str | None = None, bound: int = 3) -> np.ndarray:
    shape = tuple(shape)
    if len(shape) != 2:
        vals = [random_scalar(f, rng, bound) for _ in range(int(np.prod(shape)))]
        return f.array(np.array(vals, dtype=object).reshape(shape))
    n_free = len(free_positions(shape, symmetry, f.characteristic))
    return fill(f, shape, symmetry, [random_scalar(f, rng, bound) for _ in range(n_free)])
