"""Small algebras used throughout the tests and the CLI."""
from __future__ import annotations

import itertools

from .algebra import Algebra
from .field import QQ, Field


def _from_products(f: Field, labels, products: dict) -> Algebra:
    n = len(labels)
    idx = {s: i for i, s in enumerate(labels)}
    c = f.zeros(n, n, n)
    for (a, b), terms in products.items():
        for s, coeff in terms.items():
            c[idx[a], idx[b], idx[s]] = f.scalar(coeff)
    return Algebra(f, c, tuple(labels))


def zero_alg2(f: Field = QQ) -> Algebra:
    return _from_products(f, ("e1", "e2"), {})


def nil2(f: Field = QQ) -> Algebra:
    """e1 e1 = e2, all other products zero."""
    return _from_products(f, ("e1", "e2"), {("e1", "e1"): {"e2": 1}})


def dual_numbers(f: Field = QQ) -> Algebra:
    """k[x]/(x^2) with basis (u, x), u the unit."""
    return _from_products(
        f, ("u", "x"), {("u", "u"): {"u": 1}, ("u", "x"): {"x": 1}, ("x", "u"): {"x": 1}}
    )


def _matrix_units(f: Field, units) -> Algebra:
    labels = [f"E{i}{j}" for i, j in units]
    products = {}
    for (i, j), (k, l) in itertools.product(units, repeat=2):
        if j == k and (i, l) in units:
            products[(f"E{i}{j}", f"E{k}{l}")] = {f"E{i}{l}": 1}
    return _from_products(f, labels, products)


def ut2(f: Field = QQ) -> Algebra:
    """Upper-triangular 2x2 matrices, basis (E11, E12, E22)."""
    return _matrix_units(f, [(1, 1), (1, 2), (2, 2)])


def m2(f: Field = QQ) -> Algebra:
    """All 2x2 matrices, basis (E11, E12, E21, E22)."""
    return _matrix_units(f, [(1, 1), (1, 2), (2, 1), (2, 2)])


FIXTURES = {
    "zeroalg2": zero_alg2,
    "nil2": nil2,
    "dualnum": dual_numbers,
    "ut2": ut2,
    "m2": m2,
}


def fixture(name: str, f: Field = QQ) -> Algebra:
    try:
        build = FIXTURES[name.lower()]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
    return Algebra(f, build(f).c, build(f).labels, name=name.lower())
