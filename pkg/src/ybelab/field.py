"""Exact scalar fields and small dense linear algebra over them.

Two fields are supported: the rationals (scalars are ``fractions.Fraction``)
and prime fields F_p (scalars are Python ints in ``[0, p)``).  Matrices and
tensors are numpy arrays of dtype ``object`` so that ``einsum`` and ``@`` run
in exact arithmetic.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np


def _as_int(x, d):
    if isinstance(x, Fraction):
        return x.numerator * (d // x.denominator)
    return x * d


_AS_INT = np.frompyfunc(_as_int, 2, 1)
_TO_FRACTION = np.frompyfunc(lambda v: v if type(v) is Fraction else Fraction(v), 1, 1)


def _to_integers(op):
    a = np.asarray(op, dtype=object)
    d = math.lcm(1, *(x.denominator for x in a.flat if isinstance(x, Fraction)))
    return (_AS_INT(a, d) if a.ndim else _as_int(a.item(), d)), d


def _integer_einsum(spec: str, ops, memo: dict):
    """(integer result, denominator) for an einsum of exact operands; ``memo``
    caches the integer form of operands shared between terms."""
    arrs = []
    denom = 1
    for op in ops:
        key = id(op)
        if key not in memo:
            memo[key] = (op, *_to_integers(op))
        _, a, d = memo[key]
        arrs.append(a)
        denom *= d
    # path optimization only pays off beyond tiny operands
    big = len(arrs) > 2 and max(np.size(a) for a in arrs) > 16
    return np.einsum(spec, *arrs, optimize=big), denom


def _divide(out, denom):
    if denom == 1:
        return out
    if np.ndim(out) == 0:
        return Fraction(out, denom)
    return np.frompyfunc(lambda v: Fraction(v, denom), 1, 1)(out)


def exact_einsum(spec: str, *ops):
    """``np.einsum`` on object arrays of ints and Fractions.

    Rational operands are scaled to integers by the lcm of their
    denominators, contracted in integer arithmetic and divided back once;
    the result equals the plain object einsum exactly.
    """
    return _divide(*_integer_einsum(spec, ops, {}))


def exact_combination(*terms):
    """sum(coef * einsum(spec, *ops)) for terms ``(coef, spec, *ops)``, over one common denominator."""
    parts = []
    memo: dict = {}
    for coef, spec, *ops in terms:
        coef = Fraction(coef)
        raw, d = _integer_einsum(spec, ops, memo)
        parts.append((raw, coef.numerator, coef.denominator * d))
    denom = math.lcm(*(d for _, _, d in parts))
    total = sum(raw * (num * (denom // d)) for raw, num, d in parts)
    return _divide(total, denom)


class FieldError(ValueError):
    """Invalid field specification or a scalar the field cannot hold."""


class NoHalfError(FieldError):
    """An operation needed 1/2 in characteristic 2."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class Field:
    """A field spec: ``p == 0`` means the rationals, otherwise F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise FieldError(f"F_{self.p}: {self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accepts ``Q``, ``F5``, ``Fp:5`` and ``GF(5)``."""
        s = text.strip()
        if s in ("Q", "QQ"):
            return cls(0)
        m = re.fullmatch(r"(?:Fp:|F|GF\()(\d+)\)?", s)
        if not m:
            raise FieldError(f"unrecognised field {text!r}")
        return cls(int(m.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def has_half(self) -> bool:
        return self.p != 2

    @property
    def label(self) -> str:
        return "Q" if self.p == 0 else f"Fp:{self.p}"

    def __str__(self):
        return "Q" if self.p == 0 else f"F{self.p}"

    # scalars

    def scalar(self, x):
        """Coerce ``x`` (int, Fraction, or ``"a/b"`` string) into canonical form."""
        if self.p == 0 and type(x) is Fraction:
            return x
        if self.p and type(x) is int:
            return x % self.p
        if isinstance(x, str):
            m = _SCALAR_RE.match(x)
            if not m:
                raise FieldError(f"cannot parse scalar {x!r}")
            x = Fraction(int(m.group(1)), int(m.group(2) or 1))
        if isinstance(x, (bool, np.bool_)):
            x = int(x)
        if isinstance(x, np.integer):
            x = int(x)
        if self.p == 0:
            if not isinstance(x, (int, Fraction)):
                raise FieldError(f"not an exact scalar: {x!r}")
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"scalar not representable in F_{self.p}: {x}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if not isinstance(x, int):
            raise FieldError(f"not an exact scalar: {x!r}")
        return x % self.p

    def inv(self, x):
        x = self.scalar(x)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / x
        return pow(x, -1, self.p)

    @cached_property
    def half(self):
        if not self.has_half:
            raise NoHalfError("1/2 does not exist in characteristic 2")
        return self.inv(2)

    def format(self, x) -> int | str:
        """Canonical JSON form: an int when integral, else ``"a/b"``."""
        x = self.scalar(x)
        if self.p == 0 and x.denominator != 1:
            return f"{x.numerator}/{x.denominator}"
        return int(x)

    def elements(self):
        if self.p == 0:
            raise FieldError("Q is infinite")
        return range(self.p)

    # arrays

    def array(self, data, shape=None) -> np.ndarray:
        """Build a canonical object array from nested lists / another array."""
        a = np.array(data, dtype=object)
        if shape is not None:
            a = a.reshape(shape)
        out = np.empty(a.shape, dtype=object)
        for idx, v in np.ndenumerate(a):
            out[idx] = self.scalar(v)
        return out

    def zeros(self, *shape) -> np.ndarray:
        return self.array(np.zeros(shape, dtype=int))

    def identity(self, n: int) -> np.ndarray:
        return self.array(np.eye(n, dtype=int))

    def reduce(self, a: np.ndarray) -> np.ndarray:
        """Canonicalise the result of raw ``einsum``/``@`` arithmetic."""
        if self.p:
            return np.asarray(a, dtype=object) % self.p
        a = np.asarray(a, dtype=object)
        out = np.empty(a.shape, dtype=object)
        out[...] = _TO_FRACTION(a)
        return out

    def einsum(self, spec: str, *ops) -> np.ndarray:
        return self.reduce(exact_einsum(spec, *ops))

    def scale(self, s, a: np.ndarray) -> np.ndarray:
        return self.reduce(self.scalar(s) * np.asarray(a, dtype=object))

    @staticmethod
    def is_zero(a) -> bool:
        """True iff every entry is exactly zero (entries must be canonical)."""
        return not np.any(np.asarray(a, dtype=object) != 0)

    def equal(self, a, b) -> bool:
        return np.shape(a) == np.shape(b) and self.is_zero(self.reduce(np.asarray(a) - np.asarray(b)))

    # linear algebra

    def row_reduce(self, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and pivot columns."""
        a = self.array(m)
        rows, cols = a.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = next((i for i in range(r, rows) if a[i, c] != 0), None)
            if piv is None:
                continue
            a[[r, piv]] = a[[piv, r]]
            a[r] = self.reduce(a[r] * self.inv(a[r, c]))
            for i in range(rows):
                if i != r and a[i, c] != 0:
                    a[i] = self.reduce(a[i] - a[i, c] * a[r])
            pivots.append(c)
            r += 1
        return a, pivots

    def rank(self, m: np.ndarray) -> int:
        return len(self.row_reduce(m)[1])

    def det(self, m: np.ndarray):
        a = self.array(m)
        n, n2 = a.shape
        if n != n2:
            raise ValueError("determinant of a non-square matrix")
        d = self.scalar(1)
        for c in range(n):
            piv = next((i for i in range(c, n) if a[i, c] != 0), None)
            if piv is None:
                return self.scalar(0)
            if piv != c:
                a[[c, piv]] = a[[piv, c]]
                d = -d
            d = d * a[c, c]
            f = self.inv(a[c, c])
            for i in range(c + 1, n):
                if a[i, c] != 0:
                    a[i] = self.reduce(a[i] - a[i, c] * f * a[c])
        return self.scalar(d)

    def inverse(self, m: np.ndarray) -> np.ndarray:
        a = self.array(m)
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("inverse of a non-square matrix")
        red, piv = self.row_reduce(np.hstack([a, self.identity(n)]))
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return red[:, n:]

    def is_invertible(self, m: np.ndarray) -> bool:
        m = np.asarray(m)
        return m.shape[0] == m.shape[1] and self.rank(m) == m.shape[0]


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)
