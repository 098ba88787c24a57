"""Generalized quaternions H(alpha, beta).

Elements are ``a1*e1 + a2*e2 + a3*e3 + a4*e4`` over the basis with Cayley table

====  ====  ==========  ==========  ============
 .     e1       e2          e3          e4
====  ====  ==========  ==========  ============
 e1    e1       e2          e3          e4
 e2    e2   -alpha*e1       e4      -alpha*e3
 e3    e3      -e4       -beta*e1     beta*e2
 e4    e4    alpha*e3    -beta*e2   -alpha*beta*e1
====  ====  ==========  ==========  ============

``alpha = beta = 1`` gives Hamilton's quaternions, ``alpha = 1, beta = -1``
the split quaternions.  Zero parameters are allowed; the algebra is then
not a division algebra.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import NonFiniteInput, ParamsMismatch, RangeError

__all__ = [
    "AlgebraParams",
    "GQuat",
    "make",
    "basis",
    "zero",
    "one",
    "add",
    "scale",
    "mul",
    "imaginary_form",
    "norm_form",
    "rep_matrix",
    "right_rep_matrix",
    "cayley_table",
]


@dataclass(frozen=True)
class AlgebraParams:
    """The pair (alpha, beta) selecting one algebra of the family."""

    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        for name in ("alpha", "beta"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise NonFiniteInput(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)


QUATERNIONS = AlgebraParams(1.0, 1.0)
SPLIT_QUATERNIONS = AlgebraParams(1.0, -1.0)


@dataclass(frozen=True)
class GQuat:
    """Immutable element of H(alpha, beta)."""

    a1: float
    a2: float
    a3: float
    a4: float
    params: AlgebraParams = QUATERNIONS

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise NonFiniteInput(f"coefficient {name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @property
    def coeffs(self) -> tuple[float, float, float, float]:
        return (self.a1, self.a2, self.a3, self.a4)

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        if isinstance(other, GQuat):
            return add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, GQuat):
            return add(self, scale(-1.0, other))
        return NotImplemented

    def __neg__(self):
        return scale(-1.0, self)

    def __mul__(self, other):
        if isinstance(other, GQuat):
            return mul(self, other)
        if isinstance(other, (int, float)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return scale(other, self)
        return NotImplemented


def make(params: AlgebraParams, a1: float, a2: float, a3: float, a4: float) -> GQuat:
    """Build an element; raises :class:`NonFiniteInput` on NaN or inf."""
    return GQuat(a1, a2, a3, a4, params)


def _result(params: AlgebraParams, coeffs: Iterable[float]) -> GQuat:
    # arithmetic on finite inputs can still overflow
    c = tuple(coeffs)
    if not all(math.isfinite(v) for v in c):
        raise RangeError("result is not representable in double precision")
    return GQuat(*c, params)


def basis(params: AlgebraParams, k: int) -> GQuat:
    """Basis element e_k, k in 1..4."""
    if k not in (1, 2, 3, 4):
        raise ValueError(f"basis index must be 1..4, got {k}")
    c = [0.0] * 4
    c[k - 1] = 1.0
    return GQuat(*c, params)


def zero(params: AlgebraParams) -> GQuat:
    return GQuat(0.0, 0.0, 0.0, 0.0, params)


def one(params: AlgebraParams) -> GQuat:
    return GQuat(1.0, 0.0, 0.0, 0.0, params)


def _check_params(x: GQuat, y: GQuat) -> AlgebraParams:
    if x.params != y.params:
        raise ParamsMismatch(f"operands belong to different algebras: {x.params} vs {y.params}")
    return x.params


def add(x: GQuat, y: GQuat) -> GQuat:
    p = _check_params(x, y)
    return _result(p, (u + v for u, v in zip(x.coeffs, y.coeffs)))


def scale(c: float, x: GQuat) -> GQuat:
    return _result(x.params, (c * v for v in x.coeffs))


def mul(x: GQuat, y: GQuat) -> GQuat:
    """Product x*y expanded from the Cayley table."""
    p = _check_params(x, y)
    a, b = p.alpha, p.beta
    x1, x2, x3, x4 = x.coeffs
    y1, y2, y3, y4 = y.coeffs
    return _result(p, (
        x1 * y1 - a * x2 * y2 - b * x3 * y3 - a * b * x4 * y4,
        x1 * y2 + x2 * y1 + b * (x3 * y4 - x4 * y3),
        x1 * y3 + x3 * y1 + a * (x4 * y2 - x2 * y4),
        x1 * y4 + x4 * y1 + x2 * y3 - x3 * y2,
    ))


def imaginary_form(x: GQuat) -> float:
    """alpha*x2**2 + beta*x3**2 + alpha*beta*x4**2.

    Its negation is the discriminant that picks the trigonometric
    (form > 0) or hyperbolic (form < 0) regime of exp and log.
    """
    a, b = x.params.alpha, x.params.beta
    return a * x.a2 ** 2 + b * x.a3 ** 2 + a * b * x.a4 ** 2


def norm_form(x: GQuat) -> float:
    """x1**2 + alpha*x2**2 + beta*x3**2 + alpha*beta*x4**2 (multiplicative)."""
    return x.a1 ** 2 + imaginary_form(x)


def rep_matrix(m: GQuat) -> np.ndarray:
    """4x4 matrix of left multiplication: ``rep_matrix(m) @ x == m*x``."""
    a, b = m.params.alpha, m.params.beta
    m1, m2, m3, m4 = m.coeffs
    return np.array([
        [m1, -a * m2, -b * m3, -a * b * m4],
        [m2, m1, -b * m4, b * m3],
        [m3, a * m4, m1, -a * m2],
        [m4, -m3, m2, m1],
    ])


def right_rep_matrix(m: GQuat) -> np.ndarray:
    """4x4 matrix of right multiplication: ``right_rep_matrix(m) @ x == x*m``."""
    a, b = m.params.alpha, m.params.beta
    m1, m2, m3, m4 = m.coeffs
    return np.array([
        [m1, -a * m2, -b * m3, -a * b * m4],
        [m2, m1, b * m4, -b * m3],
        [m3, -a * m4, m1, a * m2],
        [m4, m3, -m2, m1],
    ])


def cayley_table(params: AlgebraParams) -> list[list[tuple[float, int]]]:
    """Basis products as ``table[i][j] = (c, k)`` meaning e_{i+1} e_{j+1} = c e_k."""
    a, b = params.alpha, params.beta
    return [
        [(1.0, 1), (1.0, 2), (1.0, 3), (1.0, 4)],
        [(1.0, 2), (-a, 1), (1.0, 4), (-a, 3)],
        [(1.0, 3), (-1.0, 4), (-b, 1), (b, 2)],
        [(1.0, 4), (a, 3), (-b, 2), (-a * b, 1)],
    ]
