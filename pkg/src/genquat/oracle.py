"""Independent reference computations for the closed forms.

* :func:`series_exp` sums the power series of exp by scaling and squaring.
* :func:`ode_exp` integrates ``X' = M X`` (or ``X' = X M``) from ``X(0) = e1``
  with fixed-step classical RK4.
* :func:`spectral_check` evaluates ``det(lambda I - rep(M))`` and compares it
  with ``(lambda**2 - 2 m1 lambda + m1**2 - mbar)**2``, i.e. eigenvalues
  ``m1 +- sqrt(mbar)`` each of multiplicity two.

Random test corpora come from SplitMix64 so that a ``(seed, n)`` pair names
the same elements on every platform::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2**64
    return z ^ (z >> 31)

A uniform double in [0, 1) is ``(next() >> 11) * 2**-53``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

import numpy as np

from .algebra import (
    AlgebraParams,
    GQuat,
    add,
    mul,
    norm_form,
    one,
    rep_matrix,
    right_rep_matrix,
    scale,
)
from .closed_form import mbar
from .errors import ParamsMismatch, RangeError

__all__ = [
    "ALPHA_BETA_GRID",
    "ToleranceConfig",
    "ComparisonReport",
    "SpectralReport",
    "SplitMix64",
    "compare",
    "random_gq",
    "iter_cases",
    "random_cases",
    "weighted_norm",
    "series_exp",
    "rk4_linear",
    "ode_exp",
    "ode_exp_batch",
    "spectral_check",
    "norm_sign_experiment",
]

ALPHA_BETA_GRID = (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea and Flood)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0 ** -53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def choice(self, seq: Sequence):
        return seq[self.next_u64() % len(seq)]


@dataclass(frozen=True)
class ToleranceConfig:
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12

    def __post_init__(self):
        if self.rel_tol < 0 or self.abs_tol < 0:
            raise ValueError("tolerances must be non-negative")
        if self.rel_tol == 0 and self.abs_tol == 0:
            raise ValueError("at least one tolerance must be positive")


@dataclass(frozen=True)
class ComparisonReport:
    max_abs_diff: float
    max_rel_diff: float
    per_component: tuple[float, float, float, float]
    passed: bool


def compare(x: GQuat, y: GQuat, cfg: ToleranceConfig = ToleranceConfig()) -> ComparisonReport:
    """Componentwise deviation of ``x`` from ``y``.

    The relative deviation is measured against the largest component
    magnitude of either operand.
    """
    if x.params != y.params:
        raise ParamsMismatch(f"cannot compare {x.params} with {y.params}")
    diffs = tuple(abs(u - v) for u, v in zip(x.coeffs, y.coeffs))
    max_abs = max(diffs)
    scale_ = max(max(abs(c) for c in x.coeffs), max(abs(c) for c in y.coeffs))
    if max_abs == 0.0:
        max_rel = 0.0
    elif scale_ == 0.0:
        max_rel = math.inf
    else:
        max_rel = max_abs / scale_
    passed = max_abs <= cfg.abs_tol or max_rel <= cfg.rel_tol
    return ComparisonReport(max_abs, max_rel, diffs, passed)


def random_gq(params: AlgebraParams, range_: float, seed: int) -> GQuat:
    """Element with coefficients uniform in [-range_, range_), fixed by ``seed``."""
    if not range_ > 0:
        raise ValueError("range must be positive")
    rng = SplitMix64(seed)
    return GQuat(*(rng.uniform(-range_, range_) for _ in range(4)), params)


def iter_cases(seed: int, range_: float = 2.0,
               grid: Sequence[float] = ALPHA_BETA_GRID,
               params: AlgebraParams | None = None) -> Iterator[GQuat]:
    """Endless stream of random elements from one SplitMix64 generator.

    Each case draws alpha and beta from ``grid`` (unless ``params`` fixes
    them) and then four coefficients in [-range_, range_).
    """
    rng = SplitMix64(seed)
    while True:
        if params is None:
            p = AlgebraParams(rng.choice(grid), rng.choice(grid))
        else:
            p = params
        yield GQuat(*(rng.uniform(-range_, range_) for _ in range(4)), p)


def random_cases(n: int, seed: int, range_: float = 2.0,
                 grid: Sequence[float] = ALPHA_BETA_GRID,
                 params: AlgebraParams | None = None) -> list[GQuat]:
    """The first ``n`` elements of :func:`iter_cases`."""
    return list(itertools.islice(iter_cases(seed, range_, grid, params), n))


def weighted_norm(x: GQuat) -> float:
    """Submultiplicative norm: ``(sum |a_k|) * max(1, |alpha|, |beta|, |alpha beta|)``."""
    a, b = x.params.alpha, x.params.beta
    return sum(abs(c) for c in x.coeffs) * max(1.0, abs(a), abs(b), abs(a * b))


def series_exp(m: GQuat, tol: float = 1e-17, max_terms: int = 30) -> GQuat:
    """exp(m) as the power series ``sum m**s / s!``.

    ``m`` is first halved ``k`` times until its weighted norm is at most
    0.5; the series is summed until a term falls below ``tol`` times the
    partial sum (or ``max_terms`` terms), and the result is squared ``k``
    times.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    norm = weighted_norm(m)
    k = 0 if norm <= 0.5 else math.ceil(math.log2(norm / 0.5))
    small = scale(2.0 ** -k, m)
    total = one(m.params)
    term = one(m.params)
    for s in range(1, max_terms + 1):
        term = scale(1.0 / s, mul(term, small))
        total = add(total, term)
        if weighted_norm(term) < tol * weighted_norm(total):
            break
    for _ in range(k):
        total = mul(total, total)
    return total


def rk4_linear(a: np.ndarray, x0: np.ndarray, steps: int, t_end: float = 1.0) -> np.ndarray:
    """Integrate ``x' = a x`` over [0, t_end] with ``steps`` classical RK4 steps.

    ``a`` has shape (..., n, n) and ``x0`` shape (..., n); leading axes are
    independent systems integrated together.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    a = np.asarray(a, dtype=float)
    x = np.array(np.broadcast_to(x0, a.shape[:-1]), dtype=float)
    h = t_end / steps

    def f(v):
        return np.matmul(a, v[..., None])[..., 0]

    for _ in range(steps):
        k1 = f(x)
        k2 = f(x + 0.5 * h * k1)
        k3 = f(x + 0.5 * h * k2)
        k4 = f(x + h * k3)
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    if not np.all(np.isfinite(x)):
        raise RangeError("ODE state became non-finite")
    return x


Side = Literal["left", "right"]


def _system_matrix(m: GQuat, side: Side) -> np.ndarray:
    if side == "left":
        return rep_matrix(m)
    if side == "right":
        return right_rep_matrix(m)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def ode_exp(m: GQuat, steps: int = 1000, side: Side = "left") -> GQuat:
    """exp(m) as X(1) for ``X' = M X`` (left) or ``X' = X M`` (right), X(0) = e1."""
    x = rk4_linear(_system_matrix(m, side), np.array([1.0, 0.0, 0.0, 0.0]), steps)
    return GQuat(*map(float, x), m.params)


def ode_exp_batch(ms: Sequence[GQuat], steps: int = 1000, side: Side = "left") -> list[GQuat]:
    """:func:`ode_exp` for many elements at once (one vectorized RK4 run)."""
    if not ms:
        return []
    a = np.stack([_system_matrix(m, side) for m in ms])
    x = rk4_linear(a, np.array([1.0, 0.0, 0.0, 0.0]), steps)
    return [GQuat(*map(float, row), m.params) for row, m in zip(x, ms)]


@dataclass(frozen=True)
class SpectralReport:
    points: tuple[float, ...]
    determinants: tuple[float, ...]
    predicted: tuple[float, ...]
    max_residual: float


def spectral_check(m: GQuat) -> SpectralReport:
    """Compare the characteristic polynomial of ``rep(m)`` with its factored form.

    Both sides are evaluated at five points ``{0, +-1, +-2}`` scaled by
    ``1 + |m1| + sqrt|mbar|``.  The residual at ``lam`` is measured against
    ``(|lam| + ||rep(m)||_2)**4``, which bounds ``|det(lam I - rep(m))|``.
    """
    a = rep_matrix(m)
    m1, mb = m.a1, mbar(m)
    spread = 1.0 + abs(m1) + math.sqrt(abs(mb))
    op_norm = float(np.linalg.norm(a, 2))
    points, dets, preds, worst = [], [], [], 0.0
    for t in (0.0, 1.0, -1.0, 2.0, -2.0):
        lam = t * spread
        det = float(np.linalg.det(lam * np.eye(4) - a))
        pred = (lam * lam - 2.0 * m1 * lam + m1 * m1 - mb) ** 2
        bound = (abs(lam) + op_norm) ** 4
        err = abs(det - pred)
        worst = max(worst, err / bound if bound > 0 else err)
        points.append(lam)
        dets.append(det)
        preds.append(pred)
    return SpectralReport(tuple(points), tuple(dets), tuple(preds), worst)


def norm_sign_experiment(ms: Sequence[GQuat]) -> tuple[float, float]:
    """Decide the sign convention of the norm on the hyperbolic branch.

    For each ``m`` with ``mbar > 0``, ``x = series_exp(m)`` is built and
    ``m1`` is recovered as ``0.5 ln(x1**2 + Q(x))`` and as
    ``0.5 ln(x1**2 - Q(x))``.  Returns the worst absolute error of each
    convention; a non-positive argument counts as ``inf``.
    """
    worst_plus = worst_minus = 0.0
    for m in ms:
        if not mbar(m) > 0:
            continue
        x = series_exp(m)
        plus = norm_form(x)
        minus = 2.0 * x.a1 ** 2 - plus
        err_plus = abs(0.5 * math.log(plus) - m.a1) if plus > 0 else math.inf
        err_minus = abs(0.5 * math.log(minus) - m.a1) if minus > 0 else math.inf
        worst_plus = max(worst_plus, err_plus)
        worst_minus = max(worst_minus, err_minus)
    return worst_plus, worst_minus
