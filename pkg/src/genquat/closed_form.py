"""Closed-form exponential and principal logarithm on H(alpha, beta).

With ``mbar = -(alpha*m2**2 + beta*m3**2 + alpha*beta*m4**2)`` the
exponential is::

    exp(M) = e**m1 * (f0*e1 + f1*(m2*e2 + m3*e3 + m4*e4))

    mbar < 0:  f0 = cos(sqrt(-mbar)),  f1 = sin(sqrt(-mbar)) / sqrt(-mbar)
    mbar > 0:  f0 = cosh(sqrt(mbar)),  f1 = sinh(sqrt(mbar)) / sqrt(mbar)
    mbar = 0:  f0 = f1 = 1

On the image of exp the norm form equals ``e**(2*m1)`` in every regime, so
the logarithm uses ``norm_form`` for its scalar part on both branches.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .algebra import GQuat, imaginary_form
from .errors import (
    NoPrincipalLog,
    NullOrNegativeNorm,
    OutOfDomain,
    ParamsMismatch,
    RangeError,
)

__all__ = [
    "Branch",
    "ExpFactors",
    "mbar",
    "branch_of",
    "exp_factors",
    "exp_gq",
    "quat_exp_reference",
    "log_gq",
    "log_with_branch",
]

# |mbar| at or below this is the degenerate regime of exp (absolute: mbar
# enters cos/cosh directly, so the error of f0 = f1 = 1 is about |mbar|/2)
EXP_DEGENERATE_TOL = 1e-12
# relative to x1**2 for log
LOG_DEGENERATE_RTOL = 1e-12
# below this |mbar|, sin(s)/s and sinh(s)/s use their Taylor series
TAYLOR_CUTOFF = 1e-8
# beyond this m1 or sqrt|mbar| exp works with logarithms of the factors
SCALED_CUTOFF = 300.0

_LN2 = math.log(2.0)


class Branch(enum.Enum):
    TRIGONOMETRIC = "trig"
    HYPERBOLIC = "hyp"
    DEGENERATE = "degen"


@dataclass(frozen=True)
class ExpFactors:
    scalar_factor: float
    f0: float
    f1: float
    branch: Branch


def mbar(m: GQuat) -> float:
    return -imaginary_form(m)


def branch_of(form: float, threshold: float) -> Branch:
    """Classify by the sign of the imaginary quadratic form.

    ``form`` is alpha*x2**2 + beta*x3**2 + alpha*beta*x4**2, i.e. ``-mbar``.
    """
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    if form > threshold:
        return Branch.TRIGONOMETRIC
    if form < -threshold:
        return Branch.HYPERBOLIC
    return Branch.DEGENERATE


def _sinc_like(mb: float) -> float:
    # 1 + mbar/6 + mbar**2/120: sin(s)/s for mbar = -s**2, sinh(s)/s for mbar = s**2
    return 1.0 + mb / 6.0 + mb * mb / 120.0


def _factors(mb: float) -> tuple[float, float, Branch]:
    branch = branch_of(-mb, EXP_DEGENERATE_TOL)
    if branch is Branch.DEGENERATE:
        return 1.0, 1.0, branch
    s = math.sqrt(abs(mb))
    if branch is Branch.TRIGONOMETRIC:
        f0 = math.cos(s)
        f1 = _sinc_like(mb) if abs(mb) < TAYLOR_CUTOFF else math.sin(s) / s
    else:
        f0 = math.cosh(s)
        f1 = _sinc_like(mb) if abs(mb) < TAYLOR_CUTOFF else math.sinh(s) / s
    return f0, f1, branch


def exp_factors(m: GQuat) -> ExpFactors:
    """Scalar factor e**m1 and the two bracketed factors of exp(m)."""
    mb = mbar(m)
    if not math.isfinite(mb):
        raise RangeError("imaginary part too large")
    try:
        scalar = math.exp(m.a1)
        f0, f1, branch = _factors(mb)
    except OverflowError as exc:
        raise RangeError(str(exc)) from None
    return ExpFactors(scalar, f0, f1, branch)


def _signed_exp(log_magnitude: float, sign: float) -> float:
    try:
        return math.copysign(math.exp(log_magnitude), sign)
    except OverflowError:
        raise RangeError("exp overflows double precision") from None


def _exp_scaled(m: GQuat, mb: float) -> GQuat:
    """exp(m) for large m1 or sqrt|mbar|, combining e**m1 with each factor
    in log space so intermediates never overflow."""
    m1 = m.a1
    if mb > SCALED_CUTOFF ** 2:
        # cosh and sinh themselves overflow; tail is tiny here
        s = math.sqrt(mb)
        tail = math.exp(-2.0 * s)
        log_f0, sign_f0 = s - _LN2 + math.log1p(tail), 1.0
        log_f1, sign_f1 = s - _LN2 + math.log(-math.expm1(-2.0 * s)) - math.log(s), 1.0
    else:
        f0, f1, _ = _factors(mb)
        log_f0 = math.log(abs(f0)) if f0 else -math.inf
        log_f1 = math.log(abs(f1)) if f1 else -math.inf
        sign_f0, sign_f1 = f0, f1
    coeffs = [_signed_exp(m1 + log_f0, sign_f0)]
    for mk in (m.a2, m.a3, m.a4):
        if mk == 0.0 or log_f1 == -math.inf:
            coeffs.append(0.0)
        else:
            coeffs.append(_signed_exp(m1 + log_f1 + math.log(abs(mk)), sign_f1 * mk))
    return GQuat(*coeffs, m.params)


def exp_gq(m: GQuat) -> GQuat:
    """Exponential of a generalized quaternion in closed form.

    Raises :class:`RangeError` when the result overflows double precision.
    """
    mb = mbar(m)
    if not math.isfinite(mb):
        raise RangeError("imaginary part too large")
    if abs(m.a1) > SCALED_CUTOFF or abs(mb) > SCALED_CUTOFF ** 2:
        return _exp_scaled(m, mb)
    f0, f1, _ = _factors(mb)
    scalar = math.exp(m.a1)
    c = (scalar * f0, scalar * f1 * m.a2, scalar * f1 * m.a3, scalar * f1 * m.a4)
    if not all(math.isfinite(v) for v in c):
        raise RangeError("exp overflows double precision")
    return GQuat(*c, m.params)


def quat_exp_reference(m: GQuat) -> GQuat:
    """Hamilton-quaternion exponential, coded apart from :func:`exp_gq`.

    Only defined for alpha = beta = 1.
    """
    if (m.params.alpha, m.params.beta) != (1.0, 1.0):
        raise ParamsMismatch("quat_exp_reference needs alpha = beta = 1")
    v = np.array([m.a2, m.a3, m.a4])
    angle = float(np.linalg.norm(v))
    w = np.exp(m.a1)
    # np.sinc(x) = sin(pi x) / (pi x)
    vec = w * np.sinc(angle / np.pi) * v
    return GQuat(float(w * np.cos(angle)), *map(float, vec), m.params)


def log_with_branch(x: GQuat) -> tuple[GQuat, Branch]:
    """Principal logarithm of ``x`` together with the branch used.

    Trigonometric elements take the angle in (0, pi) via atan2; hyperbolic
    ones take the non-negative rapidity.  Raises
    :class:`NullOrNegativeNorm`, :class:`NoPrincipalLog` or
    :class:`OutOfDomain` outside the domain.
    """
    p = x.params
    size = max(abs(c) for c in x.coeffs)
    if size == 0.0:
        raise NullOrNegativeNorm("logarithm of zero")
    # scale to unit magnitude so squares cannot overflow
    y1, y2, y3, y4 = (c / size for c in x.coeffs)
    q = p.alpha * y2 * y2 + p.beta * y3 * y3 + p.alpha * p.beta * y4 * y4
    nbar = y1 * y1 + q
    if not nbar > 0.0:
        raise NullOrNegativeNorm(f"norm form {nbar * size * size!r} is not positive")
    if y2 == y3 == y4 == 0.0 and y1 < 0.0:
        raise NoPrincipalLog("negative real element has no principal logarithm")

    branch = branch_of(q, LOG_DEGENERATE_RTOL * y1 * y1)
    if branch is Branch.DEGENERATE and y1 <= 0.0:
        if q > 0.0:
            branch = Branch.TRIGONOMETRIC
        else:
            raise OutOfDomain("degenerate element with non-positive scalar part")
    if branch is Branch.HYPERBOLIC and y1 <= 0.0:
        raise OutOfDomain("hyperbolic element with non-positive scalar part")

    if branch is Branch.TRIGONOMETRIC:
        root = math.sqrt(q)
        k = math.atan2(root, y1) / root
    elif branch is Branch.HYPERBOLIC:
        root = math.sqrt(-q)
        u = root / y1
        if u < 0.5:
            k = math.atanh(u) / root
        else:
            # atanh(u) = log(y1 + root) - log(sqrt(nbar)); avoids 1 - u
            k = (math.log(y1 + root) - 0.5 * math.log(nbar)) / root
    else:
        k = 1.0 / y1
    m1 = math.log(size) + 0.5 * math.log(nbar)
    return GQuat(m1, k * y2, k * y3, k * y4, p), branch


def log_gq(x: GQuat) -> GQuat:
    """Principal logarithm; inverse of :func:`exp_gq` on its principal domain."""
    return log_with_branch(x)[0]
