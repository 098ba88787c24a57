"""Property battery cross-checking the closed forms against the oracles.

Every check returns a :class:`CheckResult`; :func:`run_battery` runs them
all on seeded random corpora and is what ``genquat verify`` prints.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import AlgebraParams, GQuat, add, basis, mul, norm_form, one, scale
from .closed_form import exp_gq, log_gq, mbar, quat_exp_reference
from .errors import DomainError, GenQuatError
from .oracle import (
    SplitMix64,
    ToleranceConfig,
    compare,
    iter_cases,
    norm_sign_experiment,
    ode_exp_batch,
    random_cases,
    series_exp,
    spectral_check,
)

SERIES_RTOL = 1e-10
ODE_RTOL = 1e-6
NORM_RTOL = 1e-10
SPECIALIZATION_RTOL = 1e-12
SPECTRAL_TOL = 1e-8
COMMUTING_RTOL = 1e-9
INVERSE_TOL = 1e-10
NONCOMMUTATIVITY_GAP = 0.01
ODE_STEPS = 1000


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    tolerance: float
    cases: int
    relation: str = "<="

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status}  {self.name:<26} {self.measured:.3e} {self.relation} "
                f"{self.tolerance:.1e}  (n={self.cases})")


def _worst_relative(pairs: Iterable[tuple[GQuat, GQuat]], tol: float, name: str) -> CheckResult:
    worst, n = 0.0, 0
    for got, want in pairs:
        worst = max(worst, compare(got, want).max_rel_diff)
        n += 1
    return CheckResult(name, worst <= tol, worst, tol, n)


def principal_cases(n: int, seed: int, params: AlgebraParams | None = None) -> list[GQuat]:
    """Random exponents inside the principal domain of log.

    Trigonometric exponents are kept only when sqrt(-mbar) < pi - 0.1.
    """
    def inside(m: GQuat) -> bool:
        mb = mbar(m)
        return mb >= 0 or math.sqrt(-mb) < math.pi - 0.1

    return list(itertools.islice(filter(inside, iter_cases(seed, params=params)), n))


def loggable_cases(n: int, seed: int, params: AlgebraParams | None = None) -> list[GQuat]:
    """Random elements that have a principal logarithm."""
    def valid(x: GQuat) -> bool:
        try:
            log_gq(x)
        except DomainError:
            return False
        return True

    return list(itertools.islice(filter(valid, iter_cases(seed, params=params)), n))


def check_series_agreement(cases: Sequence[GQuat], tol: float = SERIES_RTOL) -> CheckResult:
    return _worst_relative(((exp_gq(m), series_exp(m)) for m in cases), tol, "exp vs series")


def check_ode_agreement(cases: Sequence[GQuat], tol: float = ODE_RTOL,
                        steps: int = ODE_STEPS) -> CheckResult:
    ode = ode_exp_batch(cases, steps)
    return _worst_relative(((exp_gq(m), x) for m, x in zip(cases, ode)), tol, "exp vs ODE")


def check_left_right(cases: Sequence[GQuat], tol: float = ODE_RTOL,
                     steps: int = ODE_STEPS) -> CheckResult:
    left = ode_exp_batch(cases, steps, "left")
    right = ode_exp_batch(cases, steps, "right")
    return _worst_relative(zip(left, right), tol, "left/right ODE")


def _round_trip(fn, cases: Sequence[GQuat], cfg: ToleranceConfig, name: str) -> CheckResult:
    worst, ok = 0.0, True
    for x in cases:
        try:
            report = compare(fn(x), x, cfg)
        except GenQuatError:
            worst, ok = math.inf, False
            continue
        worst = max(worst, report.max_rel_diff)
        ok = ok and report.passed
    return CheckResult(name, ok, worst, cfg.rel_tol, len(cases))


def check_log_exp_round_trip(cases: Sequence[GQuat], cfg: ToleranceConfig = ToleranceConfig()) -> CheckResult:
    return _round_trip(lambda m: log_gq(exp_gq(m)), cases, cfg, "log(exp(M)) = M")


def check_exp_log_round_trip(cases: Sequence[GQuat], cfg: ToleranceConfig = ToleranceConfig()) -> CheckResult:
    return _round_trip(lambda x: exp_gq(log_gq(x)), cases, cfg, "exp(log(X)) = X")


def check_norm_identity(cases: Sequence[GQuat], tol: float = NORM_RTOL) -> CheckResult:
    worst = max((abs(norm_form(exp_gq(m)) / math.exp(2.0 * m.a1) - 1.0) for m in cases), default=0.0)
    return CheckResult("norm(exp(M)) = e^(2 m1)", worst <= tol, worst, tol, len(cases))


def check_specialization(cases: Sequence[GQuat], tol: float = SPECIALIZATION_RTOL) -> CheckResult:
    return _worst_relative(((exp_gq(m), quat_exp_reference(m)) for m in cases), tol,
                           "quaternion specialization")


def check_spectral(cases: Sequence[GQuat], tol: float = SPECTRAL_TOL) -> CheckResult:
    worst = max((spectral_check(m).max_residual for m in cases), default=0.0)
    return CheckResult("spectral identity", worst <= tol, worst, tol, len(cases))


def check_non_commutativity(gap: float = NONCOMMUTATIVITY_GAP) -> CheckResult:
    p = AlgebraParams(1.0, 1.0)
    m1, m2 = basis(p, 2), basis(p, 3)
    dev = compare(exp_gq(add(m1, m2)), mul(exp_gq(m1), exp_gq(m2))).max_abs_diff
    return CheckResult("non-commutativity witness", dev > gap, dev, gap, 1, ">")


def check_commuting_family(cases: Sequence[GQuat], seed: int,
                           tol: float = COMMUTING_RTOL) -> CheckResult:
    rng = SplitMix64(seed)
    pairs = []
    for m in cases:
        s, t = rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)
        pairs.append((mul(exp_gq(scale(s, m)), exp_gq(scale(t, m))), exp_gq(scale(s + t, m))))
    return _worst_relative(pairs, tol, "exp(sM) exp(tM)")


def check_inverse_law(cases: Sequence[GQuat], tol: float = INVERSE_TOL) -> CheckResult:
    return _worst_relative(((mul(exp_gq(m), exp_gq(scale(-1.0, m))), one(m.params)) for m in cases),
                           tol, "exp(M) exp(-M) = e1")


def check_norm_sign(cases: Sequence[GQuat], tol: float = 1e-9) -> CheckResult:
    """The plus-sign norm x1**2 + Q(x) must recover m1 from exp(M) when
    mbar(M) > 0."""
    hyperbolic = [m for m in cases if mbar(m) > 0]
    if not hyperbolic:
        return CheckResult("hyperbolic norm sign", True, 0.0, tol, 0)
    plus, _ = norm_sign_experiment(hyperbolic)
    return CheckResult("hyperbolic norm sign", plus <= tol, plus, tol, len(hyperbolic))


def run_battery(samples: int = 1000, seed: int = 0,
                cfg: ToleranceConfig = ToleranceConfig(),
                params: AlgebraParams | None = None) -> list[CheckResult]:
    """All checks on ``samples`` cases drawn from ``seed``.

    ``params`` pins alpha and beta; by default each case draws them from
    the grid {-2, -1, -0.5, 0.5, 1, 2}.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    cases = random_cases(samples, seed, params=params)
    quats = random_cases(samples, seed, params=AlgebraParams(1.0, 1.0))
    return [
        check_series_agreement(cases),
        check_ode_agreement(cases),
        check_log_exp_round_trip(principal_cases(samples, seed, params), cfg),
        check_exp_log_round_trip(loggable_cases(samples, seed, params), cfg),
        check_norm_identity(cases),
        check_specialization(quats),
        check_spectral(cases),
        check_non_commutativity(),
        check_commuting_family(cases, seed),
        check_inverse_law(cases),
        check_left_right(cases),
        check_norm_sign(cases),
    ]
