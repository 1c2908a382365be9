"""Independent numerical oracle for the entropy integrals.

Everything here integrates in theta-space (x = cos theta), where the
integrands are built from the standard trigonometric representation: its
coefficients are uniformly bounded on the circle, unlike the x-space weight
(1-x^2)^(lam-1/2), which is singularity-prone at the endpoints.

The integrands are smooth except at the zero angles of C_n, where they behave
like t^2 log t (entropy weights) or log t (bare log moments).  [0, pi] is
split at those angles and each panel is handled by a tanh-sinh rule, which
absorbs endpoint singularities of exactly this kind; a panel whose error
estimate exceeds its share of the budget is bisected recursively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Tuple

import mpmath as mp

from .exact import to_mpf
from .gegenbauer import (GegenbauerSpec, pochhammer, standard_representation,
                         zero_angles, _cosine_ladder_sum, _mpf_coeffs)


@dataclass(frozen=True)
class QuadratureConfig:
    target_abs_tol: float = 1e-10
    working_precision: int = 50
    max_subdivision_depth: int = 10

    def __post_init__(self):
        if not self.target_abs_tol > 0:
            raise ValueError("target_abs_tol must be positive")
        if self.working_precision < 50:
            raise ValueError("working_precision must be >= 50")


class ToleranceNotMet(Exception):
    """Raised when panel subdivision exhausts its depth; carries the best estimate."""

    def __init__(self, estimate, error):
        super().__init__(
            f"quadrature error estimate {mp.nstr(error, 5)} exceeds target; "
            f"best estimate {mp.nstr(estimate, 20)}")
        self.estimate = estimate
        self.error = error


def _polynomial_on_circle(spec: GegenbauerSpec) -> Callable[[mp.mpf], mp.mpf]:
    """theta -> C_n(cos theta) at the current working precision."""
    rep = standard_representation(spec)
    coeffs = _mpf_coeffs(rep.coefficients, mp.mp.prec)
    n = spec.n
    return lambda theta: _cosine_ladder_sum(coeffs, n, theta)


def _panel_knots(spec: GegenbauerSpec, cfg: QuadratureConfig) -> List[mp.mpf]:
    inner = zero_angles(spec, cfg.working_precision) if spec.n else []
    return [mp.mpf(0)] + inner + [+mp.pi]


def _adaptive_panel(f, a, b, budget, depth_left) -> Tuple[mp.mpf, mp.mpf]:
    value, err = mp.quad(f, [a, b], error=True)
    if err <= budget or depth_left <= 0:
        return value, err
    mid = (a + b) / 2
    v1, e1 = _adaptive_panel(f, a, mid, budget / 2, depth_left - 1)
    v2, e2 = _adaptive_panel(f, mid, b, budget / 2, depth_left - 1)
    return v1 + v2, e1 + e2


def _integrate(f, knots: List[mp.mpf], cfg: QuadratureConfig) -> mp.mpf:
    """Sum the panels in index order; raise if the total estimate misses."""
    tol = mp.mpf(cfg.target_abs_tol)
    per_panel = tol / (len(knots) - 1)
    total = mp.mpf(0)
    err_total = mp.mpf(0)
    for a, b in zip(knots, knots[1:]):
        value, err = _adaptive_panel(f, a, b, per_panel,
                                     cfg.max_subdivision_depth)
        total += value
        err_total += err
    if err_total > tol:
        raise ToleranceNotMet(total, err_total)
    return total


def entropy_quadrature(spec: GegenbauerSpec,
                       cfg: QuadratureConfig = QuadratureConfig()) -> mp.mpf:
    """Direct estimate of E(C_n^(lam)) within cfg.target_abs_tol.

    Integrates -C^2 log(C^2) sin(theta)^(2 lam) over (0, pi), split at the
    zero angles where the integrand has its t^2 log t^2 kinks.
    """
    with mp.workdps(cfg.working_precision):
        poly = _polynomial_on_circle(spec)
        two_lam = 2 * spec.lam

        def f(theta):
            c = poly(theta)
            csq = c * c
            if csq == 0:
                return mp.mpf(0)  # limit value of t^2 log t^2
            w = mp.sin(theta) ** two_lam if two_lam else mp.mpf(1)
            return csq * mp.log(csq) * w

        return -_integrate(f, _panel_knots(spec, cfg), cfg)


def integral_I_quadrature(spec: GegenbauerSpec, m: int,
                          cfg: QuadratureConfig = QuadratureConfig()) -> mp.mpf:
    """Direct estimate of I_m = int_0^pi cos(2m t) log(C_n(cos t))^2 dt."""
    if not 0 <= m <= spec.n + spec.lam:
        raise ValueError(f"moment index {m} outside 0..{spec.n + spec.lam}")
    with mp.workdps(cfg.working_precision):
        poly = _polynomial_on_circle(spec)
        # Floor keeps an exact-zero hit finite; the value matches the scale
        # of legitimate evaluations exponentially close to a zero angle.
        floor = mp.mpf(10) ** (-40 * cfg.working_precision)

        def f(theta):
            csq = poly(theta) ** 2
            return mp.cos(2 * m * theta) * mp.log(csq if csq > floor else floor)

        return _integrate(f, _panel_knots(spec, cfg), cfg)


def _orthonormal_weight_parts(spec: GegenbauerSpec) -> Tuple[Fraction, Fraction]:
    """(squared normalization s2, rational part K*pi of the weight constant).

    The orthonormalized polynomial is sqrt(s2) * C_n and the probability
    weight in theta-space is (K/pi) * sin(theta)^(2 lam) d theta.  For the
    Chebyshev-T limit, s2 degenerates to 2 (n >= 1) or 1 (n = 0) and the
    weight to 1/pi.
    """
    lam, n = spec.lam, spec.n
    if lam == 0:
        return (Fraction(2 if n else 1), Fraction(1))
    s2 = Fraction((n + lam) * math.factorial(n)) / (lam * pochhammer(2 * lam, n))
    k_pi = Fraction(math.factorial(lam) ** 2 * 4 ** lam, math.factorial(2 * lam))
    return s2, k_pi


def normalized_entropy_quadrature(spec: GegenbauerSpec,
                                  cfg: QuadratureConfig = QuadratureConfig()) -> mp.mpf:
    """Direct estimate of the orthonormalized entropy within cfg.target_abs_tol."""
    with mp.workdps(cfg.working_precision):
        poly = _polynomial_on_circle(spec)
        s2, k_pi = _orthonormal_weight_parts(spec)
        s2f = to_mpf(s2)
        weight_const = to_mpf(k_pi) / mp.pi
        two_lam = 2 * spec.lam

        def f(theta):
            gsq = s2f * poly(theta) ** 2
            if gsq == 0:
                return mp.mpf(0)
            w = mp.sin(theta) ** two_lam if two_lam else mp.mpf(1)
            return gsq * mp.log(gsq) * w * weight_const

        return -_integrate(f, _panel_knots(spec, cfg), cfg)


def orthonormality_quadrature(spec: GegenbauerSpec,
                              cfg: QuadratureConfig = QuadratureConfig()) -> mp.mpf:
    """int of (orthonormalized C_n)^2 against its weight; exactly 1 when sound."""
    with mp.workdps(cfg.working_precision):
        poly = _polynomial_on_circle(spec)
        s2, k_pi = _orthonormal_weight_parts(spec)
        s2f = to_mpf(s2)
        weight_const = to_mpf(k_pi) / mp.pi
        two_lam = 2 * spec.lam

        def f(theta):
            w = mp.sin(theta) ** two_lam if two_lam else mp.mpf(1)
            return s2f * poly(theta) ** 2 * w * weight_const

        return _integrate(f, _panel_knots(spec, cfg), cfg)
