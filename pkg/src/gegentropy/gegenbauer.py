"""Gegenbauer (ultraspherical) polynomials C_n^(lam) of integer parameter.

Provides exact coefficients for the two trigonometric representations used by
the entropy engine, point evaluation (exact rational or high-precision float),
and zero finding on (-1, 1).

Representations, with x = cos(theta):

  standard:  C_n(cos t) = sum_{m=0}^{n} d_m * cos((n-2m) t)
             d_m = (lam)_m (lam)_{n-m} / (m! (n-m)!)

  szego:     C_n(cos t) = c / (sin t)^(2 lam - 1)
                          * sum_{v=0}^{lam-1} a_v * sin((n+2v+1) t)
             c   = 2^(2-2lam) (n+2lam-1)! / ((lam-1)! (n+lam)!)
             a_v = (1-lam)_v (n+1)_v / (v! (n+lam+1)_v)

The szego sine series terminates after lam terms exactly because
(1-lam)_v = 0 for v >= lam when lam is a positive integer.

lam = 0 denotes the Chebyshev-T limit and is represented explicitly
(T_n(cos t) = cos(n t)) instead of through coefficient limits, which would
involve 0/0 rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

import mpmath as mp

from .exact import DEFAULT_PRECISION, RationalLike, to_mpf

Numeric = Union[Fraction, int, mp.mpf]


@dataclass(frozen=True)
class GegenbauerSpec:
    """The pair (lam, n): parameter lam >= 0 (0 = Chebyshev T), degree n >= 0."""

    lam: int
    n: int

    def __post_init__(self):
        if self.lam < 0:
            raise ValueError(f"parameter must be >= 0, got {self.lam}")
        if self.n < 0:
            raise ValueError(f"degree must be >= 0, got {self.n}")


def pochhammer(a: RationalLike, k: int) -> Fraction:
    """Rising factorial a (a+1) ... (a+k-1); empty product 1 for k = 0."""
    if k < 0:
        raise ValueError(f"pochhammer needs k >= 0, got {k}")
    result = Fraction(1)
    a = Fraction(a)
    for i in range(k):
        result *= a + i
    return result


def standard_coeff(spec: GegenbauerSpec, m: int) -> Fraction:
    """Cosine-series coefficient d_m of the standard representation.

    Returns 0 on the windows -lam < m < 0 and n < m < n + lam, which the
    entropy assembly relies on when it shifts indices.  Any other m outside
    0..n is a caller error.
    """
    lam, n = spec.lam, spec.n
    if 0 <= m <= n:
        if lam == 0:
            # Chebyshev-T limit: cos(n t) itself.
            if n == 0:
                return Fraction(1)
            return Fraction(1, 2) if m in (0, n) else Fraction(0)
        return (pochhammer(lam, m) * pochhammer(lam, n - m)
                / (math.factorial(m) * math.factorial(n - m)))
    if -lam < m < 0 or n < m < n + lam:
        return Fraction(0)
    raise ValueError(f"coefficient index {m} outside support of {spec}")


def szego_coeffs(spec: GegenbauerSpec) -> Tuple[Fraction, List[Fraction]]:
    """Prefactor c and sine coefficients [a_0, ..., a_{lam-1}], lam >= 1."""
    lam, n = spec.lam, spec.n
    if lam < 1:
        raise ValueError("szego representation requires parameter >= 1")
    c = (Fraction(4, 4 ** lam) * math.factorial(n + 2 * lam - 1)
         / (math.factorial(lam - 1) * math.factorial(n + lam)))
    alphas = [
        pochhammer(1 - lam, v) * pochhammer(n + 1, v)
        / (math.factorial(v) * pochhammer(n + lam + 1, v))
        for v in range(lam)
    ]
    return c, alphas


@dataclass(frozen=True)
class TrigRepresentation:
    """A finite trigonometric series for C_n(cos theta).

    kind "standard": coefficients are the n+1 cosine coefficients, prefactor 1.
    kind "szego": coefficients are the lam sine coefficients, prefactor c,
    and the series is divided by (sin theta)^(2 lam - 1).
    """

    kind: str
    coefficients: Tuple[Fraction, ...]
    prefactor: Fraction


def standard_representation(spec: GegenbauerSpec) -> TrigRepresentation:
    coeffs = tuple(standard_coeff(spec, m) for m in range(spec.n + 1))
    return TrigRepresentation("standard", coeffs, Fraction(1))


def szego_representation(spec: GegenbauerSpec) -> TrigRepresentation:
    c, alphas = szego_coeffs(spec)
    return TrigRepresentation("szego", tuple(alphas), c)


def gegenbauer_value(spec: GegenbauerSpec, x: Numeric) -> Numeric:
    """C_n^(lam)(x) by the three-term recurrence; T_n(x) when lam = 0.

    Exact (Fraction in, Fraction out) for rational x, floating at the ambient
    mpmath precision otherwise.
    """
    lam, n = spec.lam, spec.n
    exact = isinstance(x, (int, Fraction))
    one = Fraction(1) if exact else mp.mpf(1)
    if exact:
        x = Fraction(x)
    if n == 0:
        return one
    if lam == 0:
        prev, cur = one, x * one
        for _ in range(n - 1):
            prev, cur = cur, 2 * x * cur - prev
        return cur
    prev, cur = one, 2 * lam * x * one
    for k in range(2, n + 1):
        prev, cur = cur, (2 * x * (k + lam - 1) * cur - (k + 2 * lam - 2) * prev) / k
    return cur


@lru_cache(maxsize=256)
def _mpf_coeffs(values: Tuple[Fraction, ...], prec_bits: int) -> Tuple[mp.mpf, ...]:
    # prec_bits keys the cache to the caller's binary precision.
    return tuple(to_mpf(v) for v in values)


def _cosine_ladder_sum(coeffs: Sequence[mp.mpf], n: int, theta: mp.mpf) -> mp.mpf:
    """sum_m coeffs[m] * cos((n-2m) theta) via a two-term recurrence.

    cos((k-2)t) = 2 cos(2t) cos(kt) - cos((k+2)t) walks the frequencies
    n, n-2, ..., -n with three trig calls in total.
    """
    step = 2 * mp.cos(2 * theta)
    prev = mp.cos((n + 2) * theta)
    cur = mp.cos(n * theta)
    total = coeffs[0] * cur
    for m in range(1, n + 1):
        prev, cur = cur, step * cur - prev
        total += coeffs[m] * cur
    return total


def _sine_ladder_sum(coeffs: Sequence[mp.mpf], n: int, theta: mp.mpf) -> mp.mpf:
    """sum_v coeffs[v] * sin((n+2v+1) theta), ascending frequencies."""
    step = 2 * mp.cos(2 * theta)
    prev = mp.sin((n - 1) * theta)
    cur = mp.sin((n + 1) * theta)
    total = coeffs[0] * cur
    for v in range(1, len(coeffs)):
        prev, cur = cur, step * cur - prev
        total += coeffs[v] * cur
    return total


def eval_trig(rep: TrigRepresentation, spec: GegenbauerSpec, theta) -> mp.mpf:
    """Evaluate C_n(cos theta) from a trigonometric representation.

    The szego form divides by (sin theta)^(2 lam - 1) and is singular at
    theta = 0 and theta = pi; callers use the standard form there.
    """
    theta = mp.mpf(theta)
    coeffs = _mpf_coeffs(rep.coefficients, mp.mp.prec)
    if rep.kind == "standard":
        return _cosine_ladder_sum(coeffs, spec.n, theta)
    if rep.kind == "szego":
        s = mp.sin(theta)
        if s == 0:
            raise ValueError("szego representation is singular at theta = 0, pi")
        total = _sine_ladder_sum(coeffs, spec.n, theta)
        return to_mpf(rep.prefactor) * total / s ** (2 * spec.lam - 1)
    raise ValueError(f"unknown representation kind {rep.kind!r}")


def zero_angles(spec: GegenbauerSpec, precision: int = DEFAULT_PRECISION) -> List[mp.mpf]:
    """Angles theta in (0, pi) with C_n(cos theta) = 0, ascending.

    Sign changes of the standard representation are bracketed on a uniform
    grid of 8(n+1) interior points and bisected to width 10^(2-precision).
    The trig form is uniformly well conditioned on the circle, so no
    eigenvalue machinery is needed.
    """
    n = spec.n
    if n == 0:
        return []
    rep = standard_representation(spec)
    with mp.workdps(precision + 10):
        coeffs = _mpf_coeffs(rep.coefficients, mp.mp.prec)

        def g(t):
            return _cosine_ladder_sum(coeffs, n, t)

        cells = 8 * (n + 1) + 1
        grid = [mp.pi * i / cells for i in range(cells + 1)]
        values = [g(t) for t in grid]
        tol = mp.mpf(10) ** (2 - precision)
        found: List[mp.mpf] = []
        for i in range(cells):
            a, b = grid[i], grid[i + 1]
            fa, fb = values[i], values[i + 1]
            if fa == 0:
                # Grid hit a zero exactly (practically unreachable in binary).
                if not found or a - found[-1] > tol:
                    found.append(a)
                continue
            if fa * fb >= 0:
                continue
            while b - a > tol:
                mid = (a + b) / 2
                fm = g(mid)
                if fm == 0:
                    a = b = mid
                    break
                if fa * fm < 0:
                    b, fb = mid, fm
                else:
                    a, fa = mid, fm
            found.append((a + b) / 2)
        if len(found) != n:
            raise RuntimeError(
                f"expected {n} zeros for {spec}, bracketed {len(found)}")
        return found


def zeros(spec: GegenbauerSpec, precision: int = DEFAULT_PRECISION) -> List[mp.mpf]:
    """The n zeros of C_n^(lam) in (-1, 1), ascending."""
    with mp.workdps(precision + 10):
        return [mp.cos(t) for t in reversed(zero_angles(spec, precision))]
