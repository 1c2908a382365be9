"""Exact entropy of Gegenbauer polynomials of integer parameter.

The entropy integral

    E(C_n) = -integral_{-1}^{1} C_n(x)^2 log(C_n(x)^2) (1-x^2)^(lam-1/2) dx

reduces, through the trigonometric representations, to an exact rational
combination of the Fourier-cosine moments

    I_m = integral_0^pi cos(2m t) log(C_n(cos t))^2 dt,   m = 0 .. n + lam:

    E(C_n) = -(c/2) * [ a_0 d_0 I_0 + sum_{m=1}^{n+lam} beta_m I_m ],

where beta_m combines the szego sine coefficients a_v with first differences
of the standard cosine coefficients d_j, and the m = n+lam term is absorbed
into the sum with the override beta_{n+lam} = -a_{lam-1} d_n.

Every I_m is pi times an exact rational for m >= 1, and
I_0 = 2 pi log((lam)_n / n!).  Three independent routes compute the same
table:

  series-log     residue calculus turns I_m (m >= 1) into
                 (2 lam - 1)/m plus the m-th Taylor coefficient of
                 log(Q(w)/Q(0)) where, in w = z^2,
                 Q(w) = sum_v a_v (w^(n+lam+v) - w^(lam-1-v));
                 the coefficients follow from the standard exact
                 recurrence for the logarithm of a power series.

  faa-di-bruno   closed partition sums for the same Taylor coefficients:
                 explicit formulas for lam = 1 and lam = 2, and for
                 lam >= 3 an enumeration of partition multi-indices
                 (Faa di Bruno's formula applied to log of the sparse
                 polynomial above).

  standard-rep   the same residue argument applied to the standard
                 representation's polynomial R(w) = sum_j d_j w^(n-j);
                 here no (2 lam - 1)/m term appears because R carries no
                 (1 - z^2) factor.

The routes must agree entry by entry, in exact arithmetic; `verify` sweeps
exercise exactly that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Tuple, Union

import mpmath as mp

from .exact import (DEFAULT_PRECISION, ExactEntropy, LogLinear, ZERO,
                    log_linear_from, to_mpf)
from .gegenbauer import GegenbauerSpec, pochhammer, standard_coeff, szego_coeffs

ROUTE_SERIES_LOG = "series-log"
ROUTE_FAA_DI_BRUNO = "faa-di-bruno"
ROUTE_STANDARD_REP = "standard-rep"


@dataclass(frozen=True)
class IntegralTable:
    """Exact values I_m / pi for m = 0 .. n + lam, tagged with their route.

    Entry 0 carries the log term 2 log((lam)_n / n!); entries m >= 1 are pure
    rationals (empty log map).
    """

    spec: GegenbauerSpec
    values: Tuple[LogLinear, ...]
    route: str


@dataclass(frozen=True)
class BetaVector:
    """Assembly weights beta_m for m = 1 .. n + lam (index 0 unused)."""

    spec: GegenbauerSpec
    beta: Tuple[Fraction, ...]


def _require_integer_parameter(spec: GegenbauerSpec) -> None:
    if spec.lam < 1:
        raise ValueError(
            "entropy assembly requires parameter >= 1 "
            "(the Chebyshev-T limit is exposed in normalized form only)")


def beta_vector(spec: GegenbauerSpec) -> BetaVector:
    """Weights of I_1 .. I_{n+lam} in the entropy assembly.

    beta_m = sum_v a_v (d_{m-v} - d_{m-v-1}) for m < n + lam, relying on the
    zero windows of standard_coeff, and beta_{n+lam} = -a_{lam-1} d_n.
    """
    _require_integer_parameter(spec)
    lam, n = spec.lam, spec.n
    _, alphas = szego_coeffs(spec)
    d = lambda m: standard_coeff(spec, m)
    beta = [Fraction(0)] * (n + lam + 1)
    for m in range(1, n + lam):
        beta[m] = sum((alphas[v] * (d(m - v) - d(m - v - 1))
                       for v in range(lam)), Fraction(0))
    beta[n + lam] = -alphas[lam - 1] * d(n)
    return BetaVector(spec, tuple(beta))


def _log_series(coeffs: Dict[int, Fraction], order: int) -> List[Fraction]:
    """Taylor coefficients b_1..b_order of log(A(w)) for A = 1 + sum a_i w^i.

    `coeffs` maps exponent i >= 1 to a_i (sparse).  Recurrence:
    b_k = a_k - (1/k) * sum_{i>=1} a_i (k-i) b_{k-i}.
    """
    b = [Fraction(0)] * (order + 1)
    nonzero = sorted(coeffs.items())
    for k in range(1, order + 1):
        acc = coeffs.get(k, Fraction(0))
        corr = Fraction(0)
        for i, a_i in nonzero:
            if i >= k:
                break
            corr += a_i * (k - i) * b[k - i]
        b[k] = acc - corr / k
    return b


def _log_value(spec: GegenbauerSpec) -> LogLinear:
    """I_0 / pi = 2 log((lam)_n / n!) in canonical form."""
    ratio = pochhammer(spec.lam, spec.n) / math.factorial(spec.n)
    return log_linear_from(Fraction(2), ratio)


def _as_table(spec: GegenbauerSpec, rationals: List[Fraction], route: str) -> IntegralTable:
    values = [_log_value(spec)]
    values.extend(LogLinear(r) for r in rationals)
    return IntegralTable(spec, tuple(values), route)


def integrals_series_log(spec: GegenbauerSpec) -> IntegralTable:
    """Production route: log-series recurrence on the szego polynomial."""
    _require_integer_parameter(spec)
    lam, n = spec.lam, spec.n
    _, alphas = szego_coeffs(spec)
    order = n + lam
    poly: Dict[int, Fraction] = {}
    for v in range(lam):
        hi = n + lam + v
        if hi <= order:
            poly[hi] = poly.get(hi, Fraction(0)) + alphas[v]
        lo = lam - 1 - v
        poly[lo] = poly.get(lo, Fraction(0)) - alphas[v]
    q0 = poly.pop(0)  # = -a_{lam-1}, never zero for integer parameter
    normalized = {i: a / q0 for i, a in poly.items() if a != 0}
    b = _log_series(normalized, order)
    rationals = [Fraction(2 * lam - 1, m) + b[m] for m in range(1, order + 1)]
    return _as_table(spec, rationals, ROUTE_SERIES_LOG)


def integrals_standard_rep(spec: GegenbauerSpec) -> IntegralTable:
    """Verification route: same recurrence on the standard-rep polynomial.

    R(w) = sum_j d_j w^(n-j) has constant term d_n = (lam)_n/n! > 0 and no
    (1-z^2) factor, so the table entries are the bare Taylor coefficients.
    """
    _require_integer_parameter(spec)
    lam, n = spec.lam, spec.n
    order = n + lam
    r0 = standard_coeff(spec, n)
    poly = {n - j: standard_coeff(spec, j) / r0 for j in range(n)}
    b = _log_series(poly, order)
    return _as_table(spec, b[1:], ROUTE_STANDARD_REP)


def _faa_di_bruno_rationals(spec: GegenbauerSpec) -> List[Fraction]:
    """Partition-sum evaluation of I_m / pi for parameter >= 3.

    For each m, enumerate k and the multiplicities k_{2j} (j = 3..lam-1,
    k_{2j} <= floor(m/j)) of the higher even derivatives; the multiplicities
    k_2, k_4 are determined by the partition constraints and terms where
    either would be negative are skipped.  The m = n + lam entry picks up the
    extra -a_0/a_{lam-1} from the top-degree monomial.
    """
    lam, n = spec.lam, spec.n
    _, alphas = szego_coeffs(spec)
    top = n + lam

    # Power tables: alpha_pows[i][e] = alphas[i] ** e, inv_top[k] = a_{lam-1}^-k.
    alpha_pows = [[Fraction(1)] for _ in range(lam)]
    for i in range(lam):
        for _ in range(top):
            alpha_pows[i].append(alpha_pows[i][-1] * alphas[i])
    inv_top = [Fraction(1)]
    for _ in range(top):
        inv_top.append(inv_top[-1] / alphas[lam - 1])

    js = list(range(3, lam))  # indices of the free multiplicities
    out = []
    for m in range(1, top + 1):
        total = Fraction(0)
        for ks in product(*(range(m // j + 1) for j in js)):
            s_r = sum((j - 2) * kj for j, kj in zip(js, ks))
            s_s = sum((j - 1) * kj for j, kj in zip(js, ks))
            if s_s > m - 1:
                continue
            base = Fraction(1)
            for j, kj in zip(js, ks):
                base *= alpha_pows[lam - 1 - j][kj] / math.factorial(kj)
            k_min = max(1, -((s_r - m) // 2))  # ceil((m - s_r)/2)
            for k in range(k_min, m - s_s + 1):
                k2 = 2 * k - m + s_r
                k4 = m - k - s_s
                term = (math.factorial(k - 1) * inv_top[k]
                        * alpha_pows[lam - 2][k2] / math.factorial(k2)
                        * alpha_pows[lam - 3][k4] / math.factorial(k4)
                        * base)
                total += -term if k % 2 else term
        value = Fraction(2 * lam - 1, m) - total
        if m == top:
            value -= alphas[0] / alphas[lam - 1]
        out.append(value)
    return out


def integrals_faa_di_bruno(spec: GegenbauerSpec) -> IntegralTable:
    """Verification route: explicit closed/partition formulas per parameter."""
    _require_integer_parameter(spec)
    lam, n = spec.lam, spec.n
    if lam == 1:
        rationals = [Fraction(1, m) - (1 if m == n + 1 else 0)
                     for m in range(1, n + 2)]
    elif lam == 2:
        y = Fraction(n + 3, n + 1)
        rationals = [(3 - y ** m) / m + (y if m == n + 2 else 0)
                     for m in range(1, n + 3)]
    else:
        rationals = _faa_di_bruno_rationals(spec)
    return _as_table(spec, rationals, ROUTE_FAA_DI_BRUNO)


def assemble_entropy(spec: GegenbauerSpec, table: IntegralTable) -> ExactEntropy:
    """Combine an integral table into E(C_n) = pi * (exact log-linear)."""
    c, alphas = szego_coeffs(spec)
    bv = beta_vector(spec)
    acc = table.values[0] * (alphas[0] * standard_coeff(spec, 0))
    for m in range(1, spec.n + spec.lam + 1):
        acc = acc + table.values[m] * bv.beta[m]
    return ExactEntropy(pi_part=acc * (Fraction(-1, 2) * c), plain_part=ZERO)


def entropy_exact(spec: GegenbauerSpec) -> ExactEntropy:
    """Exact unnormalized entropy E(C_n^(lam)), lam >= 1."""
    _require_integer_parameter(spec)
    return assemble_entropy(spec, integrals_series_log(spec))


def _complex_power(base: mp.mpc, exponent: int) -> mp.mpc:
    """Binary exponentiation on (Re, Im) pairs; exponent >= 0."""
    result = mp.mpc(1)
    while exponent:
        if exponent & 1:
            result *= base
        base *= base
        exponent >>= 1
    return result


def entropy_closed_form(spec: GegenbauerSpec,
                        precision: int = DEFAULT_PRECISION
                        ) -> Union[ExactEntropy, mp.mpf]:
    """Independent closed forms for lam in {0, 1, 2, 3}.

    lam = 0 returns the normalized Chebyshev-T entropy (0 for n = 0, else
    log 2 - 1); lam = 1, 2 return the exact entropy; lam = 3 returns a
    high-precision float: its closed form carries surds via the complex
    number f = ((n+1)(n+5) + i sqrt(3(n+1)(n+5))) / ((n+1)(n+2)), whose power
    f^(n+1) is evaluated in floating point, keeping this check independent of
    the rational route.
    """
    lam, n = spec.lam, spec.n
    if lam == 0:
        if n == 0:
            return ExactEntropy()
        return ExactEntropy(plain_part=log_linear_from(1, 2) + LogLinear(Fraction(-1)))
    if lam == 1:
        return ExactEntropy(
            pi_part=LogLinear(Fraction(1, 2) * (Fraction(1, n + 1) - 1)))
    if lam == 2:
        logs = log_linear_from(-Fraction((n + 1) * (n + 3), 4), n + 1)
        const = (Fraction(n ** 3 - 5 * n ** 2 - 29 * n - 27, n + 2)
                 + Fraction((n + 3) ** (n + 3), (n + 2) * (n + 1) ** (n + 1)))
        return ExactEntropy(pi_part=logs + LogLinear(-const / 8))
    if lam == 3:
        with mp.workdps(precision + 10):
            a = (n + 1) * (n + 5)
            f = mp.mpc(a, mp.sqrt(3 * a)) / ((n + 1) * (n + 2))
            tail = mp.mpc(2 * n * n + 13 * n + 14,
                          -(n + 1) * (n + 6) * mp.sqrt(mp.mpf(a) / 3))
            real_part = (_complex_power(f, n + 1) * tail).real
            total = (2 * (n + 1) * (n + 2) * (n + 4) * (n + 5)
                     * mp.log(mp.mpf((n + 1) * (n + 2)) / 2))
            total += to_mpf(Fraction(
                n ** 5 - 16 * n ** 4 - 269 * n ** 3 - 1200 * n ** 2
                - 2102 * n - 1250, n + 3))
            total += (2 * (n + 5) ** 2 * real_part
                      / ((n + 2) * (n + 3)))
            return -mp.pi * total / 128
    raise ValueError(f"no closed form for parameter {lam}")


def normalize_entropy(spec: GegenbauerSpec, e: ExactEntropy) -> ExactEntropy:
    """Entropy of the orthonormalized polynomial, from the raw entropy.

    E(normalized) = log(lam (2lam)_n / ((n+lam) n!)) + kappa * (E(C_n) / pi)
    with the exact rational

        kappa = (lam-1)! (n+lam) n! 4^lam lam! / ((2lam)! (2lam)_n),

    obtained by substituting Gamma(lam + 1/2) = sqrt(pi) (2lam)!/(4^lam lam!)
    into the conversion factor; the pi of the raw entropy cancels exactly,
    so the result is pi-free.
    """
    _require_integer_parameter(spec)
    lam, n = spec.lam, spec.n
    if not e.plain_part.is_zero():
        raise ValueError("expected an unnormalized entropy (pure pi-multiple)")
    poch2 = pochhammer(2 * lam, n)
    kappa = (Fraction(math.factorial(lam - 1) * (n + lam) * math.factorial(n)
                      * 4 ** lam * math.factorial(lam))
             / (math.factorial(2 * lam) * poch2))
    ratio = Fraction(lam) * poch2 / ((n + lam) * math.factorial(n))
    plain = log_linear_from(1, ratio) + e.pi_part * kappa
    return ExactEntropy(pi_part=ZERO, plain_part=plain)


def normalized_entropy_exact(spec: GegenbauerSpec) -> ExactEntropy:
    """Exact entropy of the orthonormalized polynomial, lam >= 0."""
    if spec.lam == 0:
        result = entropy_closed_form(spec)
        assert isinstance(result, ExactEntropy)
        return result
    return normalize_entropy(spec, entropy_exact(spec))
