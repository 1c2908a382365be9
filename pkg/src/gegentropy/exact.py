"""Exact rational arithmetic and the canonical value form q + sum_p e_p*log(p).

All closed-form entropies handled by this package are rational combinations of
logarithms of positive rationals, optionally multiplied by pi.  Because the set
{log p : p prime} is linearly independent over the rationals, reducing every
log argument to its prime factorization gives a *canonical* form on which
equality is decidable exactly:

    LogLinear   =  constant + sum over primes p of  e_p * log(p)

with rational constant and rational exponent-coefficients e_p.  ExactEntropy
pairs two such values, one multiplying pi and one standing alone.

Rationals are ``fractions.Fraction`` (always in lowest terms, denominator > 0).
High-precision floating evaluation uses mpmath; ``precision`` arguments are
decimal digits and must be at least 50.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Union

import mpmath as mp

Rational = Fraction
RationalLike = Union[Fraction, int]

#: Decimal digits used when no precision is requested explicitly.
DEFAULT_PRECISION = 64

#: Contract floor for every evaluation precision in this package.
MIN_PRECISION = 50


def to_mpf(q: RationalLike) -> mp.mpf:
    """Convert an exact rational to mpf at the *current* mpmath precision."""
    if isinstance(q, Fraction):
        return mp.mpf(q.numerator) / q.denominator
    return mp.mpf(q)


def _is_prime(p: int) -> bool:
    if p < 2 or (p > 2 and p % 2 == 0):
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization of a positive integer by trial division.

    Log arguments in this package are products of small integers, so trial
    division (2, 3, then a 6k+-1 wheel) is never a bottleneck.
    """
    if n <= 0:
        raise ValueError(f"can only factor positive integers, got {n}")
    factors: Dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 5
    while p * p <= n:
        for q in (p, p + 2):
            while n % q == 0:
                factors[q] = factors.get(q, 0) + 1
                n //= q
        p += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


@dataclass(frozen=True)
class LogLinear:
    """Canonical exact value ``constant + sum_p log_terms[p] * log(p)``.

    Keys of ``log_terms`` are primes; zero coefficients are dropped on
    construction, so dataclass equality is exact mathematical equality.
    """

    constant: Fraction = Fraction(0)
    log_terms: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {
            p: Fraction(e)
            for p, e in sorted(self.log_terms.items())
            if e != 0
        }
        for p in cleaned:
            # Equality decidability rests on the keys being prime.
            if not _is_prime(p):
                raise ValueError(f"log-term key {p} is not prime")
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(self, "log_terms", cleaned)

    def is_zero(self) -> bool:
        return self.constant == 0 and not self.log_terms

    def __add__(self, other: "LogLinear") -> "LogLinear":
        if not isinstance(other, LogLinear):
            return NotImplemented
        terms = dict(self.log_terms)
        for p, e in other.log_terms.items():
            terms[p] = terms.get(p, Fraction(0)) + e
        return LogLinear(self.constant + other.constant, terms)

    def __sub__(self, other: "LogLinear") -> "LogLinear":
        if not isinstance(other, LogLinear):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LogLinear":
        return self * Fraction(-1)

    def __mul__(self, scalar: RationalLike) -> "LogLinear":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return LogLinear(
            self.constant * scalar,
            {p: e * scalar for p, e in self.log_terms.items()},
        )

    __rmul__ = __mul__


ZERO = LogLinear()


def log_linear_from(coeff: RationalLike, arg: RationalLike) -> LogLinear:
    """Canonicalize ``coeff * log(arg)`` for a positive rational ``arg``.

    The prime map sends p to coeff * (multiplicity of p in arg's numerator
    minus multiplicity in its denominator); the constant is zero.
    """
    coeff = Fraction(coeff)
    arg = Fraction(arg)
    if arg <= 0:
        raise ValueError(f"log argument must be positive, got {arg}")
    terms: Dict[int, Fraction] = {}
    for p, e in factorize(arg.numerator).items():
        terms[p] = coeff * e
    for p, e in factorize(arg.denominator).items():
        terms[p] = terms.get(p, Fraction(0)) - coeff * e
    return LogLinear(Fraction(0), terms)


def log_linear_eval(value: LogLinear, precision: int = DEFAULT_PRECISION) -> mp.mpf:
    """Evaluate a LogLinear to an mpf with `precision` decimal digits."""
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION}, got {precision}")
    with mp.workdps(precision + 10):
        total = to_mpf(value.constant)
        for p, e in value.log_terms.items():
            total += to_mpf(e) * mp.log(p)
        return total


@dataclass(frozen=True)
class ExactEntropy:
    """Exact entropy value ``pi * pi_part + plain_part``.

    Entropies of the raw polynomials are pure pi-multiples (plain_part = 0);
    entropies of the orthonormalized polynomials are pi-free (pi_part = 0).
    """

    pi_part: LogLinear = ZERO
    plain_part: LogLinear = ZERO

    def is_zero(self) -> bool:
        return self.pi_part.is_zero() and self.plain_part.is_zero()

    def __add__(self, other: "ExactEntropy") -> "ExactEntropy":
        if not isinstance(other, ExactEntropy):
            return NotImplemented
        return ExactEntropy(self.pi_part + other.pi_part,
                            self.plain_part + other.plain_part)

    def __mul__(self, scalar: RationalLike) -> "ExactEntropy":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return ExactEntropy(self.pi_part * scalar, self.plain_part * scalar)

    __rmul__ = __mul__

    def evaluate(self, precision: int = DEFAULT_PRECISION) -> mp.mpf:
        """Numeric value pi*pi_part + plain_part at `precision` digits."""
        with mp.workdps(precision + 10):
            total = log_linear_eval(self.pi_part, precision) * mp.pi
            total += log_linear_eval(self.plain_part, precision)
            return total


def decimal_string(x: mp.mpf, precision: int) -> str:
    """Decimal rendering with `precision` significant digits."""
    return mp.nstr(x, precision, strip_zeros=False)


# ---------------------------------------------------------------------------
# JSON interchange.  Rationals travel as exact "p/q" strings, never floats.
# ---------------------------------------------------------------------------

def _frac_str(q: Fraction) -> str:
    return str(q)


def _log_list(v: LogLinear) -> list:
    return [{"prime": p, "coeff": _frac_str(e)} for p, e in v.log_terms.items()]


def entropy_to_json_dict(e: ExactEntropy, precision: int = DEFAULT_PRECISION) -> dict:
    return {
        "pi_log": _log_list(e.pi_part),
        "pi_const": _frac_str(e.pi_part.constant),
        "plain_log": _log_list(e.plain_part),
        "plain_const": _frac_str(e.plain_part.constant),
        "decimal": decimal_string(e.evaluate(precision), precision),
    }


def entropy_from_json_dict(d: dict) -> ExactEntropy:
    pi = LogLinear(Fraction(d["pi_const"]),
                   {int(t["prime"]): Fraction(t["coeff"]) for t in d["pi_log"]})
    plain = LogLinear(Fraction(d["plain_const"]),
                      {int(t["prime"]): Fraction(t["coeff"]) for t in d["plain_log"]})
    return ExactEntropy(pi, plain)


def dumps_json(obj) -> str:
    """The one JSON writer of this package; byte-stable for round-trips."""
    return json.dumps(obj, separators=(", ", ": "), sort_keys=False)
