"""Rademacher-Dedekind sums s(alpha, beta).

Argument order: the first argument is the modulus, the second the multiplier,

    s(alpha, beta) = sum_{k=1}^{alpha-1} ((k/alpha)) ((k*beta/alpha))
                   = 1/(4 alpha) sum_{k=1}^{alpha-1} cot(pi k/alpha) cot(pi k beta/alpha).

The classical literature writes s(h, k) with the modulus second, so
``s(alpha, beta)`` here is classical ``s(beta, alpha)``.  For instance
s(alpha, 1) = (alpha-1)(alpha-2)/(12 alpha).

Three independent evaluators are provided:

* :func:`dedekind_sawtooth` -- brute-force exact sum, O(alpha);
* :func:`dedekind_cotangent` -- floating cotangent sum, cross-check only;
* :func:`dedekind_fast` -- reciprocity-driven Euclidean reduction, O(log alpha).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import floor, gcd

import mpmath
import numpy as np

from .errors import InvalidAlpha, NotCoprime

# alpha**3 must stay below 2**63 for the int64 vectorized sum
_NUMPY_MIN = 2_000
_NUMPY_MAX = 2_000_000


def _check(alpha, beta):
    if alpha < 1:
        raise InvalidAlpha(f"alpha must be >= 1, got {alpha}")
    if gcd(alpha, beta) != 1:
        raise NotCoprime(f"gcd({alpha}, {beta}) != 1")


def sawtooth(x: Fraction) -> Fraction:
    """((x)) = x - floor(x) - 1/2, and 0 at integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def _sawtooth_reference(alpha, beta):
    return sum(
        (sawtooth(Fraction(k, alpha)) * sawtooth(Fraction(k * beta, alpha)) for k in range(1, alpha)),
        Fraction(0),
    )


def dedekind_sawtooth(alpha: int, beta: int) -> Fraction:
    """Exact s(alpha, beta) by direct summation of sawtooth products.

    For 0 < k < alpha neither k/alpha nor k*beta/alpha is an integer
    (coprimality), so ((k/alpha)) = (2k - alpha)/(2 alpha) and likewise for
    the second factor with k*beta reduced mod alpha. The sum is carried in
    integers over the common denominator 4 alpha^2.
    """
    _check(alpha, beta)
    if alpha == 1:
        return Fraction(0)
    b = beta % alpha
    if _NUMPY_MIN <= alpha <= _NUMPY_MAX:
        k = np.arange(1, alpha, dtype=np.int64)
        r = (k * b) % alpha
        total = int(np.dot(2 * k - alpha, 2 * r - alpha))
    else:
        total = 0
        r = 0
        for k in range(1, alpha):
            r += b
            if r >= alpha:
                r -= alpha
            total += (2 * k - alpha) * (2 * r - alpha)
    return Fraction(total, 4 * alpha * alpha)


def dedekind_cotangent(alpha: int, beta: int, precision: int = 64) -> float:
    """Floating s(alpha, beta) from the cotangent sum at ``precision`` bits.

    Independent numerical cross-check; never used to produce invariants.
    """
    _check(alpha, beta)
    if alpha == 1:
        return 0.0
    prec = precision + alpha.bit_length() + 8
    cot = _cot_table(alpha, prec)
    b = beta % alpha
    with mpmath.workprec(prec):
        total = mpmath.fsum(cot[k] * cot[(k * b) % alpha] for k in range(1, alpha))
        return float(total / (4 * alpha))


@lru_cache(maxsize=64)
def _cot_table(alpha, prec):
    # cot(pi j / alpha) for j = 0..alpha-1; index 0 is never read
    with mpmath.workprec(prec):
        return (None,) + tuple(mpmath.cot(mpmath.pi * j / alpha) for j in range(1, alpha))


def _reciprocity_rhs(a, b):
    # s(a,b) + s(b,a) for coprime positive a, b
    return Fraction(-1, 4) + Fraction(a * a + b * b + 1, 12 * a * b)


def dedekind_fast(alpha: int, beta: int) -> Fraction:
    """Exact s(alpha, beta) in O(log alpha) steps.

    Oddness and periodicity bring beta into [0, alpha); then reciprocity
    s(a, b) = R(a, b) - s(b, a mod b) is iterated until the modulus is 1.
    """
    _check(alpha, beta)
    sign = -1 if beta < 0 else 1
    a, b = alpha, abs(beta) % alpha
    total = Fraction(0)
    while a > 1:
        total += sign * _reciprocity_rhs(a, b)
        sign = -sign
        a, b = b, a % b
    return total


def reciprocity_defect(alpha: int, beta: int) -> Fraction:
    """s(alpha,beta) + s(beta,alpha) minus the reciprocity right-hand side; always 0.

    Evaluated with the brute-force sum so that it tests the law rather than
    the fast path that is built on it.
    """
    if alpha < 1 or beta < 1:
        raise InvalidAlpha(f"both arguments must be positive, got ({alpha}, {beta})")
    return dedekind_sawtooth(alpha, beta) + dedekind_sawtooth(beta, alpha) - _reciprocity_rhs(alpha, beta)
