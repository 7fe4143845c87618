"""Seifert invariants [g; n; (a1,b1), ..., (aN,bN)] and elementary quantities.

All rational values are :class:`fractions.Fraction`, which is always kept in
lowest terms with a positive denominator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, InvalidAlpha, NegativeGenus, NonContactData, NotCoprime

Rational = Fraction


@dataclass(frozen=True)
class SeifertData:
    """Validated Seifert invariants.

    ``pairs`` holds the exceptional-fiber invariants ``(alpha, beta)`` in input
    order. ``beta`` is never normalized into ``[0, alpha)``; use
    :func:`twist_move` to change representatives explicitly.
    """

    genus: int
    n: int
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise NegativeGenus(f"genus must be >= 0, got {self.genus}")
        for j, (alpha, beta) in enumerate(self.pairs, start=1):
            if alpha < 1:
                raise InvalidAlpha(f"pair {j}: alpha must be >= 1, got {alpha}")
            if gcd(alpha, beta) != 1:
                raise NotCoprime(f"pair {j}: gcd({alpha}, {beta}) = {gcd(alpha, beta)} != 1")

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    def __str__(self):
        return render(self)


def validate(genus: int, n: int, raw_pairs: Iterable[Sequence[int]] = ()) -> SeifertData:
    pairs = []
    for p in raw_pairs:
        alpha, beta = p
        pairs.append((int(alpha), int(beta)))
    return SeifertData(int(genus), int(n), tuple(pairs))


def render(sd: SeifertData) -> str:
    """Canonical text form, accepted back by :func:`seifert_cs.cli.parse_seifert`."""
    text = f"g={sd.genus}; n={sd.n}"
    if sd.pairs:
        text += "; " + " ".join(f"({a},{b})" for a, b in sd.pairs)
    return text


def degree(sd: SeifertData) -> Fraction:
    """d = n + sum(beta_j / alpha_j)."""
    return sd.n + sum((Fraction(b, a) for a, b in sd.pairs), Fraction(0))


def vol_isotropy_squared(sd: SeifertData) -> Fraction:
    """Squared volume of the isotropy circle; equals the degree.

    Raises NonContactData when the degree is not positive, since no
    compatible contact form exists then.
    """
    d = degree(sd)
    if d <= 0:
        raise NonContactData(f"degree {d} <= 0: data is not contact-compatible")
    return d


def twist_move(sd: SeifertData, j: int, m: int) -> SeifertData:
    """Replace (a_j, b_j) by (a_j, b_j + m*a_j) and n by n - m.

    ``j`` is 1-based, matching the pair labels used in error messages.
    """
    if not 1 <= j <= len(sd.pairs):
        raise IndexOutOfRange(f"pair index {j} not in 1..{len(sd.pairs)}")
    pairs = list(sd.pairs)
    alpha, beta = pairs[j - 1]
    pairs[j - 1] = (alpha, beta + m * alpha)
    return SeifertData(sd.genus, sd.n - m, tuple(pairs))
