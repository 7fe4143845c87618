"""H_1 of a Seifert manifold via an integer presentation and Smith normal form.

The presentation has one generator per exceptional fiber plus the regular
fiber class h, with relations

    alpha_j * c_j + beta_j * h = 0      (j = 1..N)
    c_1 + ... + c_N - n * h   = 0

and 2g free generators from the base surface.  With this sign convention
|H_1| = (prod alpha_j) * |d| whenever g = 0 and d != 0.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import EnumerationTooLarge
from .seifert import SeifertData

ENUM_CAP_ENV = "SEIFERT_CS_ENUM_CAP"
DEFAULT_ENUM_CAP = 10**6

Matrix = list[list[int]]


@dataclass(frozen=True)
class PresentationMatrix:
    rows: tuple[tuple[int, ...], ...]
    free_rank_adjunct: int = 0

    def to_list(self) -> Matrix:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class HomologySummary:
    b1: int
    torsion_coefficients: tuple[int, ...]

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion_coefficients)

    @property
    def flat_class_count(self) -> int:
        return self.torsion_order


def presentation_matrix(sd: SeifertData) -> PresentationMatrix:
    size = len(sd.pairs) + 1
    rows = []
    for j, (alpha, beta) in enumerate(sd.pairs):
        row = [0] * size
        row[j] = alpha
        row[-1] = beta
        rows.append(tuple(row))
    rows.append(tuple([1] * (size - 1) + [-sd.n]))
    return PresentationMatrix(tuple(rows), 2 * sd.genus)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def smith_normal_form(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with D = U @ m @ V in Smith normal form.

    U and V are unimodular. The diagonal of D is non-negative and each entry
    divides the next; zeros come last. Pivots are chosen by least absolute
    value and all arithmetic is in Python integers.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d = [list(map(int, r)) for r in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, f):
        # row[dst] += f * row[src]
        d[dst] = [x + f * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for r in d:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    for t in range(min(rows, cols)):
        while True:
            nonzero = [(abs(d[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if d[i][j]]
            if not nonzero:
                return u, d, v
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = d[t][t]
            clean = True
            for i in range(t + 1, rows):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // p))
                    clean = clean and d[i][t] == 0
            for j in range(t + 1, cols):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // p))
                    clean = clean and d[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if d[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return u, d, v


def diagonal(d: Matrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def homology_h1(sd: SeifertData) -> HomologySummary:
    pm = presentation_matrix(sd)
    _, d, _ = smith_normal_form(pm.to_list())
    diag = diagonal(d)
    rank = sum(1 for x in diag if x)
    torsion = tuple(x for x in diag if x > 1)
    free = len(pm.rows[0]) - rank
    return HomologySummary(b1=pm.free_rank_adjunct + free, torsion_coefficients=torsion)


def n_exponent(sd: SeifertData) -> Fraction:
    """Power of k in the partition function: (b1 - 1)/2 for connected X."""
    return Fraction(homology_h1(sd).b1 - 1, 2)


def enum_cap() -> int:
    return int(os.environ.get(ENUM_CAP_ENV, DEFAULT_ENUM_CAP))


def flat_bundle_classes(summary: HomologySummary, cap: int | None = None) -> list[tuple[int, ...]]:
    """Labels of Tors H^2 = Tors H_1 as residue tuples, in lexicographic order."""
    if cap is None:
        cap = enum_cap()
    if summary.torsion_order > cap:
        raise EnumerationTooLarge(f"{summary.torsion_order} flat classes exceed the cap of {cap}")
    return list(itertools.product(*(range(c) for c in summary.torsion_coefficients)))
