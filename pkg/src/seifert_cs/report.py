"""Structured U(1) Chern-Simons partition function report.

Everything computable from the Seifert invariants is evaluated exactly. The
factors that have no closed form here (the flat-connection action of each
bundle class and the torsion integral over the moduli space) appear as named
:class:`Placeholder` symbols.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import InvalidLevel
from .homology import HomologySummary, flat_bundle_classes, homology_h1
from .invariants import PhaseExponent, eta0, phase, twist_framing
from .seifert import SeifertData, degree, vol_isotropy_squared

GENUS_NOTE = "genus > 0: eta0 evaluated with the genus-free closed form as stated"


@dataclass(frozen=True)
class Placeholder:
    name: str
    expression: str
    class_label: tuple[int, ...] | None = None
    aliases: tuple[str, ...] = ()


def cs_flat_action(label: tuple[int, ...]) -> Placeholder:
    return Placeholder(
        name="cs_flat_action",
        expression="exp(pi*i*k*S_{X,P}(A_0))",
        class_label=label,
    )


TORSION_INTEGRAL = Placeholder(
    name="torsion_integral",
    expression="integral_{M_P} (T^d)^(1/2)",
    aliases=("T^d_C", "T^d_RS"),
)


@dataclass(frozen=True)
class PartitionReport:
    seifert: SeifertData
    level_k: int
    framing: int
    degree: Fraction
    vol_h_squared: Fraction
    eta0: Fraction
    phase: PhaseExponent
    n_exponent: Fraction
    flat_classes: HomologySummary
    class_labels: tuple[tuple[int, ...], ...]
    placeholders: tuple[Placeholder, ...]
    notes: tuple[str, ...] = ()

    def check(self):
        """Assert the structural invariants of the report."""
        assert self.phase.q == (self.eta0 / 4 + Fraction(self.framing, 12)) % 2
        assert self.n_exponent == Fraction(self.flat_classes.b1 - 1, 2)
        assert len(self.class_labels) == self.flat_classes.flat_class_count
        return self


def build_report(sd: SeifertData, k: int, framing: int = 0, cap: int | None = None) -> PartitionReport:
    """Assemble Z_{U(1)}(X, p, k) for every flat class p.

    Raises NonContactData if the degree is not positive.
    """
    if k < 1:
        raise InvalidLevel(f"level k must be >= 1, got {k}")
    vol2 = vol_isotropy_squared(sd)
    summary = homology_h1(sd)
    labels = tuple(flat_bundle_classes(summary, cap))
    e0 = eta0(sd)
    placeholders = tuple(cs_flat_action(p) for p in labels) + (TORSION_INTEGRAL,)
    return PartitionReport(
        seifert=sd,
        level_k=k,
        framing=framing,
        degree=degree(sd),
        vol_h_squared=vol2,
        eta0=e0,
        phase=twist_framing(phase(e0), framing),
        n_exponent=Fraction(summary.b1 - 1, 2),
        flat_classes=summary,
        class_labels=labels,
        placeholders=placeholders,
        notes=(GENUS_NOTE,) if sd.genus > 0 else (),
    )


def reframe(report: PartitionReport, s: int) -> PartitionReport:
    """Same report with the 2-framing twisted by a further s units."""
    return replace(report, framing=report.framing + s, phase=twist_framing(report.phase, s))
