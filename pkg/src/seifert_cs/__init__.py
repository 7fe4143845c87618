"""Exact topological invariants of U(1) Chern-Simons theory on Seifert 3-manifolds."""
from fractions import Fraction as Rational

from .dedekind import dedekind_cotangent, dedekind_fast, dedekind_sawtooth, reciprocity_defect
from .errors import (
    EnumerationTooLarge,
    IndexOutOfRange,
    InvalidAlpha,
    InvalidLevel,
    NegativeCurvatureIntegral,
    NegativeGenus,
    NonContactData,
    NonPositiveEpsilon,
    NotCoprime,
    ParseError,
    SeifertError,
)
from .homology import (
    HomologySummary,
    PresentationMatrix,
    flat_bundle_classes,
    homology_h1,
    n_exponent,
    presentation_matrix,
    smith_normal_form,
)
from .invariants import (
    PhaseExponent,
    counterterm,
    eta0,
    eta_contact,
    grav_cs_adiabatic,
    phase,
    twist_framing,
)
from .report import PartitionReport, Placeholder, build_report, reframe
from .seifert import SeifertData, degree, render, twist_move, validate, vol_isotropy_squared

__version__ = "0.1.0"
