"""Bound recurrences, closed-form evaluators and the small-numbers table."""

from .closed_form import (
    HarmonicDecomposition,
    erdos_rado_floor,
    eval_erdos_lovasz,
    eval_erdos_rado,
    eval_parameterized,
    harmonic_decompose,
    harmonic_estimate,
    harmonic_number,
)
from .recurrence import (
    BoundDerivation,
    BoundStep,
    KnownBound,
    berlekamp_base,
    berlekamp_chain_derivation,
    berlekamp_chain_value,
    recurrence_chain,
    recurrence_only,
    recurrence_step,
    strengthened_candidates,
    strengthened_prime_candidates,
)
from .table import REFERENCE, CellReport, Figure1Report, figure1_report

__all__ = [
    "BoundDerivation",
    "BoundStep",
    "CellReport",
    "Figure1Report",
    "HarmonicDecomposition",
    "KnownBound",
    "REFERENCE",
    "berlekamp_base",
    "berlekamp_chain_derivation",
    "berlekamp_chain_value",
    "erdos_rado_floor",
    "eval_erdos_lovasz",
    "eval_erdos_rado",
    "eval_parameterized",
    "figure1_report",
    "harmonic_decompose",
    "harmonic_estimate",
    "harmonic_number",
    "recurrence_chain",
    "recurrence_only",
    "recurrence_step",
    "strengthened_candidates",
    "strengthened_prime_candidates",
]
