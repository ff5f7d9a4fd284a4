"""Rational (m,n) sweep map on Dyck paths and its inversion."""

from .core import (
    CoprimePair,
    InvalidInputError,
    InvariantViolation,
    area,
    distance,
    format_ranks,
    format_word,
    is_dyck,
    parse_ranks,
    parse_word,
    step_ranks,
    sweep,
)
from .diagram import Arrow, DiagramParams, PathDiagram, build_diagram, default_height
from .inversion import (
    InversionResult,
    InversionTrace,
    StepRecord,
    canonical_start,
    invert,
    invert_with_trace,
    rebuild_preimage,
    strict_cover,
    strong_find_rank,
    weak_find_rank,
)
from .oracle import (
    PathRecord,
    VerificationReport,
    brute_force_invert,
    cell_count_area,
    coprime_pairs,
    enumerate_dyck,
    rational_catalan,
    verify_bijection,
)
from .render import render_diagram, render_path, render_trace
from .report import write_report

__version__ = "0.1.0"

__all__ = [
    "Arrow",
    "CoprimePair",
    "DiagramParams",
    "InvalidInputError",
    "InvariantViolation",
    "InversionResult",
    "InversionTrace",
    "PathDiagram",
    "PathRecord",
    "StepRecord",
    "VerificationReport",
    "area",
    "brute_force_invert",
    "build_diagram",
    "canonical_start",
    "cell_count_area",
    "coprime_pairs",
    "default_height",
    "distance",
    "enumerate_dyck",
    "format_ranks",
    "format_word",
    "invert",
    "invert_with_trace",
    "is_dyck",
    "parse_ranks",
    "parse_word",
    "rational_catalan",
    "rebuild_preimage",
    "render_diagram",
    "render_path",
    "render_trace",
    "step_ranks",
    "strict_cover",
    "strong_find_rank",
    "sweep",
    "verify_bijection",
    "weak_find_rank",
    "write_report",
]
