"""Verification suites, reports and YAML presets."""

from .presets import list_presets, load_preset
from .report import Failure, VerificationReport
from .suites import SUITES, Suite, run_suite, weak_compositions

__all__ = [
    "Failure",
    "VerificationReport",
    "Suite",
    "SUITES",
    "run_suite",
    "weak_compositions",
    "load_preset",
    "list_presets",
]
