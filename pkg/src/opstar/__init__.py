"""Constructive solver and certificate checker for the directed Oberwolfach problem OP*."""

from __future__ import annotations

from .core import INF, ConnectionSet, CycleType, Decomposition, TwoFactor
from .errors import OPStarError
from .outcome import Nonexistent, Solved, StrategyTrace, Unknown
from .solver import SearchBudget, Solver, brute_force_search, replay, solve
from .verify import CertificateReport, verify_decomposition

__version__ = "0.1.0"

__all__ = [
    "INF",
    "CertificateReport",
    "ConnectionSet",
    "CycleType",
    "Decomposition",
    "Nonexistent",
    "OPStarError",
    "SearchBudget",
    "Solved",
    "Solver",
    "StrategyTrace",
    "TwoFactor",
    "Unknown",
    "brute_force_search",
    "replay",
    "solve",
    "verify_decomposition",
]
