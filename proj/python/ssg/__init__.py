"""Groebner bases over prime fields with a signature-based algorithm."""

from ._core import (
    ContractError,
    InvariantViolation,
    ParseError,
    Report,
    System,
    benchmark,
    buchberger,
    cli,
    groebner,
    is_groebner_basis,
    parse_system,
    random_system,
    verify,
)

__all__ = [
    "ContractError",
    "InvariantViolation",
    "ParseError",
    "Report",
    "System",
    "benchmark",
    "buchberger",
    "cli",
    "groebner",
    "is_groebner_basis",
    "parse_system",
    "random_system",
    "verify",
]
