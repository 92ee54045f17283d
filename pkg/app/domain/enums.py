"""Enums shared across the domain layer."""

from enum import Enum


class IterationStatus(str, Enum):
    CONVERGED = "converged"
    DIVERGED = "diverged"
    MAX_STEPS = "max_steps"
    NUMERICAL_FAILURE = "numerical_failure"


class MethodName(str, Enum):
    PROPOSED = "proposed"
    NEWTON = "newton"
    TWO_STEP_NEWTON = "two_step_newton"
    HALLEY = "halley"
    CHEBYSHEV = "chebyshev"
    KUNG_TRAUB_DF4 = "df4"
    DF8 = "df8"


class DerivativeSource(str, Enum):
    AUTO_JET = "auto_jet"
    EXPLICIT = "explicit"


class ReportFormat(str, Enum):
    CSV = "csv"
    MARKDOWN = "markdown"


class ReversionMethod(str, Enum):
    NEWTON = "newton"
    LAGRANGE = "lagrange"
