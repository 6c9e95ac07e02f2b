"""
Exception hierarchy shared by every knotlab app.

Each error carries the process exit code used by the management commands:
2 for bad input, 1 for a failed check.
"""
from typing import Any, Dict, Optional


# ============================================================================
# Base
# ============================================================================

class KnotLabError(Exception):
    """Base class for knotlab errors."""

    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self):
        return f"{type(self).__name__}: {self.message}"


class InputError(KnotLabError):
    """The caller handed over something malformed."""

    exit_code = 2


class CheckFailure(KnotLabError):
    """A computed quantity violates an expected identity."""

    exit_code = 1


# ============================================================================
# Input errors
# ============================================================================

class CodeSyntaxError(InputError):
    """Bad token in an SGC v1 link code or in the configuration catalog."""


class ValidationError(InputError):
    """A link code or configuration breaks a structural rule."""


class UnknownCrossing(InputError):
    """A crossing id does not occur in the diagram."""


class LengthMismatch(InputError):
    """A split word and its crossing selection differ in length."""


class ArityError(InputError):
    """An invariant was evaluated on the wrong number of components."""


class MissingKey(InputError):
    """The configuration catalog lacks a required entry."""


class UnsupportedDiagram(InputError):
    """The numeric weight evaluator only handles plain chord diagrams."""


# ============================================================================
# Check failures
# ============================================================================

class MissingInvariant(CheckFailure):
    """An invariant report lacks a value needed by a series assembly."""


class RangeOverflow(CheckFailure):
    """A series or polynomial produced a term below its allowed power (x^-4, z^(1-n))."""


class PrincipalPartNonzero(CheckFailure):
    """A substituted polynomial kept negative powers of x."""
