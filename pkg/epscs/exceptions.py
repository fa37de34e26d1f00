"""
Exception hierarchy for epscs.
Every error raised on purpose by the library derives from EpsCSError.
"""
from typing import Any, Dict, Optional


class EpsCSError(Exception):
    """Base class for all library errors."""


class DomainError(EpsCSError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class NumericalDomainError(EpsCSError, ArithmeticError):
    """
    A computed quantity left its admissible range.

    Attributes:
        params: The parameters that produced the offending value
    """

    def __init__(self, message: str, params: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.params = dict(params or {})


class QuadratureError(EpsCSError):
    """A quadrature rule is too small or failed its adequacy self-check."""


class NonFiniteIntegrandError(QuadratureError):
    """
    An integrand returned NaN or infinity at a quadrature node.

    Attributes:
        index: Position of the node in the rule
        node: The node itself
    """

    def __init__(self, index: int, node: Any, value: Any):
        super().__init__(
            f"integrand is not finite at node {index} ({node!r}): {value!r}"
        )
        self.index = index
        self.node = node


class UnknownSuiteError(EpsCSError, KeyError):
    """A verification suite name is not registered."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown suite"


class SampledInputError(EpsCSError, OSError):
    """A sampled-function input file could not be read or parsed."""
