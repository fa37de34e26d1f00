"""
epscs - epsilon coherent states with polyanalytic coefficients.

Basis functions, normalizations, overlaps, closed-form wavefunctions, the
heat semigroup and the Bargmann-type transform, each checked against an
independent series or quadrature.
"""
from .bargmann import bargmann_classical, transform, transform_grid
from .config import DEFAULTS, NumericsConfig
from .data_classes import (
    CoefficientVector,
    ComplexPoint,
    KernelEval,
    LevelIndex,
    PolyIndex,
    QuadratureRule,
    SampledFunction,
    StateLabel,
    TransformSpec,
    VerificationReport,
)
from .exceptions import (
    DomainError,
    EpsCSError,
    NonFiniteIntegrandError,
    NumericalDomainError,
    QuadratureError,
    SampledInputError,
    UnknownSuiteError,
)
from .polyfock import phi, reproducing_kernel, sigma
from .specfun import ho_eigenfunction
from .states import apply_heat, coefficients, normalization, overlap, wavefunction_closed
from .version import __version__

__all__ = [
    "bargmann_classical",
    "transform",
    "transform_grid",
    "DEFAULTS",
    "NumericsConfig",
    "CoefficientVector",
    "ComplexPoint",
    "KernelEval",
    "LevelIndex",
    "PolyIndex",
    "QuadratureRule",
    "SampledFunction",
    "StateLabel",
    "TransformSpec",
    "VerificationReport",
    "DomainError",
    "EpsCSError",
    "NonFiniteIntegrandError",
    "NumericalDomainError",
    "QuadratureError",
    "SampledInputError",
    "UnknownSuiteError",
    "phi",
    "reproducing_kernel",
    "sigma",
    "ho_eigenfunction",
    "apply_heat",
    "coefficients",
    "normalization",
    "overlap",
    "wavefunction_closed",
    "__version__",
]
