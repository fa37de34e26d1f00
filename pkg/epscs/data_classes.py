"""
Value types shared across the package.
"""
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Union

import numpy as np
from typing_extensions import Literal, TypeAlias

from .exceptions import DomainError


@dataclass(frozen=True)
class ComplexPoint:
    """A finite point of the complex plane."""

    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise DomainError(f"complex point must be finite, got ({self.re}, {self.im})")

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


PointLike: TypeAlias = Union[complex, float, int, ComplexPoint]


def as_complex(z: PointLike) -> complex:
    """
    Convert a point to a finite Python complex.

    Raises:
        DomainError: If the point is not finite
    """
    c = complex(z)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise DomainError(f"complex point must be finite, got {c!r}")
    return c


@dataclass(frozen=True)
class PolyIndex:
    """
    Degree and superscript of an orthogonal polynomial.

    A negative superscript -k is only admitted for 1 <= k <= degree.
    """

    degree: int
    superscript: float = 0

    def __post_init__(self):
        if int(self.degree) != self.degree or self.degree < 0:
            raise DomainError(f"degree must be a nonnegative integer, got {self.degree!r}")
        if self.superscript < 0:
            k = self.superscript
            if int(k) != k:
                raise DomainError(
                    f"negative superscripts must be integers, got {self.superscript!r}"
                )
            if not 1 <= -k <= self.degree:
                raise DomainError(
                    f"superscript {int(k)} requires 1 <= {int(-k)} <= degree={self.degree}"
                )

    @property
    def is_negative(self) -> bool:
        return self.superscript < 0


@dataclass(frozen=True)
class LevelIndex:
    """Landau level m and basis index n of a polyanalytic basis function."""

    m: int
    n: int

    def __post_init__(self):
        for name in ("m", "n"):
            value = getattr(self, name)
            if int(value) != value or value < 0:
                raise DomainError(f"{name} must be a nonnegative integer, got {value!r}")

    @property
    def lower(self) -> int:
        return min(self.m, self.n)

    @property
    def gap(self) -> int:
        return abs(self.m - self.n)


@dataclass(frozen=True)
class StateLabel:
    """Label (z, m, eps) of one epsilon coherent state."""

    z: complex
    m: int
    eps: float

    def __post_init__(self):
        object.__setattr__(self, "z", as_complex(self.z))
        if int(self.m) != self.m or self.m < 0:
            raise DomainError(f"m must be a nonnegative integer, got {self.m!r}")
        if not (math.isfinite(self.eps) and self.eps > 0):
            raise DomainError(f"eps must be positive, got {self.eps!r}")

    def shifted(self, t: float) -> "StateLabel":
        """Same label with eps replaced by eps + t."""
        return StateLabel(self.z, self.m, self.eps + t)


@dataclass(frozen=True)
class CoefficientVector:
    """
    Truncated coefficients of a state in the oscillator eigenbasis.

    Attributes:
        label: State the coefficients belong to
        trunc: Number of coefficients kept
        entries: Complex coefficients c_0 .. c_{trunc-1}
        tail_mass: 1 - sum |c_n|^2
    """

    label: StateLabel
    trunc: int
    entries: np.ndarray
    tail_mass: float

    @property
    def norm_squared(self) -> float:
        return math.fsum(np.abs(self.entries) ** 2)


KernelKind: TypeAlias = Literal["overlap", "reproducing", "mehler", "heat"]


@dataclass(frozen=True)
class KernelEval:
    """A two-point kernel value together with the convention it was computed under."""

    value: complex
    kind: KernelKind
    params: Dict[str, Any] = field(default_factory=dict)

    def __complex__(self) -> complex:
        return complex(self.value)

    def __abs__(self) -> float:
        return abs(self.value)

    def conjugate(self) -> complex:
        return complex(self.value).conjugate()


RuleKind: TypeAlias = Literal["real-hermite", "complex-polar"]


@dataclass(frozen=True)
class QuadratureRule:
    """
    Nodes and weights of a quadrature rule.

    For ``real-hermite`` the rule integrates against e^{-x^2} on the real line;
    ``scaled_weights`` hold w_i e^{x_i^2} so the same nodes integrate f dx
    when f carries its own Gaussian decay. For ``complex-polar`` the nodes are
    complex points sqrt(t_j) e^{i theta_k} and the rule integrates against
    e^{-|z|^2} dmu(z).

    Attributes:
        kind: Rule family
        nodes: Real nodes or complex points
        weights: Nonnegative weights (tail weights may underflow to 0)
        radial_order: Gauss order (Hermite order, or Laguerre order in |z|^2)
        angular_order: Number of uniform angles (polar rules only)
        scaled_weights: Weights for unweighted integrals (Hermite rules only)
    """

    kind: RuleKind
    nodes: np.ndarray
    weights: np.ndarray
    radial_order: int
    angular_order: Optional[int] = None
    scaled_weights: Optional[np.ndarray] = None

    def __post_init__(self):
        if len(self.nodes) != len(self.weights):
            raise DomainError("nodes and weights must have the same length")
        if not np.all(np.isfinite(self.weights)) or np.any(self.weights < 0):
            raise DomainError("weights must be finite and nonnegative")
        if self.kind == "complex-polar" and (self.angular_order is None or self.angular_order < 1):
            raise DomainError("polar rules need angular_order >= 1")
        for arr in (self.nodes, self.weights, self.scaled_weights):
            if arr is not None:
                arr.setflags(write=False)

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class TransformSpec:
    """
    Parameters of the Bargmann-type transform.

    eps = 0 selects the limiting transform at eps -> 0+.
    """

    m: int
    eps: float = 0.0
    quad_order: int = 96
    adequacy_tol: float = 1e-10

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 0:
            raise DomainError(f"m must be a nonnegative integer, got {self.m!r}")
        if not (math.isfinite(self.eps) and self.eps >= 0):
            raise DomainError(f"eps must be nonnegative, got {self.eps!r}")
        if int(self.quad_order) != self.quad_order or self.quad_order < 1:
            raise DomainError(f"quad_order must be a positive integer, got {self.quad_order!r}")
        if self.adequacy_tol <= 0:
            raise DomainError("adequacy_tol must be positive")


Integrand: TypeAlias = Callable[[np.ndarray], np.ndarray]


class SampledFunction:
    """
    A function on the real line, given either as a callback or as samples.

    Sampled functions are interpolated by a cubic spline inside the grid and
    are zero outside it.
    """

    def __init__(self, grid: Optional[np.ndarray] = None,
                 values: Optional[np.ndarray] = None,
                 func: Optional[Integrand] = None):
        """
        Initialize the function.

        Args:
            grid: Strictly increasing sample points (sampled mode)
            values: Complex samples on the grid (sampled mode)
            func: Vectorized callback (callback mode)
        """
        if func is None and (grid is None or values is None):
            raise DomainError("a sampled function needs either func or grid and values")
        self.func = func
        self.grid = None if grid is None else np.asarray(grid, dtype=float)
        self.values = None if values is None else np.asarray(values, dtype=complex)
        self._spline = None

        if func is None:
            if self.grid.ndim != 1 or self.grid.shape != self.values.shape:
                raise DomainError("grid and values must be 1-D arrays of equal length")
            if len(self.grid) < 2 or np.any(np.diff(self.grid) <= 0):
                raise DomainError("grid must be strictly increasing with at least two points")
            if not np.all(np.isfinite(self.values)):
                raise DomainError("sampled values must be finite")
            # Imported lazily: only sampled inputs need scipy's interpolation
            from scipy.interpolate import CubicSpline
            self._spline = CubicSpline(self.grid, self.values)

    @property
    def mode(self) -> str:
        return "callback" if self.func is not None else "sampled"

    def __call__(self, x: Any) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.func is not None:
            return np.asarray(self.func(x))
        out = np.zeros(x.shape, dtype=complex)
        inside = (x >= self.grid[0]) & (x <= self.grid[-1])
        out[inside] = self._spline(x[inside])
        return out

    @classmethod
    def from_callable(cls, func: Integrand) -> "SampledFunction":
        return cls(func=func)

    @classmethod
    def from_csv(cls, path: str) -> "SampledFunction":
        """
        Load samples from a CSV file with columns x, re, im.

        Raises:
            SampledInputError: If the file cannot be read or parsed
        """
        from .export.csv_io import read_sampled_csv

        grid, values = read_sampled_csv(path)
        return cls(grid=grid, values=values)


def as_function(phi: Union[SampledFunction, Integrand]) -> SampledFunction:
    """Wrap a bare callback into a SampledFunction."""
    if isinstance(phi, SampledFunction):
        return phi
    if callable(phi):
        return SampledFunction.from_callable(phi)
    raise DomainError(f"expected a SampledFunction or a callable, got {type(phi).__name__}")


@dataclass
class VerificationReport:
    """
    Outcome of one property-suite run.

    ``passed`` is derived: it holds exactly when the defect named by
    ``criterion`` ("abs" or "rel") does not exceed ``tolerance``.
    """

    suite: str
    params: Dict[str, Any]
    defect_abs: float
    defect_rel: float
    tolerance: float
    passed: bool
    runtime_ms: int = 0
    criterion: str = "rel"

    @classmethod
    def build(cls, suite: str, params: Dict[str, Any], defect_abs: float,
              defect_rel: float, tolerance: float, criterion: str = "rel",
              runtime_ms: int = 0) -> "VerificationReport":
        """
        Create a report, deriving ``passed`` from the defect and tolerance.

        Args:
            suite: Suite identifier
            params: Parameters that reproduce the run
            defect_abs: Largest absolute deviation
            defect_rel: Largest relative deviation
            tolerance: Threshold applied to the chosen defect
            criterion: "abs" or "rel"
            runtime_ms: Wall-clock duration

        Returns:
            The report
        """
        if criterion not in ("abs", "rel"):
            raise DomainError(f"criterion must be 'abs' or 'rel', got {criterion!r}")
        defect = defect_abs if criterion == "abs" else defect_rel
        passed = bool(np.isfinite(defect) and defect <= tolerance)
        return cls(suite, dict(params), float(defect_abs), float(defect_rel),
                   float(tolerance), passed, int(runtime_ms), criterion)

    def to_record(self, include_timing: bool = False) -> Dict[str, Any]:
        """
        Serialize to the JSON record schema.

        Args:
            include_timing: Emit the measured runtime instead of null

        Returns:
            Dict with keys suite, params, defect_abs, defect_rel, tolerance,
            passed, runtime_ms
        """
        params = dict(self.params)
        params.setdefault("criterion", self.criterion)
        return {
            "suite": self.suite,
            "params": params,
            "defect_abs": self.defect_abs,
            "defect_rel": self.defect_rel,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "runtime_ms": self.runtime_ms if include_timing else None,
        }
