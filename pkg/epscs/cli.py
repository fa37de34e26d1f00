"""
Command-line interface for epscs.

Evaluates quantities on grids, runs transforms and verification suites and
writes CSV or JSON lines.

Usage:
    epscs eval --quantity normalization --m 3 --eps 0.7
    epscs eval --quantity wavefunction --m 1 --z-re 1 --eps 0.5 --x-min -4 --x-max 4 --x-count 81
    epscs transform --n 1 --m 0 --eps 0 --grid-re -1 1 3 --grid-im -1 1 3
    epscs verify --suite identity_matrix --suite unit_norm
    epscs sweep --quantity identity-limit --m 2 --n 5 --eps-list 0.5,0.2,0.1
"""
import functools
import inspect
import logging
import math
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import click
import numpy as np

from .bargmann import transform_grid
from .config import DEFAULTS
from .data_classes import SampledFunction, StateLabel, TransformSpec
from .exceptions import (
    DomainError,
    NumericalDomainError,
    QuadratureError,
    SampledInputError,
    UnknownSuiteError,
)
from .export import JsonLinesWriter, save_csv
from .polyfock import log_sigma, phi, reproducing_kernel
from .quad import polar_rule
from .specfun import ho_eigenfunction
from .states import (
    heat_kernel,
    heat_limit_defects,
    log_normalization_at,
    mehler_kernel,
    overlap,
    overlap_limit_defect,
    wavefunction_closed,
)
from .verify import default_config, get_suite, identity_limit_sweep, run_all
from .version import __version__

logger = logging.getLogger(__name__)

__all__ = ["cli", "main", "CliConfig"]

EVAL_QUANTITIES = ("phi", "kernel-km", "kernel-overlap", "normalization", "sigma",
                   "wavefunction", "heat-kernel", "mehler")
SWEEP_QUANTITIES = ("identity-limit", "overlap-limit", "heat-limit")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

Row = Tuple[Any, ...]


@dataclass
class CliConfig:
    """
    Every flag of a command, validated before anything is computed.

    Attributes mirror the command-line flags; grid triples are (min, max, count).
    """

    command: str
    quantity: Optional[str] = None
    m: int = 0
    eps: float = 0.5
    z_re: float = 0.0
    z_im: float = 0.0
    w_re: float = 0.0
    w_im: float = 0.0
    y: float = 0.0
    n: int = 0
    x_min: float = -4.0
    x_max: float = 4.0
    x_count: int = 81
    grid_re: Tuple[float, float, int] = (0.0, 0.0, 1)
    grid_im: Tuple[float, float, int] = (0.0, 0.0, 1)
    trunc: Optional[int] = None
    quad_radial: Optional[int] = None
    quad_angular: Optional[int] = None
    quad_hermite: Optional[int] = None
    adequacy_tol: float = DEFAULTS.adequacy_tol
    input: Optional[str] = None
    out: Optional[str] = None
    format: str = "csv"
    suites: List[str] = field(default_factory=list)
    all_suites: bool = False
    eps_list: List[float] = field(default_factory=list)
    timings: bool = False

    def validate(self) -> "CliConfig":
        """
        Check every numeric flag.

        Raises:
            click.BadParameter: Naming the offending flag
        """
        def bad(flag: str, message: str):
            raise click.BadParameter(message, param_hint=f"'{flag}'")

        finite = {"--eps": self.eps, "--z-re": self.z_re, "--z-im": self.z_im, "--w-re": self.w_re,
                  "--w-im": self.w_im, "--y": self.y, "--x-min": self.x_min, "--x-max": self.x_max}
        for flag, value in finite.items():
            if not math.isfinite(value):
                bad(flag, f"must be finite, got {value!r}")
        if self.m < 0:
            bad("--m", f"must be >= 0, got {self.m}")
        if self.n < 0:
            bad("--n", f"must be >= 0, got {self.n}")
        if self.eps < 0:
            bad("--eps", f"must be >= 0, got {self.eps}")
        needs_positive_eps = self.command == "eval" and self.quantity in (
            "kernel-overlap", "normalization", "wavefunction", "heat-kernel", "mehler")
        if needs_positive_eps and self.eps <= 0:
            bad("--eps", f"must be > 0 for {self.quantity}, got {self.eps}")
        if self.x_count < 0:
            bad("--x-count", f"must be >= 0, got {self.x_count}")
        if self.x_count > 1 and not self.x_min < self.x_max:
            bad("--x-max", f"must exceed --x-min ({self.x_min}), got {self.x_max}")
        for flag, (lo, hi, count) in (("--grid-re", self.grid_re), ("--grid-im", self.grid_im)):
            if not (math.isfinite(lo) and math.isfinite(hi)):
                bad(flag, "bounds must be finite")
            if count < 0:
                bad(flag, f"count must be >= 0, got {count}")
        if self.trunc is not None and self.trunc < 1:
            bad("--trunc", f"must be >= 1, got {self.trunc}")
        for flag, value in (("--quad-radial", self.quad_radial), ("--quad-angular", self.quad_angular)):
            if value is not None and value < 1:
                bad(flag, f"must be >= 1, got {value}")
        if self.quad_hermite is not None and not 1 <= self.quad_hermite <= DEFAULTS.max_hermite_order:
            bad("--quad-hermite", f"must lie in [1, {DEFAULTS.max_hermite_order}], got {self.quad_hermite}")
        try:
            DEFAULTS.replace(adequacy_tol=self.adequacy_tol)
        except DomainError as e:
            bad("--adequacy-tol", str(e))
        if self.command == "sweep":
            if not self.eps_list:
                bad("--eps-list", "needs at least one value")
            if any(not (math.isfinite(e) and e > 0) for e in self.eps_list) or any(
                b >= a for a, b in zip(self.eps_list, self.eps_list[1:])
            ):
                bad("--eps-list", "must be strictly decreasing and positive")
        return self

    @property
    def z(self) -> complex:
        return complex(self.z_re, self.z_im)

    @property
    def w(self) -> complex:
        return complex(self.w_re, self.w_im)

    def x_grid(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.x_count)

    def z_grid(self) -> List[complex]:
        """Grid points, real part varying slowest."""
        re = np.linspace(*self.grid_re)
        im = np.linspace(*self.grid_im)
        return [complex(a, b) for a in re for b in im]


def _parse_eps_list(ctx, param, value: Optional[str]) -> List[float]:
    if not value:
        return []
    try:
        return [float(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got {value!r}")


def _setup_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def _fail(message: str, code: int):
    logger.debug("exiting with code %d", code)
    click.echo(f"Error: {message}", err=True)
    sys.exit(code)


def handle_errors(func: Callable) -> Callable:
    """Map library errors onto exit codes."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except UnknownSuiteError as e:
            _fail(str(e), EXIT_USAGE)
        except (DomainError, NumericalDomainError, QuadratureError) as e:
            # QuadratureError covers NonFiniteIntegrandError
            _fail(str(e), EXIT_NUMERICAL)
        except (SampledInputError, OSError) as e:
            _fail(str(e), EXIT_IO)
    return wrapper


def _log_or_value(log_value: float, threshold: float) -> Row:
    """(re, im, log_scale): the value itself, or its log when |log| exceeds threshold."""
    if abs(log_value) > threshold:
        return log_value, 0.0, 1
    return math.exp(log_value), 0.0, 0


def _emit(cfg: CliConfig, columns: Sequence[str], rows: List[Row], comments: List[str] = None,
          extra: Dict[str, Any] = None) -> None:
    if cfg.format == "json":
        with JsonLinesWriter(cfg.out) as writer:
            for row in rows:
                writer.write({**dict(zip(columns, row)), **(extra or {})})
        return
    if cfg.out is None:
        save_csv(sys.stdout, columns, rows, comments)
    else:
        save_csv(cfg.out, columns, rows, comments)


def _input_function(cfg: CliConfig):
    if cfg.input is not None:
        return SampledFunction.from_csv(cfg.input)
    n = cfg.n
    return lambda x: ho_eigenfunction(n, x)


def eval_rows(cfg: CliConfig) -> Tuple[List[str], List[Row]]:
    """
    Rows of one quantity; each value comes straight from the library call.

    Returns:
        (columns, rows)
    """
    q = cfg.quantity
    threshold = DEFAULTS.log_print_threshold
    z_cols = ["z_re", "z_im", "re", "im"]
    x_cols = ["x", "re", "im"]

    if q == "phi":
        return z_cols, [(z.real, z.imag, *_pair(phi((cfg.m, cfg.n), z))) for z in cfg.z_grid()]
    if q == "kernel-km":
        return z_cols, [(z.real, z.imag, *_pair(reproducing_kernel(cfg.m, z, cfg.w))) for z in cfg.z_grid()]
    if q == "kernel-overlap":
        return z_cols, [(z.real, z.imag, *_pair(overlap(z, cfg.w, cfg.m, cfg.eps).value)) for z in cfg.z_grid()]
    if q == "normalization":
        rows = [(z.real, z.imag, *_log_or_value(log_normalization_at(z, cfg.m, cfg.eps), threshold))
                for z in cfg.z_grid()]
        return z_cols + ["log_scale"], rows
    if q == "sigma":
        trunc = cfg.trunc if cfg.trunc is not None else 1
        rows = [(n, *_log_or_value(log_sigma(cfg.m, cfg.eps, n), threshold)) for n in range(trunc)]
        return ["n", "re", "im", "log_scale"], rows
    x = cfg.x_grid()
    if q == "wavefunction":
        values = wavefunction_closed(x, StateLabel(cfg.z, cfg.m, cfg.eps)) if len(x) else []
        return x_cols, [(float(xi), *_pair(v)) for xi, v in zip(x, values)]
    if q == "heat-kernel":
        values = heat_kernel(cfg.eps, x, cfg.y) if len(x) else []
        return x_cols, [(float(xi), float(v), 0.0) for xi, v in zip(x, np.atleast_1d(values))]
    if q == "mehler":
        values = mehler_kernel(math.exp(-cfg.eps), x, cfg.y) if len(x) else []
        return x_cols, [(float(xi), float(v), 0.0) for xi, v in zip(x, np.atleast_1d(values))]
    raise click.BadParameter(f"unknown quantity {q!r}", param_hint="'--quantity'")


def _pair(value) -> Tuple[float, float]:
    c = complex(value)
    return c.real, c.imag


def transform_rows(cfg: CliConfig) -> Tuple[List[str], List[Row], int]:
    """Rows of B_m^eps[phi] over the z-grid and the Hermite order used."""
    order = cfg.quad_hermite if cfg.quad_hermite is not None else DEFAULTS.transform_order
    spec = TransformSpec(cfg.m, cfg.eps, order, cfg.adequacy_tol)
    zs = cfg.z_grid()
    values = transform_grid(spec, _input_function(cfg), zs)
    return ["z_re", "z_im", "re", "im"], [(z.real, z.imag, v.real, v.imag) for z, v in zip(zs, values)], order


def sweep_rows(cfg: CliConfig) -> Tuple[List[str], List[Row], List[str]]:
    """One (eps, defect) row per eps of the sweep."""
    q = cfg.quantity
    if q == "identity-limit":
        radial = cfg.quad_radial or DEFAULTS.polar_radial_order
        angular = cfg.quad_angular or DEFAULTS.polar_angular_order
        report = identity_limit_sweep(cfg.m, cfg.n, cfg.eps_list, polar_rule(radial, angular))
        defects = report.params["defects"]
        comments = [f"m={cfg.m} n_max={cfg.n} radial_order={radial} angular_order={angular}",
                    f"monotone={report.params['monotone']}"]
    elif q == "overlap-limit":
        defects = overlap_limit_defect(cfg.z, cfg.w, cfg.m, cfg.eps_list)
        comments = [f"m={cfg.m} z={cfg.z!r} w={cfg.w!r}"]
    elif q == "heat-limit":
        order = cfg.quad_hermite if cfg.quad_hermite is not None else DEFAULTS.heat_order
        defects = heat_limit_defects(_input_function(cfg), cfg.eps_list, cfg.x_grid(), order)
        comments = [f"quad_order={order}"]
    else:
        raise click.BadParameter(f"unknown quantity {q!r}", param_hint="'--quantity'")
    return ["eps", "defect"], list(zip(cfg.eps_list, defects)), comments


def suite_overrides(name: str, cfg: CliConfig) -> Dict[str, Any]:
    """Quadrature flags passed on to the suites that take them."""
    params = inspect.signature(get_suite(name)).parameters
    overrides = {}
    if cfg.quad_radial is not None and "radial_order" in params:
        overrides["radial_order"] = cfg.quad_radial
    if cfg.quad_angular is not None and "angular_order" in params:
        overrides["angular_order"] = cfg.quad_angular
    if cfg.quad_hermite is not None:
        for key in ("quad_order", "order"):
            if key in params:
                overrides[key] = cfg.quad_hermite
    return overrides


def common_options(func: Callable) -> Callable:
    """Numerical and output flags shared by every command."""
    options = [
        click.option("--m", "m", type=int, default=0, show_default=True, help="Landau level"),
        click.option("--eps", type=float, default=0.5, show_default=True, help="Parameter epsilon"),
        click.option("--z-re", type=float, default=0.0, help="Re z"),
        click.option("--z-im", type=float, default=0.0, help="Im z"),
        click.option("--w-re", type=float, default=0.0, help="Re w (second kernel point)"),
        click.option("--w-im", type=float, default=0.0, help="Im w"),
        click.option("--n", "n", type=int, default=0, show_default=True,
                     help="Basis index, eigenstate index or n_max"),
        click.option("--x-min", type=float, default=-4.0, show_default=True),
        click.option("--x-max", type=float, default=4.0, show_default=True),
        click.option("--x-count", type=int, default=81, show_default=True),
        click.option("--grid-re", type=(float, float, int), default=(0.0, 0.0, 1), show_default=True,
                     help="Real axis of the z-grid: MIN MAX COUNT"),
        click.option("--grid-im", type=(float, float, int), default=(0.0, 0.0, 1), show_default=True,
                     help="Imaginary axis of the z-grid: MIN MAX COUNT"),
        click.option("--trunc", type=int, default=None, help="Series truncation / number of rows"),
        click.option("--quad-radial", type=int, default=None, help="Polar rule radial order"),
        click.option("--quad-angular", type=int, default=None, help="Polar rule angular order"),
        click.option("--quad-hermite", type=int, default=None, help="Gauss-Hermite order"),
        click.option("--out", "-o", type=click.Path(dir_okay=False), default=None,
                     help="Output file (default: stdout)"),
        click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _config(command: str, fmt: str, **kwargs) -> CliConfig:
    return CliConfig(command=command, format=fmt, **kwargs).validate()


@click.group()
@click.version_option(version=__version__, prog_name="epscs")
@click.option("--verbose", "-v", count=True, help="-v for INFO, -vv for DEBUG logging on stderr")
def cli(verbose: int):
    """
    Epsilon coherent states with polyanalytic coefficients.

    Examples:

        epscs eval --quantity phi --m 2 --n 1 --grid-re -1 1 5

        epscs verify --all --out reports.jsonl
    """
    _setup_logging(verbose)


@cli.command("eval")
@click.option("--quantity", type=click.Choice(EVAL_QUANTITIES), required=True)
@click.option("--y", type=float, default=0.0, help="Second point of the heat and Mehler kernels")
@common_options
@handle_errors
def eval_cmd(quantity: str, fmt: str, **kwargs):
    """
    Evaluate a quantity on a grid.

    phi, kernel-km, kernel-overlap and normalization run over the z-grid;
    wavefunction, heat-kernel and mehler over the x-grid; sigma over
    n = 0 .. trunc - 1.
    """
    cfg = _config("eval", fmt, quantity=quantity, **kwargs)
    columns, rows = eval_rows(cfg)
    _emit(cfg, columns, rows, [f"quantity={quantity} m={cfg.m} eps={cfg.eps!r}"])


@cli.command("transform")
@click.option("--input", "input", type=str, default=None,
              help="Sampled function CSV (columns x,re,im); default is the eigenstate --n")
@click.option("--adequacy-tol", type=float, default=DEFAULTS.adequacy_tol, show_default=True,
              help="Tolerance of the doubled-order self-check")
@common_options
@handle_errors
def transform_cmd(fmt: str, **kwargs):
    """
    Bargmann-type transform of an eigenstate or a sampled function over the z-grid.

    --eps 0 gives the eps -> 0+ limit.
    """
    cfg = _config("transform", fmt, **kwargs)
    columns, rows, order = transform_rows(cfg)
    source = cfg.input if cfg.input is not None else f"eigenstate n={cfg.n}"
    _emit(cfg, columns, rows, [f"quad_order={order}", f"m={cfg.m} eps={cfg.eps!r} input={source}"],
          extra={"quad_order": order})


@cli.command("verify")
@click.option("--suite", "suites", multiple=True, help="Suite to run (repeatable)")
@click.option("--all", "all_suites", is_flag=True, help="Run every registered suite")
@click.option("--timings/--no-timings", default=False, show_default=True,
              help="Record measured runtime_ms instead of null")
@common_options
@handle_errors
def verify_cmd(suites: Tuple[str, ...], all_suites: bool, timings: bool, fmt: str, **kwargs):
    """
    Run property suites and write one JSON record per suite.

    Exits 0 when every suite passed and 1 otherwise.
    """
    cfg = _config("verify", fmt, suites=list(suites), all_suites=all_suites, timings=timings, **kwargs)
    names = list(default_config()) if cfg.all_suites else cfg.suites
    config = {name: suite_overrides(name, cfg) for name in names}
    reports = run_all(config)
    with JsonLinesWriter(cfg.out) as writer:
        for report in reports:
            writer.write(report.to_record(include_timing=cfg.timings))
    if not all(report.passed for report in reports):
        failed = [report.suite for report in reports if not report.passed]
        click.echo(f"{len(failed)} suite(s) failed: {', '.join(failed)}", err=True)
        sys.exit(EXIT_FAILED)


@cli.command("sweep")
@click.option("--quantity", type=click.Choice(SWEEP_QUANTITIES), required=True)
@click.option("--eps-list", "eps_list", callback=_parse_eps_list, required=True,
              help="Comma-separated, strictly decreasing eps values")
@click.option("--input", "input", type=str, default=None, help="Sampled function CSV for heat-limit")
@common_options
@handle_errors
def sweep_cmd(quantity: str, eps_list: List[float], fmt: str, **kwargs):
    """Track a limit defect as eps decreases; one row per eps."""
    cfg = _config("sweep", fmt, quantity=quantity, eps_list=eps_list, **kwargs)
    columns, rows, comments = sweep_rows(cfg)
    _emit(cfg, columns, rows, comments)


def main():
    """Entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
