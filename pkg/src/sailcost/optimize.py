"""Numeric optimization over the array size: an independent check on the
closed forms (bracket + golden-section minimization of the constrained
cost), the fixed-budget speed maximum, and the analytic cost curvature.
"""

import math
from dataclasses import dataclass

from .errors import (
    BoundaryOptimumError,
    ConvergenceError,
    DomainError,
    InfeasibleBudgetError,
)
from .costs import (
    CostBreakdown,
    OptimumDesign,
    cost_components,
    reduced_coefficients,
    shot_beam_energy,
)
from .kinematics import kinematics_optimized, required_power
from .params import ArraySpec, CostMetrics, Payload, SailSpec

_INV_PHI = (math.sqrt(5) - 1) / 2  # 1/phi

# Fig.-style sweeps span meter-to-10,000-km array sizes; default bounds
# comfortably contain every regime the closed forms produce.
DEFAULT_D_MIN = 1.0
DEFAULT_D_MAX = 1e7
_BRACKET_POINTS = 41


@dataclass(frozen=True)
class SearchSpec:
    """Bounds and tolerances for the one-dimensional search."""

    d_min: float = DEFAULT_D_MIN
    d_max: float = DEFAULT_D_MAX
    rel_tol: float = 1e-10
    max_iter: int = 200

    def __post_init__(self):
        if not 0 < self.d_min < self.d_max:
            raise DomainError(f"need 0 < d_min < d_max (got {self.d_min!r}, {self.d_max!r})")
        if self.rel_tol <= 0:
            raise DomainError(f"rel_tol must be > 0 (got {self.rel_tol!r})")


@dataclass(frozen=True)
class SpeedMaxResult:
    """Fastest design at a fixed budget: the optics get exactly one third
    of the total cost."""

    aperture: float
    power: float
    beta: float
    breakdown: CostBreakdown


def golden_section(f, lo: float, hi: float, rel_tol: float = 1e-10, max_iter: int = 200) -> float:
    """Minimize a unimodal f on [lo, hi]; returns the interval midpoint
    once its width falls below rel_tol relative to its location.

    Ties and flat stretches resolve toward the smaller argument, so the
    result is deterministic.
    """
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if (b - a) <= rel_tol * (abs(a) + abs(b)) / 2:
            return (a + b) / 2
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    raise ConvergenceError(f"no convergence in {max_iter} iterations", (a + b) / 2)


def _bracket(f, lo: float, hi: float) -> tuple[float, float]:
    """Locate an interior bracket of the minimum on a geometric grid, or
    report which bound is binding."""
    n = _BRACKET_POINTS
    grid = [lo * (hi / lo) ** (i / (n - 1)) for i in range(n)]
    values = [f(x) for x in grid]
    best = min(range(n), key=lambda i: (values[i], i))
    if best == 0:
        raise BoundaryOptimumError("lower", lo)
    if best == n - 1:
        raise BoundaryOptimumError("upper", hi)
    return grid[best - 1], grid[best + 1]


def constrained_cost(
    aperture: float,
    beta: float,
    payload: Payload,
    sail: SailSpec,
    wavelength: float,
    diffraction_factor: float,
    array_shape: float,
    beam_fraction: float,
    metrics: CostMetrics,
) -> CostBreakdown:
    """Cost of hitting the target speed with a given array size; the beam
    power follows from the physics constraint."""
    array = ArraySpec(
        wavelength=wavelength,
        diffraction_factor=diffraction_factor,
        shape_factor=array_shape,
        beam_fraction=beam_fraction,
        aperture=aperture,
    )
    power = required_power(beta, array, sail, payload)
    kin = kinematics_optimized(array_with_power(array, power), sail, payload)
    return cost_components(
        power, kin.accel_time, aperture, metrics, beam_fraction, array_shape
    )


def array_with_power(array: ArraySpec, power: float) -> ArraySpec:
    from dataclasses import replace

    return replace(array, power=power)


def minimize_cost_numeric(
    beta: float,
    payload: Payload,
    sail: SailSpec,
    wavelength: float,
    diffraction_factor: float,
    array_shape: float,
    beam_fraction: float,
    metrics: CostMetrics,
    search: SearchSpec | None = None,
) -> OptimumDesign:
    """Minimize the constrained cost over the array size by bracketing on
    a geometric grid and refining with golden-section."""
    search = search or SearchSpec()

    def objective(d: float) -> float:
        return constrained_cost(
            d, beta, payload, sail, wavelength, diffraction_factor,
            array_shape, beam_fraction, metrics,
        ).total

    lo, hi = _bracket(objective, search.d_min, search.d_max)
    aperture = golden_section(objective, lo, hi, search.rel_tol, search.max_iter)
    array = ArraySpec(
        wavelength=wavelength,
        diffraction_factor=diffraction_factor,
        shape_factor=array_shape,
        beam_fraction=beam_fraction,
        aperture=aperture,
    )
    power = required_power(beta, array, sail, payload)
    breakdown = constrained_cost(
        aperture, beta, payload, sail, wavelength, diffraction_factor,
        array_shape, beam_fraction, metrics,
    )
    speed_coeff, optics_coeff, beta_coeff = reduced_coefficients(
        sail, payload, wavelength, diffraction_factor, array_shape, beam_fraction, metrics
    )
    return OptimumDesign(
        aperture=aperture,
        power=power,
        breakdown=breakdown,
        method="numeric",
        speed_coeff=speed_coeff,
        optics_coeff=optics_coeff,
        beta_coeff=beta_coeff,
    )


def maximize_speed_fixed_cost(
    total_usd: float,
    payload: Payload,
    sail: SailSpec,
    wavelength: float,
    diffraction_factor: float,
    array_shape: float,
    beam_fraction: float,
    metrics: CostMetrics,
) -> SpeedMaxResult:
    """Fastest reachable speed when the laser + optics budget is fixed.

    The speed-vs-size curve beta^2(d) ~ C_T d - a2 xi_arr d^3 peaks at
    d* = sqrt(C_T / (3 a2 xi_arr)); the leftover budget buys the power.
    """
    if total_usd <= 0:
        raise InfeasibleBudgetError(
            f"budget must be > 0 for any positive beam power (got {total_usd!r})"
        )
    if metrics.laser_usd_per_watt <= 0 or metrics.optics_usd_per_m2 <= 0:
        raise DomainError("fixed-budget speed maximum needs a1 > 0 and a2 > 0")
    aperture = math.sqrt(total_usd / (3 * metrics.optics_usd_per_m2 * array_shape))
    optics_cost = metrics.optics_usd_per_m2 * array_shape * aperture**2
    power = beam_fraction * (total_usd - optics_cost) / metrics.laser_usd_per_watt
    array = ArraySpec(
        wavelength=wavelength,
        diffraction_factor=diffraction_factor,
        shape_factor=array_shape,
        beam_fraction=beam_fraction,
        aperture=aperture,
        power=power,
    )
    kin = kinematics_optimized(array, sail, payload)
    breakdown = CostBreakdown(
        laser=metrics.laser_usd_per_watt * power / beam_fraction,
        optics=optics_cost,
    )
    return SpeedMaxResult(
        aperture=aperture, power=power, beta=kin.beta, breakdown=breakdown
    )


def second_derivative_at(
    aperture: float,
    beta: float,
    payload: Payload,
    sail: SailSpec,
    wavelength: float,
    diffraction_factor: float,
    array_shape: float,
    beam_fraction: float,
    metrics: CostMetrics,
) -> float:
    """Analytic curvature of the constrained cost in the array size:
    2 * beta_coeff * beta^2 / d^3 + 2 * a2 * xi_arr.  Always positive, so
    the stationary point is always a minimum."""
    if aperture <= 0:
        raise DomainError(f"d must be > 0 (got {aperture!r})")
    _, optics_coeff, beta_coeff = reduced_coefficients(
        sail, payload, wavelength, diffraction_factor, array_shape, beam_fraction, metrics
    )
    return 2 * beta_coeff * beta**2 / aperture**3 + 2 * optics_coeff


def speed_curve_fixed_cost(
    total_usd: float,
    aperture: float,
    sail: SailSpec,
    payload: Payload,
    wavelength: float,
    diffraction_factor: float,
    array_shape: float,
    beam_fraction: float,
    metrics: CostMetrics,
) -> float:
    """beta^2 attainable at a given array size under a fixed budget; the
    independent scan used to verify the speed maximum."""
    mass_term = math.sqrt(sail.shape_factor * sail.thickness * sail.density * payload.mass)
    from .units import C

    numer = sail.coupling * (
        total_usd * aperture - metrics.optics_usd_per_m2 * array_shape * aperture**3
    )
    denom = (
        2
        * C**3
        * wavelength
        * diffraction_factor
        * (metrics.laser_usd_per_watt / beam_fraction)
        * mass_term
    )
    return numer / denom
