"""Separable system cost model: laser + optics + energy + storage,
closed-form cost minimum over the array size, its scaling exponents, and
the laser-cost metric implied by a fixed budget.

The cost along the physics constraint (beam power eliminated in favor of
the array size d at fixed target speed) has the form A/d + B*d^2, so the
stationary point is always a minimum and the laser cost there is exactly
twice the optics cost.
"""

import math
from dataclasses import dataclass, replace

from .errors import DegenerateOptimumError, DomainError
from .kinematics import kinematics_optimized, required_power
from .params import ArraySpec, CostMetrics, Payload, SailSpec
from .units import C


@dataclass(frozen=True)
class CostBreakdown:
    """Component costs in USD: laser amplifiers, optics, grid energy over
    the amortized shot count, and energy storage."""

    laser: float
    optics: float
    energy: float = 0.0
    storage: float = 0.0

    @property
    def total(self) -> float:
        return self.laser + self.optics + self.energy + self.storage

    @property
    def zero_total(self) -> bool:
        return self.total == 0

    @property
    def fractions(self) -> tuple[float, float, float, float]:
        """Cost fractions (laser, optics, energy, storage); all zero when
        the total is zero."""
        t = self.total
        if t == 0:
            return (0.0, 0.0, 0.0, 0.0)
        return (self.laser / t, self.optics / t, self.energy / t, self.storage / t)


@dataclass(frozen=True)
class OptimumDesign:
    """Cost-optimal array size and beam power with the cost breakdown.

    The auxiliary coefficients are the reduced one-dimensional objective
    C(d) = speed_coeff * v0^2 / d + optics_coeff * d^2, with beta_coeff
    the beta-normalized variant of speed_coeff.
    """

    aperture: float
    power: float
    breakdown: CostBreakdown
    method: str  # "closed-form" | "numeric"
    speed_coeff: float
    optics_coeff: float
    beta_coeff: float


def reduced_coefficients(
    sail: SailSpec,
    payload: Payload,
    wavelength: float,
    diffraction_factor: float,
    array_shape: float,
    beam_fraction: float,
    metrics: CostMetrics,
) -> tuple[float, float, float]:
    """Coefficients (speed_coeff, optics_coeff, beta_coeff) of the
    one-dimensional cost objective along the physics constraint."""
    mass_term = math.sqrt(sail.shape_factor * sail.thickness * sail.density * payload.mass)
    speed_coeff = (
        metrics.laser_usd_per_watt
        / beam_fraction
        * (2 * C * wavelength * diffraction_factor)
        / sail.coupling
        * mass_term
    )
    return speed_coeff, metrics.optics_usd_per_m2 * array_shape, speed_coeff * C**2


def shot_beam_energy(beta: float, payload: Payload, sail: SailSpec) -> float:
    """Main-beam energy through the acceleration, optimized regime:
    2 * beta * m0 * c^2 / eta (equals P0*t0)."""
    return 2 * beta * payload.mass * C**2 / sail.coupling


def cost_components(
    power: float,
    accel_time: float | None,
    aperture: float,
    metrics: CostMetrics,
    beam_fraction: float,
    array_shape: float,
) -> CostBreakdown:
    """Evaluate the four cost components at an explicit design point.

    accel_time None (zero-power design) contributes zero energy cost.
    """
    if beam_fraction <= 0:
        raise DomainError(f"eps_b must be > 0 (got {beam_fraction!r})")
    beam_energy = 0.0 if accel_time is None else power * accel_time
    return CostBreakdown(
        laser=metrics.laser_usd_per_watt * power / beam_fraction,
        optics=metrics.optics_usd_per_m2 * array_shape * aperture**2,
        energy=metrics.shots * metrics.energy_usd_per_joule * beam_energy,
        storage=metrics.storage_usd_per_joule * beam_energy / metrics.storage_efficiency,
    )


def _energy_storage_cost(beta, payload, sail, metrics):
    e_gamma = shot_beam_energy(beta, payload, sail)
    return (
        metrics.shots * metrics.energy_usd_per_joule * e_gamma,
        metrics.storage_usd_per_joule * e_gamma / metrics.storage_efficiency,
    )


def closed_form_optimum(
    beta: float,
    payload: Payload,
    sail: SailSpec,
    wavelength: float,
    diffraction_factor: float,
    array_shape: float,
    beam_fraction: float,
    metrics: CostMetrics,
) -> OptimumDesign:
    """Closed-form minimum-cost design for a target speed fraction.

    d* = c beta^{2/3} (a1/(eps_b a2))^{1/3}
         [lambda alpha_d / (xi_arr eta) * sqrt(xi h rho m0)]^{1/3};
    the power follows from the physics constraint at d*.  Energy and
    storage costs are a d-independent addition, so they appear in the
    breakdown but do not move the optimum.
    """
    if not 0 < beta < 1:
        raise DomainError(f"beta must be in (0, 1) (got {beta!r})")
    if metrics.laser_usd_per_watt == 0 or metrics.optics_usd_per_m2 == 0:
        raise DegenerateOptimumError(
            "closed-form optimum needs a1 > 0 and a2 > 0; the minimum is at a "
            "boundary otherwise - use the bounded numeric search"
        )
    mass_term = math.sqrt(sail.shape_factor * sail.thickness * sail.density * payload.mass)
    geom = wavelength * diffraction_factor / (array_shape * sail.coupling) * mass_term
    ratio = metrics.laser_usd_per_watt / (beam_fraction * metrics.optics_usd_per_m2)
    aperture = C * beta ** (2 / 3) * (ratio * geom) ** (1 / 3)

    array = ArraySpec(
        wavelength=wavelength,
        diffraction_factor=diffraction_factor,
        shape_factor=array_shape,
        beam_fraction=beam_fraction,
        aperture=aperture,
    )
    power = required_power(beta, array, sail, payload)
    energy, storage = _energy_storage_cost(beta, payload, sail, metrics)
    breakdown = CostBreakdown(
        laser=metrics.laser_usd_per_watt * power / beam_fraction,
        optics=metrics.optics_usd_per_m2 * array_shape * aperture**2,
        energy=energy,
        storage=storage,
    )
    speed_coeff, optics_coeff, beta_coeff = reduced_coefficients(
        sail, payload, wavelength, diffraction_factor, array_shape, beam_fraction, metrics
    )
    return OptimumDesign(
        aperture=aperture,
        power=power,
        breakdown=breakdown,
        method="closed-form",
        speed_coeff=speed_coeff,
        optics_coeff=optics_coeff,
        beta_coeff=beta_coeff,
    )


def cost_scaling_exponents() -> dict[str, dict[str, float]]:
    """Power-law exponents of the closed-form optimum in the target speed
    and the two cost metrics."""
    return {
        "total_cost": {"beta": 4 / 3, "a1": 2 / 3, "a2": 1 / 3},
        "power": {"beta": 4 / 3, "a1": -1 / 3, "a2": 1 / 3},
        "aperture": {"beta": 2 / 3, "a1": 1 / 3, "a2": -1 / 3},
    }


def a1_for_budget(
    total_usd: float,
    beta: float,
    optics_usd_per_m2: float,
    wavelength: float,
    thickness: float,
    density: float,
    payload_mass: float,
    beam_fraction: float = 1.0,
) -> float:
    """Laser cost metric a1 at which the minimum system cost equals the
    budget, for a perfectly reflective sail on a circular array
    (eps_r = 1, alpha_d = 1.22, xi = xi_arr = pi/4).

    Inverts the closed form through d* = sqrt(C_T / (3 a2 xi_arr)):
    a1 = eps_b a2 d*^3 / (c^3 beta^2 G) with
    G = lambda alpha_d / (xi_arr eta) * sqrt(xi h rho m0).
    """
    if total_usd <= 0:
        raise DomainError(f"budget must be > 0 (got {total_usd!r})")
    if not 0 < beta < 1:
        raise DomainError(f"beta must be in (0, 1) (got {beta!r})")
    xi = xi_arr = math.pi / 4
    eta = 2.0
    alpha_d = 1.22
    aperture = math.sqrt(total_usd / (3 * optics_usd_per_m2 * xi_arr))
    geom = (
        wavelength
        * alpha_d
        / (xi_arr * eta)
        * math.sqrt(xi * thickness * density * payload_mass)
    )
    return (
        beam_fraction
        * optics_usd_per_m2
        * aperture**3
        / (C**3 * beta**2 * geom)
    )


def with_diameter(sail: SailSpec, diameter: float) -> SailSpec:
    """Copy of the sail spec with an explicit diameter."""
    return replace(sail, diameter=diameter)


def optimum_kinematics(
    design: OptimumDesign,
    payload: Payload,
    sail: SailSpec,
    wavelength: float,
    diffraction_factor: float,
    array_shape: float,
    beam_fraction: float,
):
    """Kinematics at an optimal design point (optimized sail regime)."""
    array = ArraySpec(
        wavelength=wavelength,
        diffraction_factor=diffraction_factor,
        shape_factor=array_shape,
        beam_fraction=beam_fraction,
        aperture=design.aperture,
        power=design.power,
    )
    return kinematics_optimized(array, sail, payload)
