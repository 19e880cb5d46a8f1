"""Beam-sail kinematics: the speed, time, and distance reached at the
point where the diffraction-limited laser spot grows to the sail size,
in both the general and the mass-optimized (sail mass = payload mass)
regimes, plus the strength-limited sail geometry.

Non-relativistic closed forms, reasonably accurate below half the speed
of light; a warning is issued above beta = 0.5 and beta >= 1 is an error.
No relativistic correction is applied.
"""

import math
import warnings
from dataclasses import dataclass

from .errors import DomainError, NumericRangeError
from .params import ArraySpec, Payload, SailSpec
from .units import C

BETA_VALIDITY_LIMIT = 0.5


@dataclass(frozen=True)
class KinematicsResult:
    """Outcome at the spot-equals-sail point.

    accel_time is None when the beam power is zero (no acceleration ever
    ends, so there is no finite time to report).
    """

    speed: float            # v at spot-equals-sail [m/s]
    beta: float             # v/c
    accel_time: float | None  # time to that point [s]
    accel_distance: float   # distance where spot equals sail [m]
    coast_speed: float      # diffraction-limited speed at infinity [m/s]
    mean_accel: float       # speed / accel_time [m/s^2]; 0 when no thrust
    aperture_flux: float    # main-beam power / array area [W/m^2]
    total_mass: float       # sail + payload [kg]

    @property
    def no_thrust(self) -> bool:
        return self.accel_time is None


def coupling_factor(sail: SailSpec) -> float:
    """Momentum coupling 2*eps_r + (1 - eps_r)*alpha."""
    return sail.coupling


def _check_finite(name: str, value: float) -> float:
    if not math.isfinite(value):
        raise NumericRangeError(f"{name} is non-finite; inputs out of numeric range")
    return value


def _warn_beta(beta: float) -> None:
    if beta >= 1:
        raise DomainError(f"beta = {beta:.4g} >= 1: beyond any validity of the model")
    if beta >= BETA_VALIDITY_LIMIT:
        warnings.warn(
            f"beta = {beta:.4g} >= {BETA_VALIDITY_LIMIT}: non-relativistic "
            "model is inaccurate here",
            stacklevel=3,
        )


def aperture_flux(array: ArraySpec) -> float:
    """Main-beam power spread over the array area, P0 / (xi_arr d^2)."""
    if array.power is None or array.aperture is None:
        raise DomainError("array.P0 and array.d required for aperture flux")
    return array.power / (array.shape_factor * array.aperture**2)


def kinematics_non_optimized(array: ArraySpec, sail: SailSpec, payload: Payload) -> KinematicsResult:
    """Kinematics for an explicitly sized sail (diameter given)."""
    if sail.diameter is None:
        raise DomainError("sail.D required for the non-optimized kinematics")
    if array.power is None or array.aperture is None:
        raise DomainError("array.P0 and array.d required for kinematics")
    p0, d_arr = array.power, array.aperture
    dia = sail.diameter
    eta = sail.coupling
    m_total = sail.mass + payload.mass
    spot_term = d_arr * dia / (array.wavelength * array.diffraction_factor)

    l0 = _check_finite("L0", spot_term / 2)
    flux = aperture_flux(array)
    if p0 == 0:
        return KinematicsResult(0.0, 0.0, None, l0, 0.0, 0.0, flux, m_total)

    v0 = _check_finite("v0", math.sqrt(p0 * eta * spot_term / (C * m_total)))
    t0 = _check_finite("t0", math.sqrt(C * spot_term * m_total / (p0 * eta)))
    beta = v0 / C
    _warn_beta(beta)
    return KinematicsResult(
        speed=v0,
        beta=beta,
        accel_time=t0,
        accel_distance=l0,
        coast_speed=math.sqrt(2) * v0,
        mean_accel=v0 / t0,
        aperture_flux=flux,
        total_mass=m_total,
    )


def optimal_sail_diameter(sail: SailSpec, payload: Payload) -> float:
    """Diameter at which sail mass equals payload mass: sqrt(m0/(xi h rho))."""
    return math.sqrt(payload.mass / (sail.shape_factor * sail.thickness * sail.density))


def kinematics_optimized(array: ArraySpec, sail: SailSpec, payload: Payload) -> KinematicsResult:
    """Kinematics in the mass-optimized regime (sail mass = payload mass).

    The sail diameter is derived, not given; the result agrees exactly
    with the general path evaluated at that diameter.
    """
    if sail.diameter is not None:
        raise DomainError("sail.D must be absent in the optimized regime (it is derived)")
    from dataclasses import replace

    sized = replace(sail, diameter=optimal_sail_diameter(sail, payload))
    return kinematics_non_optimized(array, sized, payload)


def required_power(
    beta_target: float, array: ArraySpec, sail: SailSpec, payload: Payload
) -> float:
    """Main-beam power that reaches beta_target in the optimized regime.

    Inverse of the optimized speed equation:
    P0 = beta^2 * (2 c^3 lambda alpha_d / (eta d)) * sqrt(xi h rho m0).
    """
    if beta_target < 0:
        raise DomainError(f"beta target must be >= 0 (got {beta_target!r})")
    if beta_target > 0:
        _warn_beta(beta_target)
    if array.aperture is None:
        raise DomainError("array.d required to compute the required power")
    mass_term = math.sqrt(
        sail.shape_factor * sail.thickness * sail.density * payload.mass
    )
    p0 = (
        beta_target**2
        * (2 * C**3 * array.wavelength * array.diffraction_factor)
        / (sail.coupling * array.aperture)
        * mass_term
    )
    return _check_finite("P0", p0)


def strength_limited_geometry(
    power: float, sail: SailSpec, payload: Payload
) -> tuple[float, float]:
    """Sail diameter and thickness set by the material yield strength.

    Solves the two conditions of the strength-limited optimized regime:
    the stress-limited thickness h = s P0 eta / (pi D c S_y), and the
    mass-optimized condition m0 = xi D^2 h rho with xi = pi/4.  Returns
    (diameter, thickness).
    """
    if sail.yield_strength is None:
        raise DomainError("sail.S_y required for the strength-limited geometry")
    if power <= 0:
        raise DomainError(f"P0 must be > 0 (got {power!r})")
    s_y = sail.yield_strength
    eta = sail.coupling
    s = sail.stress_factor
    diameter = 4 * payload.mass * C * s_y / (sail.density * s * power * eta)
    thickness = s * power * eta / (math.pi * diameter * C * s_y)
    return _check_finite("D", diameter), _check_finite("h", thickness)


def strength_limited_beta(array: ArraySpec, sail: SailSpec) -> float:
    """Speed fraction reachable when the yield strength sets the sail:
    beta = sqrt(d S_y / (2 rho c^2 lambda alpha_d s))."""
    if sail.yield_strength is None:
        raise DomainError("sail.S_y required for the strength-limited speed")
    if array.aperture is None:
        raise DomainError("array.d required for the strength-limited speed")
    return math.sqrt(
        array.aperture
        * sail.yield_strength
        / (
            2
            * sail.density
            * C**2
            * array.wavelength
            * array.diffraction_factor
            * sail.stress_factor
        )
    )
