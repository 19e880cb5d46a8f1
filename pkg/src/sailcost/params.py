"""Validated parameter records for the sail, the laser array, the payload,
and the unit-cost metrics.

All fields are SI.  Validation happens at construction so every function
downstream can assume the documented invariants.
"""

import math
from dataclasses import dataclass, field

from .errors import ValidationError


def _require(cond: bool, name: str, constraint: str, value) -> None:
    if not cond:
        raise ValidationError(f"{name}: must satisfy {constraint} (got {value!r})")


@dataclass(frozen=True)
class SailSpec:
    """Sail material and geometry.

    thickness h [m], density rho [kg/m^3], reflectivity and absorptivity
    in [0, 1], areal shape factor xi (pi/4 for a circular sail).  The
    diameter is optional: in the mass-optimized regime it is derived.
    yield_strength [Pa] and the dimensionless stress geometry factor are
    only needed for the strength-limited regime; the stress factor has no
    canonical published value and defaults to 1.
    """

    thickness: float
    density: float
    reflectivity: float
    absorptivity: float = 0.0
    shape_factor: float = math.pi / 4
    diameter: float | None = None
    yield_strength: float | None = None
    stress_factor: float = 1.0

    def __post_init__(self):
        _require(self.thickness > 0, "sail.h", "h > 0", self.thickness)
        _require(self.density > 0, "sail.rho", "rho > 0", self.density)
        _require(0 <= self.reflectivity <= 1, "sail.eps_r", "0 <= eps_r <= 1", self.reflectivity)
        _require(0 <= self.absorptivity <= 1, "sail.alpha", "0 <= alpha <= 1", self.absorptivity)
        _require(self.shape_factor > 0, "sail.xi", "xi > 0", self.shape_factor)
        if self.diameter is not None:
            _require(self.diameter > 0, "sail.D", "D > 0", self.diameter)
        if self.yield_strength is not None:
            _require(self.yield_strength > 0, "sail.S_y", "S_y > 0", self.yield_strength)
        _require(self.stress_factor > 0, "sail.s", "s > 0", self.stress_factor)

    @property
    def coupling(self) -> float:
        """Momentum coupling factor: 2 for a perfect reflector, 1 for a
        perfect absorber."""
        return 2 * self.reflectivity + (1 - self.reflectivity) * self.absorptivity

    @property
    def mass(self) -> float:
        """Sail mass xi * D^2 * h * rho; requires the diameter."""
        if self.diameter is None:
            raise ValidationError("sail.D: diameter required to compute sail mass")
        return self.shape_factor * self.diameter**2 * self.thickness * self.density


@dataclass(frozen=True)
class ArraySpec:
    """Laser array: aperture size d [m], wavelength [m], diffraction
    factor (1.22 for a circular aperture), array shape factor (pi/4
    circular, 1 square), main-beam fraction eps_b, and main-beam power
    P0 [W].  Aperture and power are optional where they are outputs of
    an optimization rather than inputs.
    """

    wavelength: float
    diffraction_factor: float = 1.22
    shape_factor: float = math.pi / 4
    beam_fraction: float = 1.0
    aperture: float | None = None
    power: float | None = None

    def __post_init__(self):
        _require(self.wavelength > 0, "array.lambda", "lambda > 0", self.wavelength)
        _require(self.diffraction_factor >= 1, "array.alpha_d", "alpha_d >= 1", self.diffraction_factor)
        _require(self.shape_factor > 0, "array.xi_arr", "xi_arr > 0", self.shape_factor)
        _require(0 < self.beam_fraction <= 1, "array.eps_b", "0 < eps_b <= 1", self.beam_fraction)
        if self.aperture is not None:
            _require(self.aperture > 0, "array.d", "d > 0", self.aperture)
        if self.power is not None:
            _require(self.power >= 0, "array.P0", "P0 >= 0", self.power)

    @property
    def optical_power(self) -> float:
        """Total produced optical power P0 / eps_b."""
        if self.power is None:
            raise ValidationError("array.P0: power required to compute optical power")
        return self.power / self.beam_fraction


@dataclass(frozen=True)
class Payload:
    """Payload mass m0 [kg]."""

    mass: float

    def __post_init__(self):
        _require(self.mass > 0, "payload.m0", "m0 > 0", self.mass)


# Cost items beyond the four modeled ones (personnel, land, launch,
# payload) are reserved: configs may name them but only with value 0.
RESERVED_COST_ITEMS = ("a5", "a6", "a7", "a8", "a9")


@dataclass(frozen=True)
class CostMetrics:
    """Unit costs: laser USD/optical-W, optics USD/m^2, grid energy and
    storage USD/J, end-to-end storage efficiency, and the shot count used
    for lifetime energy amortization.
    """

    laser_usd_per_watt: float
    optics_usd_per_m2: float
    energy_usd_per_joule: float = 0.0
    storage_usd_per_joule: float = 0.0
    storage_efficiency: float = 1.0
    shots: float = 1.0

    def __post_init__(self):
        _require(self.laser_usd_per_watt >= 0, "metrics.a1", "a1 >= 0", self.laser_usd_per_watt)
        _require(self.optics_usd_per_m2 >= 0, "metrics.a2", "a2 >= 0", self.optics_usd_per_m2)
        _require(self.energy_usd_per_joule >= 0, "metrics.a3", "a3 >= 0", self.energy_usd_per_joule)
        _require(self.storage_usd_per_joule >= 0, "metrics.a4", "a4 >= 0", self.storage_usd_per_joule)
        _require(
            self.laser_usd_per_watt > 0 or self.optics_usd_per_m2 > 0,
            "metrics", "a1 > 0 or a2 > 0", (self.laser_usd_per_watt, self.optics_usd_per_m2),
        )
        _require(
            0 < self.storage_efficiency <= 1,
            "metrics.eps_storage", "0 < eps_storage <= 1", self.storage_efficiency,
        )
        _require(self.shots >= 1, "metrics.N_shot", "N_shot >= 1", self.shots)
