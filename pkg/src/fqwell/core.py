"""Domain types and dispersion relations for the fractional finite square well.

The model is a symmetric 1D rectangular well: potential 0 for |x| <= a and
U > 0 outside, with a generalized kinetic term that acts on a plane wave of
momentum p as multiplication by ``d_alpha * |p|**alpha``.  The Levy index
``alpha`` runs over ``1 < alpha <= 2``; at ``alpha = 2`` with
``d_alpha = 1/(2m)`` the usual Schrodinger well is recovered.

A bound level (0 < E < U) oscillates inside the well with wavenumber

    k = (1/hbar) * (E / d_alpha)**(1/alpha)

and decays outside with rate

    kappa = (1/hbar) * ((U - E) / d_alpha)**(1/alpha).

In dimensionless form, ``sigma = k*a`` and ``eta = kappa*a`` satisfy
``eta**alpha + sigma**alpha = G`` with the well strength
``G = a**alpha * U / (hbar**alpha * d_alpha)``, so the spectrum depends on
the physical well only through the pair ``(G, alpha)``.  Everything in this
package solves the dimensionless problem and attaches units at the edges.
"""

import cmath
import enum
import math
from dataclasses import dataclass


class DomainError(ValueError):
    """An input lies outside the physical domain of an operation."""


class ConvergenceError(RuntimeError):
    """Root refinement exhausted its iteration budget (indicates a bug)."""


class EigenSolveError(RuntimeError):
    """The dense symmetric eigendecomposition failed to converge."""


class Parity(enum.Enum):
    """Symmetry of an eigenfunction about the well center."""

    EVEN = "even"
    ODD = "odd"


def _require_positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0.0):
        raise DomainError(f"{name} must be strictly positive and finite, got {value!r}")


def _require_alpha(alpha: float) -> None:
    if not (math.isfinite(alpha) and 1.0 < alpha <= 2.0):
        raise DomainError(f"alpha must satisfy 1 < alpha <= 2, got {alpha!r}")


def pow_alpha(x: float, alpha: float) -> float:
    """``x**alpha`` on nonnegative ``x`` (principal branch, ``0**alpha == 0``)."""
    if x < 0.0:
        raise DomainError(f"fractional power needs a nonnegative base, got {x!r}")
    if x == 0.0:
        return 0.0
    return x**alpha


def root_alpha(x: float, alpha: float) -> float:
    """``x**(1/alpha)`` on nonnegative ``x`` (principal branch, zero maps to zero)."""
    if x < 0.0:
        raise DomainError(f"fractional root needs a nonnegative base, got {x!r}")
    if x == 0.0:
        return 0.0
    return x ** (1.0 / alpha)


@dataclass(frozen=True)
class WellParameters:
    """Physical description of the well.

    Parameters
    ----------
    a : float
        Well half-width (length units, e.g. cm).
    depth : float
        Well depth U (energy units, e.g. erg).
    d_alpha : float
        Kinetic scale factor; units energy**(1-alpha) * length**alpha *
        time**(-alpha).  For alpha = 2 this is 1/(2m).
    hbar : float
        Reduced Planck constant in the same unit system.
    alpha : float
        Levy index, 1 < alpha <= 2.
    """

    a: float
    depth: float
    d_alpha: float
    hbar: float
    alpha: float

    def __post_init__(self):
        _require_positive("a", self.a)
        _require_positive("depth", self.depth)
        _require_positive("d_alpha", self.d_alpha)
        _require_positive("hbar", self.hbar)
        _require_alpha(self.alpha)


@dataclass(frozen=True)
class DimensionlessWell:
    """The pair (G, alpha) that fully determines the dimensionless spectrum."""

    g: float
    alpha: float

    def __post_init__(self):
        _require_positive("g", self.g)
        _require_alpha(self.alpha)

    @property
    def sigma_max(self) -> float:
        """Largest admissible sigma, ``G**(1/alpha)``; eta vanishes there."""
        return root_alpha(self.g, self.alpha)


@dataclass(frozen=True)
class EnergyLevel:
    """One bound state: ordinal index, parity and its (sigma, eta) root.

    ``energy`` is populated only when the spectrum was computed from
    physical ``WellParameters``; in pure dimensionless form it is None and
    the energy fraction E/U equals ``sigma**alpha / G``.
    """

    index: int
    parity: Parity
    sigma: float
    eta: float
    energy: float | None = None


@dataclass(frozen=True)
class StationaryPhase:
    """Energy/time pair for the stationary time dependence exp(-i*E*t/hbar)."""

    energy: float
    time: float


def stationary_phase(s: StationaryPhase, hbar: float) -> complex:
    """Unit-modulus phase factor exp(-i*E*t/hbar) of a stationary state."""
    _require_positive("hbar", hbar)
    return cmath.exp(-1j * s.energy * s.time / hbar)


def kappa_of_energy(p: WellParameters, e: float) -> float:
    """Exterior decay rate kappa = (1/hbar) * ((U - E)/d_alpha)**(1/alpha).

    Strictly decreasing in ``e``; defined for 0 <= e < U only.
    """
    if not (0.0 <= e < p.depth):
        raise DomainError(f"energy must satisfy 0 <= e < depth={p.depth!r}, got {e!r}")
    return root_alpha((p.depth - e) / p.d_alpha, p.alpha) / p.hbar


def k_of_energy(p: WellParameters, e: float) -> float:
    """Interior wavenumber k = (1/hbar) * (E/d_alpha)**(1/alpha).

    Strictly increasing in ``e`` with k(0) = 0; defined for e >= 0.
    """
    if not (e >= 0.0):
        raise DomainError(f"energy must be nonnegative, got {e!r}")
    return root_alpha(e / p.d_alpha, p.alpha) / p.hbar


def energy_of_sigma(well: WellParameters | DimensionlessWell, sigma: float) -> float:
    """Invert sigma = k*a back to an energy.

    With physical ``WellParameters`` returns E = d_alpha * (hbar*sigma/a)**alpha.
    With a ``DimensionlessWell`` returns the fraction E/U = sigma**alpha / G.
    """
    if not (sigma >= 0.0):
        raise DomainError(f"sigma must be nonnegative, got {sigma!r}")
    if isinstance(well, WellParameters):
        return well.d_alpha * pow_alpha(well.hbar * sigma / well.a, well.alpha)
    return pow_alpha(sigma, well.alpha) / well.g


def nondimensionalize(p: WellParameters) -> DimensionlessWell:
    """Collapse physical parameters to the well strength G = a^alpha U / (hbar^alpha d_alpha)."""
    g = pow_alpha(p.a, p.alpha) * p.depth / (pow_alpha(p.hbar, p.alpha) * p.d_alpha)
    if not math.isfinite(g):
        raise OverflowError(f"well strength G overflowed for {p!r}")
    return DimensionlessWell(g=g, alpha=p.alpha)
