"""Bound states of a 1D finite square well under a Levy-index kinetic term.

The dimensionless problem is fixed by the pair (G, alpha); physical units
attach only at the API boundary.  Typical use::

    from fqwell import DimensionlessWell, solve_spectrum

    spectrum = solve_spectrum(DimensionlessWell(g=16.0, alpha=2.0))
    for level in spectrum.levels:
        print(level.index, level.parity.value, level.sigma, level.eta)
"""

from .core import (
    ConvergenceError,
    DimensionlessWell,
    DomainError,
    EigenSolveError,
    EnergyLevel,
    Parity,
    StationaryPhase,
    WellParameters,
    energy_of_sigma,
    k_of_energy,
    kappa_of_energy,
    nondimensionalize,
    pow_alpha,
    root_alpha,
    stationary_phase,
)
from .spectral import (
    ComparisonReport,
    DiscreteHamiltonian,
    LevelComparison,
    SpectralGrid,
    bound_spectrum,
    bound_states,
    build_hamiltonian,
    compare,
    kinetic_matrix,
)
from .spectrum import (
    Branch,
    Spectrum,
    constraint_eta,
    count_levels,
    enumerate_branches,
    infinite_well_limit,
    iter_branches,
    parity_curve,
    solve_branch,
    solve_many,
    solve_spectrum,
    solve_spectrum_raw,
)
from .wavefunction import Eigenfunction, match_constants, normalize

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "ComparisonReport",
    "ConvergenceError",
    "DimensionlessWell",
    "DiscreteHamiltonian",
    "DomainError",
    "EigenSolveError",
    "Eigenfunction",
    "EnergyLevel",
    "LevelComparison",
    "Parity",
    "SpectralGrid",
    "Spectrum",
    "StationaryPhase",
    "WellParameters",
    "bound_spectrum",
    "bound_states",
    "build_hamiltonian",
    "compare",
    "constraint_eta",
    "count_levels",
    "energy_of_sigma",
    "enumerate_branches",
    "infinite_well_limit",
    "iter_branches",
    "k_of_energy",
    "kappa_of_energy",
    "kinetic_matrix",
    "match_constants",
    "nondimensionalize",
    "normalize",
    "parity_curve",
    "pow_alpha",
    "root_alpha",
    "solve_branch",
    "solve_many",
    "solve_spectrum",
    "solve_spectrum_raw",
    "stationary_phase",
]
