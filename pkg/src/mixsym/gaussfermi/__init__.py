"""Free-fermion Gaussian engine: correlation matrices and lattice models."""

from .lattice import (
    LatticeGeometry,
    chain_geometry,
    disk_region,
    halfspace_region,
    interval_region,
    minimum_image_displacement,
    rectangle_region,
    square_geometry,
)
from .models import (
    QuadraticHamiltonian,
    anderson_2d,
    fermi_chain_1d,
    goe_hamiltonian,
    pi_flux_2d,
    plaquette_fluxes,
    square_lattice_2d,
)
from .correlation import (
    CorrelationMatrix,
    dense_oracle,
    escape_integral,
    gaussian_renyi1,
    ground_state_correlation,
    jw_annihilation,
    replicated_moment,
    restrict,
)
from .fermisurface import (
    chemical_potential,
    fermi_surface_area,
    fs_normal_flux,
    square_dispersion_grid,
)

__all__ = [
    "LatticeGeometry",
    "chain_geometry",
    "disk_region",
    "halfspace_region",
    "interval_region",
    "minimum_image_displacement",
    "rectangle_region",
    "square_geometry",
    "QuadraticHamiltonian",
    "anderson_2d",
    "fermi_chain_1d",
    "goe_hamiltonian",
    "pi_flux_2d",
    "plaquette_fluxes",
    "square_lattice_2d",
    "CorrelationMatrix",
    "dense_oracle",
    "escape_integral",
    "gaussian_renyi1",
    "ground_state_correlation",
    "jw_annihilation",
    "replicated_moment",
    "restrict",
    "chemical_potential",
    "fermi_surface_area",
    "fs_normal_flux",
    "square_dispersion_grid",
]
