"""mixsym: numerical laboratory for local symmetry diagnostics of mixed quantum states.

Subpackages
-----------
densemix
    Exact dense-matrix engine: fidelity and Renyi correlators, conditional
    mutual information, symmetry sectors, quantum channels.
gaussfermi
    Free-fermion Gaussian engine: correlation matrices, restricted-kernel
    spectra, lattice model builders, Fermi-surface geometry.
isingdecohere
    Dephased Ising paramagnet: exact X-basis distributions, classical Ising
    magnetization by enumeration and Monte Carlo, coupling maps.
predictions
    Closed-form scaling predictions and power-law / plateau fitting.
labharness
    Configuration-driven experiment runner, verification suites, CLI.
"""

__version__ = "0.1.0"
