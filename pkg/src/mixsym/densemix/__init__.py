"""Exact dense-matrix engine for mixed-state symmetry diagnostics."""

from .states import (
    DensityMatrix,
    density_matrix,
    maximally_mixed,
    partial_trace,
    product_density,
    pure_density,
    random_density_matrix,
    random_pure_state,
)
from .operators import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    LocalOperator,
    embed_operator,
    local_operator,
    operator_product,
    pauli_on,
)
from .fidelity import (
    averaged_one_two_check,
    connected_fidelity_matrix,
    fidelity,
    lfc_one_point,
    two_point_fidelity,
)
from .renyi import connected_renyi_matrix, renyi_one_point, two_point_renyi
from .entropy import Tripartition, cmi, von_neumann_entropy
from .symmetry import (
    OperatorMultiplet,
    SymmetryAction,
    charge_decompose,
    cyclic_phase_symmetry,
    disorder_parameter,
    is_weakly_symmetric,
    nonabelian_lfc_channel,
    nonabelian_lfc_maxv,
    order_disorder_check,
    region_unitary,
    s3_qubit_symmetry,
    twirl,
    unitary_decompose,
    z2_parity_symmetry,
)
from .channels import (
    KrausChannel,
    apply_channel,
    make_pauli_channel,
    symmetric_channel_fuzz,
    symmetric_unitary_circuit,
)
from .ensembles import (
    dimer_window_state,
    fixed_sector_infinite_temp,
    gibbs_paramagnet,
    gibbs_state,
    markov_product_state,
    sector_paramagnet,
    thermal_renyi1_check,
    transverse_field_chain,
)

__all__ = [
    "DensityMatrix",
    "density_matrix",
    "maximally_mixed",
    "partial_trace",
    "product_density",
    "pure_density",
    "random_density_matrix",
    "random_pure_state",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "LocalOperator",
    "embed_operator",
    "local_operator",
    "operator_product",
    "pauli_on",
    "averaged_one_two_check",
    "connected_fidelity_matrix",
    "fidelity",
    "lfc_one_point",
    "two_point_fidelity",
    "connected_renyi_matrix",
    "renyi_one_point",
    "two_point_renyi",
    "Tripartition",
    "cmi",
    "von_neumann_entropy",
    "OperatorMultiplet",
    "SymmetryAction",
    "charge_decompose",
    "cyclic_phase_symmetry",
    "disorder_parameter",
    "is_weakly_symmetric",
    "nonabelian_lfc_channel",
    "nonabelian_lfc_maxv",
    "order_disorder_check",
    "region_unitary",
    "s3_qubit_symmetry",
    "twirl",
    "unitary_decompose",
    "z2_parity_symmetry",
    "KrausChannel",
    "apply_channel",
    "make_pauli_channel",
    "symmetric_channel_fuzz",
    "symmetric_unitary_circuit",
    "dimer_window_state",
    "fixed_sector_infinite_temp",
    "gibbs_paramagnet",
    "gibbs_state",
    "markov_product_state",
    "sector_paramagnet",
    "thermal_renyi1_check",
    "transverse_field_chain",
]
