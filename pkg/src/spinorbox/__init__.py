"""Gamma-matrix algebra, charge conjugation, chiral decomposition, and a
1D box simulator for self-conjugate fermions.

Natural units throughout: hbar = c = 1.
"""

from .matcore import (
    ID2,
    SX,
    SY,
    SZ,
    NumericalError,
    UsageError,
    dagger,
    expm,
    is_anti_hermitian,
    is_hermitian,
    is_unitary,
    kron,
    matrix_from_json,
    matrix_to_json,
    max_norm,
)
from .clifford import (
    GammaSet,
    chirality,
    chirality_residuals,
    clifford_residual,
    dirac_planewave_residual,
    hamiltonian_symbol,
    hermiticity_residual,
    klein_gordon_residual,
    plane_wave_mode,
    unitarity_residual,
)
from .fields import TXField, plane_wave_field
from .reps import (
    BUILTIN_NAMES,
    RepSpec,
    all_builtins,
    builtin,
    charge_conjugate,
    common_sc_variants,
    custom_rep,
    derive_sc,
    majorana_historical,
    rep_change_matrix,
    similarity_transform,
    transport_sc,
    validate_rep,
    verify_cc_defining,
    weyl_alternative,
)
from .majorana import (
    TWO_COMPONENT_VARIANTS,
    ChiralDecomposition,
    SectorMatrices,
    case_residual_minus,
    case_residual_plus,
    cc_chirality_relation,
    chiral_decompose,
    chiral_projectors,
    complete_from_component,
    dirac_residual,
    majorana_defect,
    majorana_equation_residual,
    majorana_project,
    sector_matrices,
    two_component_residual,
)
from .boost import (
    BoostParam,
    boost_covariance_report,
    boost_field,
    intertwine_residual,
    spinor_boost,
    vector_boost,
)
from .boxsim import (
    BoundaryCondition,
    DiscreteHamiltonian,
    EvolutionState,
    Grid1D,
    assemble_hamiltonian,
    bc_consistency_check,
    bc_matrix,
    current_density,
    evolve,
    gaussian_packet,
    linking_matrix,
    states_to_txfield,
    stationary_modes,
    wall_currents,
    wall_values,
)

__version__ = "0.1.0"
