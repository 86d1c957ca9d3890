"""Binary Markov chains encoded as entangled qubit registers."""
from .chain import (
    ChainSpec,
    DerivedDtmc,
    IdleControlsWarning,
    calibrate_conditional,
    calibrate_root,
    chain_to_dtmc,
    closed_form_state,
    compile_chain,
    compile_chain_no_init,
    spec_from_probabilities,
)
from .classical import PathDistribution, path_distribution, step, validate
from .gates import controlled, hadamard, kron, mat_mul, pauli_x, phase_root_z, root_x
from .statevector import (
    Circuit,
    Controlled,
    Single,
    StateVector,
    amplitude,
    apply_controlled,
    apply_single,
    init_basis,
    probabilities,
    run_circuit,
)

__version__ = "0.1.0"
