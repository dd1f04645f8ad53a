"""Sequential-atom generation of N-photon generalized binomial states in a
cavity, with a dispersive CNOT gate and feasibility estimates."""

from .errors import (
    ImpossibleOutcomeError,
    InvalidInputError,
    InvalidTargetError,
    NGBSError,
    TruncationError,
)
from .fock import (
    BinomialStateSpec,
    FockVector,
    binomial_coefficient,
    coherent_state,
    fidelity,
    inner_product,
    make_binomial_state,
    orthogonal_partner,
)
from .jc import (
    AtomState,
    JointState,
    evolve_resonant,
    jc_unitary_oracle,
    project_atom,
    ramsey_prepare,
    tensor,
)
from .protocol import (
    GenerationReport,
    ProtocolPlan,
    StepRecord,
    appendix_identity_check,
    conditional_scheme_baseline,
    plan_times,
    run_protocol,
    run_protocol_full_sim,
    step_coefficients,
    step_probability,
)

__version__ = "0.1.0"
