"""Segre-embedding geometry for multiqubit pure states."""
from .coxeter import (
    ChamberId,
    ErrorRecord,
    OnWall,
    Permutation,
    act,
    act_on_generator,
    chamber_of,
    inject_error,
    recover,
    state_chamber,
    transporter,
    verify_ideal_invariance,
)
from .errors import SegreError
from .hypercube import (
    BinaryWord,
    HypercubeGraph,
    SpaceSignature,
    generate_hypercube,
    hamming,
    neighbors,
    signature_of,
    to_dot,
    to_json,
)
from .kernels import BACKEND
from .segre import (
    SegreGenerator,
    SeparabilityReport,
    concurrence,
    ideal_generators,
    is_maximally_entangled,
    is_product_state,
    is_separable_at_cut,
    minors_residual,
    octant_split,
    recover_factors,
    reshape,
    schmidt_residual,
    segre_map,
    su2_point,
)
from .state import (
    PauliOp,
    ProjectivePoint,
    PureState,
    SimplexPoint,
    new_state,
    pauli_apply,
    pauli_decompose,
    probabilities,
    projective_equal,
    tensor,
)

__version__ = "0.1.0"
