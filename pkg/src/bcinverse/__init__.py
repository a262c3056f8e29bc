"""(b,c)-inverses and their relatives in finite rings, computed by exhaustive scans."""

from .errors import (
    BCInverseError,
    BudgetExceeded,
    CardinalityExceeded,
    EngineInconsistency,
    LiteralError,
    NotAUnitError,
    PreconditionError,
    RingAxiomError,
    RingMismatchError,
    RingSpecError,
)
from .ideals import (
    Subset,
    double_annihilators,
    is_direct_sum_of_ring,
    left_annihilator,
    left_ideal,
    right_annihilator,
    right_ideal,
    sandwich_set,
    subset_equal,
    subset_intersection,
    subset_sum,
)
from .inverses import (
    DrazinResult,
    InverseResult,
    annihilator_bc_inverse,
    bc_exists_via_ideals,
    bc_idempotents,
    bc_inverse,
    bc_inverse_via_lemma,
    bott_duffin,
    drazin_inverse,
    group_inverse,
    hybrid_bc_inverse,
    image_kernel_inverse,
    inner_inverses,
    is_moore_penrose,
    is_regular,
    transfer_d_inverse,
    transfer_d_inverse_dual,
    verify_witnesses,
)
from .rings import Element, RingHandle, RingSpec, build_ring, parse_ring_spec

__version__ = "0.1.0"
