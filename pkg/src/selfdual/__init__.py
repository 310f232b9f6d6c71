"""Self-dual sequences over Z_m, complemented cycling registers and single-track Gray codes."""
from .errors import (
    GuardExceeded,
    PreconditionError,
    SearchFailure,
    SelfDualError,
    VerificationFailure,
)
from .operators import (
    apply_D,
    apply_D_inv,
    apply_D_inv_pow,
    apply_D_pow,
    delta,
    delta_inv,
    general_p_recursion,
    pascal_rows,
    recurse_ccr_sds,
    z3_recursion,
    z5_recursion,
)
from .registers import (
    CountReport,
    RegisterSpec,
    ccr,
    count_ccr_by_period,
    count_ccr_formula,
    count_mccr_formula,
    fsr_cycles,
    kernel_poly_cycles,
    sd_count,
    verify_count_identity,
    verify_mccr_identity,
)
from .zmseq import (
    CyclicSeq,
    Word,
    add_const,
    canonical,
    enumerate_sds,
    hamming,
    is_self_dual,
    necklace,
    period,
    shift,
)

__version__ = "0.1.0"
