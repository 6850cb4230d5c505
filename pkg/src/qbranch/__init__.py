"""Exact arithmetic for q-deformed branching graphs.

Stochastic links on the Gelfand-Tsetlin and Young graphs, the graded
central-function ring with its q-deformed structure constants, coherent
systems (shadows of KMS states), torus-restricted character functions,
and Markov sampling of central measures.  Everything algebraic is exact:
rationals, Laurent polynomials in q, and their formal ratios.
"""

from .scalars import LaurentPoly, QRatio, Rational, laurent_eval, laurent_mul, qratio_eq
from .signatures import (
    GTPattern,
    Signature,
    bracket,
    conjugate_signature,
    covers_below,
    enumerate_gt_patterns,
    interlace,
    partitions_of,
    shift,
)
from .symfunc import cartan_moment, dim_classical, lr_splice, lr_tensor, qdim, schur_eval
from .branching import (
    BranchingGraph,
    CentralFunction,
    L1Vector,
    check_stochastic_row,
    classical_gt_graph,
    export_dot,
    gtq_graph,
    link,
    pairing,
    phi_pushdown,
    pushdown_chain,
    theta_eval,
    theta_map,
    young_graph,
)
from .repsystem import (
    SigmaElement,
    SystemElement,
    ZhatElement,
    equal_on_window,
    module_action,
    nonneg_on_window,
    push_to_level,
    sigma_eval_product,
    zhat_coefficient,
    zhat_mul,
)
from .harmonic import (
    CoherentSystem,
    KMSStateShadow,
    adjoint_system,
    character_product,
    check_harmonic,
    convex_mix,
    counit_system,
    ergodic_estimate,
    from_top,
    system_from_json,
    system_to_json,
)
from .charfun import (
    adjoint_check,
    char_restriction,
    coherence_check,
    gorin_generating_function,
    multiplicativity_check,
)
from .sampler import (
    empirical_tv,
    sample_down,
    sample_down_histogram,
    sample_up,
    sample_up_histogram,
)

__version__ = "0.1.0"
