"""Exact computational engine for Gaudin models of gl(m|n)."""

from .superalg import (
    ParitySequence,
    RootData,
    Weight,
    cartan_matrix,
    distinguished_parities,
    simple_root,
    weight_inner,
)
from .reps import (
    ChainSpace,
    RepModule,
    box_addable,
    casimir_diff,
    casimir_value,
    defining_matrix,
    defining_module,
    dual_module,
    gl11_module,
    hook_to_weight,
    pieri,
    realize_module,
    shapovalov_gram,
    singular_vectors,
    site_operator,
    weight_spaces,
)
from .gaudin import ChainSpec, brute_spectrum, hamiltonian, verify_hamiltonians
from .bethe import (
    BetheProblem,
    BetheRoots,
    bae_jacobian,
    bae_residual,
    canonical_colours,
    canonicalize,
    eigenvalues_general,
    eigenvalues_vector_rep,
    equivalent,
    gl11_norm_factors,
    gl11_solve,
    gl11_solve_exact,
    gl21_bethe_vector_ratio,
    gl21_one_point,
    gl21_weight_closed,
    map_two_point_roots,
    ordered_partitions,
    partition_sign,
    two_point_solve,
    weight_function,
)
from .solver import (
    SolutionSet,
    SolveOutcome,
    homotopy_complete,
    newton,
    simple_spectrum_check,
    solve_problem,
    verify_solution,
)

__version__ = "0.1.0"
