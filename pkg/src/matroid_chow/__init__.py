"""Exact Schubert-coefficient (Chow class) computations for matroids."""

from .shapes import (
    Composition,
    DescentSet,
    Partition,
    SkewShape,
    complement,
    composition_of_ribbon,
    contains,
    coarsen,
    descent_set,
    dominance_leq,
    is_ribbon,
    ribbon_from_composition,
    rows_cols,
    transpose,
)
from .tableaux import (
    StandardTableau,
    count_permutations_with_descents,
    count_syt_transversal,
    count_syt_with_descents,
    count_syt_with_num_descents,
    descent_set_of,
    enumerate_syt,
    gessel_viennot,
    hook_length_count,
    kostka,
)
from .symfunc import (
    SchurExpansion,
    jacobi_trudi_ribbon,
    lr_coefficient,
    pieri_col,
    pieri_row,
    ribbon_schur,
    rmv,
    schur_multiply,
    skew_schur,
    truncate,
)
from .matroid import (
    CyclicChain,
    LatticePathSpec,
    Matroid,
    direct_sum,
    hampe_coefficients,
    lattice_path,
    minimal,
    nested_from_chain,
    panhandle,
    snake,
    snakes_in,
    uniform,
)
from .chow import (
    ChowClass,
    beta_from_chow,
    check_beta_volume_conjecture,
    check_main_identity,
    check_product_identities,
    check_support_bounds,
    paving_schubert,
    poincare_dual,
    sc_general,
    sc_lattice_path,
    sc_nested,
    sc_snake,
    sc_uniform,
    support_of,
    transform_dual_matroid,
    volume_from_chow,
)
from .kclass import (
    KPolynomial,
    chow_from_k,
    divided_difference,
    kclass_of,
    ktosc,
    lex_first_basis,
    verify_add_loop,
    verify_last_step,
    verify_parext,
    verify_serext,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
