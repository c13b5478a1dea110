"""Exact CM-type lattice computations, prime-bound chains and verifiers."""

from .bounds import (
    BoundInputs,
    BoundReport,
    FieldRecord,
    chain_bounds,
    division_field_lower_bound,
    euler_phi,
    max_ell_small_field,
    max_mu,
    prop_key_admissible,
    prop_key_bound,
    refined_bound_check,
    ribet_min_rank,
    tsimerman_disc_cap,
)
from .classnumbers import (
    class_number_imag_quadratic,
    discs_with_class_number_at_most,
    reduced_forms,
)
from .cmtypes import (
    CMFieldSymbol,
    CMType,
    MTInfo,
    ReflexDatum,
    cm_enumeration_scope,
    component_group_order,
    enumerate_cm_types,
    is_primitive,
    mt_info,
    mt_rank,
    parse_cm_descriptor,
    reflex,
    reflex_norm_matrix,
    reflex_type,
)
from .example61 import (
    assemble_c12,
    c6_action_check,
    cyclotomic_relative_degree,
    hecke_epsilon,
    pro_ell_certificate,
    residue_symbols,
    rho_kernel_order,
    verify61_report,
    verify_rho_kernel,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    build_group,
    coset_structure,
    is_central_involution,
    load_group_table,
)
from .snf import (
    IntegerMatrix,
    SNFResult,
    integer_rank,
    smith_decomposition,
    smith_normal_form,
)

__version__ = "0.1.0"
