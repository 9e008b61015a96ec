"""Finite loop analysis: properties, inverses, isotopy, catalogs."""

from ._core import (
    IsotopismTriple,
    Loop,
    LoopkitError,
    Permutation,
    all_permutations,
    apply_isotopism,
    autotopisms,
    build_catalog,
    canonical_key,
    check_isotopism,
    check_t_condition,
    classify,
    commuting_closure_check,
    compose,
    counterexample_loop,
    counterexample_triple,
    cycle_string,
    derive_third,
    enumerate_loops,
    find_isomorphisms,
    find_isotopisms,
    inner_mappings,
    inverse,
    inverse_maps,
    is_aip,
    is_cip,
    is_m_inverse,
    is_weak_inverse_permutation,
    is_wip,
    loop_from_text,
    loop_text,
    normalize,
    perm_order,
    power,
    principal_isotope,
    read_loop_file,
    read_permutation_file,
    read_triple_file,
    translations,
    verify_artzy_cip,
    verify_counterexample,
    verify_osborn_autotopism,
    verify_suite,
    verify_t_corollaries,
    verify_t_isomorphy,
    verify_translation_identities,
    verify_wip_transfer,
    weak_inverse_sets,
    write_loop_file,
    write_permutation_file,
    write_triple_file,
)

__version__ = "0.1.0"

__all__ = [
    "IsotopismTriple",
    "Loop",
    "LoopkitError",
    "Permutation",
    "all_permutations",
    "apply_isotopism",
    "autotopisms",
    "build_catalog",
    "canonical_key",
    "check_isotopism",
    "check_t_condition",
    "classify",
    "commuting_closure_check",
    "compose",
    "counterexample_loop",
    "counterexample_triple",
    "cycle_string",
    "derive_third",
    "enumerate_loops",
    "find_isomorphisms",
    "find_isotopisms",
    "inner_mappings",
    "inverse",
    "inverse_maps",
    "is_aip",
    "is_cip",
    "is_m_inverse",
    "is_weak_inverse_permutation",
    "is_wip",
    "loop_from_text",
    "loop_text",
    "normalize",
    "perm_order",
    "power",
    "principal_isotope",
    "read_loop_file",
    "read_permutation_file",
    "read_triple_file",
    "translations",
    "verify_artzy_cip",
    "verify_counterexample",
    "verify_osborn_autotopism",
    "verify_suite",
    "verify_t_corollaries",
    "verify_t_isomorphy",
    "verify_translation_identities",
    "verify_wip_transfer",
    "weak_inverse_sets",
    "write_loop_file",
    "write_permutation_file",
    "write_triple_file",
]
