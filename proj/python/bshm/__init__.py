"""Balanced splittable Hadamard matrices: construction, verification and parameter tables."""

from ._core import (
    BshmError,
    PmMatrix,
    add_allones_row,
    b0_to_bm1,
    bent_difference_set,
    character_table,
    classify_params,
    construct_b0,
    construct_bm1,
    construct_ns_n_n_0,
    extract_unbiased_mate,
    hadamard_matrix,
    packing_to_multibshm,
    paley_hadamard,
    pds_to_bshm,
    remove_allones_row,
    search_bshm_rows,
    search_difference_set,
    spread_union_pds,
    srg_params,
    sylvester,
    table_tsv,
    to_regular_form,
    verify_bshm,
    verify_pds,
    verify_pds_definition,
    walsh_spectrum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
