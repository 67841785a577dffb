"""Python access to the tdlab library."""

from ._tdlab import (
    BoundExceeded,
    ParseError,
    Perm,
    PermGroup,
    PreconditionError,
    SubgroupGraph,
    affine_action,
    affine_f2_action,
    build_ht_report,
    burnside_td_upper_bound,
    check_alt_sentence,
    is_k_transitive,
    is_mixed_identity,
    is_primitive,
    load_group,
    marked_distance,
    parse_free_word,
    transitivity_degree,
    transitivity_of_action,
    verify_cameron,
    verify_report,
    word_letters,
)

__all__ = [name for name in dir() if not name.startswith("_")]
