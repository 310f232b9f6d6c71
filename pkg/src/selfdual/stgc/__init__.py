"""Single-track Gray codes: data model, verifier and constructions."""
from .code import (
    Stgc,
    StgcReport,
    covers_all_words,
    parse_stgc,
    read_stgc,
    verify_stgc,
    window_F,
    write_stgc,
)
from .construct import construct_thm3, construct_thm4, construct_thm7
from .difference import (
    DiffSeq,
    align_tracks,
    build_diff_ordering,
    build_diff_stgc,
    diff_to_sds,
    difference_classes,
    ordering_from_diffs,
    sds_to_diff,
)
from .maxperiod import is_max_period, search_thm3_max_period
from .ordering import (
    SdsOrdering,
    TrackSpace,
    check_ordering,
    find_cyclic_order,
    find_sds_ordering,
)
from .recursive import build_recursive_ordering, build_recursive_stgc, components

__all__ = [name for name in dir() if not name.startswith("_")]
