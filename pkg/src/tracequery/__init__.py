"""Subsequence queries over event traces with wildcards, gap constraints
and disjunctive typesets: matching, static analysis and discovery of
descriptive queries from samples."""

from .analysis import (
    AlphabetTooSmall,
    Homomorphism,
    IncomparableQueries,
    construct_min_trace,
    contained_in,
    equivalent,
    find_homomorphism,
    is_satisfiable,
    min_match_length,
    sufficient_alphabet_size,
)
from .core import (
    INF,
    GapConstraint,
    Query,
    QueryClass,
    QueryError,
    Variable,
    Violation,
    canonical_form,
    classify,
    local_gaps,
    make_query,
    make_sample,
    make_trace,
    positions_of,
    replace_symbol,
    support_threshold,
    typeset,
    validate_query,
)
from .discovery import (
    DeltaFamily,
    DiscoveryParams,
    NoDescriptiveQuery,
    UnsatisfiableConstraints,
    compute_delta,
    discover,
    discover_run,
    most_general_query,
    typeset_support,
)
from .io import parse_query, parse_traces, serialize_query, write_report
from .matcher import Witness, embedding_satisfies, find_witness, matches, support

__version__ = "0.1.0"
