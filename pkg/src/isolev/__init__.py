"""Exact generalized Levenshtein distances, finite-language constructions,
and isometry groups of finite metric spaces."""

from .editdist import (
    DEFAULT_WEIGHTS,
    DistanceMatrix,
    DuplicateWords,
    InputTooLong,
    LengthMismatch,
    NormalizedWeights,
    Rat,
    Weights,
    as_rat,
    distance_matrix,
    hamming,
    lev,
    lev_oracle,
    normalize,
)
from .langlib import (
    AuditReport,
    FormatError,
    HypothesisViolated,
    Language,
    growth,
    is_subsequence,
    load_language,
    minimal_words,
    parse_language,
    save_language,
    stretch,
    theorem1_audit,
)
from .constructs import (
    DepthExceedsGraphs,
    GraphCatalogEntry,
    GraphFormatError,
    NonUniformLength,
    NotCubic,
    ParametersTooLarge,
    SimpleGraph,
    catalog,
    catalog_graph,
    encode_cubic_graph,
    lemma5_language,
    load_graph,
    parse_graph,
    prop4_language,
    theorem2_language,
    theorem3_language,
    theorem4_language,
    theorem5_language,
    theorem6_language,
    unary_language,
)
from .isomgroup import (
    DegreeMismatch,
    DegreeTooLarge,
    GroupTooLarge,
    OrbitPartition,
    Permutation,
    PermutationGroup,
    abstract_isomorphic,
    contains,
    elements,
    graph_automorphisms,
    group_order,
    isometries,
    isometries_brute,
    orbits,
    same_group,
)

__version__ = "0.1.0"
