"""Exact construction, enumeration and cross-verification of convex
permutominoes: a recursive generator, a succession-rule census, truncated
generating-function expansions, closed-form counts and two independent
brute-force oracles, all agreeing on 1, 4, 18, 84, 394, 1836, 8468, ...
"""

from .census import (
    LabelCensus,
    catalan,
    census,
    census_by_class,
    closed_convex_polyominoes,
    closed_count,
    closed_directed,
    closed_stack,
    count,
)
from .eco import (
    OperationTag,
    children,
    expand_en,
    expand_nw,
    expand_se,
    expand_ws,
    generate,
    iter_permutominoes,
    parent,
)
from .grid import (
    UNIT,
    BoundaryError,
    BoundaryWord,
    CornerReport,
    DisconnectedPair,
    Label,
    NotColumnConvex,
    PairError,
    PermPair,
    Permutomino,
    ReentrantPermutation,
    SelfIntersectingPair,
    boundary_word,
    classify,
    corner_report,
    degree,
    from_permutations,
    is_convex,
    is_permutomino,
    is_valid,
    reentrant_matrix,
    render,
    vertex_permutations,
)
from .oracle import (
    PairClassification,
    classify_pairs,
    count_pair_permutominoes,
    count_permutominoes,
    enumerate_convex,
    iter_permutomino_survivors,
)
from .series import BivariateSeries, TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "BivariateSeries",
    "BoundaryError",
    "BoundaryWord",
    "CornerReport",
    "DisconnectedPair",
    "Label",
    "LabelCensus",
    "NotColumnConvex",
    "OperationTag",
    "PairClassification",
    "PairError",
    "PermPair",
    "Permutomino",
    "ReentrantPermutation",
    "SelfIntersectingPair",
    "TruncatedSeries",
    "UNIT",
    "boundary_word",
    "catalan",
    "census",
    "census_by_class",
    "children",
    "classify",
    "classify_pairs",
    "closed_convex_polyominoes",
    "closed_count",
    "closed_directed",
    "closed_stack",
    "corner_report",
    "count",
    "degree",
    "count_pair_permutominoes",
    "count_permutominoes",
    "enumerate_convex",
    "expand_en",
    "expand_nw",
    "expand_se",
    "expand_ws",
    "from_permutations",
    "generate",
    "is_convex",
    "is_permutomino",
    "is_valid",
    "iter_permutomino_survivors",
    "iter_permutominoes",
    "parent",
    "reentrant_matrix",
    "render",
    "vertex_permutations",
]
