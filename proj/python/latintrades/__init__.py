"""Latin trades, trade-space complexes, homology and critical sets.

Squares are lists of row lists, partial squares and trades are lists of
(row, col, symbol) triples, and simplicial complexes are dicts carrying
``vertex_count``, ``facets`` and ``labels``. All indices are 0-based.
"""

from ._core import (
    LatinError,
    apply_trade,
    back_circulant,
    count_completions,
    elementary_abelian,
    find_disjoint_mate,
    homology,
    intercalates,
    is_bitrade,
    is_bitrade_pairwise,
    is_critical_set,
    minimal_covers,
    nerve,
    smallest_critical_set,
    trades,
)

__version__ = "1.0.0"

__all__ = [
    "LatinError",
    "apply_trade",
    "back_circulant",
    "count_completions",
    "elementary_abelian",
    "find_disjoint_mate",
    "homology",
    "intercalates",
    "is_bitrade",
    "is_bitrade_pairwise",
    "is_critical_set",
    "minimal_covers",
    "nerve",
    "smallest_critical_set",
    "trades",
]
