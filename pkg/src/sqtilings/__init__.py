"""Exact tilings of rectangles by s x s squares and monomers.

The package counts, for an n x m board, the tilings that use exactly k
squares of side s with every remaining cell a monomer.  Counts come out
either as explicit tables (:func:`count_table`) or packaged as bivariate
rational generating functions in z (board length) and t (squares used)
via :func:`generating_function`.  A brute-force oracle and a collection
of closed-form identities double-check everything independently.
"""

from .engine import (
    DEFAULT_STATE_CAP,
    StateCapExceeded,
    TransferGraph,
    enumerate_states,
    transitions,
)
from .gfun import (
    DEFAULT_DIM_CAP,
    DimensionCapExceeded,
    EliminationError,
    SymbolicTransferMatrix,
    build_matrix,
    emit_cas_script,
    generating_function,
    parse_cas_script,
    series_expand,
)
from .identities import (
    CheckResult,
    IdentityReport,
    check_basic,
    check_conjectures,
    check_single_lane,
    check_subwidth,
    check_two_s_square,
    run_verification,
)
from .oracle import DEFAULT_CELL_CAP, BoardTooLarge, brute_force_counts
from .poly import BiPoly, PolyT, RatFun, ratfun_eq
from .series import (
    CountTable,
    count_table,
    paper_line,
    row_sum_sequence,
    square_table,
    table_record,
    tables_to_csv,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "BoardTooLarge",
    "CheckResult",
    "CountTable",
    "DEFAULT_CELL_CAP",
    "DEFAULT_DIM_CAP",
    "DEFAULT_STATE_CAP",
    "DimensionCapExceeded",
    "EliminationError",
    "IdentityReport",
    "PolyT",
    "RatFun",
    "StateCapExceeded",
    "SymbolicTransferMatrix",
    "TransferGraph",
    "brute_force_counts",
    "build_matrix",
    "check_basic",
    "check_conjectures",
    "check_single_lane",
    "check_subwidth",
    "check_two_s_square",
    "count_table",
    "emit_cas_script",
    "enumerate_states",
    "generating_function",
    "parse_cas_script",
    "paper_line",
    "ratfun_eq",
    "row_sum_sequence",
    "run_verification",
    "series_expand",
    "square_table",
    "table_record",
    "tables_to_csv",
    "transitions",
    "__version__",
]
