"""Collatz map machinery on row/column coordinates: row reduction, exact
boundary classification, residue-case criteria and cycle searches."""

from .cadogan import Coord, TailResult, c, c_inv, head, table, tail
from .core import (
    StepResult,
    Trace,
    collatz_inverse,
    collatz_inverse_row,
    collatz_step,
    exception_candidate,
    iterate,
    trace_to_one,
)
from .criteria import (
    CaseParams,
    case_params,
    check_consistency,
    determinant,
    evaluate_criterion,
    expand_params,
    find_counterexample,
    synthesize_J,
)
from .errors import (
    BoundsMismatch,
    BudgetExhausted,
    CorruptCheckpoint,
    CycleFound,
    EvenInput,
    InternalResidueViolation,
    NotDivisible,
    RowOutOfRange,
)
from .search import (
    SearchReport,
    appendix_search,
    cross_validate,
    oracle_on_boundary,
    resume,
    unified_cycle_search,
)
from .trajectory import (
    Boundary,
    Classification,
    boundary_column,
    classify_detail,
    classify_restart,
    completed_trajectory,
    coord_step,
    coord_step_m,
    g,
    g_inv,
    g_inv_pow,
    g_pow,
    reduce_sequence,
    restart_q,
    rho,
)

__version__ = "0.1.0"
