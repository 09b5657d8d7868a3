"""Exact weighted-quiver mutation, dual-number recurrences, and Laurent checks.

The package has five layers:

* ``dualnum``     exact dual scalars a + b·ε (ε² = 0) over ints/rationals
* ``quiver``      skew-symmetric exchange matrices, mutation, weights, rotation
* ``periodicity`` primitive quivers, period-1 tests, weight-function solving
* ``laurent``     sparse dual Laurent polynomials and symbolic exchange runs
* ``seqgen``      dual recurrence runs, linearization, and integrality scans

plus a ``quiverseq`` CLI binding them together.
"""

from .dualnum import DualScalar, NotDivisible, ZeroBodyError, exact_div, format_scalar, parse_scalar
from .errors import QuiverSeqError
from .laurent import (
    DualLaurent,
    NotLaurent,
    RationalDualExpr,
    evaluate,
    initial_variables,
    normalize,
    sym_exchange,
    symbolic_sequence,
    verify_laurent_run,
)
from .periodicity import (
    WeightSolution,
    combine,
    primitive,
    solve_weight,
    weight_exists,
    weight_period,
)
from .poly import Poly, poly_gcd
from .quiver import Quiver, QuiverFormatError, WeightedQuiver, load_quiver
from .seqgen import (
    Monomial,
    RecurrenceSpec,
    SequenceRun,
    builtin,
    decompose_basis,
    integrality_scan,
    quiver_to_spec,
    run,
    run_linearized,
)

__version__ = "0.1.0"

__all__ = [
    "DualLaurent",
    "DualScalar",
    "Monomial",
    "NotDivisible",
    "NotLaurent",
    "Poly",
    "Quiver",
    "QuiverFormatError",
    "QuiverSeqError",
    "RationalDualExpr",
    "RecurrenceSpec",
    "SequenceRun",
    "WeightSolution",
    "WeightedQuiver",
    "ZeroBodyError",
    "builtin",
    "combine",
    "decompose_basis",
    "evaluate",
    "exact_div",
    "format_scalar",
    "initial_variables",
    "integrality_scan",
    "load_quiver",
    "normalize",
    "parse_scalar",
    "poly_gcd",
    "primitive",
    "quiver_to_spec",
    "run",
    "run_linearized",
    "solve_weight",
    "sym_exchange",
    "symbolic_sequence",
    "verify_laurent_run",
    "weight_exists",
    "weight_period",
]
