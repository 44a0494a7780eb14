"""Straightening algorithms for the bracket algebra.

Tableaux are tuples of rows of positive integer symbols; polynomials are
``BracketPolynomial`` objects.  Every algorithm returns the same normal form
(an integer combination of straight tableaux).
"""

from .cases import build_turnbull_young, builtin_cases
from .column_bracket import (
    ColumnBracket,
    ColumnBracketSum,
    compute_C,
    expand_Pc,
    multiply_column_brackets,
    straighten_cb,
    straighten_pc,
)
from .coordinate import CoordPolynomial, expand, straighten_coord
from .core import (
    BracketPolynomial,
    SymbolContext,
    column_sort,
    compare_negative_column,
    content,
    is_straight,
    normalize_monomial,
    order_key,
    vec,
)
from .errors import (
    BracketError,
    CapacityError,
    ConsistencyError,
    DisagreementError,
    ParseError,
    ShapeError,
    SymbolRangeError,
)
from .harness import generate_corpus, instrumented_straighten, run_benchmark_suite
from .rota import (
    PolarizationSpec,
    capelli_coefficient,
    enumerate_standard_tableaux,
    polarize,
    straighten_rota,
    straightening_coefficients,
    xi,
)
from .stats import RotaCost, StepStats
from .syzygy import find_violation, multiple_syzygy, straighten_vw, straighten_white, vdw_syzygy
from .textio import parse_tableau_file, serialize_polynomial
