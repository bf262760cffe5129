"""simulzero: find all simple zeros of a polynomial simultaneously.

Six coupled one-step iteration maps driven from circle starting points to a
max-residual stopping rule, with root matching and empirical convergence-order
measurement on top.
"""

from .analysis import (
    OrderEstimate,
    RootMatching,
    error_history,
    estimate_order,
    match_roots,
    oracle_roots,
    perturbed_roots,
)
from .initial import InitialPoints, aberth_points, henrici_radius
from .methods import (
    BreakdownError,
    CollisionError,
    MethodKind,
    lagrange_identity_residual,
    step,
    weierstrass_corrections,
)
from .poly import (
    Polynomial,
    builtin_by_name,
    builtin_suite,
    from_coefficients,
    from_roots,
    translate,
)
from .solver import SolveReport, SolverConfig, SolveStatus, residual_max, solve

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "from_coefficients",
    "from_roots",
    "translate",
    "builtin_suite",
    "builtin_by_name",
    "InitialPoints",
    "henrici_radius",
    "aberth_points",
    "MethodKind",
    "CollisionError",
    "BreakdownError",
    "weierstrass_corrections",
    "step",
    "lagrange_identity_residual",
    "SolveStatus",
    "SolverConfig",
    "SolveReport",
    "residual_max",
    "solve",
    "RootMatching",
    "OrderEstimate",
    "match_roots",
    "estimate_order",
    "perturbed_roots",
    "error_history",
    "oracle_roots",
    "__version__",
]
