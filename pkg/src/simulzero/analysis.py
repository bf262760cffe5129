"""Compare computed approximations against reference roots and measure the
empirical convergence order of an error sequence.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .methods import MethodKind, step
from .poly import Polynomial
from .solver import SolverConfig, SolveStatus, solve

__all__ = [
    "RootMatching",
    "OrderEstimate",
    "match_roots",
    "estimate_order",
    "perturbed_roots",
    "error_history",
    "oracle_roots",
]

# below this, an error/residual value is rounding noise, not signal
NOISE_FLOOR = 1e-14

_MATCH_LIMIT = 12


@dataclass(frozen=True)
class RootMatching:
    """Pairing of computed against reference roots minimizing the worst error."""

    assignment: tuple[int, ...]  # computed index -> reference index
    max_error: float
    per_root_errors: tuple[float, ...]


@dataclass(frozen=True)
class OrderEstimate:
    """Computational order of convergence along a decreasing sequence.

    per_step_orders holds one entry per interior index (None where the
    three-term window is not strictly decreasing); final_order is the last
    defined entry whose forward value is still above the noise floor.
    """

    per_step_orders: tuple[float | None, ...]
    final_order: float
    sequence_used: str  # "errors" or "residuals"


def match_roots(computed, reference) -> RootMatching:
    """Assignment of computed to reference roots minimizing max_i |z_i - r_s(i)|.

    Exact for n <= 12: binary search over the candidate bottleneck distances,
    with an augmenting-path perfect-matching test at each threshold.
    """
    zs = [complex(v) for v in computed]
    rs = [complex(v) for v in reference]
    if len(zs) != len(rs):
        raise ValueError(f"{len(zs)} computed vs {len(rs)} reference roots")
    n = len(zs)
    if n > _MATCH_LIMIT:
        raise ValueError(f"matching supports n <= {_MATCH_LIMIT}, got {n}")
    for i in range(n):
        for j in range(i + 1, n):
            if rs[i] == rs[j]:
                raise ValueError(f"duplicate reference root {rs[i]!r}")

    dist = [[abs(z - r) for r in rs] for z in zs]
    levels = sorted({d for row in dist for d in row})

    def matching_at(limit: float) -> tuple[int, ...] | None:
        # Kuhn's augmenting paths over edges with dist <= limit
        owner = [-1] * n  # reference index -> computed index

        def try_assign(i: int, seen: list[bool]) -> bool:
            for j in range(n):
                if dist[i][j] <= limit and not seen[j]:
                    seen[j] = True
                    if owner[j] < 0 or try_assign(owner[j], seen):
                        owner[j] = i
                        return True
            return False

        for i in range(n):
            if not try_assign(i, [False] * n):
                return None
        assignment = [-1] * n
        for j, i in enumerate(owner):
            assignment[i] = j
        return tuple(assignment)

    lo, hi = 0, len(levels) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if matching_at(levels[mid]) is not None:
            hi = mid
        else:
            lo = mid + 1
    assignment = matching_at(levels[lo])
    assert assignment is not None
    errors = tuple(dist[i][assignment[i]] for i in range(n))
    return RootMatching(assignment=assignment, max_error=max(errors), per_root_errors=errors)


def estimate_order(sequence, sequence_used: str = "errors") -> OrderEstimate:
    """rho_m = ln(s_{m+1}/s_m) / ln(s_m/s_{m-1}) along a positive sequence.

    Defined only where s_{m-1} > s_m > s_{m+1}; the reported final order is
    the last defined value whose s_{m+1} is still above the noise floor
    (beyond that, rounding dominates the ratio).
    """
    s = [float(v) for v in sequence]
    if len(s) < 3:
        raise ValueError("need at least 3 sequence entries")
    if any(v <= 0 for v in s):
        raise ValueError("sequence entries must be positive")

    orders: list[float | None] = []
    final: float | None = None
    for m in range(1, len(s) - 1):
        if s[m - 1] > s[m] > s[m + 1]:
            rho = math.log(s[m + 1] / s[m]) / math.log(s[m] / s[m - 1])
            orders.append(rho)
            if s[m + 1] > NOISE_FLOOR:
                final = rho
        else:
            orders.append(None)
    if final is None:
        raise ValueError("fewer than 3 usable entries: no decreasing window above the noise floor")
    return OrderEstimate(per_step_orders=tuple(orders), final_order=final, sequence_used=sequence_used)


def perturbed_roots(reference, size: float, seed: int) -> tuple[complex, ...]:
    """Each root moved by a relative `size` kick in a seeded random direction."""
    rng = random.Random(seed)
    out = []
    for r in reference:
        r = complex(r)
        direction = cmath.exp(2j * math.pi * rng.random())
        out.append(r + size * max(1.0, abs(r)) * direction)
    return tuple(out)


def error_history(
    p: Polynomial,
    method: MethodKind,
    reference,
    start,
    max_steps: int = 50,
) -> list[float]:
    """Per-iteration max matched error |e| while it strictly decreases.

    Stops at the first non-improving step (the rounding floor), once the
    error drops below noise scale, or at `max_steps`.  The truncation keeps
    floor chatter out of the order estimate.
    """
    rs = tuple(complex(r) for r in reference)
    scale = max(1.0, max(abs(r) for r in rs))
    z = tuple(complex(v) for v in start)
    errors = [match_roots(z, rs).max_error]
    for _ in range(max_steps):
        if errors[-1] < 1e-15 * scale:
            break
        z = step(method, p, z)
        err = match_roots(z, rs).max_error
        if not err < errors[-1]:
            break
        errors.append(err)
    return errors


def oracle_roots(p: Polynomial, tolerance: float = 1e-14) -> tuple[complex, ...]:
    """Reference roots for a polynomial without known zeros.

    Runs the plain correction method from circle points to (or as close as
    rounding allows to) the requested residual and returns the final vector.
    """
    from .initial import aberth_points

    config = SolverConfig(tolerance=tolerance, max_iterations=200)
    report = solve(p, MethodKind.WLM, aberth_points(p).points, config)
    if report.status not in (SolveStatus.CONVERGED, SolveStatus.MAX_ITERATIONS):
        raise RuntimeError(f"oracle solve failed: {report.status.value} ({report.detail})")
    return report.final
