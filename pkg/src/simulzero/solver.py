"""Drive a chosen method from initial points to the stopping condition
max_k |P(z_k)| < tolerance, recording the residual history and diagnosing
failures instead of raising them.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass, field
from enum import Enum

from .methods import BreakdownError, CollisionError, COLLISION_FACTOR, FREEZE_FACTOR, MethodKind, step
from .poly import Polynomial

__all__ = ["SolveStatus", "SolverConfig", "SolveReport", "residual_max", "solve"]

_JITTER_SEED = 0x5EED
_JITTER_SIZE = 1e-8


class SolveStatus(Enum):
    CONVERGED = "Converged"
    MAX_ITERATIONS = "MaxIterations"
    COLLISION = "Collision"
    BREAKDOWN = "Breakdown"
    DIVERGED = "Diverged"


@dataclass(frozen=True)
class SolverConfig:
    """Iteration knobs.

    collision_threshold and freeze_threshold are relative factors; the
    effective thresholds scale with (1 + max|z_i|) and max(1, |a_n|)
    respectively (see methods module).
    """

    tolerance: float = 1e-10
    max_iterations: int = 100
    collision_threshold: float = COLLISION_FACTOR
    freeze_threshold: float = FREEZE_FACTOR
    divergence_ceiling: float = 1e12
    jitter_on_collision: bool = False

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not self.divergence_ceiling > self.tolerance:
            raise ValueError("divergence_ceiling must exceed tolerance")


@dataclass(frozen=True)
class SolveReport:
    status: SolveStatus
    iterations: int
    final: tuple[complex, ...]
    residual_history: tuple[float, ...]  # entry 0 is the initial vector's residual
    per_root_residuals: tuple[float, ...]
    detail: str = field(default="", compare=False)

    @property
    def converged(self) -> bool:
        return self.status is SolveStatus.CONVERGED

    @property
    def final_residual(self) -> float:
        return self.residual_history[-1]


def residual_max(p: Polynomial, z) -> float:
    """max_k |P(z_k)|, the quantity driving the stopping rule."""
    return max(abs(p.eval(v)) for v in z)


def _per_root(p: Polynomial, z: tuple[complex, ...]) -> tuple[float, ...]:
    return tuple(abs(p.eval(v)) for v in z)


def solve(
    p: Polynomial,
    method: MethodKind,
    init,
    config: SolverConfig = SolverConfig(),
) -> SolveReport:
    """Iterate `step` until max_k |P(z_k)| < tolerance or a failure is seen.

    Failures (iteration cap, collision, breakdown, escape past the
    divergence ceiling) are carried in the report's status, never raised.
    `iterations` counts completed steps; the residual history also records
    the initial vector, so its length is iterations + 1.
    """
    z = tuple(complex(v) for v in init)
    if len(z) != p.degree:
        raise ValueError(f"{len(z)} initial points for a degree-{p.degree} polynomial")
    history = [residual_max(p, z)]
    rng = random.Random(_JITTER_SEED) if config.jitter_on_collision else None

    def report(status, detail=""):
        return SolveReport(
            status=status,
            iterations=len(history) - 1,
            final=z,
            residual_history=tuple(history),
            per_root_residuals=_per_root(p, z),
            detail=detail,
        )

    if history[0] < config.tolerance:
        return report(SolveStatus.CONVERGED)

    for _ in range(config.max_iterations):
        try:
            z_new = _step_with_jitter(p, method, z, config, rng)
        except CollisionError as err:
            return report(SolveStatus.COLLISION, str(err))
        except BreakdownError as err:
            return report(SolveStatus.BREAKDOWN, str(err))
        z = z_new
        history.append(residual_max(p, z))
        if any(abs(v) > config.divergence_ceiling for v in z):
            return report(SolveStatus.DIVERGED)
        if history[-1] < config.tolerance:
            return report(SolveStatus.CONVERGED)
    return report(SolveStatus.MAX_ITERATIONS)


def _step_with_jitter(p, method, z, config, rng):
    try:
        return step(method, p, z, config.collision_threshold, config.freeze_threshold)
    except CollisionError:
        if rng is None:
            raise
        # retry once from a slightly perturbed vector
        jittered = tuple(
            v + _JITTER_SIZE * (1.0 + abs(v)) * _unit(rng) for v in z
        )
        return step(method, p, jittered, config.collision_threshold, config.freeze_threshold)


def _unit(rng: random.Random) -> complex:
    return cmath.exp(2j * cmath.pi * rng.random())
