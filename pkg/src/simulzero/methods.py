"""The six simultaneous one-step iteration maps and their shared correction.

Every method updates all n approximations at once.  The update of component
i couples the whole current vector through the correction

    W_i = P(z_i) / prod_{j != i} (z_i - z_j),

which vanishes exactly when z_i is a zero of P.  The maps:

    wlm  z^ = z - W
    dfm  z^ = z - W / (1 - P(z - W)/P(z))
    nwm  z^ = z - P(z) / P'(z - W/2)
    m1   z^ = z - 2 P(z) / (P'(z) + P'(z - W))
    m2   z^ = z - 2 P(z) / (P'(z) + P'(z - W / (1 - P(z - W)/P(z))))
    m3   z^ = z - P(z) / P'(z - (1/2) W / (1 - P(z - W)/P(z)))

(component index suppressed).  Steps are total-step (Jacobi): every new
component is computed from the old vector only, so one step is a pure
function of (method, polynomial, vector) and components commute.
"""

from __future__ import annotations

import cmath
from enum import Enum

from .poly import Polynomial

__all__ = [
    "MethodKind",
    "CollisionError",
    "BreakdownError",
    "COLLISION_FACTOR",
    "FREEZE_FACTOR",
    "DENOMINATOR_FLOOR",
    "weierstrass_corrections",
    "step",
    "lagrange_identity_residual",
]

# relative collision threshold: points closer than this times (1 + max|z|)
# make the correction denominator numerically meaningless
COLLISION_FACTOR = 1e-12
# relative freeze threshold: components with |P(z_i)| below this times
# max(1, |a_n|) are held fixed (several maps divide by P(z_i))
FREEZE_FACTOR = 1e-13
# absolute guard on every remaining denominator; a hit is a reported
# breakdown, not a silent skip
DENOMINATOR_FLOOR = 1e-290


class MethodKind(Enum):
    WLM = "wlm"
    DFM = "dfm"
    NWM = "nwm"
    METHOD1 = "m1"
    METHOD2 = "m2"
    METHOD3 = "m3"

    @classmethod
    def from_name(cls, name: str) -> "MethodKind":
        try:
            return cls(name.lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown method {name!r} (expected one of: {valid})") from None


class CollisionError(RuntimeError):
    """Two approximations closer than the collision threshold."""

    def __init__(self, i: int, j: int, distance: float):
        super().__init__(f"components {i} and {j} collide (distance {distance:.3e})")
        self.i = i
        self.j = j
        self.distance = distance


class BreakdownError(RuntimeError):
    """A denominator vanished (or an intermediate left the finite range)."""

    def __init__(self, component: int, expression: str):
        super().__init__(f"component {component}: {expression} broke down")
        self.component = component
        self.expression = expression


def _check_vector(p: Polynomial, z: tuple[complex, ...], collision_threshold: float) -> float:
    """Validate shape, finiteness and pairwise separation; return the scale."""
    if len(z) != p.degree:
        raise ValueError(f"vector has {len(z)} components, polynomial degree is {p.degree}")
    for i, v in enumerate(z):
        if not cmath.isfinite(v):
            raise BreakdownError(i, f"non-finite component {v!r}")
    eps_c = collision_threshold * (1.0 + max(abs(v) for v in z))
    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            d = abs(z[i] - z[j])
            if d < eps_c:
                raise CollisionError(i, j, d)
    return eps_c


def weierstrass_corrections(
    p: Polynomial,
    z,
    collision_threshold: float = COLLISION_FACTOR,
) -> list[complex]:
    """[W_1, ..., W_n] for the current vector; W_i = 0 iff P(z_i) = 0."""
    zt = tuple(complex(v) for v in z)
    _check_vector(p, zt, collision_threshold)
    return _corrections(p, zt, [p.eval(v) for v in zt])


def _corrections(p: Polynomial, z: tuple[complex, ...], values: list[complex]) -> list[complex]:
    out = []
    for i, zi in enumerate(z):
        prod = complex(1.0)
        for j, zj in enumerate(z):
            if j != i:
                prod *= zi - zj
        out.append(values[i] / prod)
    return out


def _derivative_at(p: Polynomial, z: complex) -> complex:
    return p.eval_with_derivatives(z)[1]


def step(
    method: MethodKind,
    p: Polynomial,
    z,
    collision_threshold: float = COLLISION_FACTOR,
    freeze_threshold: float = FREEZE_FACTOR,
) -> tuple[complex, ...]:
    """One total-step update of the whole vector under the chosen method.

    Components already converged (|P(z_i)| below the freeze threshold) are
    passed through unchanged; they still enter the other components'
    correction products.  Raises CollisionError when two components are too
    close to separate the correction denominators, and BreakdownError when
    a non-converged component hits a vanishing denominator or a non-finite
    intermediate (naming the component and sub-expression).
    """
    zt = tuple(complex(v) for v in z)
    _check_vector(p, zt, collision_threshold)
    values = [p.eval(v) for v in zt]
    corrections = _corrections(p, zt, values)
    tau_f = freeze_threshold * max(1.0, abs(p.coefficients[-1]))

    out = []
    for i, zi in enumerate(zt):
        pv = values[i]
        if abs(pv) < tau_f:
            out.append(zi)  # converged: hold fixed
            continue
        wi = corrections[i]

        if method is MethodKind.WLM:
            new = zi - wi

        elif method is MethodKind.NWM:
            d = _derivative_at(p, zi - wi / 2.0)
            if abs(d) < DENOMINATOR_FLOOR:
                raise BreakdownError(i, "P'(z - W/2)")
            new = zi - pv / d

        elif method is MethodKind.METHOD1:
            d = _derivative_at(p, zi) + _derivative_at(p, zi - wi)
            if abs(d) < DENOMINATOR_FLOOR:
                raise BreakdownError(i, "P'(z) + P'(z - W)")
            new = zi - 2.0 * pv / d

        else:
            # dfm, m2, m3 share the derivative-free inner ratio
            if abs(pv) < DENOMINATOR_FLOOR:
                raise BreakdownError(i, "P(z)")
            inner = 1.0 - p.eval(zi - wi) / pv
            if abs(inner) < DENOMINATOR_FLOOR:
                raise BreakdownError(i, "1 - P(z - W)/P(z)")

            if method is MethodKind.DFM:
                new = zi - wi / inner
            elif method is MethodKind.METHOD2:
                d = _derivative_at(p, zi) + _derivative_at(p, zi - wi / inner)
                if abs(d) < DENOMINATOR_FLOOR:
                    raise BreakdownError(i, "P'(z) + P'(z - W/(1 - P(z - W)/P(z)))")
                new = zi - 2.0 * pv / d
            elif method is MethodKind.METHOD3:
                d = _derivative_at(p, zi - 0.5 * wi / inner)
                if abs(d) < DENOMINATOR_FLOOR:
                    raise BreakdownError(i, "P'(z - (1/2) W/(1 - P(z - W)/P(z)))")
                new = zi - pv / d
            else:
                raise ValueError(f"unhandled method {method!r}")

        if not cmath.isfinite(new):
            raise BreakdownError(i, "non-finite update")
        out.append(new)
    return tuple(out)


def lagrange_identity_residual(p: Polynomial, z, t: complex) -> float:
    """Relative mismatch of P(t) against its correction-based product form.

    For pairwise-distinct z and any t off the z_j,

        P(t) = (1 + sum_j W_j/(t - z_j)) * prod_j (t - z_j)

    holds exactly in exact arithmetic; the returned value
    |left - right| / max(1, |left|) measures only rounding.
    """
    zt = tuple(complex(v) for v in z)
    t = complex(t)
    eps_c = _check_vector(p, zt, COLLISION_FACTOR)
    for j, zj in enumerate(zt):
        if abs(t - zj) < max(eps_c, COLLISION_FACTOR * (1.0 + abs(t))):
            raise CollisionError(j, j, abs(t - zj))
    corrections = _corrections(p, zt, [p.eval(v) for v in zt])
    prod = complex(1.0)
    total = complex(1.0)
    for zj, wj in zip(zt, corrections):
        prod *= t - zj
        total += wj / (t - zj)
    left = p.eval(t)
    right = total * prod
    return abs(left - right) / max(1.0, abs(left))
