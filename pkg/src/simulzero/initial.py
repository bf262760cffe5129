"""Starting points: n points on a circle of Henrici radius around the
coefficient centroid -a_1/n, phased so no point starts on a likely root ray.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .poly import Polynomial

__all__ = ["InitialPoints", "henrici_radius", "aberth_points"]


@dataclass(frozen=True)
class InitialPoints:
    points: tuple[complex, ...]
    radius: float
    center: complex


def henrici_radius(p: Polynomial) -> float:
    """R = 2 max_k |a_k|^(1/k); the disk |z| < R contains every zero of p.

    Zero only when every coefficient is zero (a pure power z^n).
    """
    return 2.0 * max(abs(a) ** (1.0 / k) for k, a in enumerate(p.coefficients, start=1))


def aberth_points(p: Polynomial) -> InitialPoints:
    """Equispaced circle points z_k = -a_1/n + R exp(i pi/n (2k - 3/2)), k = 1..n."""
    n = p.degree
    radius = henrici_radius(p)
    if radius == 0.0:
        raise ValueError(
            "all coefficients are zero (pure power): circle radius is 0, "
            "supply custom initial points instead"
        )
    center = -p.coefficients[0] / n
    points = tuple(
        center + radius * cmath.exp(1j * math.pi / n * (2 * k - 1.5)) for k in range(1, n + 1)
    )
    return InitialPoints(points=points, radius=radius, center=center)
