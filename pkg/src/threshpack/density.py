"""Closed-form relations between the generator threshold ``d`` and edge density.

For ``n`` vertices with weights drawn uniformly from [0, 1] and the rule
"edge iff (p_i + p_j) / 2 <= d", the expected edge density is a piecewise
quadratic in ``n * d``.  Each density/threshold function has two evaluation
modes: the finite-``n`` formula (default) and the ``n -> inf`` limit
(``asymptotic=True``), where the density is ``2 d^2`` below one half and
``1 - 2 (1 - d)^2`` above.

At ``d = 0.5`` (or ``delta = 0.5``) the lower branch is used.  The finite-n
branches do not meet there: the upper branch is smaller by ``1 / (n - 1)``.
"""

from __future__ import annotations

import math

__all__ = [
    "expected_density_from_threshold",
    "threshold_from_density",
    "approx_threshold_from_density",
    "expected_clique_size",
    "expected_universal_count",
    "expected_bppc_lower_bound",
    "density_branches",
]


def _check_unit(name: str, x: float) -> None:
    if not (0.0 <= x <= 1.0):
        raise ValueError(f"{name} must lie in [0, 1], got {x!r}")


def _check_n(n: int | None) -> int:
    if n is None or n < 2:
        raise ValueError(f"n must be at least 2, got {n!r}")
    return int(n)


def density_branches(n: int, d: float) -> tuple[float, float]:
    """Unclamped (lower, upper) branch values of the finite-n density formula at ``d``."""
    n = _check_n(n)
    pairs = n * (n - 1)
    nd = n * d
    lower = (2.0 * nd * nd - nd) / pairs
    q = 1.0 - d
    upper = (pairs - 2.0 * n * n * q * q - n * q) / pairs
    return lower, upper


def expected_density_from_threshold(n: int | None, d: float, asymptotic: bool = False) -> float:
    """Expected edge density of a random threshold graph generated with threshold ``d``.

    >>> expected_density_from_threshold(100, 0.5)
    0.5
    >>> round(expected_density_from_threshold(None, 0.3, asymptotic=True), 12)
    0.18
    """
    _check_unit("d", d)
    if asymptotic:
        value = 2.0 * d * d if d <= 0.5 else 1.0 - 2.0 * (1.0 - d) ** 2
    else:
        lower, upper = density_branches(n, d)
        value = lower if d <= 0.5 else upper
    return min(1.0, max(0.0, value))


def threshold_from_density(n: int | None, delta: float, asymptotic: bool = False) -> float:
    """Threshold ``d`` whose expected density (finite-n formula) equals ``delta``.

    Inverse of :func:`expected_density_from_threshold` branch by branch.  With
    ``asymptotic=True`` this is :func:`approx_threshold_from_density`.
    """
    _check_unit("delta", delta)
    if asymptotic:
        return approx_threshold_from_density(delta)
    n = _check_n(n)
    pairs = n * (n - 1)
    if delta <= 0.5:
        d = (1.0 + math.sqrt(1.0 + 8.0 * pairs * delta)) / (4.0 * n)
    else:
        d = 1.0 + (1.0 - math.sqrt(1.0 + 8.0 * pairs * (1.0 - delta))) / (4.0 * n)
    return min(1.0, max(0.0, d))


def approx_threshold_from_density(delta: float) -> float:
    _check_unit("delta", delta)
    if delta <= 0.5:
        return math.sqrt(delta / 2.0)
    return 1.0 - math.sqrt((1.0 - delta) / 2.0)


def expected_clique_size(n: int, d: float) -> float:
    """Expected maximum clique size ``n * d`` (not rounded)."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_unit("d", d)
    return n * d


def expected_universal_count(n: int, d: float) -> float:
    """Expected number of vertices adjacent to every other vertex."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_unit("d", d)
    return 0.0 if d <= 0.5 else n * (2.0 * d - 1.0)


def expected_bppc_lower_bound(n: int, d: float) -> float:
    """Expected clique-based lower bound ``g + (n - g) / 2`` on the optimal bin count.

    Only defined for ``d >= 0.5``; the residual instance on the non-universal
    vertices has a clique of expected size half its order.
    """
    if d < 0.5:
        raise ValueError(f"lower-bound formula requires d >= 0.5, got {d!r}")
    g = expected_universal_count(n, d)
    return g + (n - g) / 2.0
