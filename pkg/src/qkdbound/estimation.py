"""Reconstruct attack-overlap constraints from observed statistics.

The mismatched-basis probabilities determine re<e0|e1>, re<e2|e3> and
re<e0|e2> directly; unitarity gives re<e1|e3> = -re<e0|e2>; the
conjugate-basis error rate then pins an affine relation (slope exactly -1)
between re<e0|e3> and the one unobservable overlap re<e1|e2>, which
Cauchy-Schwarz confines to [-Q, Q].
"""

import math
from dataclasses import dataclass

from .entropy import check_probability
from .errors import DomainError, InconsistentStatisticsError, UnphysicalStatisticsError

#: slack added to every Cauchy-Schwarz screen to absorb float rounding
SCREEN_TOL = 1e-9


@dataclass(frozen=True)
class InnerProductEstimates:
    """Constraints on the attack overlaps implied by one statistics record."""

    re01: float
    re23: float
    re02: float
    re13: float
    re03_intercept: float
    re03_slope: float
    re12_interval: tuple

    def __post_init__(self):
        if self.re13 != -self.re02:
            raise DomainError("re13 must equal -re02 exactly")
        if self.re03_slope != -1.0:
            raise DomainError("re03 slope must be exactly -1")

    def re03_at(self, re12):
        """re<e0|e3> implied by a candidate re<e1|e2>."""
        return self.re03_intercept + self.re03_slope * re12


def estimate_inner_products(stats):
    """Overlap constraints recovered from one statistics record.

    Raises UnphysicalStatisticsError when a directly estimated overlap
    exceeds its Cauchy-Schwarz radius sqrt(Q(1-Q)); such statistics are
    produced by no attack with symmetric raw-key noise.
    """
    a = stats.alpha
    b = stats.beta
    q = stats.Q
    if q >= 1.0:
        raise DomainError("estimation requires Q < 1")
    radius = math.sqrt(q * (1.0 - q))
    re01 = (stats.p0a - a * a * (1.0 - q) - b * b * q) / (2.0 * a * b)
    re23 = (stats.p1a - a * a * q - b * b * (1.0 - q)) / (2.0 * a * b)
    re02 = (stats.pa0 - a * a * (1.0 - q) - b * b * q) / (2.0 * a * b)
    for name, value in (("re01", re01), ("re23", re23), ("re02", re02)):
        if abs(value) > radius + SCREEN_TOL:
            raise UnphysicalStatisticsError(
                f"{name} = {value!r} exceeds its Cauchy-Schwarz radius "
                f"sqrt(Q(1-Q)) = {radius!r}")
    a2b2 = (a * b) ** 2
    # alpha^4 + beta^4 = 1 - 2 alpha^2 beta^2
    intercept = (
        2.0 * a2b2 * (1.0 - q)
        + (1.0 - 2.0 * a2b2) * q
        - stats.QA
        + 2.0 * a * b * (b * b - a * a) * re02
        - 2.0 * a ** 3 * b * re01
        - 2.0 * a * b ** 3 * re23
    ) / (2.0 * a2b2)
    return InnerProductEstimates(
        re01=re01,
        re23=re23,
        re02=re02,
        re13=-re02,
        re03_intercept=intercept,
        re03_slope=-1.0,
        re12_interval=(-q, q),
    )


def feasible_re12_set(estimates, Q):
    """Subset of [-Q, Q] whose implied re<e0|e3> stays physical.

    Physical means |re03| <= (1-Q) + SCREEN_TOL (Cauchy-Schwarz with
    |e0|^2 = |e3|^2 = 1-Q).  Because re03 is affine in re12 with slope -1
    the subset is one closed interval; an empty subset means no collective
    attack reproduces the observations and raises
    InconsistentStatisticsError.  Infeasible values are excluded, never
    clamped: clamping re03 would overstate the key rate.
    """
    q = check_probability(Q, "Q")
    c = estimates.re03_intercept
    radius = (1.0 - q) + SCREEN_TOL
    lo = max(-q, c - radius)
    hi = min(q, c + radius)
    if lo > hi:
        raise InconsistentStatisticsError(
            f"no re12 in [-{q}, {q}] keeps |re03| within 1-Q = {1.0 - q!r}; "
            "no collective attack reproduces these statistics")
    return [(lo, hi)]
