"""Key-rate lower bound evaluated from observed statistics.

The bound is  1 - (1-Q) h(lambda_rho) - Q h(lambda_sigma) - h(Q),
minimized over the unobservable overlap re<e1|e2> inside its feasible
interval.  lambda_rho and lambda_sigma are the relaxed (real-part) top
eigenvalues of the adversary's conditional ancilla states on error-free
and error rounds.  Minimization runs a dense grid over the feasible
interval followed by golden-section refinement of the best grid cell;
the objective is one-dimensional, cheap, and smooth away from the two
absolute-value kinks, so this is robust without assuming unimodality.

Every function is pure; sweeping a Q grid may evaluate bounds for
independent grid points concurrently from multiple threads.
"""

import math
from dataclasses import dataclass

import numpy as np

from .entropy import binary_entropy, check_probability
from .errors import DomainError, NonPhysicalStateError
from .estimation import SCREEN_TOL, estimate_inner_products, feasible_re12_set

GRID_POINTS = 2001
REFINE_TOL = 1e-12
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def lambda_rho(re03, Q):
    """Relaxed top eigenvalue 1/2 + |re03| / (2(1-Q)) of the error-free branch."""
    q = check_probability(Q, "Q")
    if q >= 1.0:
        raise DomainError("lambda_rho requires Q < 1")
    if abs(re03) > (1.0 - q) + SCREEN_TOL:
        raise NonPhysicalStateError(
            f"|re03| = {abs(re03)!r} exceeds 1-Q = {1.0 - q!r}")
    return min(1.0, 0.5 + abs(re03) / (2.0 * (1.0 - q)))


def lambda_sigma(re12, Q):
    """Relaxed top eigenvalue 1/2 + |re12| / (2Q) of the error branch (Q > 0)."""
    q = check_probability(Q, "Q")
    if q <= 0.0:
        raise DomainError(
            "lambda_sigma is undefined at Q = 0; the error branch carries no weight")
    if abs(re12) > q + SCREEN_TOL:
        raise NonPhysicalStateError(f"|re12| = {abs(re12)!r} exceeds Q = {q!r}")
    return min(1.0, 0.5 + abs(re12) / (2.0 * q))


def bb84_reference_rate(Q):
    """Four-state depolarizing reference rate 1 - 2 h(Q)."""
    q = check_probability(Q, "Q")
    if q > 0.5:
        raise DomainError(f"Q = {q!r} exceeds 1/2")
    return 1.0 - 2.0 * binary_entropy(q)


@dataclass(frozen=True)
class KeyRateResult:
    """Outcome of the key-rate minimization for one statistics record.

    rate is signed: negative values mean no secure key can be distilled,
    and callers decide how to present that.
    """

    rate: float
    Q: float
    minimizing_re12: float
    re03_at_min: float
    lambda_rho: float
    lambda_sigma: float
    feasible_interval: tuple


def _golden_section_min(f, a, b, tol=REFINE_TOL):
    while (b - a) > tol:
        c = b - (b - a) * _INVPHI
        d = a + (b - a) * _INVPHI
        if f(c) < f(d):
            b = d
        else:
            a = c
    return 0.5 * (a + b)


def keyrate_bound(stats):
    """Lower bound on the asymptotic secret-key rate for these statistics.

    Minimizes the rate expression over every re<e1|e2> consistent with the
    observations.  At Q = 0 the error branch has zero weight and drops out
    entirely, and re12 = 0 is forced.
    """
    estimates = estimate_inner_products(stats)
    q = stats.Q
    (lo, hi), = feasible_re12_set(estimates, q)
    c = estimates.re03_intercept

    if q == 0.0:
        lam_r = lambda_rho(c, 0.0)
        return KeyRateResult(
            rate=1.0 - binary_entropy(lam_r),
            Q=0.0,
            minimizing_re12=0.0,
            re03_at_min=c,
            lambda_rho=lam_r,
            lambda_sigma=1.0,  # zero-weight branch; any value in [1/2, 1] works
            feasible_interval=(lo, hi),
        )

    h_q = binary_entropy(q)

    def objective(re12):
        return (1.0
                - (1.0 - q) * binary_entropy(lambda_rho(c - re12, q))
                - q * binary_entropy(lambda_sigma(re12, q))
                - h_q)

    grid = np.linspace(lo, hi, GRID_POINTS)
    lam_r_grid = np.minimum(1.0, 0.5 + np.abs(c - grid) / (2.0 * (1.0 - q)))
    lam_s_grid = np.minimum(1.0, 0.5 + np.abs(grid) / (2.0 * q))
    values = (1.0 - (1.0 - q) * binary_entropy(lam_r_grid)
              - q * binary_entropy(lam_s_grid) - h_q)
    best = int(np.argmin(values))
    bracket_lo = float(grid[max(best - 1, 0)])
    bracket_hi = float(grid[min(best + 1, GRID_POINTS - 1)])
    refined = _golden_section_min(objective, bracket_lo, bracket_hi)
    x_min = min((float(grid[best]), refined), key=objective)
    lam_r = lambda_rho(c - x_min, q)
    lam_s = lambda_sigma(x_min, q)
    return KeyRateResult(
        rate=objective(x_min),
        Q=q,
        minimizing_re12=x_min,
        re03_at_min=c - x_min,
        lambda_rho=lam_r,
        lambda_sigma=lam_s,
        feasible_interval=(lo, hi),
    )
