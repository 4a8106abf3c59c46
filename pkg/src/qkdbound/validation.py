"""Random symmetric attacks and statistical certification of the bound.

Samples collective attacks with symmetric raw-key noise, compares the
key-rate bound computed from each attack's induced statistics against the
attack's exact conditional entropy, and reports the slack distribution.
Per-trial RNG streams derive deterministically from (seed, trial index),
so serial and parallel runs produce identical reports.
"""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .attacks import AttackOperator, exact_conditional_entropy, induced_statistics
from .entropy import binary_entropy, check_probability
from .errors import DomainError, QkdBoundError
from .keyrate import keyrate_bound

#: slack below this counts as a violation of the lower-bound property;
#: the margin absorbs eigensolver and optimizer noise
SLACK_TOL = -1e-9


@dataclass(frozen=True)
class ValidationReport:
    """Aggregate outcome of one validation run."""

    trials: int
    violations: int
    max_gap: float
    min_slack: float
    seed: int
    alpha_values: tuple
    dim: int
    q_range: tuple


def trial_rng(seed, index):
    """Independent deterministic generator for one trial of one run."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(index)]))


def _random_unit(dim, rng):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    norm = np.linalg.norm(v)
    while norm < 1e-12:
        v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        norm = np.linalg.norm(v)
    return v / norm


def sample_symmetric_attack(Q, dim, rng):
    """Random attack with |e0|^2 = |e3|^2 = 1-Q and |e1|^2 = |e2|^2 = Q.

    The component of e2 along the e0 direction is fixed so that
    <e0|e2> = -<e1|e3> holds exactly; the orthogonal remainder points in a
    uniformly random direction, so the sampler reaches a full-measure
    subset of the symmetric-attack manifold with no rejection step.
    rng may be a numpy Generator or an integer seed.
    """
    q = check_probability(Q, "Q")
    d = int(dim)
    if not 2 <= d <= 4:
        raise DomainError(f"sampler needs ancilla dimension 2..4, got {dim!r}")
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    f0 = _random_unit(d, rng)
    f3 = _random_unit(d, rng)
    f1 = _random_unit(d, rng)
    g = _random_unit(d, rng)
    g = g - f0 * np.vdot(f0, g)
    norm = np.linalg.norm(g)
    while norm < 1e-9:
        g = _random_unit(d, rng)
        g = g - f0 * np.vdot(f0, g)
        norm = np.linalg.norm(g)
    g = g / norm
    mu = -np.vdot(f1, f3)  # forces <e0|e2> = -<e1|e3>
    nu = math.sqrt(max(0.0, 1.0 - abs(mu) ** 2))
    return AttackOperator(
        e0=math.sqrt(1.0 - q) * f0,
        e1=math.sqrt(q) * f1,
        e2=math.sqrt(q) * (mu * f0 + nu * g),
        e3=math.sqrt(1.0 - q) * f3,
    )


def trial_attack(seed, index, q_range, dim):
    """The (Q, attack) pair that trial `index` of a validation run draws."""
    rng = trial_rng(seed, index)
    q = float(rng.uniform(q_range[0], q_range[1]))
    return q, sample_symmetric_attack(q, dim, rng)


def _dump_violation(dump_dir, index, alpha, attack, stats, bound_rate, exact_rate):
    os.makedirs(dump_dir, exist_ok=True)
    path = os.path.join(dump_dir, f"violation_trial{index:06d}_alpha{alpha:.6f}.json")
    import json

    payload = {
        "trial": index,
        "alpha": alpha,
        "attack": attack.to_payload(),
        "statistics": stats.to_dict(),
        "bound_rate": bound_rate,
        "exact_rate": exact_rate,
        "slack": exact_rate - bound_rate,
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, sort_keys=True, indent=2)
    return path


def run_validation(trials, q_range=(0.0, 0.25), alphas=(math.sqrt(0.5),), dim=4,
                   seed=0, dump_dir=None, workers=1, slack_tol=SLACK_TOL):
    """Sample attacks, compare bound against exact rate, aggregate the slack.

    For each trial: draw Q uniformly from q_range, draw a symmetric attack,
    then for every alpha compare keyrate_bound(induced statistics) with
    exact_conditional_entropy - h(Q).  Slack below slack_tol counts as a
    violation and, when dump_dir is set, the offending attack and
    statistics are written there as JSON.  Deterministic given (seed,
    parameters), with or without workers.
    """
    trials = int(trials)
    if trials < 1:
        raise DomainError("trials must be >= 1")
    q_lo = check_probability(q_range[0], "q_min")
    q_hi = check_probability(q_range[1], "q_max")
    if q_lo > q_hi:
        raise DomainError(f"empty Q range [{q_lo}, {q_hi}]")
    alpha_values = tuple(float(a) for a in alphas)
    if not alpha_values:
        raise DomainError("need at least one alpha value")
    seed = int(seed)
    if seed < 0:
        raise DomainError("seed must be non-negative")

    def one_trial(index):
        q, attack = trial_attack(seed, index, (q_lo, q_hi), dim)
        exact_sae = exact_conditional_entropy(attack)
        slacks = []
        for alpha in alpha_values:
            stats = induced_statistics(attack, alpha)
            try:
                bound = keyrate_bound(stats)
            except QkdBoundError as exc:
                # the sampler must only emit consistent attacks; reaching
                # this branch is an implementation bug, not an adversary
                if dump_dir is not None:
                    _dump_violation(dump_dir, index, alpha, attack, stats,
                                    float("nan"), float("nan"))
                raise RuntimeError(
                    f"estimator rejected sampler output at trial {index}, "
                    f"alpha {alpha}: {exc}; attack = {attack.to_json()}") from exc
            exact_rate = exact_sae - binary_entropy(stats.Q)
            slack = exact_rate - bound.rate
            if slack < slack_tol and dump_dir is not None:
                _dump_violation(dump_dir, index, alpha, attack, stats,
                                bound.rate, exact_rate)
            slacks.append(slack)
        return slacks

    if workers and int(workers) > 1:
        with ThreadPoolExecutor(max_workers=int(workers)) as pool:
            per_trial = list(pool.map(one_trial, range(trials)))
    else:
        per_trial = [one_trial(i) for i in range(trials)]

    slacks = [s for trial in per_trial for s in trial]
    return ValidationReport(
        trials=trials,
        violations=sum(1 for s in slacks if s < slack_tol),
        max_gap=max(slacks),
        min_slack=min(slacks),
        seed=seed,
        alpha_values=alpha_values,
        dim=int(dim),
        q_range=(q_lo, q_hi),
    )
