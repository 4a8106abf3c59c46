"""Observed-statistics records and named noise scenarios.

One statistics record holds everything the legitimate parties can measure
about the channel: the raw-key basis error rate Q, the conjugate-basis
error rate QA, and the three mismatched-basis probabilities p0a, p1a, pa0
(prepare x, measure y, bases differing).  The scenario generators produce
such records for the depolarizing channel and four named variations, as
functions of Q and the public state parameter alpha.
"""

import json
import math
from dataclasses import asdict, dataclass, replace

from .entropy import check_probability
from .errors import DomainError, ScenarioInfeasibleError, StatisticsSchemaError

SCENARIO_NAMES = (
    "depolarizing",
    "qa-double",
    "qa-half",
    "re02-extremal",
    "re23-extremal",
)

SCENARIO_DESCRIPTIONS = {
    "depolarizing": "isotropic noise: QA = Q, mismatched statistics at their symmetric values",
    "qa-double": "conjugate-basis error doubled: QA = 2Q",
    "qa-half": "conjugate-basis error halved: QA = Q/2",
    "re02-extremal": "pa0 lowered until re<e0|e2> = -sqrt(Q(1-Q)), its most negative value",
    "re23-extremal": "p1a raised until re<e2|e3> = +sqrt(Q(1-Q)), its largest value",
}

_STATS_FIELDS = ("alpha", "Q", "QA", "p0a", "p1a", "pa0")


def check_alpha(alpha):
    """Validate the public state parameter; must lie strictly inside (0, 1)."""
    a = float(alpha)
    if not 0.0 < a < 1.0:
        raise DomainError(f"alpha = {alpha!r} outside the open interval (0, 1)")
    return a


@dataclass(frozen=True)
class ObservedStatistics:
    """Channel statistics observable by the legitimate parties."""

    alpha: float
    Q: float
    QA: float
    p0a: float
    p1a: float
    pa0: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        for name in _STATS_FIELDS[1:]:
            object.__setattr__(self, name, check_probability(getattr(self, name), name))

    @property
    def beta(self):
        return math.sqrt(1.0 - self.alpha * self.alpha)

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, payload):
        if not isinstance(payload, dict):
            raise StatisticsSchemaError("statistics document must be a JSON object")
        missing = [k for k in _STATS_FIELDS if k not in payload]
        if missing:
            raise StatisticsSchemaError(f"missing field(s): {', '.join(missing)}")
        unknown = [k for k in payload if k not in _STATS_FIELDS]
        if unknown:
            raise StatisticsSchemaError(f"unknown field(s): {', '.join(sorted(unknown))}")
        values = {}
        for k in _STATS_FIELDS:
            v = payload[k]
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise StatisticsSchemaError(f"field {k} must be a number, got {v!r}")
            values[k] = float(v)
        return cls(**values)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def depolarizing_statistics(Q, alpha):
    """Statistics induced by the depolarizing channel rho -> (1-2Q) rho + Q I."""
    q = check_probability(Q, "Q")
    a = check_alpha(alpha)
    if q > 0.5:
        raise DomainError(f"depolarizing parameter Q = {q!r} exceeds 1/2")
    a2 = a * a
    b2 = 1.0 - a2
    keep = 1.0 - 2.0 * q
    return ObservedStatistics(
        alpha=a,
        Q=q,
        QA=q,
        p0a=keep * a2 + q,
        p1a=keep * b2 + q,
        pa0=keep * a2 + q,
    )


@dataclass(frozen=True)
class ScenarioSpec:
    """A named noise scenario at one (Q, alpha) operating point."""

    name: str
    Q: float
    alpha: float

    def __post_init__(self):
        if self.name not in SCENARIO_NAMES:
            raise DomainError(
                f"unknown scenario {self.name!r}; valid: {', '.join(SCENARIO_NAMES)}")
        object.__setattr__(self, "Q", check_probability(self.Q, "Q"))
        if self.Q > 0.5:
            raise DomainError(f"scenario Q = {self.Q!r} exceeds 1/2")
        object.__setattr__(self, "alpha", check_alpha(self.alpha))


def _scenario_probability(name, value):
    # out-of-range values mean the scenario describes no channel at these
    # parameters; clamping would silently swap in a different channel
    if not 0.0 <= value <= 1.0:
        raise ScenarioInfeasibleError(
            f"{name} = {value!r} leaves [0, 1]; scenario infeasible at these parameters")
    return value


def scenario_statistics(spec):
    """Statistics for a named scenario: depolarizing plus one targeted override."""
    base = depolarizing_statistics(spec.Q, spec.alpha)
    if spec.name == "depolarizing":
        return base
    q = base.Q
    a = base.alpha
    b = base.beta
    if spec.name == "qa-double":
        return replace(base, QA=_scenario_probability("QA", 2.0 * q))
    if spec.name == "qa-half":
        return replace(base, QA=_scenario_probability("QA", 0.5 * q))
    cross = 2.0 * a * b * math.sqrt(q * (1.0 - q))
    if spec.name == "re02-extremal":
        pa0 = a * a * (1.0 - q) + b * b * q - cross
        return replace(base, pa0=_scenario_probability("pa0", pa0))
    # re23-extremal
    p1a = a * a * q + b * b * (1.0 - q) + cross
    return replace(base, p1a=_scenario_probability("p1a", p1a))
