"""Collective-attack model: ancilla vectors, induced statistics, exact entropy.

One round of a collective attack is described by four unnormalized ancilla
vectors e0..e3:  the interaction maps |0, blank> to |0, e0> + |1, e1> and
|1, blank> to |0, e2> + |1, e3>.  Unitarity pins the column norms and the
column overlap; everything the legitimate parties can observe, and the
exact conditional entropy of the adversary's ancilla, follow from the four
vectors.  Operators are immutable after construction and all operations
are pure.
"""

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

from .entropy import check_probability, von_neumann_entropy
from .errors import AsymmetricAttackError, DomainError, UnitarityError
from .scenarios import ObservedStatistics, check_alpha

#: construction tolerance for the isometry constraints; violations are hard
#: errors because a non-unitary attack invalidates every downstream claim
UNITARITY_TOL = 1e-9

_VECTOR_NAMES = ("e0", "e1", "e2", "e3")


def _norm2(v):
    return float(np.vdot(v, v).real)


def _as_vector(value, dim, name):
    arr = np.array(value, dtype=complex).reshape(-1)
    if arr.shape != (dim,):
        raise DomainError(f"{name} must have length {dim}, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class AttackOperator:
    """Four ancilla vectors defining one round of a collective attack."""

    e0: np.ndarray
    e1: np.ndarray
    e2: np.ndarray
    e3: np.ndarray

    def __post_init__(self):
        dim = np.asarray(self.e0).size
        if not 1 <= dim <= 4:
            raise DomainError(f"ancilla dimension must be 1..4, got {dim}")
        for name in _VECTOR_NAMES:
            object.__setattr__(self, name, _as_vector(getattr(self, name), dim, name))
        col0 = _norm2(self.e0) + _norm2(self.e1)
        col1 = _norm2(self.e2) + _norm2(self.e3)
        overlap = complex(np.vdot(self.e0, self.e2) + np.vdot(self.e1, self.e3))
        if abs(col0 - 1.0) > UNITARITY_TOL:
            raise UnitarityError(f"<e0|e0> + <e1|e1> = {col0!r}, expected 1")
        if abs(col1 - 1.0) > UNITARITY_TOL:
            raise UnitarityError(f"<e2|e2> + <e3|e3> = {col1!r}, expected 1")
        if abs(overlap) > UNITARITY_TOL:
            raise UnitarityError(f"<e0|e2> + <e1|e3> = {overlap!r}, expected 0")

    @property
    def ancilla_dimension(self):
        return int(self.e0.size)

    def to_payload(self):
        """JSON-ready dict with complex entries as [re, im] pairs."""
        payload = {"ancilla_dimension": self.ancilla_dimension}
        for name in _VECTOR_NAMES:
            vec = getattr(self, name)
            payload[name] = [[float(z.real), float(z.imag)] for z in vec]
        return payload

    def to_json(self):
        return json.dumps(self.to_payload(), sort_keys=True)

    @classmethod
    def from_payload(cls, payload):
        try:
            dim = int(payload["ancilla_dimension"])
            vectors = {
                name: np.array([complex(re, im) for re, im in payload[name]],
                               dtype=complex)
                for name in _VECTOR_NAMES
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed attack payload: {exc}") from exc
        for name, vec in vectors.items():
            if vec.size != dim:
                raise DomainError(f"{name} has {vec.size} entries, expected {dim}")
        return cls(**vectors)

    @classmethod
    def from_json(cls, text):
        return cls.from_payload(json.loads(text))


@dataclass(frozen=True)
class SymmetryReport:
    """Raw-key error rates read from the two branches of an attack."""

    Q_from_e1: float
    Q_from_e2: float

    @property
    def asymmetry(self):
        return abs(self.Q_from_e1 - self.Q_from_e2)


def symmetry_report(attack):
    return SymmetryReport(Q_from_e1=_norm2(attack.e1), Q_from_e2=_norm2(attack.e2))


def induced_statistics(attack, alpha, symmetry_tol=1e-9):
    """Full statistics record the legitimate parties would observe.

    The attack noise must be symmetric across the two raw-key branches
    (<e1|e1> = <e2|e2>) within symmetry_tol; Q is read from <e1|e1>.
    """
    a = check_alpha(alpha)
    report = symmetry_report(attack)
    if report.asymmetry > symmetry_tol:
        raise AsymmetricAttackError(
            f"<e1|e1> = {report.Q_from_e1!r} vs <e2|e2> = {report.Q_from_e2!r}: "
            f"asymmetry {report.asymmetry!r} above {symmetry_tol!r}")
    b = math.sqrt(1.0 - a * a)
    e0, e1, e2, e3 = attack.e0, attack.e1, attack.e2, attack.e3
    flipped = b * a * e0 + b * b * e2 - a * a * e1 - a * b * e3
    return ObservedStatistics(
        alpha=a,
        Q=report.Q_from_e1,
        QA=_norm2(flipped),
        p0a=_norm2(a * e0 + b * e1),
        p1a=_norm2(a * e2 + b * e3),
        pa0=_norm2(a * e0 + b * e2),
    )


def _projector(v):
    m = np.outer(v, v.conj())
    return 0.5 * (m + m.conj().T)  # hermitize away rounding asymmetry


def exact_conditional_entropy(attack):
    """Exact S(A|E) = S(AE) - S(E) of the post-measurement joint state.

    The joint state is block diagonal with blocks (|e0><e0| + |e1><e1|)/2
    and (|e2><e2| + |e3><e3|)/2; the ancilla marginal is their sum.
    """
    d = attack.ancilla_dimension
    block0 = 0.5 * (_projector(attack.e0) + _projector(attack.e1))
    block1 = 0.5 * (_projector(attack.e2) + _projector(attack.e3))
    joint = np.zeros((2 * d, 2 * d), dtype=complex)
    joint[:d, :d] = block0
    joint[d:, d:] = block1
    return von_neumann_entropy(joint) - von_neumann_entropy(block0 + block1)


@dataclass(frozen=True)
class InnerProducts:
    """Real parts of all six pairwise overlaps of the ancilla vectors."""

    re01: float
    re02: float
    re03: float
    re12: float
    re13: float
    re23: float


def exact_inner_products(attack):
    """Ground-truth re<ei|ej>, computed directly from the vectors."""

    def pair(u, v):
        return float(np.vdot(u, v).real)

    return InnerProducts(
        re01=pair(attack.e0, attack.e1),
        re02=pair(attack.e0, attack.e2),
        re03=pair(attack.e0, attack.e3),
        re12=pair(attack.e1, attack.e2),
        re13=pair(attack.e1, attack.e3),
        re23=pair(attack.e2, attack.e3),
    )


def identity_attack(dim=1):
    """Noiseless channel: the ancilla stays in one fixed state."""
    e0 = np.zeros(dim, dtype=complex)
    e0[0] = 1.0
    zero = np.zeros(dim, dtype=complex)
    return AttackOperator(e0=e0, e1=zero, e2=zero.copy(), e3=e0.copy())


def copying_attack(dim=2):
    """Q = 0 attack whose ancilla perfectly records the raw-key bit."""
    if dim < 2:
        raise DomainError("copying attack needs an ancilla of dimension >= 2")
    e0 = np.zeros(dim, dtype=complex)
    e3 = np.zeros(dim, dtype=complex)
    e0[0] = 1.0
    e3[1] = 1.0
    zero = np.zeros(dim, dtype=complex)
    return AttackOperator(e0=e0, e1=zero, e2=zero.copy(), e3=e3)


def depolarizing_attack(Q):
    """Canonical dilation of the depolarizing channel (1-2Q) rho + Q I.

    Uses the four-operator decomposition with weights 1 - 3Q/2 on the
    identity and Q/2 on each of the three qubit flips, so it needs (and
    fills) the full four-dimensional ancilla.
    """
    q = check_probability(Q, "Q")
    if q > 0.5:
        raise DomainError(f"depolarizing parameter Q = {q!r} exceeds 1/2")
    keep = math.sqrt(1.0 - 1.5 * q)
    flip = math.sqrt(q / 2.0)
    e0 = np.array([keep, 0.0, 0.0, flip], dtype=complex)
    e1 = np.array([0.0, flip, 1j * flip, 0.0], dtype=complex)
    e2 = np.array([0.0, flip, -1j * flip, 0.0], dtype=complex)
    e3 = np.array([keep, 0.0, 0.0, -flip], dtype=complex)
    return AttackOperator(e0=e0, e1=e1, e2=e2, e3=e3)


def extremal_depolarizing_attack(Q):
    """Depolarizing-statistics attack with worst-case real overlaps.

    Induces exactly the depolarizing statistics for every alpha while
    realizing re<e0|e3> = (1-2Q)(1-Q) and re<e1|e2> = Q(1-2Q) on mutually
    orthogonal subspaces, the configuration the key-rate minimization
    lands on.  Against this attack the bound is tight.
    """
    q = check_probability(Q, "Q")
    if q > 0.5:
        raise DomainError(f"depolarizing parameter Q = {q!r} exceeds 1/2")
    c = 1.0 - 2.0 * q
    s = math.sqrt(max(0.0, 1.0 - c * c))
    e0 = math.sqrt(1.0 - q) * np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
    e3 = math.sqrt(1.0 - q) * np.array([c, s, 0.0, 0.0], dtype=complex)
    e1 = math.sqrt(q) * np.array([0.0, 0.0, 1.0, 0.0], dtype=complex)
    e2 = math.sqrt(q) * np.array([0.0, 0.0, c, s], dtype=complex)
    return AttackOperator(e0=e0, e1=e1, e2=e2, e3=e3)


def rephased_attack(attack):
    """Equivalent attack with <e0|e3> rotated onto the real axis.

    Multiplying e2 and e3 by one common phase is a relabeling of the
    adversary's input and keeps every isometry constraint; it changes
    <e0|e3> and <e1|e2> by that phase only.
    """
    overlap = complex(np.vdot(attack.e0, attack.e3))
    phase = cmath.exp(-1j * cmath.phase(overlap)) if overlap != 0 else 1.0
    return AttackOperator(
        e0=attack.e0.copy(),
        e1=attack.e1.copy(),
        e2=phase * attack.e2,
        e3=phase * attack.e3,
    )
