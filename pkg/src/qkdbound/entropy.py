"""Entropy primitives on classical distributions and small density matrices.

All logarithms are base two.  Matrices are plain complex numpy arrays;
validation happens at the entry of each operation instead of through a
wrapper type.  Everything here is pure, holds no state, and is safe to
call concurrently.
"""

import numpy as np

from .errors import DomainError, EigensolverError, NonPhysicalStateError

#: absolute tolerance for Hermiticity checks
HERMITIAN_TOL = 1e-12
#: eigenvalues of a density matrix may undershoot zero by at most this much
PSD_TOL = 1e-10
#: unit-trace tolerance for density matrices
TRACE_TOL = 1e-9


def check_probability(value, name="probability"):
    """Validate a scalar probability, forgiving up to 1e-12 of rounding."""
    v = float(value)
    if not -1e-12 <= v <= 1.0 + 1e-12:
        raise DomainError(f"{name} = {v!r} outside [0, 1]")
    return min(1.0, max(0.0, v))


def binary_entropy(x):
    """h(x) = -x log2 x - (1-x) log2(1-x), with the convention h(0) = h(1) = 0.

    Accepts a scalar or an array and returns the matching shape.  Inputs
    outside [0, 1] by more than 1e-12 raise DomainError.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr < -1e-12) or np.any(arr > 1.0 + 1e-12):
        raise DomainError(f"binary_entropy argument outside [0, 1]: {x!r}")
    arr = np.clip(arr, 0.0, 1.0)
    out = np.zeros_like(arr)
    inner = (arr > 0.0) & (arr < 1.0)
    v = arr[inner]
    out[inner] = -v * np.log2(v) - (1.0 - v) * np.log2(1.0 - v)
    out = np.minimum(out, 1.0)
    if np.ndim(x) == 0:
        return float(out)
    return out


def shannon_entropy(p):
    """H(p) = -sum p_i log2 p_i for a probability vector, with 0 log 0 = 0."""
    vec = np.asarray(p, dtype=float).ravel()
    if vec.size and float(vec.min()) < -1e-12:
        raise DomainError(f"negative probability entry: min = {float(vec.min())!r}")
    total = float(vec.sum())
    if abs(total - 1.0) > TRACE_TOL:
        raise DomainError(f"probabilities sum to {total!r}, not 1")
    vec = np.clip(vec, 0.0, None)
    nz = vec[vec > 0.0]
    return float(-(nz * np.log2(nz)).sum())


def _checked_hermitian(m):
    mat = np.asarray(m, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {mat.shape}")
    if float(np.max(np.abs(mat - mat.conj().T))) > HERMITIAN_TOL:
        raise DomainError("matrix is not Hermitian within 1e-12")
    return mat


def hermitian_eigenvalues(m):
    """Real eigenvalues of a Hermitian matrix, sorted descending."""
    mat = _checked_hermitian(m)
    try:
        vals = np.linalg.eigvalsh(mat)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(f"eigensolver did not converge: {exc}") from exc
    vals = vals[::-1]
    trace = float(mat.trace().real)
    if abs(float(vals.sum()) - trace) > 1e-10:
        raise EigensolverError("eigenvalue sum does not reproduce the trace")
    return vals


def von_neumann_entropy(m):
    """S(m) = -sum lambda_i log2 lambda_i over the spectrum of a density matrix.

    The matrix must be positive semi-definite within 1e-10 and have unit
    trace within 1e-9.  Eigenvalues that undershoot zero by less than
    1e-10 are clamped to zero; anything worse is a NonPhysicalStateError.
    """
    mat = _checked_hermitian(m)
    trace = complex(mat.trace())
    if abs(trace.imag) > TRACE_TOL or abs(trace.real - 1.0) > TRACE_TOL:
        raise NonPhysicalStateError(f"trace {trace!r} deviates from 1")
    vals = hermitian_eigenvalues(mat)
    if float(vals[-1]) < -PSD_TOL:
        raise NonPhysicalStateError(
            f"eigenvalue {float(vals[-1])!r} below -1e-10: not a density matrix")
    vals = np.clip(vals, 0.0, None)
    drift = abs(float(vals.sum()) - 1.0)
    if drift >= TRACE_TOL:
        raise NonPhysicalStateError(f"eigenvalue mass drifted by {drift!r}")
    return shannon_entropy(vals / vals.sum())
