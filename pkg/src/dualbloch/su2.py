"""2x2 unitary algebra for single-qubit rotations.

Convention: a rotation by angle ``delta`` about the unit axis ``n`` is

    U = cos(delta/2) I - i sin(delta/2) (n . sigma)

and conjugation ``v -> U v U+`` moves Bloch vectors actively by +delta
about ``n`` with the right-hand rule (for the y axis, z rotates toward +x).
Angles live on all of R; there is no wrapping at construction, so the
SU(2) period is 4*pi and ``make_unitary(n, d + 2*pi) == -make_unitary(n, d)``.
"""

from __future__ import annotations

import math

import numpy as np

TOL_ALG = 1e-12    # max entrywise deviation tolerated from exact unitarity
TOL_UNIT = 1e-9    # unit-norm invariant for axes and Bloch vectors
NORM_SLACK = 1e-6  # constructors renormalize within this, reject anything worse

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

for _m in (IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z):
    _m.setflags(write=False)
del _m


class AxisNotUnitError(ValueError):
    """Rotation axis is not normalizable to a unit vector."""


def pauli(which: str) -> np.ndarray:
    """Return sigma_x, sigma_y or sigma_z by axis name ('x', 'y' or 'z')."""
    try:
        return {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}[which].copy()
    except KeyError:
        raise ValueError(f"unknown Pauli axis {which!r}, expected 'x', 'y' or 'z'") from None


def unit_axis(components) -> np.ndarray:
    """Validate a rotation axis and return it normalized to machine precision.

    Accepts any finite 3-vector whose norm is within NORM_SLACK of 1; the
    zero vector and anything farther from unit norm are rejected.
    """
    n = np.asarray(components, dtype=float)
    if n.shape != (3,):
        raise AxisNotUnitError(f"axis must be a 3-vector, got shape {n.shape}")
    if not np.all(np.isfinite(n)):
        raise AxisNotUnitError("axis components must be finite")
    norm = float(np.linalg.norm(n))
    if abs(norm - 1.0) >= NORM_SLACK:
        raise AxisNotUnitError(f"axis norm {norm!r} deviates from 1 by {abs(norm - 1.0):.3g}")
    return n / norm


def make_unitary(axis, angle: float) -> np.ndarray:
    """Axis-angle unitary cos(angle/2) I - i sin(angle/2) (axis . sigma)."""
    n = unit_axis(axis)
    angle = float(angle)
    if not math.isfinite(angle):
        raise ValueError("angle must be finite")
    half = 0.5 * angle
    n_dot_sigma = n[0] * SIGMA_X + n[1] * SIGMA_Y + n[2] * SIGMA_Z
    return math.cos(half) * IDENTITY - 1j * math.sin(half) * n_dot_sigma


def exp_generator(pauli_axis, t: float) -> np.ndarray:
    """Evolution operator exp(-i (axis . sigma) t / 2).

    Alias of make_unitary(pauli_axis, t) so evolution code reads as a time
    exponential; the two agree bit for bit.
    """
    return make_unitary(pauli_axis, t)


def adjoint(u) -> np.ndarray:
    """Conjugate transpose. adjoint(adjoint(u)) reproduces u bit for bit."""
    u = np.asarray(u, dtype=complex)
    return np.ascontiguousarray(u.conj().T)


def compose(a, b) -> np.ndarray:
    """Matrix product a @ b (apply b first when acting on kets)."""
    return np.asarray(a, dtype=complex) @ np.asarray(b, dtype=complex)


def is_unitary(u, tol: float = TOL_ALG) -> bool:
    """True when u is 2x2, finite, and u u+ = I within tol (entrywise)."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2) or not np.all(np.isfinite(u)):
        return False
    return float(np.max(np.abs(u @ u.conj().T - IDENTITY))) <= tol


def equal_entrywise(a, b, tol: float = TOL_ALG) -> bool:
    """Strict equality: max entrywise deviation at most tol."""
    diff = np.asarray(a, dtype=complex) - np.asarray(b, dtype=complex)
    return float(np.max(np.abs(diff))) <= tol


def equal_up_to_phase(a, b, tol: float = TOL_ALG) -> bool:
    """Projective equality: a = phase * b for some unit complex phase.

    A global phase is invisible to conjugation on Bloch vectors, so this is
    the physically meaningful comparison between unitaries.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return False
    i = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    if abs(b[i]) == 0.0 or abs(a[i]) == 0.0:
        return equal_entrywise(a, b, tol)
    phase = a[i] / b[i]
    phase /= abs(phase)
    return equal_entrywise(a, phase * b, tol)
