"""Gate matrices for root-of-X Markov circuits.

Gates are plain ``complex128`` numpy arrays. A root exponent ``t`` stands for
the fractional power X**t, so ``t = 1/n`` is the n-th root of X and two
sequential root-X gates compose by adding their exponents.
"""
from __future__ import annotations

import numpy as np

UNITARY_ATOL = 1e-12

I2 = np.eye(2, dtype=np.complex128)
I2.setflags(write=False)


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


def hadamard() -> np.ndarray:
    return _frozen(np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2))


def pauli_x() -> np.ndarray:
    return _frozen(np.array([[0, 1], [1, 0]], dtype=np.complex128))


def _phase(t: float) -> complex:
    t = float(t)
    if not np.isfinite(t):
        raise ValueError(f"root exponent must be finite, got {t!r}")
    # exact values at the points where cos/sin of pi*t should vanish
    if t == int(t):
        return 1.0 + 0j if int(t) % 2 == 0 else -1.0 + 0j
    if 2 * t == int(2 * t):
        return 1j if int(2 * t) % 4 == 1 else -1j
    return complex(np.exp(1j * np.pi * t))


def phase_root_z(t: float) -> np.ndarray:
    """diag(1, exp(i*pi*t)); ``t = 1/n`` gives the n-th root of Z."""
    return _frozen(np.array([[1, 0], [0, _phase(t)]], dtype=np.complex128))


def root_x(t: float) -> np.ndarray:
    """X**t evaluated in closed form.

    ``0.5 * [[1 + e, 1 - e], [1 - e, 1 + e]]`` with ``e = exp(i*pi*t)``. This
    equals ``H @ phase_root_z(t) @ H``; ``t = 1`` is X and ``t = 0`` is I.
    """
    e = _phase(t)
    p, m = (1 + e) / 2, (1 - e) / 2
    return _frozen(np.array([[p, m], [m, p]], dtype=np.complex128))


def controlled(u: np.ndarray) -> np.ndarray:
    """Block matrix diag(I, u); the control is the more significant qubit."""
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (2, 2):
        raise ValueError(f"controlled() needs a 2x2 gate, got shape {u.shape}")
    out = np.zeros((4, 4), dtype=np.complex128)
    out[:2, :2] = I2
    out[2:, 2:] = u
    return _frozen(out)


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = np.asarray(a), np.asarray(b)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply shapes {a.shape} and {b.shape}")
    return _frozen(a @ b)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = np.asarray(a), np.asarray(b)
    for m in (a, b):
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"kron() needs square matrices, got shape {m.shape}")
    return _frozen(np.kron(a, b))


def is_unitary(m: np.ndarray, atol: float = UNITARY_ATOL) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    dim = m.shape[0]
    if dim & (dim - 1):
        return False
    return bool(np.allclose(m.conj().T @ m, np.eye(dim), rtol=0, atol=atol))


def flip_probability(t: float) -> float:
    """P(measure 1) for ``root_x(t)`` applied to ``|0>``, i.e. sin^2(pi*t/2)."""
    return (1.0 - _phase(t).real) / 2.0
