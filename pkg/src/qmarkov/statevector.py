"""Dense statevector simulation.

Basis index ``i`` is read as the bit string ``q0 q1 ... q(k-1)`` with qubit 0
as the most significant bit, so on three qubits ``|100>`` (q0 = 1) is index 4.

Gates are applied by updating amplitude pairs that differ only in the target
bit. The full 2**k x 2**k operator is never built.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

MAX_QUBITS = 26
NORM_ATOL = 1e-12


class StateVector:
    """Immutable register of ``2**num_qubits`` complex amplitudes.

    Amplitudes passed in from outside are copied and must be normalized to
    within ``NORM_ATOL``. Simulator internals hand over freshly computed
    buffers with ``copy=False`` and skip the check.
    """

    __slots__ = ("_amps", "num_qubits")

    def __init__(self, amplitudes, *, copy: bool = True):
        amps = np.array(amplitudes, dtype=np.complex128, copy=copy).reshape(-1)
        k = amps.size.bit_length() - 1
        if amps.size < 2 or amps.size != 1 << k:
            raise ValueError(f"amplitude count must be a power of two >= 2, got {amps.size}")
        if copy:
            norm = float(np.vdot(amps, amps).real)
            if abs(norm - 1.0) > NORM_ATOL:
                raise ValueError(f"state is not normalized: sum |a|^2 = {norm!r}")
        amps.setflags(write=False)
        self._amps = amps
        self.num_qubits = k

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    def __len__(self) -> int:
        return self._amps.size

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self.num_qubits})"

    def norm_squared(self) -> float:
        return float(np.vdot(self._amps, self._amps).real)

    def bitstring(self, index: int) -> str:
        return format(index, f"0{self.num_qubits}b")


@dataclass(frozen=True)
class Single:
    gate: np.ndarray
    target: int


@dataclass(frozen=True)
class Controlled:
    gate: np.ndarray
    control: int
    target: int


Op = Union[Single, Controlled]


@dataclass
class Circuit:
    num_qubits: int
    ops: list = field(default_factory=list)

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("circuit needs at least one qubit")
        for op in self.ops:
            self._check(op)

    def _check(self, op: Op) -> None:
        if np.shape(op.gate) != (2, 2):
            raise ValueError(f"gates must be 2x2, got shape {np.shape(op.gate)}")
        qubits = (op.target,) if isinstance(op, Single) else (op.control, op.target)
        for q in qubits:
            if not 0 <= q < self.num_qubits:
                raise ValueError(f"qubit {q} out of range for {self.num_qubits} qubits")
        if isinstance(op, Controlled) and op.control == op.target:
            raise ValueError(f"control and target are both qubit {op.target}")

    def append(self, op: Op) -> "Circuit":
        self._check(op)
        self.ops.append(op)
        return self

    def __len__(self) -> int:
        return len(self.ops)


def init_basis(num_qubits: int, basis_index: int = 0) -> StateVector:
    if not 1 <= num_qubits <= MAX_QUBITS:
        raise ValueError(f"num_qubits must be in [1, {MAX_QUBITS}], got {num_qubits}")
    dim = 1 << num_qubits
    if not 0 <= basis_index < dim:
        raise ValueError(f"basis index {basis_index} out of range for {num_qubits} qubits")
    amps = np.zeros(dim, dtype=np.complex128)
    amps[basis_index] = 1.0
    return StateVector(amps, copy=False)


def _check_qubit(state: StateVector, q: int, what: str) -> None:
    if not 0 <= q < state.num_qubits:
        raise ValueError(f"{what} qubit {q} out of range for {state.num_qubits} qubits")


def _update_pairs(block: np.ndarray, axis: int, gate: np.ndarray) -> None:
    """In-place 2x2 update of ``block`` along its length-2 ``axis``."""
    i0 = (slice(None),) * axis + (0,)
    i1 = (slice(None),) * axis + (1,)
    a0 = block[i0].copy()
    a1 = block[i1]
    block[i0] = gate[0, 0] * a0 + gate[0, 1] * a1
    block[i1] = gate[1, 0] * a0 + gate[1, 1] * a1


def _single_inplace(buf: np.ndarray, k: int, gate: np.ndarray, target: int) -> None:
    _update_pairs(buf.reshape(1 << target, 2, 1 << (k - target - 1)), 1, gate)


def _controlled_inplace(buf: np.ndarray, k: int, gate: np.ndarray, control: int, target: int) -> None:
    hi, lo = min(control, target), max(control, target)
    # axes: (above hi, hi bit, between, lo bit, below lo)
    view = buf.reshape(1 << hi, 2, 1 << (lo - hi - 1), 2, 1 << (k - lo - 1))
    # slicing keeps views; reshaping these would silently copy
    if control < target:
        _update_pairs(view[:, 1], 2, gate)
    else:
        _update_pairs(view[:, :, :, 1], 1, gate)


def _as_gate(gate) -> np.ndarray:
    gate = np.asarray(gate, dtype=np.complex128)
    if gate.shape != (2, 2):
        raise ValueError(f"expected a 2x2 gate, got shape {gate.shape}")
    return gate


def apply_single(state: StateVector, gate, target: int) -> StateVector:
    gate = _as_gate(gate)
    _check_qubit(state, target, "target")
    out = state.amplitudes.copy()
    _single_inplace(out, state.num_qubits, gate, target)
    return StateVector(out, copy=False)


def apply_controlled(state: StateVector, gate, control: int, target: int) -> StateVector:
    gate = _as_gate(gate)
    _check_qubit(state, control, "control")
    _check_qubit(state, target, "target")
    if control == target:
        raise ValueError(f"control and target are both qubit {control}")
    out = state.amplitudes.copy()
    _controlled_inplace(out, state.num_qubits, gate, control, target)
    return StateVector(out, copy=False)


def run_circuit(circuit: Circuit, initial: StateVector) -> StateVector:
    """Apply ``circuit.ops`` in order; one working buffer for the whole run."""
    if circuit.num_qubits != initial.num_qubits:
        raise ValueError(
            f"circuit has {circuit.num_qubits} qubits but state has {initial.num_qubits}"
        )
    k = circuit.num_qubits
    buf = initial.amplitudes.copy()
    for op in circuit.ops:
        gate = _as_gate(op.gate)
        if isinstance(op, Single):
            _single_inplace(buf, k, gate, op.target)
        else:
            _controlled_inplace(buf, k, gate, op.control, op.target)
    return StateVector(buf, copy=False)


def probabilities(state: StateVector) -> np.ndarray:
    a = state.amplitudes
    return a.real ** 2 + a.imag ** 2


def amplitude(state: StateVector, basis_index: int) -> complex:
    if not 0 <= basis_index < len(state):
        raise ValueError(f"basis index {basis_index} out of range for {state.num_qubits} qubits")
    return complex(state.amplitudes[basis_index])


def sample_counts(state: StateVector, shots: int, rng: np.random.Generator) -> np.ndarray:
    """Multinomial shot counts per basis index."""
    if shots < 0:
        raise ValueError("shots must be non-negative")
    p = probabilities(state)
    return rng.multinomial(shots, p / p.sum())
