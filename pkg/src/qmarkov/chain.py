"""Compile binary Markov chains into root-of-X circuits and back.

Qubit ``i`` carries chain variable ``x_i``. Every qubit first gets
``root_x(init[i])``; then, in chain order, qubit ``i - 1`` controls
``root_x(cond[i - 1])`` on qubit ``i``. Where the control is 1 the target has
seen ``root_x(init[i] + cond[i - 1])``, where it is 0 only ``root_x(init[i])``.
That branch rule is what makes the measured joint distribution Markov.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import gates
from .statevector import Circuit, Controlled, Single, StateVector, init_basis


class IdleControlsWarning(UserWarning):
    """No control qubit starts in |1>, so a controls-only circuit does nothing."""


@dataclass(frozen=True)
class ChainSpec:
    """Root exponents of a length-``L`` chain circuit.

    ``init`` holds one exponent per qubit, ``cond`` one per link
    ``(i - 1) -> i``. Exponents are X-powers: 0.5 is sqrt(X), 1 is X.
    """

    init: tuple
    cond: tuple

    def __post_init__(self):
        init = tuple(float(t) for t in self.init)
        cond = tuple(float(u) for u in self.cond)
        if not init:
            raise ValueError("chain needs at least one variable")
        if len(cond) != len(init) - 1:
            raise ValueError(
                f"chain of length {len(init)} needs {len(init) - 1} conditional exponents, got {len(cond)}"
            )
        if not all(math.isfinite(x) for x in init + cond):
            raise ValueError("exponents must be finite")
        object.__setattr__(self, "init", init)
        object.__setattr__(self, "cond", cond)

    @property
    def length(self) -> int:
        return len(self.init)

    @classmethod
    def uniform(cls, length: int, t: float = 0.5, u: float = 0.0) -> "ChainSpec":
        return cls((t,) * length, (u,) * (length - 1))


@dataclass(frozen=True)
class DerivedDtmc:
    """Binary chain induced by a circuit.

    ``initial[x]`` is P(x_0 = x); ``transitions[i][a][b]`` is
    P(x_{i+1} = b | x_i = a).
    """

    initial: np.ndarray
    transitions: tuple


def compile_chain(spec: ChainSpec) -> Circuit:
    circuit = Circuit(spec.length)
    for i, t in enumerate(spec.init):
        circuit.append(Single(gates.root_x(t), i))
    for i, u in enumerate(spec.cond):
        circuit.append(Controlled(gates.root_x(u), i, i + 1))
    return circuit


def controls_idle(basis_index: int) -> bool:
    """True when qubits 0..L-2 all start in |0>, so no controlled gate can fire."""
    return basis_index >> 1 == 0


def compile_chain_no_init(spec: ChainSpec, initial_basis: int) -> tuple[Circuit, StateVector]:
    """Controls-only circuit started from a basis state instead of stage-1 rotations.

    ``spec.init`` is ignored. Warns with :class:`IdleControlsWarning` when the
    circuit provably leaves the initial state untouched.
    """
    state = init_basis(spec.length, initial_basis)
    circuit = Circuit(spec.length)
    for i, u in enumerate(spec.cond):
        circuit.append(Controlled(gates.root_x(u), i, i + 1))
    if controls_idle(initial_basis):
        warnings.warn(
            f"initial state |{state.bitstring(initial_basis)}> has every control qubit at 0; "
            "no controlled gate will fire",
            IdleControlsWarning,
            stacklevel=2,
        )
    return circuit, state


def basis_as_init(spec: ChainSpec, initial_basis: int) -> ChainSpec:
    """Equivalent full chain for a controls-only run from ``initial_basis``.

    ``root_x(b)|0> = |b>`` exactly for b in {0, 1}, and exponents add under
    composition, so starting qubit i in |b_i> is the same as a stage-1
    exponent of b_i.
    """
    L = spec.length
    bits = tuple(float((initial_basis >> (L - 1 - i)) & 1) for i in range(L))
    return ChainSpec(bits, spec.cond)


def calibrate_root(p: float) -> float:
    """Exponent t in [0, 1] with P(1) = sin^2(pi*t/2) = p for ``root_x(t)|0>``."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must be in [0, 1], got {p!r}")
    return 2.0 / math.pi * math.atan2(math.sqrt(p), math.sqrt(1.0 - p))


def calibrate_conditional(p_given_1: float, t_init: float) -> float:
    """Conditional exponent so that the fired branch has P(target = 1) = p_given_1.

    May be negative; the fired branch sees ``t_init + u``.
    """
    return calibrate_root(p_given_1) - float(t_init)


def spec_from_probabilities(initial_p1: float, transitions: Sequence[tuple]) -> ChainSpec:
    """Build exponents from P(x_0 = 1) and ``(P(1 | 0), P(1 | 1))`` per link."""
    init = [calibrate_root(initial_p1)]
    cond = []
    for p1_given_0, p1_given_1 in transitions:
        t = calibrate_root(p1_given_0)
        init.append(t)
        cond.append(calibrate_conditional(p1_given_1, t))
    return ChainSpec(tuple(init), tuple(cond))


def chain_to_dtmc(spec: ChainSpec) -> DerivedDtmc:
    p = gates.flip_probability
    p0 = p(spec.init[0])
    initial = np.array([1.0 - p0, p0])
    steps = []
    for t, u in zip(spec.init[1:], spec.cond):
        idle, fired = p(t), p(t + u)
        steps.append(np.array([[1.0 - idle, idle], [1.0 - fired, fired]]))
    return DerivedDtmc(initial, tuple(steps))


def _branch_factors(total: float) -> tuple[complex, complex]:
    e = cmath.exp(1j * math.pi * total)
    return (1 + e) / 2, (1 - e) / 2


def closed_form_state(spec: ChainSpec) -> StateVector:
    """Final amplitudes written down directly as per-qubit products.

    Path ``(x_0 .. x_{L-1})`` gets ``prod_i (1 +/- exp(i*pi*T_i)) / 2`` with
    ``+`` for ``x_i = 0``, ``-`` for ``x_i = 1``, and ``T_i = init[i]`` unless
    ``x_{i-1} = 1``, in which case ``T_i = init[i] + cond[i-1]``.
    """
    amps = np.array(_branch_factors(spec.init[0]), dtype=np.complex128)
    for t, u in zip(spec.init[1:], spec.cond):
        # factors[prev][x]
        factors = np.array([_branch_factors(t), _branch_factors(t + u)], dtype=np.complex128)
        amps = (amps.reshape(-1, 2)[:, :, None] * factors[None, :, :]).reshape(-1)
    return StateVector(amps, copy=False)
