"""OpenQASM 2.0 text for chain circuits.

OpenQASM 2.0 has no root-of-X gate, so ``root_x(t)`` is written as
``h; u1(pi*t); h`` and its controlled form as ``h; cu1(pi*u); h`` on the
target. Both are exact: bracketing a phase rotation with Hadamards turns it
into the matching X rotation.
"""
from __future__ import annotations

from .chain import ChainSpec


def format_exponent(x: float) -> str:
    """Shortest round-tripping decimal, without a trailing ``.0``."""
    s = repr(float(x))
    if s.endswith(".0"):
        s = s[:-2]
    return "0" if s == "-0" else s


def _angle(x: float) -> str:
    s = format_exponent(x)
    return f"-pi*{s[1:]}" if s.startswith("-") else f"pi*{s}"


def chain_to_qasm(spec: ChainSpec, initial_basis: int | None = None) -> str:
    """Program for the chain circuit followed by a full measurement.

    With ``initial_basis`` the stage-1 rotations are replaced by ``x`` gates
    preparing that basis state, and only the controlled links are emitted.
    """
    L = spec.length
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        f"qreg q[{L}];",
        f"creg c[{L}];",
    ]
    if initial_basis is None:
        for i, t in enumerate(spec.init):
            lines += [f"h q[{i}];", f"u1({_angle(t)}) q[{i}];", f"h q[{i}];"]
    else:
        for i in range(L):
            if (initial_basis >> (L - 1 - i)) & 1:
                lines.append(f"x q[{i}];")
    for i, u in enumerate(spec.cond):
        j = i + 1
        lines += [f"h q[{j}];", f"cu1({_angle(u)}) q[{i}],q[{j}];", f"h q[{j}];"]
    lines += [f"measure q[{i}] -> c[{i}];" for i in range(L)]
    return "\n".join(lines) + "\n"
