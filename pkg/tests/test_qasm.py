import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qmarkov.chain import ChainSpec, compile_chain
from qmarkov.qasm import chain_to_qasm, format_exponent
from qmarkov.statevector import init_basis, run_circuit

import oracles


@pytest.mark.parametrize("x,s", [(1, "1"), (0.5, "0.5"), (0, "0"), (-0.0, "0"), (-0.25, "-0.25"), (1e-20, "1e-20")])
def test_format_exponent(x, s):
    assert format_exponent(x) == s


def test_structure_uniform():
    lines = chain_to_qasm(ChainSpec.uniform(3)).splitlines()
    body = lines[4:]
    singles = [body[i:i + 3] for i in range(0, 9, 3)]
    for q, triple in enumerate(singles):
        assert triple == [f"h q[{q}];", f"u1(pi*0.5) q[{q}];", f"h q[{q}];"]
    links = [body[i:i + 3] for i in range(9, 15, 3)]
    for c, triple in enumerate(links):
        t = c + 1
        assert triple == [f"h q[{t}];", f"cu1(pi*0) q[{c}],q[{t}];", f"h q[{t}];"]
    assert body[15:] == [f"measure q[{q}] -> c[{q}];" for q in range(3)]


def test_negative_angle():
    assert "cu1(-pi*0.25) q[0],q[1];" in chain_to_qasm(ChainSpec((0, 0), (-0.25,)))


def test_controls_only_prepares_basis():
    text = chain_to_qasm(ChainSpec((0, 0, 0), (1, 1)), initial_basis=0b100)
    assert "\nu1(" not in text and text.count("x q[") == 1
    _, psi = oracles.run_qasm(text)
    np.testing.assert_allclose(np.abs(psi) ** 2, np.eye(8)[7], rtol=0, atol=1e-12)


@st.composite
def specs(draw):
    L = draw(st.integers(1, 4))
    x = st.floats(-1, 1, allow_nan=False)
    return ChainSpec(tuple(draw(x) for _ in range(L)), tuple(draw(x) for _ in range(L - 1)))


@settings(max_examples=50, deadline=None)
@given(specs())
def test_program_reproduces_simulation(spec):
    # exact agreement: the h/u1/h bracketing introduces no global phase
    _, psi = oracles.run_qasm(chain_to_qasm(spec))
    want = run_circuit(compile_chain(spec), init_basis(spec.length, 0)).amplitudes
    np.testing.assert_allclose(psi, want, rtol=0, atol=1e-12)
