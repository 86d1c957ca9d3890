import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qmarkov.classical import conditional_gaps, path_distribution, step, validate

import oracles

ATOL = 1e-12
MIX = [[0.5, 0.5], [0.5, 0.5]]
SWAP = [[0, 1], [1, 0]]


class TestValidate:
    def test_valid(self):
        assert validate(MIX)
        assert validate(np.eye(2))

    def test_reports_first_bad_row(self):
        res = validate([[1.0, 0.1], [0.5, 0.5]])
        assert not res
        assert res.row == 0
        assert res.row_sum == pytest.approx(1.1)

    def test_negative_entry(self):
        res = validate([[0.5, 0.5], [1.5, -0.5]])
        assert not res and res.row == 1

    def test_not_square(self):
        assert not validate([[0.5, 0.5]])


class TestStep:
    def test_identity(self):
        assert np.array_equal(step([1, 0], np.eye(2)), [1, 0])

    def test_mix(self):
        np.testing.assert_allclose(step([1, 0], MIX), [0.5, 0.5], rtol=0, atol=ATOL)

    def test_swap_symmetric(self):
        np.testing.assert_allclose(step([0.5, 0.5], SWAP), [0.5, 0.5], rtol=0, atol=ATOL)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            step([1, 0, 0], MIX)

    def test_invalid_matrix(self):
        with pytest.raises(ValueError):
            step([1, 0], [[1.0, 0.1], [0.5, 0.5]])


class TestPathDistribution:
    def test_identity_chain(self):
        pd = path_distribution([1, 0], [np.eye(2), np.eye(2)])
        assert pd["000"] == 1
        assert sum(p for _, p in pd.items()) == 1

    def test_uniform_eight_paths(self):
        pd = path_distribution([0.5, 0.5], [MIX, MIX])
        assert list(pd.keys()) == ["000", "001", "010", "011", "100", "101", "110", "111"]
        for _, p in pd.items():
            assert p == pytest.approx(1 / 8, abs=ATOL)

    def test_two_step(self):
        pd = path_distribution([0.25, 0.75], [np.eye(2)])
        assert dict(pd.items()) == pytest.approx({"00": 0.25, "01": 0, "10": 0, "11": 0.75}, abs=ATOL)

    def test_tuple_keys(self):
        pd = path_distribution([0.25, 0.75], [np.eye(2)])
        assert pd[(1, 1)] == pd["11"]

    def test_mismatched_states(self):
        with pytest.raises(ValueError):
            path_distribution([0.5, 0.5], [np.eye(3)])

    def test_three_state_chain(self):
        tm = np.array([[0.2, 0.3, 0.5], [0.1, 0.1, 0.8], [0.6, 0.4, 0.0]])
        init = [0.3, 0.3, 0.4]
        pd = path_distribution(init, [tm, tm])
        for path, want in oracles.brute_path_probs(init, [tm, tm]).items():
            assert pd[path] == pytest.approx(want, abs=ATOL)


@st.composite
def binary_chains(draw, max_length=6):
    L = draw(st.integers(1, max_length))
    prob = st.floats(0, 1)
    p0 = draw(prob)
    tms = []
    for _ in range(L - 1):
        a, b = draw(prob), draw(prob)
        tms.append(np.array([[1 - a, a], [1 - b, b]]))
    return np.array([1 - p0, p0]), tms


@given(binary_chains())
def test_matches_brute_force(chain):
    init, tms = chain
    pd = path_distribution(init, tms)
    assert abs(pd.probs.sum() - 1) < ATOL
    for path, want in oracles.brute_path_probs(init, tms).items():
        assert abs(pd[path] - want) < ATOL


@given(binary_chains())
def test_marginals_follow_steps(chain):
    init, tms = chain
    pd = path_distribution(init, tms)
    dist = init
    np.testing.assert_allclose(pd.marginal(0), dist, rtol=0, atol=ATOL)
    for k, tm in enumerate(tms, start=1):
        dist = step(dist, tm)
        np.testing.assert_allclose(pd.marginal(k), dist, rtol=0, atol=ATOL)


@settings(max_examples=50)
@given(binary_chains(max_length=5))
def test_markov_property_holds(chain):
    init, tms = chain
    gaps = conditional_gaps(path_distribution(init, tms))
    assert gaps.size == 0 or gaps.max() < 1e-10


def test_markov_property_detects_memory():
    # x2 copies x0, which a first-order chain cannot do
    probs = np.zeros(8)
    for x0 in (0, 1):
        for x1 in (0, 1):
            probs[x0 * 4 + x1 * 2 + x0] = 0.25
    from qmarkov.classical import PathDistribution

    gaps = conditional_gaps(PathDistribution(2, 3, probs))
    assert gaps.max() == pytest.approx(0.5)
