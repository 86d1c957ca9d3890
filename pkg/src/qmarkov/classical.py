"""Classical discrete-time Markov chains, used as ground truth.

Nothing here touches amplitudes or gates; the path distribution is built by
exhaustive enumeration of state trajectories.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

ROW_ATOL = 1e-12


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    row: int | None = None
    row_sum: float | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate(tm) -> ValidationResult:
    """Check that ``tm`` is square and row-stochastic.

    Reports the first offending row rather than raising.
    """
    m = np.asarray(tm, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        return ValidationResult(False, message=f"transition matrix must be square, got shape {m.shape}")
    for i, row in enumerate(m):
        s = float(row.sum())
        if not np.all(np.isfinite(row)) or np.any(row < 0) or np.any(row > 1):
            return ValidationResult(False, i, s, f"row {i} has entries outside [0, 1]")
        if abs(s - 1.0) > ROW_ATOL:
            return ValidationResult(False, i, s, f"row {i} sums to {s:.12g}")
    return ValidationResult(True)


def _checked(tm) -> np.ndarray:
    res = validate(tm)
    if not res:
        raise ValueError(res.message)
    return np.asarray(tm, dtype=float)


def _distribution(dist) -> np.ndarray:
    d = np.asarray(dist, dtype=float)
    if d.ndim != 1 or np.any(d < 0) or abs(d.sum() - 1.0) > ROW_ATOL:
        raise ValueError("distribution must be non-negative and sum to 1")
    return d


def step(dist, tm) -> np.ndarray:
    d, m = _distribution(dist), _checked(tm)
    if d.size != m.shape[0]:
        raise ValueError(f"distribution has {d.size} states but matrix has {m.shape[0]}")
    return d @ m


@dataclass(frozen=True)
class PathDistribution:
    """Joint probability of every length-``L`` state path.

    ``probs`` is indexed like a base-``n_states`` number with the first
    variable as the most significant digit, which for binary chains lines up
    with statevector basis indices.
    """

    n_states: int
    length: int
    probs: np.ndarray

    def __getitem__(self, path) -> float:
        if isinstance(path, str):
            digits = [int(c, self.n_states) for c in path]
        else:
            digits = list(path)
        if len(digits) != self.length:
            raise KeyError(path)
        idx = 0
        for d in digits:
            idx = idx * self.n_states + d
        return float(self.probs[idx])

    def keys(self) -> Iterator[str]:
        for digits in itertools.product(range(self.n_states), repeat=self.length):
            yield "".join(np.base_repr(d, self.n_states) for d in digits)

    def items(self) -> Iterator[tuple[str, float]]:
        return zip(self.keys(), map(float, self.probs))

    def marginal(self, position: int) -> np.ndarray:
        shaped = self.probs.reshape((self.n_states,) * self.length)
        others = tuple(a for a in range(self.length) if a != position)
        return shaped.sum(axis=others)


def path_distribution(initial, transitions: Sequence) -> PathDistribution:
    """Enumerate P(x_0 .. x_{L-1}) = initial[x_0] * prod_i T_i[x_{i-1}][x_i]."""
    p = _distribution(initial)
    n = p.size
    for i, tm in enumerate(transitions):
        m = _checked(tm)
        if m.shape[0] != n:
            raise ValueError(f"transition {i} has {m.shape[0]} states, expected {n}")
        # (prefix, last) x (last, next) -> (prefix, last, next)
        p = (p.reshape(-1, n)[:, :, None] * m[None, :, :]).reshape(-1)
    return PathDistribution(n, len(transitions) + 1, p)


def conditional_gaps(pd: PathDistribution, min_mass: float = 1e-15) -> np.ndarray:
    """|P(x_k | x_{k-1}, x_{k-2}) - P(x_k | x_{k-1})| over all defined cases.

    Conditioning events with mass at or below ``min_mass`` are skipped. Zero
    for any chain that has the Markov property.
    """
    n, L = pd.n_states, pd.length
    if L < 3:
        return np.zeros(0)
    shaped = pd.probs.reshape((n,) * L)
    gaps = []
    for k in range(2, L):
        # joint of (x_{k-2}, x_{k-1}, x_k)
        keep = (k - 2, k - 1, k)
        triple = shaped.sum(axis=tuple(a for a in range(L) if a not in keep))
        pair = triple.sum(axis=0)
        for a, b, c in itertools.product(range(n), repeat=3):
            ab = triple[a, b].sum()
            bb = pair[b].sum()
            if ab <= min_mass or bb <= min_mass:
                continue
            gaps.append(abs(triple[a, b, c] / ab - pair[b, c] / bb))
    return np.array(gaps)
