"""Expected savings of run-length encoding a symbol of an i.i.d. source.

For a symbol x with probability p in a sequence of length N, R_x is the
expected number of elements of x that run-length encoding reclaims,
ie. occurrences minus encoded-variable entries. A run of length n is
split into ceil(n / 2^b_r) divisions, so it reclaims n - ceil(n / 2^b_r)
elements. Counting the runs of every length at the head, in the middle
and at the tail of the sequence gives :func:`rx_exact`, which for
practical N is close to :func:`rx_approx` = p^2 (N - 1).

The functions here are used for diagnostics, sweeps and as test oracles.
"""
import math
from dataclasses import dataclass, astuple
from typing import List, Sequence

import numpy as np

from srle.core.sequence import MAX_BR
from srle.core.suitability import (finite_suitability_threshold,
                                   suitability_threshold)

GEOMETRIC_KINDS = ('plain', 'n', 'n2')
SWEEP_COLUMNS = ['p', 'N', 'b_r', 'rx_exact', 'rx_approx', 'epsilon1']

# Bernoulli samples drawn per Monte-Carlo batch.
_MONTE_CARLO_BATCH = 1 << 22


@dataclass(frozen=True)
class RxInputs:
    """Parameters of R_x."""

    p: float
    N: int
    b_r: int

    def __post_init__(self):
        if not 0 < self.p <= 1:
            raise ValueError(f'p must be in (0, 1], got {self.p}.')
        if self.N < 1:
            raise ValueError(f'N must be at least 1, got {self.N}.')
        if not 1 <= self.b_r <= MAX_BR:
            raise ValueError(f'b_r must be in [1, {MAX_BR}], got {self.b_r}.')


@dataclass(frozen=True)
class SweepRow:
    p: float
    N: int
    b_r: int
    rx_exact: float
    rx_approx: float
    epsilon1: float

    def astuple(self):
        return astuple(self)


def _divisions(n, b_r):
    """ceil(n / 2^b_r) for integers or integer arrays."""
    return -(-n // 2 ** b_r)


def rx_exact(p: float, N: int, b_r: int) -> float:
    """Exact expected number of reclaimed elements.

    Direct summation over all run lengths with p^n computed
    incrementally. Powers that underflow become 0.

    >>> rx_exact(1.0, 1000, 4)
    937.0
    """
    RxInputs(p, N, b_r)
    q = 1.0 - p
    total = p ** N * (N - _divisions(N, b_r))
    if N >= 2:
        total += 2 * p ** (N - 1) * q * (N - 1 - _divisions(N - 1, b_r))
    if N >= 3:
        n = np.arange(1, N - 1, dtype=np.int64)
        pn = np.cumprod(np.full(N - 2, p))
        reclaimed = n - _divisions(n, b_r)
        weights = q * q * pn * (N - 1 - n) + 2 * pn * q
        total += float(np.dot(weights, reclaimed))
    return float(total)


def rx_approx(p: float, N: int) -> float:
    """Approximate R_x by p^2 (N - 1)."""
    if not 0 <= p <= 1:
        raise ValueError(f'p must be in [0, 1], got {p}.')
    if N < 1:
        raise ValueError(f'N must be at least 1, got {N}.')
    return p * p * (N - 1)


def rx_series_limit(p: float, N: int) -> float:
    """R_x with the run-length sums extended to infinity.

    Assembled from the three geometric series closed forms, with
    k_a = -(1 - p)^2 and k_b = (1 - p)((1 - p)(N - 1) + 2). Equal to
    :func:`rx_approx` for p in (0, 1).
    """
    k_a = -(1 - p) ** 2
    k_b = (1 - p) * ((1 - p) * (N - 1) + 2)
    return (k_a * geometric_sum_n2(p)
            + (k_b - k_a) * geometric_sum_n(p)
            - k_b * (geometric_sum(p) - 1))


def expected_savings_bits(N_x: int, N: int, b_x: int, b_r: int,
                          rx: float) -> float:
    """Bits saved by run-length encoding a symbol.

    Positive means encoding the symbol shrinks the output.
    """
    assert 0 <= N_x <= N, f'N_x={N_x} is not in [0, N={N}].'
    return b_x * N_x - (b_x + b_r) * (N_x - rx)


@dataclass(frozen=True)
class SymbolSavings:
    symbol: int
    count: int
    p_hat: float
    b_x: int
    threshold: float
    rx: float
    expected_savings_bits: float


def expected_savings_from_distribution(dist, b_r: int, width_of,
                                       length: int = None,
                                       exact: bool = False,
                                       finite: bool = False
                                       ) -> List[SymbolSavings]:
    """Expected savings of every observed symbol.

    Occurrences are extrapolated from the estimated probability to a
    sequence of `length` elements, which defaults to the number of
    counted elements. With `exact` R_x is :func:`rx_exact`, otherwise
    :func:`rx_approx`. With `finite` the reported threshold keeps the
    N / (N - 1) factor for `length`.
    """
    if length is None:
        length = dist.total
    rows = []
    for symbol in dist.symbols():
        p_hat = dist.counts[symbol] / dist.total
        b_x = width_of(symbol)
        if exact:
            rx = rx_exact(p_hat, length, b_r)
        else:
            rx = rx_approx(p_hat, length)
        savings = expected_savings_bits(p_hat * length, length, b_x, b_r, rx)
        if finite:
            threshold = finite_suitability_threshold(b_x, b_r, length)
        else:
            threshold = suitability_threshold(b_x, b_r)
        rows.append(SymbolSavings(
            symbol=symbol, count=dist.counts[symbol], p_hat=p_hat, b_x=b_x,
            threshold=float(threshold), rx=rx,
            expected_savings_bits=savings))
    return rows


def single_symbol_condition(b_x: int, b_r: int) -> bool:
    """Whether RLE pays off when every element is the same symbol.

    This is b_x >= b_r / (2^b_r - 1), which holds for all b_x, b_r >= 1.
    """
    return b_x * (2 ** b_r - 1) >= b_r


def _epsilon1(p, N, b_r):
    return p ** N * (N - _divisions(N, b_r))


def epsilon1(p: float, N: int, b_r: int) -> float:
    """Contribution of the all-x sequence to R_x."""
    if not 0 < p < 1:
        raise ValueError(f'p must be in (0, 1), got {p}.')
    if N < 2:
        raise ValueError(f'N must be at least 2, got {N}.')
    return float(_epsilon1(p, N, b_r))


def rx_monte_carlo(p: float, N: int, b_r: int, trials: int,
                   seed: int) -> float:
    """Estimate R_x by simulating `trials` Bernoulli(p) sequences.

    Each sequence contributes the sum over its maximal runs of x of
    n - ceil(n / 2^b_r).
    """
    if trials < 1:
        raise ValueError(f'trials must be at least 1, got {trials}.')
    rng = np.random.default_rng(seed)
    batch = max(1, _MONTE_CARLO_BATCH // max(N, 1))
    reclaimed = 0
    done = 0
    while done < trials:
        rows = min(batch, trials - done)
        hits = rng.random((rows, N)) < p
        padded = np.zeros((rows, N + 2), dtype=np.int8)
        padded[:, 1:-1] = hits
        edges = np.diff(padded, axis=1)
        _, starts = np.nonzero(edges == 1)
        _, ends = np.nonzero(edges == -1)
        divisions = _divisions(ends - starts, b_r)
        reclaimed += int(hits.sum()) - int(divisions.sum())
        done += rows
    return reclaimed / trials


def _check_ratio(a):
    if not 0 < a < 1:
        raise ValueError(f'a must be in (0, 1), got {a}.')


def geometric_sum(a: float) -> float:
    """Sum of a^n over n >= 0."""
    _check_ratio(a)
    return 1 / (1 - a)


def geometric_sum_n(a: float) -> float:
    """Sum of n a^n over n >= 0."""
    _check_ratio(a)
    return a / (1 - a) ** 2


def geometric_sum_n2(a: float) -> float:
    """Sum of n^2 a^n over n >= 0."""
    _check_ratio(a)
    return (a * a + a) / (1 - a) ** 3


def lemma_partial_sum(kind: str, a: float, terms: int) -> float:
    """Truncated series sum over n = 0..terms of a^n times 1, n or n^2.

    >>> lemma_partial_sum('n2', 0.5, 200)
    6.0
    """
    if kind not in GEOMETRIC_KINDS:
        raise ValueError(f'kind must be one of {GEOMETRIC_KINDS}, got '
                         f'{kind!r}.')
    if terms < 1:
        raise ValueError(f'terms must be at least 1, got {terms}.')
    n = np.arange(terms + 1, dtype=float)
    weights = {'plain': np.ones_like(n), 'n': n, 'n2': n * n}[kind]
    return float(math.fsum(weights * a ** n))


def sweep_rx(p_grid: Sequence[float], N_grid: Sequence[int],
             b_r_grid: Sequence[int]) -> List[SweepRow]:
    """Tabulate exact and approximate R_x on a grid.

    Rows are ordered by b_r, then N, then p.
    """
    for name, grid in [('p', p_grid), ('N', N_grid), ('b_r', b_r_grid)]:
        if not len(grid):
            raise ValueError(f'The {name} grid is empty.')
    rows = []
    for b_r in b_r_grid:
        for N in N_grid:
            for p in p_grid:
                rows.append(SweepRow(p=p, N=N, b_r=b_r,
                                     rx_exact=rx_exact(p, N, b_r),
                                     rx_approx=rx_approx(p, N),
                                     epsilon1=float(_epsilon1(p, N, b_r))))
    return rows
