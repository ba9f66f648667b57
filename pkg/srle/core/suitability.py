"""Decide which symbols are worth run-length encoding.

A symbol x with empirical probability p_x is suitable when

    p_x >= b_r / (b_x + b_r)

where b_x is the number of bits of the symbol and b_r the width of one
run-control element. All comparisons are done on integer counts so that
symbols exactly at the threshold are included deterministically.
"""
from fractions import Fraction
from typing import Callable, Optional

from srle.bitio import width_function
from srle.core.sequence import (CodecConfig, DistributionEstimate, Mode,
                                SuitableSet)


def _check_widths(b_x: int, b_r: int):
    if b_x < 1 or b_r < 1:
        raise ValueError(f'Bit widths must be positive, got b_x={b_x}, '
                         f'b_r={b_r}.')


def suitability_threshold(b_x: int, b_r: int) -> Fraction:
    """Return the probability threshold b_r / (b_x + b_r).

    >>> suitability_threshold(8, 4)
    Fraction(1, 3)
    """
    _check_widths(b_x, b_r)
    return Fraction(b_r, b_x + b_r)


def finite_suitability_threshold(b_x: int, b_r: int, length: int) -> Fraction:
    """Threshold without the large-N simplification.

    Returns b_r / (b_x + b_r) * N / (N - 1), which is what N_x >=
    b_r / (b_x + b_r) * N^2 / (N - 1) becomes when divided by N. For a
    single element sequence the simplified threshold is returned.
    """
    threshold = suitability_threshold(b_x, b_r)
    if length < 2:
        return threshold
    return threshold * Fraction(length, length - 1)


def is_suitable(count: int, total: int, b_x: int, b_r: int,
                length: Optional[int] = None) -> bool:
    """Exact integer form of the suitability test."""
    _check_widths(b_x, b_r)
    if length is None or length < 2:
        return count * (b_x + b_r) >= b_r * total
    return count * (b_x + b_r) * (length - 1) >= b_r * length * total


def build_suitable_set(dist: DistributionEstimate, config: CodecConfig,
                       width_of: Optional[Callable[[int], int]] = None,
                       length: Optional[int] = None) -> SuitableSet:
    """Select all symbols whose frequency passes the threshold.

    Parameters
    ----------
    dist
        Distribution of the symbols.
    config
        Supplies the run-control width b_r and the representation.
    width_of
        Symbol -> bit width function. Defaults to
        :func:`srle.bitio.width_function` of the configured
        representation.
    length
        If given, use the finite-length threshold for a sequence of this
        length instead of the simplified one.
    """
    if not dist.total:
        raise ValueError('Cannot build a suitable set from an empty '
                         'distribution.')
    if width_of is None:
        width_of = width_function(config.representation)
    b_r = config.b_r
    members = []
    thresholds = []
    for symbol in dist.symbols():
        b_x = width_of(symbol)
        if length is None:
            threshold = suitability_threshold(b_x, b_r)
        else:
            threshold = finite_suitability_threshold(b_x, b_r, length)
        thresholds.append((symbol, threshold))
        if is_suitable(dist.counts[symbol], dist.total, b_x, b_r, length):
            members.append(symbol)
    return SuitableSet(frozenset(members), Mode.OURS, tuple(thresholds))


def dominant_set(dist: DistributionEstimate) -> SuitableSet:
    """Select only the most frequent symbol, smallest ID on ties."""
    if not dist.counts:
        return SuitableSet(frozenset(), Mode.DRLE)
    dominant = min(dist.counts, key=lambda x: (-dist.counts[x], x))
    return SuitableSet(frozenset([dominant]), Mode.DRLE)


def full_set(dist: DistributionEstimate) -> SuitableSet:
    """Select every observed symbol (vanilla RLE)."""
    return SuitableSet(frozenset(dist.counts), Mode.VRLE)


def suitable_set_for_mode(mode: Mode, dist: DistributionEstimate,
                          config: CodecConfig,
                          length: Optional[int] = None) -> SuitableSet:
    """Build the suitable set of a distribution based policy.

    The oracle mode needs the whole sequence and is handled by
    :func:`srle.codec.select_suitable_set`.
    """
    if mode is Mode.OURS:
        if not dist.total:
            return SuitableSet(frozenset(), Mode.OURS)
        return build_suitable_set(dist, config, length=length)
    if mode is Mode.VRLE:
        return full_set(dist)
    if mode is Mode.DRLE:
        return dominant_set(dist)
    raise ValueError(f'Mode {mode} cannot be built from a distribution.')
