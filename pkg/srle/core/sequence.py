"""Domain types shared across srle.

All types are immutable values after construction.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

import numpy as np

from srle.bitio import (BitPacking, VariableLength, Representation,
                        check_bitpacked, varlen_widths)

DEFAULT_BR = 4
MAX_BR = 8
DEFAULT_SAMPLE_SIZE = 10000
DEFAULT_SEED = 0


class SymbolSequence:
    """Ordered sequence of non-negative integer symbol IDs.

    >>> seq = SymbolSequence([0, 1, 1, 1, 0, 0, 2, 2])
    >>> len(seq), seq.alphabet()
    (8, [0, 1, 2])
    """

    def __init__(self, elements: Iterable[int] = ()):
        if isinstance(elements, SymbolSequence):
            array = elements.elements
        elif isinstance(elements, np.ndarray):
            if elements.size and elements.dtype.kind == 'i' \
               and elements.min() < 0:
                raise ValueError('Symbol IDs must be non-negative.')
            array = np.array(elements, dtype=np.uint64)
        else:
            elements = list(elements)
            if any(int(x) < 0 for x in elements):
                raise ValueError('Symbol IDs must be non-negative.')
            array = np.array(elements, dtype=np.uint64)
        array = array.reshape(-1)
        array.flags.writeable = False
        self._elements = array

    @property
    def elements(self) -> np.ndarray:
        return self._elements

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return (int(x) for x in self._elements)

    def __getitem__(self, index):
        return int(self._elements[index])

    def __eq__(self, other):
        if not isinstance(other, SymbolSequence):
            return NotImplemented
        return np.array_equal(self._elements, other._elements)

    def __repr__(self):
        return f'SymbolSequence({self.tolist()!r})'

    def tolist(self):
        return [int(x) for x in self._elements]

    def alphabet(self):
        """Sorted list of the distinct symbols."""
        return [int(x) for x in np.unique(self._elements)]

    def validate(self, representation: Representation):
        """Raise RepresentationError if an element does not fit."""
        if isinstance(representation, BitPacking):
            check_bitpacked(self._elements, representation.width)
        else:
            varlen_widths(self._elements)


@dataclass(frozen=True)
class DistributionEstimate:
    """Per-symbol occurrence counts.

    `source` is 'full-pass' or 'sampled'; sampled estimates also record
    the sample size and seed.
    """

    counts: Mapping[int, int]
    total: int
    source: str = 'full-pass'
    sample_size: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self):
        assert sum(self.counts.values()) == self.total, \
            'Counts do not add up to the total.'
        assert all(count > 0 for count in self.counts.values()), \
            'Only observed symbols may be counted.'
        assert self.source in {'full-pass', 'sampled'}

    @classmethod
    def from_elements(cls, elements: np.ndarray, **kwargs):
        symbols, counts = np.unique(np.asarray(elements, dtype=np.uint64),
                                    return_counts=True)
        counts = {int(x): int(n) for x, n in zip(symbols, counts)}
        return cls(counts=counts, total=sum(counts.values()), **kwargs)

    def __len__(self):
        return len(self.counts)

    def symbols(self):
        return sorted(self.counts)

    def probability(self, symbol: int) -> Fraction:
        """Exact empirical probability of `symbol`."""
        return Fraction(self.counts.get(symbol, 0), self.total)

    def probabilities(self) -> Dict[int, float]:
        return {x: self.counts[x] / self.total for x in self.symbols()}


class Mode(Enum):
    """Policies for choosing the symbols that are run-length encoded.

    The values are the mode codes stored in container flags.
    """

    OURS = 0
    VRLE = 1
    DRLE = 2
    ORACLE = 3

    @classmethod
    def from_name(cls, name: str) -> 'Mode':
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f'Unknown mode {name!r}. Use one of '
                             f'{", ".join(m.name.lower() for m in cls)}.') \
                from None

    def __str__(self):
        return self.name.lower()


@dataclass(frozen=True)
class CodecConfig:
    """Run-control width, symbol representation and selection mode."""

    b_r: int = DEFAULT_BR
    representation: Representation = field(default_factory=VariableLength)
    mode: Mode = Mode.OURS

    def __post_init__(self):
        if not 1 <= self.b_r <= MAX_BR:
            raise ValueError(f'b_r must be in [1, {MAX_BR}], got {self.b_r}.')

    @property
    def max_run(self) -> int:
        """Longest run one run-control element can represent."""
        return 2 ** self.b_r

    @property
    def b_x(self) -> int:
        """Bit-packing width or 0 under variable-length."""
        if isinstance(self.representation, BitPacking):
            return self.representation.width
        return 0


@dataclass(frozen=True)
class SuitableSet:
    """Symbols selected for run-length encoding.

    `thresholds` holds the per-symbol threshold values that were compared
    against (only set by the threshold based policy).
    """

    members: FrozenSet[int]
    mode: Mode
    thresholds: Tuple[Tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'members',
                           frozenset(int(x) for x in self.members))

    def __contains__(self, symbol):
        return int(symbol) in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def sorted_members(self):
        return sorted(self.members)
