"""Selective run-length encoding.

Maximal runs of symbols in the suitable set are emitted as one
encoded-variable entry and one run-control entry per division, runs
longer than 2^b_r being split. All other symbols are appended to the
encoded variable verbatim and get no run-control entry.

>>> from srle.core.sequence import SymbolSequence, SuitableSet, Mode
>>> seq = SymbolSequence([0, 1, 1, 1, 0, 0, 2, 2])
>>> pair = encode_pair(seq, SuitableSet({0, 1}, Mode.OURS), CodecConfig())
>>> pair.encoded_variable.tolist(), pair.run_control.tolist()
([0, 1, 0, 2, 2], [1, 3, 2])
"""
from typing import List, Tuple

import numpy as np

from srle.bitio import (MAX_BITPACK_WIDTH, BitPacking, BitReader, BitWriter,
                        Representation, VariableLength, bitpack_width,
                        pack_values, symbol_widths)
from srle.container import (EncodedPair, SrleContainer, check_members,
                            deserialize, member_array, read_pair, serialize)
from srle.core.sequence import (CodecConfig, DistributionEstimate, Mode,
                                SuitableSet, SymbolSequence)
from srle.core.suitability import suitable_set_for_mode

__all__ = ['EncodedPair', 'SrleContainer', 'split_run', 'find_runs',
           'encode_pair', 'encode', 'decode', 'exploratory_suitable_set',
           'select_suitable_set', 'payload_bits', 'raw_payload_bits',
           'compression_ratio', 'make_config', 'check_representation_options',
           'read_encoded_pair', 'serialize', 'deserialize']


def split_run(n: int, b_r: int) -> List[int]:
    """Split a run of length `n` into divisions of at most 2^b_r.

    >>> split_run(10, 2)
    [4, 4, 2]
    """
    if n < 1:
        raise ValueError(f'Run length must be at least 1, got {n}.')
    full, rest = divmod(n, 2 ** b_r)
    return [2 ** b_r] * full + ([rest] if rest else [])


def find_runs(elements: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Return the symbols and lengths of the maximal runs."""
    if not len(elements):
        return elements[:0], np.zeros(0, dtype=np.int64)
    starts = np.flatnonzero(np.concatenate(
        ([True], elements[1:] != elements[:-1])))
    lengths = np.diff(np.append(starts, len(elements)))
    return elements[starts], lengths


def _divisions(lengths, b_r):
    return -(-lengths // 2 ** b_r)


def encode_pair(seq: SymbolSequence, g: SuitableSet,
                config: CodecConfig) -> EncodedPair:
    """Produce the encoded variable and run-control variable."""
    symbols, lengths = find_runs(seq.elements)
    is_member = np.isin(symbols, member_array(g))
    divisions = _divisions(lengths, config.b_r)
    repeats = np.where(is_member, divisions, lengths)
    encoded_variable = np.repeat(symbols, repeats)

    member_divisions = divisions[is_member]
    run_control = np.full(int(member_divisions.sum()), config.max_run,
                          dtype=np.int64)
    last = np.cumsum(member_divisions) - 1
    run_control[last] = (lengths[is_member]
                         - (member_divisions - 1) * config.max_run)
    return EncodedPair(encoded_variable, run_control)


def encode(seq: SymbolSequence, g: SuitableSet,
           config: CodecConfig) -> SrleContainer:
    """Encode `seq` into a container.

    Raises :class:`srle.core.errors.RepresentationError` if a symbol or a
    member of `g` does not fit the configured representation.
    """
    seq.validate(config.representation)
    check_members(member_array(g), config)
    pair = encode_pair(seq, g, config)

    encoded = BitWriter()
    pack_values(pair.encoded_variable, config.representation, encoded)
    run_control = BitWriter()
    pack_values(pair.run_control - 1, BitPacking(config.b_r), run_control)
    return SrleContainer(config=config, length=len(seq), suitable=g,
                         encoded_count=len(pair.encoded_variable),
                         encoded=encoded.to_bitstream(),
                         run_control=run_control.to_bitstream())


def read_encoded_pair(container: SrleContainer) -> EncodedPair:
    """Parse the two bitstreams of a container."""
    reader = BitReader(container.encoded.data + container.run_control.data)
    pair, _, _ = read_pair(reader, container.config,
                           member_array(container.suitable),
                           container.encoded_count, container.length,
                           check_padding=True)
    return pair


def decode(container: SrleContainer) -> SymbolSequence:
    """Reconstruct the sequence.

    The encoded variable is parsed first, then one run-control value per
    member entry, and finally members are expanded by their run lengths
    while other entries are copied once.
    """
    pair = container.pair
    if pair is None:
        pair = read_encoded_pair(container)
    is_member = np.isin(pair.encoded_variable,
                        member_array(container.suitable))
    repeats = np.ones(len(pair.encoded_variable), dtype=np.int64)
    repeats[is_member] = pair.run_control
    return SymbolSequence(np.repeat(pair.encoded_variable, repeats))


def exploratory_suitable_set(seq: SymbolSequence,
                             config: CodecConfig) -> SuitableSet:
    """Select symbols by their actual savings under vanilla RLE.

    One pass counts for every symbol x its occurrences N_x and its
    divisions D_x after splitting. x is selected if
    b_x * N_x >= (b_x + b_r) * D_x.
    """
    symbols, lengths = find_runs(seq.elements)
    if not len(symbols):
        return SuitableSet(frozenset(), Mode.ORACLE)
    alphabet, owner = np.unique(symbols, return_inverse=True)
    occurrences = np.bincount(owner, weights=lengths).astype(np.int64)
    divisions = np.bincount(
        owner, weights=_divisions(lengths, config.b_r)).astype(np.int64)
    b_x = symbol_widths(alphabet, config.representation)
    keep = b_x * occurrences >= (b_x + config.b_r) * divisions
    return SuitableSet(frozenset(int(x) for x in alphabet[keep]),
                       Mode.ORACLE)


def select_suitable_set(seq: SymbolSequence, dist: DistributionEstimate,
                        config: CodecConfig,
                        finite: bool = False) -> SuitableSet:
    """Build the suitable set for `config.mode`.

    With `finite` the threshold of the ours mode keeps the N / (N - 1)
    factor for the length of `seq`.
    """
    if config.mode is Mode.ORACLE:
        return exploratory_suitable_set(seq, config)
    length = len(seq) if finite else None
    return suitable_set_for_mode(config.mode, dist, config, length=length)


REPRESENTATIONS = ('bitpack', 'varlen')


def check_representation_options(representation: str, bx=None):
    """Validate representation flags before any input is read."""
    if representation not in REPRESENTATIONS:
        raise ValueError(f'Unknown representation {representation!r}. Use '
                         f'one of {", ".join(REPRESENTATIONS)}.')
    if bx is not None:
        if representation != 'bitpack':
            raise ValueError('--bx only applies to the bitpack '
                             'representation.')
        if not 1 <= bx <= MAX_BITPACK_WIDTH:
            raise ValueError(f'--bx must be in [1, {MAX_BITPACK_WIDTH}], got '
                             f'{bx}.')


def make_config(seq: SymbolSequence, mode: str, b_r: int,
                representation: str, bx=None) -> CodecConfig:
    """Codec configuration for compressing `seq`.

    Bit-packing uses the minimal width of the alphabet of `seq` unless a
    width `bx` is given.
    """
    check_representation_options(representation, bx)
    if representation == 'varlen':
        chosen = VariableLength()
    else:
        alphabet = seq.alphabet()
        chosen = BitPacking(bx or (bitpack_width(alphabet) if alphabet
                                   else 1))
    seq.validate(chosen)
    return CodecConfig(b_r=b_r, representation=chosen,
                       mode=Mode.from_name(mode))


def payload_bits(pair: EncodedPair, representation: Representation,
                 b_r: int) -> int:
    """Bits of the two streams, without padding."""
    widths = symbol_widths(pair.encoded_variable, representation)
    return int(widths.sum()) + b_r * len(pair.run_control)


def raw_payload_bits(seq: SymbolSequence,
                     representation: Representation) -> int:
    """Bits of the sequence written without run-length encoding."""
    return int(symbol_widths(seq.elements, representation).sum())


def compression_ratio(input_bits: int, output_bits: int) -> float:
    """Input size over output size, 1 if both are empty.

    >>> compression_ratio(24, 16)
    1.5
    """
    if not output_bits:
        return 1.0 if not input_bits else float('inf')
    return input_bits / output_bits
