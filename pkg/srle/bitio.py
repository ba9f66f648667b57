"""Bit-granular streams and the two symbol representations.

Bits are stored most-significant bit first within every byte and
finished buffers are padded with zero bits up to the next byte boundary.

Symbols are written either bit-packed, ie. every symbol takes the same
number of bits, or variable-length, where every symbol is a 4 bit width
field (storing width - 1) followed by the value in the minimal number of
bits:

>>> writer = BitWriter()
>>> encode_varlen(5, writer)
>>> writer.to01()
'0010101'
>>> decode_varlen(BitReader(writer.getvalue()))
5
"""
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np
from bitarray import bitarray
from bitarray.util import ba2int, int2ba

from srle.core.errors import (FormatError, RepresentationError,
                              TruncatedStreamError)

VARLEN_HEADER_BITS = 4
VARLEN_MAX_WIDTH = 16
MAX_BITPACK_WIDTH = 64

_POWERS_OF_TWO = 2 ** np.arange(VARLEN_MAX_WIDTH + 1, dtype=np.uint64)


@dataclass(frozen=True)
class BitPacking:
    """Every symbol is represented by `width` bits."""

    width: int

    def __post_init__(self):
        if not 1 <= self.width <= MAX_BITPACK_WIDTH:
            raise RepresentationError(
                f'Bit-packing width must be in [1, {MAX_BITPACK_WIDTH}], '
                f'got {self.width}.')

    def __str__(self):
        return f'bitpack({self.width})'


@dataclass(frozen=True)
class VariableLength:
    """Every symbol is a 4 bit width field followed by its minimal bits."""

    def __str__(self):
        return 'varlen'


Representation = Union[BitPacking, VariableLength]


@dataclass(frozen=True)
class BitStream:
    """Finished, immutable bit buffer."""

    data: bytes
    bit_length: int

    def __post_init__(self):
        assert 0 <= self.bit_length <= 8 * len(self.data), \
            f'bit_length={self.bit_length} exceeds {len(self.data)} bytes.'


class BitWriter:
    """Append-only bit buffer backed by a big-endian bitarray."""

    def __init__(self):
        self._bits = bitarray(endian='big')

    @property
    def bit_length(self) -> int:
        return len(self._bits)

    def write_uint(self, value: int, width: int):
        """Write `value` as exactly `width` bits."""
        value = int(value)
        if width < 1 or value < 0 or value >> width:
            raise RepresentationError(
                f'Value {value} does not fit in {width} bits.')
        self._bits.extend(int2ba(value, length=width, endian='big'))

    def write_bits(self, bits: bitarray):
        self._bits.extend(bits)

    def align(self):
        """Pad with zero bits up to the next byte boundary."""
        self._bits.fill()

    def getvalue(self) -> bytes:
        """Return the buffer zero-padded to whole bytes."""
        return self._bits.tobytes()

    def to_bitstream(self) -> BitStream:
        return BitStream(self.getvalue(), self.bit_length)

    def to01(self) -> str:
        return self._bits.to01()


class BitReader:
    """Sequential reader over a byte buffer."""

    def __init__(self, data: bytes, bit_length: int = None):
        self._bits = bitarray(endian='big')
        self._bits.frombytes(bytes(data))
        if bit_length is None:
            bit_length = len(self._bits)
        assert bit_length <= len(self._bits)
        self._end = bit_length
        self.position = 0

    @property
    def remaining(self) -> int:
        return self._end - self.position

    def _take(self, nbits: int) -> bitarray:
        if nbits > self.remaining:
            raise TruncatedStreamError(
                f'Needed {nbits} bits at bit {self.position} '
                f'but only {self.remaining} are left.')
        bits = self._bits[self.position:self.position + nbits]
        self.position += nbits
        return bits

    def read_uint(self, width: int) -> int:
        return ba2int(self._take(width), signed=False)

    def read_bits(self, nbits: int) -> bitarray:
        return self._take(nbits)

    def align(self):
        """Skip the zero padding up to the next byte boundary."""
        pad = -self.position % 8
        if pad and self._take(pad).any():
            raise FormatError('Non-zero padding bits.')


def bitpack_width(alphabet: Iterable[int]) -> int:
    """Return the minimal bit-packing width for an alphabet.

    >>> bitpack_width(range(10))
    4
    """
    alphabet = list(alphabet)
    if not alphabet:
        raise ValueError('Cannot compute a bit-packing width of an empty '
                         'alphabet.')
    return max(1, int(max(alphabet)).bit_length())


def encode_bitpacked(value: int, b: int, writer: BitWriter):
    writer.write_uint(value, b)


def decode_bitpacked(reader: BitReader, b: int) -> int:
    return reader.read_uint(b)


def varlen_width(value: int) -> int:
    """Width of the value field of a variable-length code."""
    value = int(value)
    if value < 0 or value >> VARLEN_MAX_WIDTH:
        raise RepresentationError(
            f'Variable-length codes hold values below 2^{VARLEN_MAX_WIDTH}, '
            f'got {value}.')
    return max(1, value.bit_length())


def encode_varlen(value: int, writer: BitWriter):
    width = varlen_width(value)
    writer.write_uint(width - 1, VARLEN_HEADER_BITS)
    writer.write_uint(value, width)


def decode_varlen(reader: BitReader) -> int:
    width = reader.read_uint(VARLEN_HEADER_BITS) + 1
    return reader.read_uint(width)


def symbol_width(value: int, representation: Representation) -> int:
    """Number of bits used to represent `value`.

    >>> symbol_width(5, VariableLength())
    7
    """
    if isinstance(representation, BitPacking):
        if int(value) >> representation.width:
            raise RepresentationError(
                f'Value {value} does not fit in {representation.width} bits.')
        return representation.width
    return VARLEN_HEADER_BITS + varlen_width(value)


def width_function(representation: Representation):
    """Return a symbol -> bit width function for `representation`."""
    def width_of(value):
        return symbol_width(value, representation)
    return width_of


# Vectorised helpers used by the codec on whole sequences.

def _uint_bit_matrix(values: np.ndarray, width: int) -> np.ndarray:
    """Return the (len(values), width) matrix of MSB-first bits."""
    big_endian = np.ascontiguousarray(values, dtype='>u8')
    bits = np.unpackbits(big_endian.view(np.uint8)).reshape(-1, 64)
    return bits[:, 64 - width:]


def varlen_widths(values: np.ndarray) -> np.ndarray:
    """Value field widths of variable-length codes for an array."""
    values = np.asarray(values, dtype=np.uint64)
    if values.size and values.max() >> np.uint64(VARLEN_MAX_WIDTH):
        raise RepresentationError(
            f'Variable-length codes hold values below 2^{VARLEN_MAX_WIDTH}, '
            f'got {int(values.max())}.')
    bit_lengths = np.searchsorted(_POWERS_OF_TWO, values, side='right')
    return np.maximum(bit_lengths, 1)


def symbol_widths(values: np.ndarray,
                  representation: Representation) -> np.ndarray:
    """Array version of :func:`symbol_width`."""
    values = np.asarray(values, dtype=np.uint64)
    if isinstance(representation, BitPacking):
        check_bitpacked(values, representation.width)
        return np.full(values.shape, representation.width, dtype=np.int64)
    return VARLEN_HEADER_BITS + varlen_widths(values)


def check_bitpacked(values: np.ndarray, width: int):
    if width < MAX_BITPACK_WIDTH and values.size \
       and values.max() >> np.uint64(width):
        raise RepresentationError(
            f'Value {int(values.max())} does not fit in {width} bits.')


def pack_values(values: np.ndarray, representation: Representation,
                writer: BitWriter):
    """Write all `values` with `representation`."""
    values = np.asarray(values, dtype=np.uint64)
    if not values.size:
        return
    if isinstance(representation, BitPacking):
        check_bitpacked(values, representation.width)
        bits = _uint_bit_matrix(values, representation.width)
    else:
        widths = varlen_widths(values)
        header = _uint_bit_matrix(widths - 1, VARLEN_HEADER_BITS)
        body = _uint_bit_matrix(values, VARLEN_MAX_WIDTH)
        columns = np.arange(VARLEN_MAX_WIDTH)
        keep = columns[None, :] >= (VARLEN_MAX_WIDTH - widths)[:, None]
        rows = np.hstack([header, body])
        mask = np.hstack([np.ones_like(header, dtype=bool), keep])
        bits = rows[mask]
    packed = bitarray(endian='big')
    packed.pack(np.ascontiguousarray(bits, dtype=np.uint8).tobytes())
    writer.write_bits(packed)


def unpack_values(reader: BitReader, representation: Representation,
                  count: int) -> np.ndarray:
    """Read `count` values written by :func:`pack_values`."""
    if isinstance(representation, VariableLength):
        width = VARLEN_HEADER_BITS + 1
    else:
        width = representation.width
    if count * width > reader.remaining:
        raise TruncatedStreamError(
            f'Needed {count} values of at least {width} bits but only '
            f'{reader.remaining} bits are left.')

    if isinstance(representation, VariableLength):
        values = np.empty(count, dtype=np.uint64)
        for i in range(count):
            values[i] = decode_varlen(reader)
        return values

    bits = np.frombuffer(reader.read_bits(count * width).unpack(),
                         dtype=np.uint8).reshape(count, width)
    padded = np.zeros((count, 64), dtype=np.uint8)
    padded[:, 64 - width:] = bits
    return np.packbits(padded, axis=1).view('>u8').reshape(-1).astype(
        np.uint64)
