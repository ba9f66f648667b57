"""The .srle container.

Layout, all multi-byte integers little-endian::

    magic     4 bytes  b'SRLE'
    version   u8       1
    flags     u8       bit 0: representation (0 bit-packing, 1 variable-length)
                       bits 1-2: mode (ours, vrle, drle, oracle)
                       bits 3-7: zero
    b_r       u8
    b_x       u8       0 under variable-length
    N         u64      number of decoded elements
    count     u64      number of encoded-variable entries
    g_count   u16
    members   u64 * g_count, strictly increasing
    encoded-variable bitstream, zero-padded to a byte boundary
    run-control bitstream (length - 1 in b_r bits), zero-padded

The header determines how both bitstreams are parsed, so decoding needs
no index.
"""
import struct
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from srle.bitio import (BitPacking, BitReader, BitStream, VariableLength,
                        VARLEN_MAX_WIDTH, MAX_BITPACK_WIDTH, unpack_values)
from srle.core.errors import FormatError, RepresentationError
from srle.core.sequence import MAX_BR, CodecConfig, Mode, SuitableSet

MAGIC = b'SRLE'
VERSION = 1
HEADER = struct.Struct('<4sBBBBQQH')
MEMBER = np.dtype('<u8')
MAX_MEMBERS = 0xFFFF

_REPRESENTATION_BIT = 0x01
_MODE_SHIFT = 1
_MODE_MASK = 0x06
_RESERVED_MASK = 0xF8


@dataclass(frozen=True)
class EncodedPair:
    """The encoded variable and the run-control variable.

    `run_control` holds run lengths in [1, 2^b_r], one per entry of
    `encoded_variable` that belongs to the suitable set.
    """

    encoded_variable: np.ndarray
    run_control: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, EncodedPair):
            return NotImplemented
        return (np.array_equal(self.encoded_variable, other.encoded_variable)
                and np.array_equal(self.run_control, other.run_control))


@dataclass(frozen=True)
class SrleContainer:
    """Header fields and the two finished bitstreams.

    `pair` holds the parsed streams when the container was read by
    :func:`deserialize`.
    """

    config: CodecConfig
    length: int
    suitable: SuitableSet
    encoded_count: int
    encoded: BitStream
    run_control: BitStream
    pair: Optional[EncodedPair] = field(default=None, compare=False,
                                        repr=False)

    @property
    def header_size(self) -> int:
        """Bytes before the encoded-variable bitstream."""
        return HEADER.size + MEMBER.itemsize * len(self.suitable)

    @property
    def payload_bits(self) -> int:
        return self.encoded.bit_length + self.run_control.bit_length


def member_array(suitable: SuitableSet) -> np.ndarray:
    return np.array(suitable.sorted_members(), dtype=np.uint64)


def check_members(members: np.ndarray, config: CodecConfig,
                  error=RepresentationError):
    """Check that the suitable set can be written in the header."""
    if len(members) > MAX_MEMBERS:
        raise error(f'The suitable set has {len(members)} members, at most '
                    f'{MAX_MEMBERS} can be stored.')
    if not len(members):
        return
    if isinstance(config.representation, BitPacking):
        width = config.representation.width
        if width < MAX_BITPACK_WIDTH and len(members) > 2 ** width:
            raise error(f'{len(members)} members cannot be distinct '
                        f'{width} bit symbols.')
    else:
        width = VARLEN_MAX_WIDTH
    if width < MAX_BITPACK_WIDTH and members.max() >> np.uint64(width):
        raise error(f'Member {int(members.max())} does not fit in '
                    f'{width} bits.')


def read_pair(reader: BitReader, config: CodecConfig, members: np.ndarray,
              encoded_count: int, length: int, check_padding=False):
    """Parse both bitstreams and check that they expand to `length`.

    Returns the :class:`EncodedPair` and the bit lengths of the two
    streams. With `check_padding` the streams are expected back to back,
    each zero-padded to a byte boundary, with nothing after them.
    """
    encoded = unpack_values(reader, config.representation, encoded_count)
    encoded_bits = reader.position
    if check_padding:
        reader.align()
    rc_start = reader.position

    is_member = np.isin(encoded, members)
    run_control = unpack_values(reader, BitPacking(config.b_r),
                                int(is_member.sum())).astype(np.int64) + 1
    run_control_bits = reader.position - rc_start
    if check_padding:
        reader.align()
        if reader.remaining:
            raise FormatError(f'{reader.remaining // 8} trailing bytes after '
                              'the run-control stream.')

    expanded = int(run_control.sum()) + int((~is_member).sum())
    if expanded != length:
        raise FormatError(f'The streams decode to {expanded} elements but '
                          f'the header says {length}.')
    return EncodedPair(encoded, run_control), encoded_bits, run_control_bits


def serialize(container: SrleContainer) -> bytes:
    """Write the container as bytes.

    >>> from srle.codec import encode
    >>> from srle.core.sequence import SymbolSequence
    >>> config = CodecConfig(b_r=4, representation=BitPacking(2))
    >>> seq = SymbolSequence([0, 1, 1, 1, 0, 0, 2, 2])
    >>> data = serialize(encode(seq, SuitableSet({0, 1}, Mode.OURS), config))
    >>> data[-4:].hex()
    '12800210'
    """
    config = container.config
    flags = container.suitable.mode.value << _MODE_SHIFT
    if isinstance(config.representation, VariableLength):
        flags |= _REPRESENTATION_BIT
    members = member_array(container.suitable)
    header = HEADER.pack(MAGIC, VERSION, flags, config.b_r, config.b_x,
                         container.length, container.encoded_count,
                         len(members))
    return b''.join([header, members.astype(MEMBER).tobytes(),
                     container.encoded.data, container.run_control.data])


def deserialize(data: bytes) -> SrleContainer:
    """Parse and validate a serialized container.

    Both bitstreams are parsed so that any inconsistency between header
    and payload raises :class:`srle.core.errors.FormatError`.
    """
    data = bytes(data)
    if len(data) < len(MAGIC) or data[:len(MAGIC)] != MAGIC:
        raise FormatError(f'Not an srle container: expected magic '
                          f'{MAGIC!r}, got {data[:len(MAGIC)]!r}.')
    if len(data) < HEADER.size:
        raise FormatError(f'Truncated header: {len(data)} of {HEADER.size} '
                          'bytes.')
    (_, version, flags, b_r, b_x, length, encoded_count,
     g_count) = HEADER.unpack_from(data)

    if version != VERSION:
        raise FormatError(f'Unsupported container version {version}, '
                          f'expected {VERSION}.')
    if flags & _RESERVED_MASK:
        raise FormatError(f'Reserved flag bits are set: {flags:#04x}.')
    if not 1 <= b_r <= MAX_BR:
        raise FormatError(f'b_r={b_r} is not in [1, {MAX_BR}].')
    if flags & _REPRESENTATION_BIT:
        if b_x:
            raise FormatError(f'b_x={b_x} must be 0 under variable-length.')
        representation = VariableLength()
    else:
        if not 1 <= b_x <= MAX_BITPACK_WIDTH:
            raise FormatError(f'b_x={b_x} is not in [1, '
                              f'{MAX_BITPACK_WIDTH}].')
        representation = BitPacking(b_x)
    mode = Mode((flags & _MODE_MASK) >> _MODE_SHIFT)
    config = CodecConfig(b_r=b_r, representation=representation, mode=mode)

    offset = HEADER.size
    members_end = offset + MEMBER.itemsize * g_count
    if members_end > len(data):
        raise FormatError(f'Truncated header: {g_count} members need '
                          f'{members_end} bytes, got {len(data)}.')
    members = np.frombuffer(data[offset:members_end],
                            dtype=MEMBER).astype(np.uint64)
    if len(members) > 1 and not np.all(members[1:] > members[:-1]):
        raise FormatError('Members of the suitable set are not strictly '
                          'increasing.')
    check_members(members, config, error=FormatError)

    body = data[members_end:]
    reader = BitReader(body)
    pair, encoded_bits, run_control_bits = read_pair(
        reader, config, members, encoded_count, length, check_padding=True)
    split = -(-encoded_bits // 8)
    return SrleContainer(
        config=config, length=length,
        suitable=SuitableSet(frozenset(int(x) for x in members), mode),
        encoded_count=encoded_count,
        encoded=BitStream(body[:split], encoded_bits),
        run_control=BitStream(body[split:], run_control_bits),
        pair=pair)
