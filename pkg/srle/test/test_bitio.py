import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from srle.bitio import (BitPacking, BitReader, BitWriter, VariableLength,
                        bitpack_width, decode_bitpacked, decode_varlen,
                        encode_bitpacked, encode_varlen, pack_values,
                        symbol_width, symbol_widths, unpack_values,
                        varlen_width)
from srle.core.errors import (FormatError, RepresentationError,
                              TruncatedStreamError)


@pytest.mark.ci
@pytest.mark.parametrize('alphabet,width', [
    ([0, 1, 2], 2),
    ([0], 1),
    (range(256), 8),
    ([2 ** 40], 41),
])
def test_bitpack_width(alphabet, width):
    assert bitpack_width(alphabet) == width


@pytest.mark.ci
def test_bitpack_width_empty():
    with pytest.raises(ValueError):
        bitpack_width([])


@pytest.mark.ci
def test_encode_bitpacked():
    writer = BitWriter()
    encode_bitpacked(5, 3, writer)
    assert writer.to01() == '101'
    assert decode_bitpacked(BitReader(writer.getvalue()), 3) == 5


@pytest.mark.ci
def test_encode_bitpacked_overflow():
    with pytest.raises(RepresentationError):
        encode_bitpacked(8, 3, BitWriter())


@pytest.mark.ci
@pytest.mark.parametrize('value,bits', [
    (0, '00000'),
    (1, '00001'),
    (5, '0010101'),
    (65535, '1111' + '1' * 16),
])
def test_encode_varlen(value, bits):
    writer = BitWriter()
    encode_varlen(value, writer)
    assert writer.to01() == bits
    assert decode_varlen(BitReader(writer.getvalue())) == value


@pytest.mark.ci
def test_varlen_rejects_wide_values():
    with pytest.raises(RepresentationError):
        varlen_width(65536)
    with pytest.raises(RepresentationError):
        encode_varlen(2 ** 16, BitWriter())


@pytest.mark.ci
def test_symbol_width():
    assert symbol_width(5, VariableLength()) == 7
    assert symbol_width(0, VariableLength()) == 5
    assert symbol_width(3, BitPacking(2)) == 2
    with pytest.raises(RepresentationError):
        symbol_width(4, BitPacking(2))


@pytest.mark.ci
def test_bitpacking_width_range():
    with pytest.raises(RepresentationError):
        BitPacking(0)
    with pytest.raises(RepresentationError):
        BitPacking(65)
    assert str(BitPacking(64)) == 'bitpack(64)'


@pytest.mark.ci
def test_writer_pads_with_zeros():
    writer = BitWriter()
    writer.write_uint(1, 1)
    assert writer.bit_length == 1
    assert writer.getvalue() == b'\x80'
    stream = writer.to_bitstream()
    assert stream.bit_length == 1 and stream.data == b'\x80'


@pytest.mark.ci
def test_reader_truncation():
    reader = BitReader(b'\xff', bit_length=6)
    assert reader.read_uint(4) == 15
    with pytest.raises(TruncatedStreamError):
        reader.read_uint(3)


@pytest.mark.ci
def test_reader_align_rejects_nonzero_padding():
    reader = BitReader(b'\x81')
    reader.read_uint(1)
    with pytest.raises(FormatError):
        reader.align()

    reader = BitReader(b'\x80')
    reader.read_uint(1)
    reader.align()
    assert reader.remaining == 0


@pytest.mark.ci
def test_symbol_widths_matches_scalar(rng):
    values = rng.integers(0, 2 ** 16, size=500)
    widths = symbol_widths(values, VariableLength())
    assert widths.tolist() == [symbol_width(int(v), VariableLength())
                               for v in values]


@pytest.mark.ci
@pytest.mark.parametrize('representation', [VariableLength(), BitPacking(3),
                                            BitPacking(64)])
def test_pack_values_matches_scalar_encoders(representation):
    values = np.array([0, 1, 7, 2, 5, 5], dtype=np.uint64)
    vectorised = BitWriter()
    pack_values(values, representation, vectorised)

    scalar = BitWriter()
    for value in values:
        if isinstance(representation, VariableLength):
            encode_varlen(value, scalar)
        else:
            encode_bitpacked(value, representation.width, scalar)
    assert vectorised.to01() == scalar.to01()


@pytest.mark.ci
def test_pack_values_rejects_overflow():
    with pytest.raises(RepresentationError):
        pack_values(np.array([4], dtype=np.uint64), BitPacking(2),
                    BitWriter())
    with pytest.raises(RepresentationError):
        pack_values(np.array([2 ** 16], dtype=np.uint64), VariableLength(),
                    BitWriter())


@pytest.mark.ci
def test_unpack_values_checks_count_before_reading():
    with pytest.raises(TruncatedStreamError):
        unpack_values(BitReader(b'\x00'), VariableLength(), 2 ** 40)
    with pytest.raises(TruncatedStreamError):
        unpack_values(BitReader(b'\x00'), BitPacking(3), 3)


@st.composite
def bitpacked_values(draw):
    width = draw(st.integers(1, 64))
    values = draw(st.lists(st.integers(0, 2 ** width - 1), max_size=50))
    return width, values


@pytest.mark.ci
@settings(max_examples=300, deadline=None)
@given(bitpacked_values())
def test_pack_unpack_bitpacked(width_and_values):
    width, values = width_and_values
    values = np.array(values, dtype=np.uint64)
    writer = BitWriter()
    pack_values(values, BitPacking(width), writer)
    assert writer.bit_length == width * len(values)
    reader = BitReader(writer.getvalue(), writer.bit_length)
    unpacked = unpack_values(reader, BitPacking(width), len(values))
    assert unpacked.tolist() == values.tolist()
    assert reader.remaining == 0


@pytest.mark.ci
@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 2 ** 16 - 1), max_size=50))
def test_pack_unpack_varlen(values):
    values = np.array(values, dtype=np.uint64)
    writer = BitWriter()
    pack_values(values, VariableLength(), writer)
    reader = BitReader(writer.getvalue(), writer.bit_length)
    unpacked = unpack_values(reader, VariableLength(), len(values))
    assert unpacked.tolist() == values.tolist()
    assert reader.remaining == 0
