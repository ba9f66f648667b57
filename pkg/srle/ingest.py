"""Turn input files into symbol sequences.

Raw inputs are streams of u8 or little-endian u64 integers. CSV columns
are read as opaque strings and mapped to integer IDs in order of first
appearance. The mapping is kept in a :class:`Dictionary` that is stored
next to the compressed file so it can be inverted.
"""
import csv
import io
import struct
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from srle.core.errors import FormatError, RepresentationError
from srle.core.sequence import (DEFAULT_SAMPLE_SIZE, DEFAULT_SEED,
                                DistributionEstimate, SymbolSequence)
from srle.core.utils import atomic_output

RAW_KINDS = {'u8': np.dtype('u1'), 'u64le': np.dtype('<u8')}
DICTIONARY_SUFFIX = '.dict'
_ENTRY_LENGTH = struct.Struct('<I')


@dataclass(frozen=True)
class Dictionary:
    """Distinct strings in ID order.

    >>> d = Dictionary.from_entries(['cat', 'dog'])
    >>> d.index['dog'], d.entries[0]
    (1, 'cat')
    """

    entries: Tuple[str, ...] = ()
    index: Dict[str, int] = field(default_factory=dict, compare=False)

    @classmethod
    def from_entries(cls, entries):
        entries = tuple(entries)
        index = {entry: i for i, entry in enumerate(entries)}
        if len(index) != len(entries):
            raise FormatError('Dictionary entries are not distinct.')
        return cls(entries, index)

    def __len__(self):
        return len(self.entries)


def dictionary_map(strings) -> Tuple[SymbolSequence, Dictionary]:
    """Replace every string by the ID of its first appearance.

    >>> seq, d = dictionary_map(['cat', 'dog', 'cat'])
    >>> seq.tolist(), d.entries
    ([0, 1, 0], ('cat', 'dog'))
    """
    index = {}
    ids = [index.setdefault(string, len(index)) for string in strings]
    return (SymbolSequence(np.array(ids, dtype=np.uint64)),
            Dictionary(tuple(index), index))


def dictionary_unmap(seq: SymbolSequence,
                     dictionary: Dictionary) -> List[str]:
    """Inverse of :func:`dictionary_map`."""
    elements = seq.elements
    if len(elements) and int(elements.max()) >= len(dictionary):
        raise FormatError(f'Symbol {int(elements.max())} is not in the '
                          f'dictionary of {len(dictionary)} entries.')
    entries = dictionary.entries
    return [entries[i] for i in elements.tolist()]


def sample_distribution(seq: SymbolSequence,
                        sample_size: int = DEFAULT_SAMPLE_SIZE,
                        seed: int = DEFAULT_SEED) -> DistributionEstimate:
    """Estimate symbol counts from a uniform sample without replacement.

    Sequences no longer than `sample_size` are counted in full.
    """
    if sample_size < 1:
        raise ValueError(f'sample_size must be at least 1, got '
                         f'{sample_size}.')
    if len(seq) <= sample_size:
        return DistributionEstimate.from_elements(seq.elements)
    rng = np.random.default_rng(seed)
    indices = rng.choice(len(seq), size=sample_size, replace=False)
    return DistributionEstimate.from_elements(
        seq.elements[indices], source='sampled', sample_size=sample_size,
        seed=seed)


def _check_kind(kind):
    if kind not in RAW_KINDS:
        raise ValueError(f'Unknown element kind {kind!r}. Use one of '
                         f'{", ".join(RAW_KINDS)}.')
    return RAW_KINDS[kind]


def ingest_raw(data: bytes, kind: str) -> SymbolSequence:
    """Read a stream of fixed-size unsigned integers.

    >>> ingest_raw(bytes([1, 0, 2, 3]), 'u8').tolist()
    [1, 0, 2, 3]
    """
    dtype = _check_kind(kind)
    if len(data) % dtype.itemsize:
        raise FormatError(f'{len(data)} bytes is not a whole number of '
                          f'{dtype.itemsize} byte {kind} elements.')
    return SymbolSequence(np.frombuffer(data, dtype=dtype).astype(np.uint64))


def raw_bytes(seq: SymbolSequence, kind: str) -> bytes:
    """Inverse of :func:`ingest_raw`."""
    dtype = _check_kind(kind)
    elements = seq.elements
    if kind == 'u8' and len(elements) and elements.max() > 0xFF:
        raise RepresentationError(f'Symbol {int(elements.max())} does not '
                                  'fit in a u8 element.')
    return elements.astype(dtype).tobytes()


def ingest_csv_column(text: str, column: Union[str, int],
                      has_header: bool) -> Tuple[SymbolSequence,
                                                 Dictionary]:
    """Read one column of a CSV document and map it to IDs.

    `column` is a header name or a zero-based index. Every row must have
    as many fields as the first row.

    >>> seq, d = ingest_csv_column('c\\na\\nb\\na', 'c', has_header=True)
    >>> seq.tolist(), d.entries
    ([0, 1, 0], ('a', 'b'))
    """
    reader = csv.reader(io.StringIO(text, newline=''))
    cells = []
    width = None
    position = None
    for row in reader:
        if width is None:
            width = len(row)
            if has_header:
                position = _column_position(row, column)
                continue
            position = _column_position(None, column)
            if position >= width:
                raise FormatError(f'Column {column} does not exist, the '
                                  f'first row has {width} fields.')
        if len(row) != width:
            raise FormatError(f'Line {reader.line_num}: expected {width} '
                              f'fields, got {len(row)}.')
        cells.append(row[position])
    if width is None and has_header:
        raise FormatError('The CSV input has no header row.')
    return dictionary_map(cells)


def _column_position(header: Optional[List[str]], column) -> int:
    if isinstance(column, int):
        if column < 0:
            raise ValueError(f'Column index must be non-negative, got '
                             f'{column}.')
        if header is not None and column >= len(header):
            raise FormatError(f'Column {column} does not exist, the header '
                              f'has {len(header)} fields.')
        return column
    if header is None:
        raise ValueError(f'Column {column!r} is a name but the input has '
                         'no header.')
    if column not in header:
        raise FormatError(f'Column {column!r} not found in header '
                          f'{header}.')
    return header.index(column)


def encode_dictionary(dictionary: Dictionary) -> bytes:
    """Length-prefixed UTF-8 entries in ID order."""
    chunks = []
    for entry in dictionary.entries:
        raw = entry.encode('utf-8')
        chunks.append(_ENTRY_LENGTH.pack(len(raw)))
        chunks.append(raw)
    return b''.join(chunks)


def decode_dictionary(data: bytes) -> Dictionary:
    entries = []
    offset = 0
    while offset < len(data):
        if offset + _ENTRY_LENGTH.size > len(data):
            raise FormatError('Truncated dictionary entry length.')
        size, = _ENTRY_LENGTH.unpack_from(data, offset)
        offset += _ENTRY_LENGTH.size
        if offset + size > len(data):
            raise FormatError(f'Truncated dictionary entry at byte {offset}.')
        try:
            entries.append(data[offset:offset + size].decode('utf-8'))
        except UnicodeDecodeError as error:
            raise FormatError(f'Dictionary entry is not UTF-8: {error}.') \
                from None
        offset += size
    return Dictionary.from_entries(entries)


def dictionary_path(path: Union[str, Path]) -> Path:
    path = Path(path)
    return path.with_name(path.name + DICTIONARY_SUFFIX)


def write_dictionary(path: Union[str, Path], dictionary: Dictionary):
    with atomic_output(path) as tmp:
        tmp.write_bytes(encode_dictionary(dictionary))


def read_dictionary(path: Union[str, Path]) -> Dictionary:
    return decode_dictionary(Path(path).read_bytes())


def read_text(path: Union[str, Path]) -> str:
    data = Path(path).read_bytes()
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as error:
        raise FormatError(f'{path} is not UTF-8 text: {error}.') from None


def read_sequence(path: Union[str, Path], fmt: Tuple[str, object],
                  has_header: bool = True
                  ) -> Tuple[SymbolSequence, Optional[Dictionary]]:
    """Ingest a file given a parsed input format.

    Returns the dictionary for CSV input and None for raw input.
    """
    kind, column = fmt
    if kind == 'csv':
        return ingest_csv_column(read_text(path), column, has_header)
    return ingest_raw(Path(path).read_bytes(), kind), None


def csv_text(cells: List[str]) -> str:
    """Write one cell per row."""
    buffer = io.StringIO(newline='')
    writer = csv.writer(buffer, lineterminator='\n')
    for cell in cells:
        writer.writerow([cell])
    return buffer.getvalue()
