"""Decompress an .srle container."""
from pathlib import Path

from srle.core import (command, option, argument, SRLEResult,
                       prepare_result, InputFormat, atomic_output, log)


@prepare_result
class Result(SRLEResult):

    N: int
    output_bytes: int

    key_descriptions = {
        'N': 'Number of decoded elements.',
        'output_bytes': 'Size of the reconstructed file.',
    }


def decompress_bytes(data: bytes, fmt, dictionary=None):
    """Decode a serialized container into the original file content.

    Returns the content and the number of decoded elements.
    """
    from srle.codec import decode, deserialize
    from srle.ingest import csv_text, dictionary_unmap, raw_bytes

    seq = decode(deserialize(data))
    kind, _ = fmt
    if kind == 'csv':
        cells = dictionary_unmap(seq, dictionary)
        return csv_text(cells).encode('utf-8'), len(seq)
    return raw_bytes(seq, kind), len(seq)


@command('srle.decompress', returns=Result, output_format='jsonline')
@argument('input')
@argument('output')
@option('--format', 'fmt', help='Format to write: u8, u64le or '
        'csv:<column>. Defaults to csv if the sidecar INPUT.dict exists '
        'and to u8 otherwise.', type=InputFormat())
def main(input: str, output: str, fmt: str = None) -> Result:
    """Decompress the container INPUT into OUTPUT.

    Nothing is written if the container is corrupt.
    """
    from srle.ingest import dictionary_path, read_dictionary

    if fmt is None:
        fmt = 'csv:0' if dictionary_path(input).is_file() else 'u8'
    fmt = InputFormat().convert(fmt, None, None)
    dictionary = None
    if fmt[0] == 'csv':
        dictionary = read_dictionary(dictionary_path(input))
    data, length = decompress_bytes(Path(input).read_bytes(), fmt,
                                    dictionary)
    with atomic_output(output) as tmp:
        tmp.write_bytes(data)
    log(f'Wrote {len(data)} bytes to {output}.')
    return Result.fromdata(N=length, output_bytes=len(data))


if __name__ == '__main__':
    main.cli()
