"""Compress a file into an .srle container."""
import click

from srle.core import (command, option, argument, SRLEResult,
                       prepare_result, InputFormat, atomic_output, log)
from srle.bitio import MAX_BITPACK_WIDTH
from srle.core.sequence import DEFAULT_BR, DEFAULT_SAMPLE_SIZE, DEFAULT_SEED

MODES = ['ours', 'vrle', 'drle', 'oracle']


@prepare_result
class Result(SRLEResult):

    N: int
    g_size: int
    input_bits: int
    output_bits: int
    header_bits: int
    ratio: float

    key_descriptions = {
        'N': 'Number of input elements.',
        'g_size': 'Number of symbols selected for run-length encoding.',
        'input_bits': 'Payload bits of the input in its representation.',
        'output_bits': 'Payload bits of the encoded and run-control streams.',
        'header_bits': 'Container bits besides the payload, incl. padding.',
        'ratio': 'Compression ratio input_bits / output_bits.',
    }


def compress_sequence(seq, mode, br, representation, sample_size, seed,
                      bx=None, finite_threshold=False):
    """Select the suitable set and encode.

    Returns the serialized container and the size accounting.
    """
    from srle.codec import (compression_ratio, encode, make_config,
                            raw_payload_bits, select_suitable_set, serialize)
    from srle.ingest import sample_distribution

    config = make_config(seq, mode, br, representation, bx)
    dist = sample_distribution(seq, sample_size, seed)
    suitable = select_suitable_set(seq, dist, config,
                                   finite=finite_threshold)
    container = encode(seq, suitable, config)
    data = serialize(container)

    input_bits = raw_payload_bits(seq, config.representation)
    output_bits = container.payload_bits
    sizes = dict(N=len(seq),
                 g_size=len(suitable),
                 input_bits=input_bits,
                 output_bits=output_bits,
                 header_bits=8 * len(data) - output_bits,
                 ratio=compression_ratio(input_bits, output_bits))
    return data, sizes


@command('srle.compress', returns=Result, output_format='jsonline')
@argument('input')
@argument('output')
@option('--mode', help='Policy choosing the run-length encoded symbols.',
        type=click.Choice(MODES))
@option('--br', help='Bits of one run-control element.',
        type=click.IntRange(1, 8))
@option('--repr', 'representation', help='Symbol representation.',
        type=click.Choice(['bitpack', 'varlen']))
@option('--format', 'fmt', help='Input format: u8, u64le or csv:<column>.',
        type=InputFormat())
@option('--sample-size', help='Elements sampled to estimate the '
        'distribution.', type=click.IntRange(min=1))
@option('--seed', help='Seed of the sampler.', type=int)
@option('--bx', help='Bit-packing width, default is the minimal width.',
        type=click.IntRange(1, MAX_BITPACK_WIDTH))
@option('--finite-threshold/--no-finite-threshold',
        help='Keep the N / (N - 1) factor in the suitability threshold.')
@option('--has-header/--no-header', help='CSV input has a header row.')
def main(input: str,
         output: str,
         mode: str = 'ours',
         br: int = DEFAULT_BR,
         representation: str = 'varlen',
         fmt: str = 'u8',
         sample_size: int = DEFAULT_SAMPLE_SIZE,
         seed: int = DEFAULT_SEED,
         bx: int = None,
         finite_threshold: bool = False,
         has_header: bool = True) -> Result:
    """Compress INPUT into the container OUTPUT.

    CSV input also writes the dictionary sidecar OUTPUT.dict. One JSON
    line with the size accounting is printed to standard output.
    """
    from srle.codec import check_representation_options
    from srle.ingest import dictionary_path, read_sequence, write_dictionary

    check_representation_options(representation, bx)
    fmt = InputFormat().convert(fmt, None, None)

    seq, dictionary = read_sequence(input, fmt, has_header)
    data, sizes = compress_sequence(seq, mode, br, representation,
                                    sample_size, seed, bx=bx,
                                    finite_threshold=finite_threshold)

    with atomic_output(output) as tmp:
        tmp.write_bytes(data)
    if dictionary is not None:
        write_dictionary(dictionary_path(output), dictionary)
    log(f'Wrote {len(data)} bytes to {output}.')
    return Result.fromdata(**sizes)


if __name__ == '__main__':
    main.cli()
