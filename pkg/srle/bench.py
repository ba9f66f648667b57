"""Compare the suitable set policies on one input."""
import time

import click

from srle.core import (command, option, argument, TableResult,
                       prepare_result, InputFormat, log)
from srle.bitio import MAX_BITPACK_WIDTH
from srle.core.sequence import DEFAULT_BR, DEFAULT_SAMPLE_SIZE, DEFAULT_SEED
from srle.compress import MODES

COLUMNS = ['method', 'g_size', 'output_bits', 'header_bits', 'ratio',
           'seconds']


@prepare_result
class Result(TableResult):

    input_bits: int
    columns: list
    rows: list

    key_descriptions = {
        'input_bits': 'Payload bits of the input in its representation.',
        'columns': 'Column names.',
        'rows': 'One row per method.',
    }


def bench_sequence(seq, methods, br, representation, sample_size, seed,
                   bx=None, finite_threshold=False):
    """Compress `seq` with every method and collect the table rows."""
    from srle.compress import compress_sequence

    rows = []
    input_bits = None
    for method in methods:
        tstart = time.perf_counter()
        _, sizes = compress_sequence(seq, method, br, representation,
                                     sample_size, seed, bx=bx,
                                     finite_threshold=finite_threshold)
        seconds = time.perf_counter() - tstart
        input_bits = sizes['input_bits']
        log(f'{method}: ratio {sizes["ratio"]:.4f} in {seconds:.3f} s')
        rows.append([method, sizes['g_size'], sizes['output_bits'],
                     sizes['header_bits'], sizes['ratio'], seconds])
    return input_bits, rows


@command('srle.bench', returns=Result, output_format='csv')
@argument('input')
@option('--methods', help='Method to compare, may be repeated.',
        type=click.Choice(MODES), multiple=True)
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
         methods: tuple = tuple(MODES),
         br: int = DEFAULT_BR,
         representation: str = 'varlen',
         fmt: str = 'u8',
         sample_size: int = DEFAULT_SAMPLE_SIZE,
         seed: int = DEFAULT_SEED,
         bx: int = None,
         finite_threshold: bool = False,
         has_header: bool = True) -> Result:
    """Compress INPUT with every method and report the sizes.

    The input is read once and the methods run one after another so
    that the timings do not interfere.
    """
    from srle.codec import check_representation_options
    from srle.ingest import read_sequence

    check_representation_options(representation, bx)
    fmt = InputFormat().convert(fmt, None, None)
    seq, _ = read_sequence(input, fmt, has_header)
    input_bits, rows = bench_sequence(seq, methods, br, representation,
                                      sample_size, seed, bx=bx,
                                      finite_threshold=finite_threshold)
    return Result.fromdata(input_bits=input_bits, columns=COLUMNS, rows=rows)


if __name__ == '__main__':
    main.cli()
