"""Per-symbol suitability diagnostics."""
import click

from srle.core import (command, option, argument, TableResult,
                       prepare_result, InputFormat)
from srle.bitio import MAX_BITPACK_WIDTH
from srle.core.sequence import DEFAULT_BR, DEFAULT_SAMPLE_SIZE, DEFAULT_SEED
from srle.compress import MODES

COLUMNS = ['symbol', 'count', 'p_hat', 'b_x', 'threshold', 'rx_approx',
           'expected_savings_bits', 'in_G']


@prepare_result
class Result(TableResult):

    columns: list
    rows: list

    key_descriptions = {
        'columns': 'Column names.',
        'rows': 'One row per observed symbol, sorted by symbol ID.',
    }


def symbol_table(seq, config, sample_size, seed, finite_threshold=False):
    """Rows of the diagnostic table for a sequence."""
    from srle.analysis import expected_savings_from_distribution
    from srle.bitio import width_function
    from srle.codec import select_suitable_set
    from srle.ingest import sample_distribution

    dist = sample_distribution(seq, sample_size, seed)
    if not dist.total:
        return []
    suitable = select_suitable_set(seq, dist, config,
                                   finite=finite_threshold)
    savings = expected_savings_from_distribution(
        dist, config.b_r, width_function(config.representation),
        length=len(seq), finite=finite_threshold)
    return [[row.symbol, row.count, row.p_hat, row.b_x, row.threshold,
             row.rx, row.expected_savings_bits, row.symbol in suitable]
            for row in savings]


@command('srle.stats', returns=Result, output_format='csv')
@argument('input')
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
         mode: str = 'ours',
         br: int = DEFAULT_BR,
         representation: str = 'varlen',
         fmt: str = 'u8',
         sample_size: int = DEFAULT_SAMPLE_SIZE,
         seed: int = DEFAULT_SEED,
         bx: int = None,
         finite_threshold: bool = False,
         has_header: bool = True) -> Result:
    """Tabulate the suitability of every observed symbol of INPUT.

    Writes CSV with the columns

        symbol,count,p_hat,b_x,threshold,rx_approx,expected_savings_bits,in_G

    where in_G marks the members of the suitable set chosen by --mode.
    """
    from srle.codec import check_representation_options, make_config
    from srle.ingest import read_sequence

    check_representation_options(representation, bx)
    fmt = InputFormat().convert(fmt, None, None)
    seq, _ = read_sequence(input, fmt, has_header)
    config = make_config(seq, mode, br, representation, bx)
    rows = symbol_table(seq, config, sample_size, seed,
                        finite_threshold=finite_threshold)
    return Result.fromdata(columns=COLUMNS, rows=rows)


if __name__ == '__main__':
    main.cli()
