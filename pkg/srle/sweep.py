"""Compare exact and approximate expected reclaim on a grid."""
from typing import List

from srle.core import command, option, TableResult, prepare_result, CommaList


@prepare_result
class Result(TableResult):

    columns: list
    rows: list

    key_descriptions = {
        'columns': 'Column names.',
        'rows': 'One row per (b_r, N, p) grid point.',
    }


@command('srle.sweep', returns=Result, output_format='csv')
@option('--p-grid', help='Comma-separated symbol probabilities.',
        type=CommaList(float))
@option('--n-grid', help='Comma-separated sequence lengths.',
        type=CommaList(int))
@option('--br-grid', help='Comma-separated run-control widths.',
        type=CommaList(int))
def main(p_grid: List[float] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9],
         n_grid: List[int] = [100, 1000, 10000],
         br_grid: List[int] = [1, 4, 8]) -> Result:
    """Tabulate rx_exact, rx_approx and epsilon1.

    Rows are ordered by b_r, then N, then p.
    """
    from srle.analysis import SWEEP_COLUMNS, sweep_rx
    rows = sweep_rx(p_grid, n_grid, br_grid)
    return Result.fromdata(columns=SWEEP_COLUMNS,
                           rows=[list(row.astuple()) for row in rows])


if __name__ == '__main__':
    main.cli()
