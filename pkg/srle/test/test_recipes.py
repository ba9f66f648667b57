"""Test the stats, sweep and bench recipes and general recipe properties."""
import csv
import io
from pathlib import Path

import pytest
from click.testing import CliRunner
from pytest import approx

from srle.core import get_commands
from srle.core.cli import cli

all_commands = get_commands()


def read_csv(text):
    return list(csv.reader(io.StringIO(text)))


@pytest.mark.ci
@pytest.mark.parametrize("command", all_commands, ids=lambda x: x.name)
def test_command_cli_help_calls(srle_tmpdir, capsys, command):
    """Test that all help calls actually works."""
    command.cli(['-h'])
    captured = capsys.readouterr()
    assert f'Usage: srle {command.cli_name}' in captured.out


@pytest.mark.ci
@pytest.mark.parametrize("command", all_commands, ids=lambda x: x.name)
def test_every_parameter_has_a_cli_description(command):
    params = command.get_parameters()
    assert set(params) == set(command.__signature__.parameters)
    for param in params.values():
        if param['argtype'] == 'option':
            assert param.get('help'), param['name']


@pytest.fixture
def three_symbols(srle_tmpdir):
    Path('in.u8').write_bytes(bytes([0] * 6 + [1] * 3 + [2]))
    return 'in.u8'


@pytest.mark.ci
def test_stats_rows(three_symbols):
    from srle.stats import COLUMNS, main
    result = main(three_symbols, representation='bitpack')
    assert result['columns'] == COLUMNS
    expected = [(0, 6, 0.6, 3.24, -4.56),
                (1, 3, 0.3, 0.81, -7.14),
                (2, 1, 0.1, 0.09, -3.46)]
    assert len(result['rows']) == 3
    for row, (symbol, count, p_hat, rx, savings) in zip(result['rows'],
                                                        expected):
        assert row[:2] == [symbol, count]
        assert row[2] == approx(p_hat)
        assert row[3] == 2
        assert row[4] == approx(2 / 3)
        assert row[5] == approx(rx)
        assert row[6] == approx(savings)
        assert row[7] is False


@pytest.mark.ci
def test_stats_marks_dominant_symbol(three_symbols):
    from srle.stats import main
    result = main(three_symbols, mode='drle')
    assert [row[7] for row in result['rows']] == [True, False, False]


@pytest.mark.ci
def test_stats_reports_the_applied_threshold(srle_tmpdir):
    from srle.stats import main
    Path('in.u8').write_bytes(bytes([0] * 5 + [1] * 5))
    simplified = main('in.u8', br=1, representation='bitpack')
    finite = main('in.u8', br=1, representation='bitpack',
                  finite_threshold=True)
    for row in simplified['rows']:
        assert row[2] == approx(0.5)
        assert row[4] == approx(0.5)
        assert row[7] is True
    for row in finite['rows']:
        assert row[4] == approx(5 / 9)
        assert row[7] is False
        assert row[2] < row[4]


@pytest.mark.ci
def test_stats_cli_csv(three_symbols):
    result = CliRunner().invoke(cli, ['stats', three_symbols, '--mode',
                                      'vrle'])
    assert result.exit_code == 0, result.output
    table = read_csv(result.stdout)
    assert table[0] == ['symbol', 'count', 'p_hat', 'b_x', 'threshold',
                        'rx_approx', 'expected_savings_bits', 'in_G']
    assert [row[0] for row in table[1:]] == ['0', '1', '2']
    assert [row[-1] for row in table[1:]] == ['1', '1', '1']


@pytest.mark.ci
def test_stats_empty_input(srle_tmpdir):
    Path('empty.u8').write_bytes(b'')
    result = CliRunner().invoke(cli, ['stats', 'empty.u8'])
    assert result.exit_code == 0, result.output
    assert result.stdout == ('symbol,count,p_hat,b_x,threshold,rx_approx,'
                             'expected_savings_bits,in_G\n')


@pytest.mark.ci
def test_sweep(srle_tmpdir):
    from srle.sweep import main
    result = main(p_grid=[0.5], n_grid=[100], br_grid=[8])
    (row,) = result['rows']
    assert row[:3] == [0.5, 100, 8]
    assert row[3] == approx(24.75)
    assert row[4] == approx(24.75)
    assert row[5] == approx(0.5 ** 100 * 99)


@pytest.mark.ci
def test_sweep_cli(srle_tmpdir):
    result = CliRunner().invoke(cli, ['sweep', '--p-grid', '0.5,1',
                                      '--n-grid', '4', '--br-grid', '1,2'])
    assert result.exit_code == 0, result.output
    table = read_csv(result.stdout)
    assert table[0] == ['p', 'N', 'b_r', 'rx_exact', 'rx_approx',
                        'epsilon1']
    assert [row[:3] for row in table[1:]] == [
        ['0.5', '4', '1'], ['1', '4', '1'],
        ['0.5', '4', '2'], ['1', '4', '2']]
    assert float(table[1][3]) == approx(9 / 16)


@pytest.mark.ci
def test_sweep_reads_params(srle_tmpdir_w_params):
    from srle.sweep import main
    result = main()
    assert len(result['rows']) == 9 * 2 * 3
    assert sorted({row[1] for row in result['rows']}) == [10, 20]

    result = CliRunner().invoke(cli, ['sweep'])
    assert result.exit_code == 0, result.output
    assert len(read_csv(result.stdout)) == 1 + 9 * 2 * 3


@pytest.mark.ci
def test_bench_single_symbol(srle_tmpdir):
    from srle.bench import COLUMNS, main
    Path('in.u8').write_bytes(bytes([5] * 1000))
    result = main('in.u8')
    assert result['columns'] == COLUMNS
    rows = {row[0]: row for row in result['rows']}
    assert list(rows) == ['ours', 'vrle', 'drle', 'oracle']
    for row in rows.values():
        assert row[1] == 1
        assert row[4] > 1
        assert row[5] >= 0
    assert rows['ours'][2] == rows['vrle'][2]
    # 63 divisions of a 7 bit symbol and a 4 bit run length.
    assert rows['ours'][2] == 63 * 11
    assert result['input_bits'] == 7000


@pytest.mark.ci
def test_bench_alternation(srle_tmpdir):
    Path('in.u8').write_bytes(bytes([0, 1] * 500))
    result = CliRunner().invoke(cli, ['bench', 'in.u8', '--repr', 'bitpack',
                                      '--methods', 'ours',
                                      '--methods', 'vrle'])
    assert result.exit_code == 0, result.output
    table = read_csv(result.stdout)
    assert table[0] == ['method', 'g_size', 'output_bits', 'header_bits',
                        'ratio', 'seconds']
    ratios = {row[0]: float(row[4]) for row in table[1:]}
    assert ratios['vrle'] < 1
    assert ratios['ours'] == 1.0
