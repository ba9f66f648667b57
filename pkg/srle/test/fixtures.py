"""Module containing the implementations of all srle pytest fixtures."""
import os
from pathlib import Path

import numpy as np
import pytest

from srle.bitio import BitPacking
from srle.core import write_json
from srle.core.sequence import CodecConfig, SymbolSequence

FIXTURES = Path(__file__).parent / 'fixtures'


@pytest.fixture()
def srle_tmpdir(tmp_path):
    """Create temp folder and change directory to that folder."""
    cwd = os.getcwd()
    os.chdir(tmp_path)
    try:
        yield tmp_path
    finally:
        os.chdir(cwd)


@pytest.fixture()
def srle_tmpdir_w_params(srle_tmpdir):
    """Make temp dir and create a params.json with small samples."""
    params = {
        'srle.compress': {'sample_size': 100, 'seed': 1},
        'srle.sweep': {'n_grid': [10, 20]},
    }
    write_json('params.json', params)
    return srle_tmpdir


@pytest.fixture()
def example_sequence():
    """Return the sequence a, b, b, b, a, a, c, c with a=0, b=1, c=2."""
    return SymbolSequence([0, 1, 1, 1, 0, 0, 2, 2])


@pytest.fixture()
def example_config():
    """Bit-packing with two bits and four bit run-control elements."""
    return CodecConfig(b_r=4, representation=BitPacking(2))


@pytest.fixture()
def golden_bytes():
    """Pinned container of the example sequence with G = {a, b}."""
    return (FIXTURES / 'worked_example.srle').read_bytes()


@pytest.fixture()
def rng():
    return np.random.default_rng(42)
