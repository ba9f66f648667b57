"""Implements useful utility functions needed for several srle features.

Functions
---------

    log: Print a diagnostic line to standard error.
    read_json, write_json: numpy-aware JSON files.
    atomic_output: Write a file so that no partial file survives a failure.

"""
import os
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Union
from ast import literal_eval

from ase.io import jsonio
from ase.parallel import parprint

PARAMS_FILE = 'params.json'


def log(*args, **kwargs):
    """Print diagnostics to standard error."""
    kwargs.setdefault('flush', True)
    parprint(*args, file=sys.stderr, **kwargs)


def parse_value_string(string):
    """Convert a string-serialized python literal, return a real value."""
    return literal_eval(string)


def encode_json(data, indent=1):
    from ase.io.jsonio import MyEncoder
    return MyEncoder(indent=indent).encode(data)


def decode_json(text: str):
    return jsonio.decode(text)


def write_json(filename, data):
    write_file(filename, encode_json(data))


def read_json(filename):
    """Read json file."""
    return decode_json(read_file(filename))


def read_file(filename: Union[str, Path]) -> str:
    return Path(filename).read_text()


def write_file(filename: Union[str, Path], text: str):
    with atomic_output(filename) as tmp:
        tmp.write_text(text)


def read_params(name=None):
    """Read parameter overrides from params.json in the working directory.

    If `name` is given only the overrides of that command are returned.
    """
    path = Path(PARAMS_FILE)
    if not path.is_file():
        return {}
    params = read_json(path)
    if name is None:
        return params
    return params.get(name, {})


def unlink(path: Union[str, Path]):
    """Safely unlink path (delete file or symbolic link)."""
    try:
        Path(path).unlink()
    except FileNotFoundError:
        pass


@contextmanager
def atomic_output(path: Union[str, Path]):
    """Context manager for writing a file.

    Do "with atomic_output('out.srle') as tmp: tmp.write_bytes(...)".

    The with-block writes to a temporary sibling of `path`. The
    temporary file is moved into place when the block finishes and is
    removed if the block raises, so `path` is never left half written.
    """
    path = Path(path)
    tmp = path.with_name(f'.{path.name}.tmp{os.getpid()}')
    unlink(tmp)
    try:
        yield tmp
        os.replace(tmp, path)
    finally:
        unlink(tmp)
