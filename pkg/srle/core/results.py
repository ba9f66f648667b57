"""Implements SRLEResult object and related quantities.

The most important class in this module is
:py:class:`srle.core.results.SRLEResult`, which is used to wrap results
generated by srle commands.

:py:class:`srle.core.results.SRLEResult` has a bunch of associated
encoders that implement different ways of representing results. These
encoders are:

- :py:class:`srle.core.results.JSONLineEncoder`
- :py:class:`srle.core.results.CSVEncoder`

"""
import copy
import csv
import inspect
import io
import typing
from abc import ABC, abstractmethod
from collections.abc import Mapping

from .utils import encode_json


class ResultEncoder(ABC):
    """Abstract encoder base class.

    Encodes a results object as a specific format.

    """

    def __call__(self, result, *args, **kwargs):
        """Encode result."""
        return self.encode(result, *args, **kwargs)

    @abstractmethod
    def encode(self, result, *args, **kwargs):
        """Encode result."""
        raise NotImplementedError


class JSONLineEncoder(ResultEncoder):
    """Encode the data of a result as a single line of json."""

    def encode(self, result: 'SRLEResult'):
        """Encode data without metadata on one line."""
        return encode_json(dict(result.data), indent=None)


class CSVEncoder(ResultEncoder):
    """Encode tabular results as csv.

    Tabular results store their table under the data keys ``columns``
    (list of column names) and ``rows`` (list of row lists).
    """

    def encode(self, result: 'SRLEResult'):
        """Encode table as csv text with a header line."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(result['columns'])
        for row in result['rows']:
            writer.writerow([format_cell(value) for value in row])
        return buffer.getvalue()


def format_cell(value) -> str:
    """Format a table cell so that output is stable across platforms."""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return f'{value:.12g}'
    return str(value)


def get_key_descriptions(obj):
    """Get key descriptions of object."""
    if hasattr(obj, 'key_descriptions'):
        return obj.key_descriptions
    return {}


def make_property(key, doc, return_type):

    def getter(self) -> return_type:
        return self.data[key]

    getter.__annotations__ = {'return': return_type}

    return property(fget=getter, doc=doc)


def prepare_result(cls: object) -> object:
    """Prepare result class.

    This function read key descriptions and types defined in a Result class
    and assigns properties to all keys. It also marks the class as strict
    which makes the result object check that all data is present.

    """
    descriptions = get_key_descriptions(cls)
    types = typing.get_type_hints(cls)
    missing_types = set(descriptions) - set(types)
    assert not missing_types, \
        f'{cls.get_obj_id()}: Missing types for={missing_types}.'

    for key, description in descriptions.items():
        setattr(cls, key,
                make_property(key, description, return_type=types[key]))

    cls.strict = True
    cls._known_data_keys = set(descriptions)
    return cls


class MetaDataNotSetError(Exception):
    """Error raised when encountering unknown metadata key."""

    pass


class MetaData:
    """Metadata object.

    Examples
    --------
    >>> metadata = MetaData(srle_name='srle.compress')
    >>> metadata
    srle_name=srle.compress
    >>> metadata.set(resources={'time': 10}, params={'br': 4})
    >>> metadata.todict()
    {'srle_name': 'srle.compress', 'resources': {'time': 10},\
 'params': {'br': 4}}
    """ # noqa

    accepted_keys = {'srle_name',
                     'params',
                     'resources',
                     'code_versions'}

    def __init__(self, **kwargs):
        """Initialize MetaData object."""
        self._dct = {}
        self.set(**kwargs)

    def set(self, **kwargs):
        """Set metadata values."""
        for key, value in kwargs.items():
            assert key in self.accepted_keys, f'Unknown MetaData key={key}.'
            self._dct[key] = value

    def __getattr__(self, key):
        """Get metadata value, eg. metadata.params."""
        if key.startswith('_') or key not in self.accepted_keys:
            raise AttributeError(key)
        if key not in self._dct:
            raise MetaDataNotSetError(f'Metadata key={key} has not been set!')
        return self._dct[key]

    def todict(self):
        """Format metadata as dict."""
        return copy.deepcopy(self._dct)

    def __str__(self):
        """Represent as string."""
        return '\n'.join(f'{key}={value}' for key, value in self._dct.items())

    def __repr__(self):
        """Represent object."""
        return str(self)

    def __contains__(self, key):
        """Is metadata key set."""
        return key in self._dct


def obj_to_id(cls):
    """Get a string representation of path to object.

    Ie. if obj is the SRLEResult class living in the module,
    srle.core.results, the corresponding string would be
    'srle.core.results::SRLEResult'.

    """
    module = inspect.getmodule(cls)
    assert module is not None and module.__name__ != '__main__', \
        'Something went wrong in module name identification.'
    return f'{module.__name__}::{cls.__name__}'


class SRLEResult(Mapping):
    """Base class for describing results generated with srle commands.

    A results object is a container for results generated by a command.
    It contains data and metadata describing results and the
    circumstances under which the result were generated, respectively.
    The wrapped data can be accessed through the ``data`` property or
    directly as an attribute on the object.

    Examples
    --------
    >>> @prepare_result
    ... class Result(SRLEResult):
    ...     a: int
    ...     key_descriptions = {'a': 'Some key description.'}
    >>> result = Result.fromdata(a=1)
    >>> result.a
    1
    >>> result['a']
    1
    >>> str(result)
    'a=1'
    >>> format(result, 'jsonline')
    '{"a": 1}'
    """

    key_descriptions: typing.Dict[str, str]
    formats = {'jsonline': JSONLineEncoder(),
               'str': str}

    strict = False
    _known_data_keys = set()

    def __init__(self,
                 data: typing.Optional[typing.Dict[str, typing.Any]] = None,
                 metadata: typing.Optional[typing.Dict[str, typing.Any]] = None,
                 strict: typing.Optional[bool] = None):
        """Instantiate result.

        Parameters
        ----------
        data: Dict[str, Any]
            Input data to be wrapped.
        metadata: dict
            Dictionary containing metadata.
        strict: bool or None
            Strictly enforce data entries in data.

        """
        self.strict = self.strict if strict is None else strict
        self._data = dict(data or {})
        self._metadata = MetaData(**(metadata or {}))

        if self.strict:
            missing_keys = self._known_data_keys - set(self._data)
            unknown_keys = set(self._data) - self._known_data_keys
            assert not missing_keys, \
                f'{self.get_obj_id()}: Missing data keys={missing_keys}'
            assert not unknown_keys, \
                f'{self.get_obj_id()}: Trying to set unknown keys={unknown_keys}'

    @classmethod
    def fromdata(cls, **data):
        return cls(data=data)

    @classmethod
    def get_obj_id(cls) -> str:
        return obj_to_id(cls)

    @property
    def data(self) -> dict:
        """Get result data."""
        return self._data

    @property
    def metadata(self) -> MetaData:
        """Get result metadata."""
        return self._metadata

    @metadata.setter
    def metadata(self, metadata) -> None:
        """Set result metadata."""
        self._metadata.set(**copy.deepcopy(metadata))

    @classmethod
    def get_formats(cls) -> dict:
        """Get implemented result formats."""
        my_formats = {}
        for klass in reversed(cls.__mro__):
            my_formats.update(getattr(klass, 'formats', {}))
        return my_formats

    def format_as(self, format: str = '', *args, **kwargs) -> typing.Any:
        """Format result in specific format."""
        formats = self.get_formats()
        return formats[format](self, *args, **kwargs)

    # ---- Magic methods ----

    def __getitem__(self, item):
        """Get item from self.data."""
        return self.data[item]

    def __len__(self):
        return len(self.data)

    def __iter__(self):
        """Iterate over keys."""
        return iter(self.data)

    def __format__(self, fmt: str) -> str:
        """Encode result as string."""
        return self.format_as(fmt or 'str')

    def __str__(self):
        """Convert data to string."""
        return "\n".join(f'{key}={value}' for key, value in self.items())

    def __eq__(self, other):
        """Compare two result objects."""
        if not isinstance(other, type(self)):
            return False
        return self.data == other.data


class TableResult(SRLEResult):
    """Result holding a table that is written out as csv."""

    formats = {'csv': CSVEncoder()}

    def __str__(self):
        return self.format_as('csv')
