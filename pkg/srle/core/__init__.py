"""srle core functionality."""
from .errors import (SRLEError, FormatError, TruncatedStreamError,  # noqa
                     RepresentationError)  # noqa
from .utils import (read_json, write_json, read_params, log,  # noqa
                    atomic_output, unlink, encode_json,  # noqa
                    decode_json, read_file, write_file)  # noqa
from .types import (CommaList, InputFormat, clickify_docstring)  # noqa
from .results import (SRLEResult, TableResult, prepare_result,  # noqa
                      obj_to_id)  # noqa
from .command import (command, option, argument, get_commands,  # noqa
                      SRLECommand)  # noqa
