"""Implement custom click parameter types for srle."""
import click


class CommaList(click.ParamType):
    """Read in comma-separated values and return a list of `cast` values.

    >>> CommaList(float).convert('0.1,0.5', None, None)
    [0.1, 0.5]
    """

    name = "comma_list"

    def __init__(self, cast=str):
        self.cast = cast

    def convert(self, value, param, ctx):
        """Convert string with commas to list."""
        if not isinstance(value, str):
            # Defaults from params.json may be lists or arrays.
            return [self.cast(item) for item in value]
        try:
            return [self.cast(item) for item in value.split(',') if item]
        except ValueError:
            self.fail(f'{value!r} is not a comma-separated list of '
                      f'{self.cast.__name__} values.', param, ctx)


class InputFormat(click.ParamType):
    """Parse an input format: 'u8', 'u64le' or 'csv:<column>'.

    The column of a csv format is an index if it is all digits and a
    header name otherwise.

    >>> InputFormat().convert('csv:2', None, None)
    ('csv', 2)
    >>> InputFormat().convert('u8', None, None)
    ('u8', None)
    """

    name = "input_format"
    raw_kinds = ('u8', 'u64le')

    def convert(self, value, param, ctx):
        """Convert a format string into a (kind, column) tuple."""
        if isinstance(value, tuple):
            return value
        if value in self.raw_kinds:
            return value, None
        if value.startswith('csv:') and len(value) > 4:
            column = value[4:]
            if column.isdigit():
                column = int(column)
            return 'csv', column
        self.fail(f'Unknown format {value!r}. Use one of u8, u64le or '
                  'csv:<column>.', param, ctx)


def clickify_docstring(doc):
    """Take a standard docstring a make it Click compatible."""
    if doc is None:
        return
    doc_n = doc.split('\n')
    clickdoc = []
    skip = False
    for i, line in enumerate(doc_n):
        if skip:
            skip = False
            continue
        lspaces = len(line) - len(line.lstrip(' '))
        spaces = ' ' * lspaces
        bb = spaces + '\b'
        if line.endswith('::'):
            skip = True

            if not doc_n[i - 1].strip(' '):
                clickdoc.pop(-1)
                clickdoc.extend([bb, line, bb])
            else:
                clickdoc.extend([line, bb])
        elif ('-' in line
              and (spaces + '-' * (len(line) - lspaces)) == line):
            clickdoc.insert(-1, bb)
            clickdoc.append(line)
        else:
            clickdoc.append(line)
    doc = '\n'.join(clickdoc)

    return doc
