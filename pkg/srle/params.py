"""Generate parameter file 'params.json'."""
from typing import Union

from srle.core import command, argument, SRLEResult


@command('srle.params', output_format='jsonline')
@argument('params', nargs=-1, type=str,
          metavar='command:option value command:option value')
def main(params: Union[str, None] = None) -> SRLEResult:
    """Set default options of srle commands in params.json.

    Values are converted to the type of the current default. A command
    name containing * sets the option of every matching command that
    has it, eg.

        srle params srle.compress:br 8 *:seed 3
    """
    import copy
    from pathlib import Path
    from fnmatch import fnmatch
    from srle.core import get_commands, read_json, write_json
    from srle.core.utils import PARAMS_FILE, parse_value_string

    defparamdict = {}
    for cmd in get_commands():
        defparamdict[cmd.name] = cmd.get_defaults()

    p = Path(PARAMS_FILE)
    if p.is_file():
        paramdict = read_json(p)
    else:
        paramdict = {}

    if params is None:
        params = ()

    if isinstance(params, (list, tuple)):
        tmpoptions = params[::2]
        tmpargs = params[1::2]
        if len(tmpoptions) != len(tmpargs):
            raise ValueError('You must provide a value for each option')
        options = []
        args = []
        for tmpoption, tmparg in zip(tmpoptions, tmpargs):
            if tmpoption.count(':') != 1:
                raise ValueError('You have to use the command:option syntax, '
                                 f'got {tmpoption!r}')
            name, option = tmpoption.split(':')
            if '*' in name:
                for tmpname in defparamdict:
                    if not fnmatch(tmpname, name):
                        continue
                    if option in defparamdict[tmpname]:
                        options.append(f'{tmpname}:{option}')
                        args.append(tmparg)
            else:
                options.append(tmpoption)
                args.append(tmparg)

        for option, value in zip(options, args):
            name, option = option.split(':')
            _check_known(defparamdict, name, option)

            default = defparamdict[name][option]
            if default is None or isinstance(default, (bool, list, tuple)):
                val = parse_value_string(value)
            else:
                val = type(default)(value)
            paramdict.setdefault(name, {})[option] = val
    elif isinstance(params, dict):
        paramdict.update(copy.deepcopy(params))
    else:
        raise NotImplementedError(
            'srle.params is only compatible with '
            f'input lists and dict. Input params: {params}')

    for name, options in paramdict.items():
        for option in options:
            _check_known(defparamdict, name, option)

    if paramdict:
        write_json(p, paramdict)
    return SRLEResult(data=paramdict)


def _check_known(defparamdict, name, option):
    if name not in defparamdict:
        raise ValueError(f'This is an unknown command: {name}')
    if option not in defparamdict[name]:
        raise ValueError(f'This is an unknown option: {name}:{option}')


if __name__ == '__main__':
    main.cli()
