"""Implement SRLECommand class and related decorators."""
import copy
import functools
import inspect
import time
from importlib import import_module

import click
from click.core import ParameterSource

from .results import SRLEResult
from .types import clickify_docstring
from .utils import read_params, log


def _paramerrormsg(func, msg):
    return f'Problem in {func.__module__}@{func.__name__}. {msg}'


def _add_param(func, param):
    if not hasattr(func, '__srle_params__'):
        func.__srle_params__ = {}

    name = param['name']
    assert name not in func.__srle_params__, \
        _paramerrormsg(func, f'Double assignment of {name}')

    sig = inspect.signature(func)
    assert name in sig.parameters, \
        _paramerrormsg(func, f'Unknown parameter {name}')

    if param['argtype'] == 'argument':
        assert 'default' not in param, \
            _paramerrormsg(func, 'Argument don\'t allow defaults')
    else:
        assert param['argtype'] == 'option', \
            _paramerrormsg(func, f'Unknown argument type {param["argtype"]}')

    func.__srle_params__[name] = param


def option(*args, **kwargs):
    """Tag a function to have an option."""

    def decorator(func):
        assert args, 'You have to give a name to this parameter'

        params = inspect.signature(func).parameters
        for arg in args:
            name = arg.lstrip('-').split('/')[0].replace('-', '_')
            if name in params:
                break
        else:
            raise AssertionError(
                _paramerrormsg(func,
                               'You must give exactly one alias that starts '
                               'with -- and matches a function argument.'))
        param = {'argtype': 'option',
                 'alias': args,
                 'name': name}
        param.update(kwargs)
        _add_param(func, param)
        return func

    return decorator


def argument(name, **kwargs):
    """Mark a function to have an argument."""

    def decorator(func):
        assert 'default' not in kwargs, 'Arguments do not support defaults!'
        param = {'argtype': 'argument',
                 'alias': (name, ),
                 'name': name}
        param.update(kwargs)
        _add_param(func, param)
        return func

    return decorator


class SRLECommand:
    """Wrapper class for constructing srle commands.

    This class wraps a callable `main` and automatically endows the
    function with a command-line interface (CLI) through the `setup_cli`
    method. The CLI is defined using the :func:`srle.core.argument` and
    :func:`srle.core.option` decorators.

    Calling the command binds the parameters (defaults can be
    overridden per command in params.json), runs the wrapped function
    and wraps the returned data in a result object carrying metadata
    about the execution.
    """

    package_dependencies = ('srle', 'numpy', 'bitarray')

    def __init__(self, main, name=None, returns=None, output_format=None):
        """Construct an instance of an SRLECommand.

        Parameters
        ----------
        main : callable
            Wrapped function.
        name : str
            Command name, eg. 'srle.compress'.
        returns : type
            Result class that the return value of `main` is wrapped in.
        output_format : str or None
            Result format printed to standard output when the command is
            run from the command line.
        """
        assert callable(main), 'The wrapped object should be callable'

        if name is None:
            name = f'{main.__module__}@{main.__name__}'
            if name.endswith('@main'):
                name = name.replace('@main', '')

        self._main = main
        self.name = name
        self.returns = returns or SRLEResult
        self.output_format = output_format

        if not hasattr(self._main, '__srle_params__'):
            self._main.__srle_params__ = {}
        self.myparams = copy.deepcopy(self._main.__srle_params__)
        self.__signature__ = inspect.signature(self._main)

        functools.update_wrapper(self, self._main)

    @property
    def cli_name(self):
        """Name of the subcommand, eg. 'compress' for 'srle.compress'."""
        return self.name.split('.')[-1].replace('@', '-')

    def get_signature(self):
        """Return signature with updated defaults based on params.json."""
        signature_parameters = dict(self.__signature__.parameters)
        for key in signature_parameters:
            assert key in self.myparams, \
                f'Missing description for param={key}.'

        paramsettings = read_params(self.name)
        if not paramsettings:
            return self.__signature__

        for key, new_default in paramsettings.items():
            assert key in signature_parameters, \
                f'Unknown param in params.json: param={key}.'
            signature_parameters[key] = signature_parameters[key].replace(
                default=new_default)
        return self.__signature__.replace(
            parameters=list(signature_parameters.values()))

    def get_defaults(self):
        """Get default parameters based on signature and params.json."""
        signature = self.get_signature()
        defparams = {}
        for key, value in signature.parameters.items():
            if value.default is not inspect.Parameter.empty:
                defparams[key] = value.default
        return defparams

    def get_parameters(self):
        """Get the parameters of this function."""
        return self.myparams

    def setup_cli(self):
        CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])

        help = clickify_docstring(self._main.__doc__) or ''

        def callback(**kwargs):
            # Defaults are resolved by self.main so that params.json is
            # read at execution time.
            ctx = click.get_current_context()
            kwargs = {key: value for key, value in kwargs.items()
                      if ctx.get_parameter_source(key)
                      is not ParameterSource.DEFAULT}
            result = self.main(**kwargs)
            if self.output_format:
                text = result.format_as(self.output_format)
                click.echo(text, nl=not text.endswith('\n'))
            return result

        command = click.command(name=self.cli_name,
                                context_settings=CONTEXT_SETTINGS,
                                help=help)(callback)

        # Convert parameters into CLI Parameters!
        defparams = self.get_defaults()
        for name, param in self.get_parameters().items():
            param = param.copy()
            alias = param.pop('alias')
            argtype = param.pop('argtype')
            param.pop('name')
            if 'default' in param:
                default = param.pop('default')
            else:
                default = defparams.get(name, None)

            if argtype == 'option':
                command = click.option(*alias, show_default=True,
                                       default=default, **param)(command)
            else:
                command = click.argument(*alias, **param)(command)

        return command

    def cli(self, args=None):
        """Parse parameters from command line and call wrapped function.

        Parameters
        ----------
        args : List of strings or None
            List of command line arguments. If None: Read arguments from
            sys.argv.
        """
        command = self.setup_cli()
        return command(standalone_mode=False,
                       prog_name=f'srle {self.cli_name}', args=args)

    def __call__(self, *args, **kwargs):
        """Delegate to self.main."""
        return self.main(*args, **kwargs)

    def main(self, *args, **kwargs):
        """Return results from wrapped function.

        This is the main function of an SRLECommand. It takes care of
        reading parameters and creating metadata. If you want to
        understand what happens when you execute an SRLECommand this is a
        good place to start.
        """
        signature = self.get_signature()
        bound_arguments = signature.bind(*args, **kwargs)
        bound_arguments.apply_defaults()
        params = dict(bound_arguments.arguments)

        paramstring = ', '.join(f'{key}={value!r}'
                                for key, value in params.items())
        log(f'Running {self.name}({paramstring})')

        tstart = time.time()
        result = self._main(**copy.deepcopy(params))
        tend = time.time()
        if result is None:
            result = {}

        if not isinstance(result, self.returns):
            assert isinstance(result, dict)
            result = self.returns(data=result)

        result.metadata = dict(
            srle_name=self.name,
            resources=dict(time=tend - tstart, tstart=tstart, tend=tend),
            params=params,
            code_versions=get_execution_info(self.package_dependencies))
        return result


def get_execution_info(package_dependencies):
    """Get software version information as a dictionary."""
    from ase.utils import search_current_git_hash
    versions = {}
    for modname in package_dependencies:
        try:
            mod = import_module(modname)
        except ModuleNotFoundError:
            continue
        version = getattr(mod, '__version__', 'unknown')
        githash = search_current_git_hash(mod)
        if githash:
            versions[modname] = f'{version}-{githash}'
        else:
            versions[modname] = f'{version}'
    return versions


def command(*args, **kwargs):

    def decorator(func):
        return SRLECommand(func, *args, **kwargs)

    return decorator


COMMAND_MODULES = ('srle.compress', 'srle.decompress', 'srle.stats',
                   'srle.sweep', 'srle.bench', 'srle.params')


def get_commands():
    """Get all srle commands."""
    commands = []
    for modulename in COMMAND_MODULES:
        module = import_module(modulename)
        for attr in vars(module).values():
            if isinstance(attr, SRLECommand):
                commands.append(attr)
    return commands
