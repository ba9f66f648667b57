"""srle command line interface."""
import sys

import click

import srle
from srle.core.command import get_commands
from srle.core.errors import exit_code_for, EXIT_OK, EXIT_USAGE


CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])


class SRLEGroup(click.Group):
    """Click group that maps failures onto the srle exit codes.

    0 success, 1 usage error, 2 I/O error, 3 format/corruption error.
    All messages go to standard error.
    """

    def main(self, args=None, prog_name=None, standalone_mode=True,
             **extra):
        try:
            rv = super().main(args=args, prog_name=prog_name,
                              standalone_mode=False, **extra)
        except click.UsageError as error:
            error.show()
            code = EXIT_USAGE
        except click.ClickException as error:
            error.show()
            code = error.exit_code
        except click.Abort:
            click.echo('Aborted!', err=True)
            code = EXIT_USAGE
        except Exception as error:
            code = exit_code_for(error)
            if code == EXIT_USAGE and not isinstance(error, ValueError):
                raise
            click.echo(f'Error: {error}', err=True)
        else:
            code = rv if isinstance(rv, int) else EXIT_OK

        if standalone_mode:
            sys.exit(code)
        return code


@click.group(cls=SRLEGroup, context_settings=CONTEXT_SETTINGS)
@click.version_option(version=srle.__version__)
def cli():
    """Selective run-length encoding."""


for _command in get_commands():
    cli.add_command(_command.setup_cli())
