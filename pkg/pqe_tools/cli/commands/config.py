import click

from ...config import DEFAULTS
from ..limits import limit_options, tool_call
from ..format import format_options


@click.group(short_help='list, set',
             epilog='Type "pqe config <command> --help" for help on a specific command.')
def config():
    '''Commands related to the persistent limits.'''
    pass


@config.command()
@format_options()
@limit_options()
def list():
    '''List the effective limits and where each comes from.'''
    tool_call('config_list')


@config.command()
@click.argument('key', type=click.Choice(sorted(DEFAULTS)))
@click.argument('value', type=int)
def set(key, value):
    '''Persist a limit in the configuration file.'''
    tool_call('config_set', key, value, report=True)
