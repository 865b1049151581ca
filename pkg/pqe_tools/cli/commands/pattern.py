import click

from ..utils import input_options
from ..limits import limit_options, tool_call
from ..format import format_options


@click.command(name='probe-iterability')
@input_options('query', 'instance', 'edge', 'left', 'right')
@format_options()
@limit_options()
def probe_iterability(query, instance, edge, left, right):
    '''Evaluate the query on iterates 2, 3, ..., --n-max of an edge.

       Prints NonIterable with the first failing iterate n0, or
       IterableUpTo the bound. The instance must satisfy the query.
    '''
    tool_call('probe_iterability', query, instance, edge, left=left, right=right)


@click.command()
@input_options('query', 'instance')
@format_options()
@limit_options()
def minimize(query, instance):
    '''Drop facts from a model of the query while it stays a model.'''
    tool_call('minimize', query, instance)


@click.command(name='tight-pattern')
@input_options('query', 'seeds')
@limit_options()
def tight_pattern(query, seeds):
    '''Find the minimal tight pattern of a query.

       Seed models are minimized and dissociated edge by edge; the least
       tight pattern met, by weight, then side weight, is printed as JSON.
       Exits with status 1 if none is found within the limits.
    '''
    tool_call('tight_pattern', query, seeds, report=True, check=lambda r: r is not None)


@click.command()
@input_options('query', 'seeds')
@limit_options()
def classify(query, seeds):
    '''Choose a hardness reduction for a query.

       A model with a non-iterable non-leaf edge selects the route from
       #PP2DNF; otherwise a tight pattern with an iterable edge selects the
       route from #U-ST-CON. The result is a JSON report whose "route" is
       "pp2dnf", "stcon" or "inconclusive".
    '''
    tool_call('classify', query, seeds, report=True)
