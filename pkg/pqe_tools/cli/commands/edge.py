import click

from ..utils import input_options
from ..limits import limit_options, tool_call
from ..format import format_options


@click.command()
@input_options('instance')
@format_options()
@limit_options()
def edges(instance):
    '''List the non-leaf edges of an instance with their incident pairs.'''
    tool_call('edges', instance)


@click.command()
@input_options('instance', 'edge')
@format_options()
@limit_options()
def covered(instance, edge):
    '''List the facts covered by an edge, oriented from u to v.'''
    tool_call('covered', instance, edge)


@click.command()
@input_options('instance', 'edge')
@format_options()
@limit_options()
def metrics(instance, edge):
    '''Weight and side weight of a non-leaf edge.

       The weight is the number of covered facts; the side weight is the
       number of left- and right-incident facts.
    '''
    tool_call('metrics', instance, edge)
