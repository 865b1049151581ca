import click

from ..utils import input_options
from ..limits import limit_options, tool_call
from ..format import format_options


@click.command()
@input_options('instance', 'edge', 'left', 'right')
@click.option('-n', type=int, default=2, show_default=True, help='Index of the iterate.')
@format_options()
@limit_options()
def iterate(instance, edge, left, right, n):
    '''Replace a non-leaf edge by a zig-zag path of 2n-1 copies of itself.

       The left-incident fact stays at the first copy of u and the
       right-incident fact at the last copy of v. Fresh elements are named
       u#2, ..., u#n and v#1, ..., v#(n-1).
    '''
    tool_call('iterate', instance, edge, left=left, right=right, n=n)


@click.command()
@input_options('instance')
@click.option('--edge', help='Directed edge, as "u,v".')
@click.option('--all', 'all_edges', is_flag=True, help='Dissociate non-leaf edges until none remain.')
@format_options()
@limit_options()
def dissociate(instance, edge, all_edges):
    '''Dissociate a non-leaf edge.

       The edge (u,v) is copied onto (u,v#d) and (u#d,v), and its non-unary
       facts are removed.
    '''
    if not edge and not all_edges:
        raise click.UsageError('Supply --edge or --all')
    tool_call('dissociate', instance, edge, all=all_edges)


@click.command(name='fine-dissociate')
@input_options('instance', 'edge', 'left', 'right', 'mid')
@format_options()
@limit_options()
def fine_dissociate(instance, edge, left, right, mid):
    '''Fine-dissociate a non-leaf edge relative to an incident pair and a covered fact.

       Full copies of the edge go on (u,v#f) and (u#f,v); copies without the
       covered fact go on (u,v) and (u#f,v#f).
    '''
    tool_call('fine_dissociate', instance, edge, left=left, right=right, mid=mid)


@click.command(name='collapse-stars')
@input_options('instance')
@click.option('--mapping', is_flag=True, help='Print the homomorphism onto the result instead of the result.')
@format_options()
@limit_options()
def collapse_stars(instance, mapping):
    '''Collapse an instance with no non-leaf edges.

       Leaves of a star with the same covered facts are merged, then
       isomorphic components are merged.
    '''
    tool_call('collapse_stars', instance, mapping=mapping)


@click.command(name='to-binary')
@click.option('-i', '--instance', help='Instance file or inline facts.')
@click.option('-t', '--tid', help='TID file or inline facts.')
@click.option('-q', '--query', help='Query file or inline query text.')
@format_options()
@limit_options()
def to_binary(instance, tid, query):
    '''Replace every arity-one relation R by a binary relation R_2.

       Exactly one of --instance, --tid and --query must be given.
       R(a) becomes R_2(a,a); probabilities are unchanged.
    '''
    given = [(what, value) for what, value in (('instance', instance), ('tid', tid), ('query', query))
             if value is not None]
    if len(given) != 1:
        raise click.UsageError('Supply exactly one of --instance, --tid and --query')
    what, value = given[0]
    tool_call('to_binary', value, what=what)
