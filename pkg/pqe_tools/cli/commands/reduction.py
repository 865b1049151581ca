import click

from ..utils import input_options
from ..limits import limit_options, tool_call
from ..format import format_options


def _passed(report):
    return report.get('status') == 'ok'


@click.command(name='count-pp2dnf')
@input_options('graph')
@format_options()
@limit_options()
def count_pp2dnf(graph):
    '''Count the good worlds of a bipartite graph.

       The graph is JSON: {"A": ["a"], "B": ["b"], "C": [["a", "b"]]}. A
       world keeps subsets of A and B; it is good if it keeps both ends of
       some edge.
    '''
    tool_call('count_pp2dnf', graph)


@click.command(name='count-stcon')
@input_options('graph')
@format_options()
@limit_options()
def count_stcon(graph):
    '''Count the edge subsets connecting s and t.

       The graph is JSON: {"W": ["s", "a", "t"], "C": [["s", "a"], ["a", "t"]],
       "s": "s", "t": "t"}.
    '''
    tool_call('count_stcon', graph)


@click.command(name='code-pp2dnf')
@input_options('instance', 'edge', 'left', 'right', 'graph')
@click.option('-n', type=int, default=1, show_default=True, help='Index of the iterate each edge of the graph is coded with.')
@click.option('-o', '--output', help='Write the TID to this file instead of stdout.')
@click.option('--world-map', help='Write the JSON map between vertices and uncertain facts to this file.')
@format_options()
@limit_options()
def code_pp2dnf(instance, edge, left, right, graph, n, output, world_map):
    '''Code a connected bipartite graph as a TID.

       Each vertex gets one uncertain fact of probability 1/2; each edge of
       the graph becomes a path of 2n-1 certain copies of the instance edge.
    '''
    tool_call('code_pp2dnf', instance, edge, graph, n=n, left=left, right=right,
              output=output, world_map=world_map)


@click.command(name='code-stcon')
@input_options('instance', 'edge', 'left', 'right', 'mid', 'graph')
@click.option('-o', '--output', help='Write the TID to this file instead of stdout.')
@click.option('--world-map', help='Write the JSON map between graph edges and uncertain facts to this file.')
@format_options()
@limit_options()
def code_stcon(instance, edge, left, right, mid, graph, output, world_map):
    '''Code an s-t graph as a TID.

       Each graph edge gets one uncertain copy of the covered fact, of
       probability 1/2, on its lexicographically smaller endpoint.
    '''
    tool_call('code_stcon', instance, edge, graph, left=left, right=right, mid=mid,
              output=output, world_map=world_map)


@click.command(name='verify-pp2dnf')
@input_options('query', 'instance', 'edge', 'left', 'right', 'graph')
@click.option('--n0', type=int, help='First iterate violating the query; probed if omitted.')
@limit_options()
def verify_pp2dnf(query, instance, edge, left, right, graph, n0):
    '''Check the reduction from #PP2DNF on one bipartite graph.

       The graph is coded with n = n0-1 and the number of good worlds is
       compared with the probability of the query times 2^(|A|+|B|).
       Prints a JSON report; exits with status 1 unless every check passes.
    '''
    tool_call('verify_pp2dnf', query, instance, edge, graph, n0=n0, left=left, right=right,
              report=True, check=_passed)


@click.command(name='verify-stcon')
@input_options('query', 'instance', 'edge', 'left', 'right', 'mid', 'graph')
@limit_options()
def verify_stcon(query, instance, edge, left, right, mid, graph):
    '''Check the reduction from #U-ST-CON on one s-t graph.

       The instance and edge must form a tight pattern of the query. The
       number of connecting edge subsets is compared with the probability
       of the query times 2^|C|. Prints a JSON report; exits with status 1
       unless every check passes.
    '''
    tool_call('verify_stcon', query, instance, edge, graph, left=left, right=right, mid=mid,
              report=True, check=_passed)
