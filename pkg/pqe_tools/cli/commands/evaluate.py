import click

from ..utils import input_options
from ..limits import limit_options, tool_call
from ..format import format_options

_KINDS = click.Choice(['ucq', 'rpq', 'datalog'])


@click.command()
@input_options('query', 'instance')
@click.option('--kind', type=_KINDS, help='Query language; guessed from the file extension or text if omitted.')
@click.option('--monadic', is_flag=True, help='Accept arity-one facts such as "A(a)."')
@click.option('--naive', is_flag=True, help='Use naive instead of semi-naive Datalog evaluation.')
@format_options()
@limit_options()
def eval(query, instance, kind, monadic, naive):
    '''Evaluate a query on an instance. Prints "true" or "false".

       Queries are UCQs ("q :- R(X,Y), S(Y,Z)." with one disjunct per
       line), RPQs ("R S* T", with "-" marking inverses, "|" unions and
       "*"/"+" closures) or Datalog programs with a 0-ary goal predicate.
    '''
    tool_call('eval', query, instance, kind=kind, monadic=monadic, naive=naive)


@click.command()
@input_options('query')
@click.option('-t', '--tid', required=True,
              help='TID file ("R(a,b) : 1/2." per line) or inline facts. '
                   'Constants may contain "#" and "@", the separators of generated names.')
@click.option('--kind', type=_KINDS, help='Query language; guessed from the file extension or text if omitted.')
@click.option('--monadic', is_flag=True, help='Accept arity-one facts such as "A(a) : 1/2."')
@format_options()
@limit_options()
def pqe(query, tid, kind, monadic):
    '''Compute the exact probability of a query on a TID.

       Every world over the uncertain facts is evaluated; the result is a
       reduced fraction. The enumeration is refused beyond --max-worlds.
    '''
    tool_call('pqe', query, tid, kind=kind, monadic=monadic)


@click.command()
@click.option('-s', '--source', required=True, help='Source instance file or inline facts.')
@click.option('-d', '--target', required=True, help='Target instance file or inline facts.')
@click.option('--injective', is_flag=True, help='Only look for injective homomorphisms.')
@format_options()
@limit_options()
def hom(source, target, injective):
    '''Find a homomorphism from one instance to another.

       Prints the mapping as an element/image table; exits with status 1
       if there is none.
    '''
    tool_call('hom', source, target, injective=injective, check=lambda r: r is not None)
