import sys

import click

from .. import __version__
from .commands.evaluate import eval, pqe, hom
from .commands.rewrite import iterate, dissociate, fine_dissociate, collapse_stars, to_binary
from .commands.edge import edges, covered, metrics
from .commands.pattern import probe_iterability, minimize, tight_pattern, classify
from .commands.reduction import (count_pp2dnf, count_stcon, code_pp2dnf, code_stcon,
                                 verify_pp2dnf, verify_stcon)
from .commands.config import config

from .limits import limit_options
from .format import format_options


@click.group(epilog='Type "pqe <command> --help" for help on a specific command.')
@click.version_option(__version__, prog_name='pqe')
@limit_options()
@format_options()
def cli():
    '''Probabilistic query evaluation on tuple-independent graph databases.

       Instances are text files with one fact per line, e.g. "R(a,b).";
       "%" starts a comment. Options that take an instance also accept
       inline facts separated by semicolons, e.g. "R(a,b); S(b,c)".
    '''
    pass


for command in (eval, pqe, hom,
                iterate, dissociate, fine_dissociate, collapse_stars, to_binary,
                edges, covered, metrics,
                probe_iterability, minimize, tight_pattern, classify,
                count_pp2dnf, count_stcon, code_pp2dnf, code_stcon, verify_pp2dnf, verify_stcon,
                config):
    cli.add_command(command)


def main():
    cli(obj={})


if __name__ == '__main__':
    sys.exit(main())
