import json

import click

from ..api import Toolbox
from ..config import DEFAULTS, envvar
from ..exceptions import PQEException
from .utils import param_callback, click_text, get_options, print_option_help
from .format import print_output


class ToolError(click.ClickException):
    '''A library refusal or invalid input; exits with status 2 like a usage error.'''
    exit_code = 2


def print_limits_help(ctx, param, value):
    if not value or ctx.resilient_parsing:
        return
    click_text('''
@Search and enumeration limits

Exact evaluation enumerates possible worlds, and pattern analysis searches
bounded spaces of models and iterates. The following options bound that
work. Each can also be set with the environment variable given in
parentheses, or persistently with "pqe config set KEY VALUE". Command line
options take precedence over environment variables, which take precedence
over the configuration file.

A command that would exceed a limit stops with exit status 2.

@Options:
''')
    print_option_help(_limits_help, 17)
    ctx.exit()


_limits_help = {
    'max-worlds': f'Largest number of possible worlds to enumerate. (PQE_MAX_WORLDS, default {DEFAULTS["max_worlds"]})',
    'hom-budget': f'Step budget of a single homomorphism search. (PQE_HOM_BUDGET, default {DEFAULTS["hom_budget"]})',
    'n-max': f'Largest iterate probed for iterability. (PQE_N_MAX, default {DEFAULTS["n_max"]})',
    'domain-bound': f'Most constants in an enumerated seed model. (PQE_DOMAIN_BOUND, default {DEFAULTS["domain_bound"]})',
    'max-facts': f'Most facts in a query expansion used for seeds. (PQE_MAX_FACTS, default {DEFAULTS["max_facts"]})',
    'sample': f'Worlds spot-checked per verification. (PQE_SAMPLE, default {DEFAULTS["sample"]})',
    'rng-seed': f'Seed for world sampling. (PQE_RNG_SEED, default {DEFAULTS["rng_seed"]})',
    'quiet': 'Do not print progress messages on stderr.',
}


def _limit_option(key):
    name = '--' + key.replace('_', '-')
    return click.option(name, type=int, default=None, expose_value=False, callback=param_callback,
                        envvar=envvar(key), hidden=True)


_limits_options = [_limit_option(key) for key in DEFAULTS] + [
    click.option('--quiet', is_flag=True, default=None, expose_value=False, callback=param_callback, hidden=True),
    click.option('--help-limits', is_flag=True, callback=print_limits_help, expose_value=False, is_eager=True,
                 help='Get help on the search and enumeration limits.')
]


def limit_options():
    def apply(func):
        for option in reversed(_limits_options):
            func = option(func)
        return func
    return apply


def _click_message(msg, nl=True):
    click.echo(msg, err=True, nl=nl)


def _no_message(msg, nl=True):
    pass


def toolbox():
    opts = get_options()
    Toolbox._message = staticmethod(_no_message if opts.get('quiet') else _click_message)
    return Toolbox(**{key: opts.get(key) for key in DEFAULTS})


def tool_call(method, *args, **kwargs):
    '''Call a Toolbox method and print its result.

    Reports are printed as JSON documents; everything else goes through the
    table formatter. If ``check`` is given and rejects the result, the
    command exits with status 1.
    '''
    report = kwargs.pop('report', False)
    check = kwargs.pop('check', None)
    if not report:
        format = get_options().get('format')
        if format in (None, 'text'):
            # Passes non-tabular results through as text
            format = 'tableif'
        elif format in ('json', 'csv'):
            format = 'table'
        kwargs.setdefault('format', format)

    try:
        result = getattr(toolbox(), method)(*args, **kwargs)
    except (PQEException, KeyError) as e:
        raise ToolError(str(e).strip("'"))
    except OSError as e:
        raise ToolError(f'{e.strerror}: {e.filename}')

    if report:
        if result is not None:
            click.echo(json.dumps(result, indent=2))
    else:
        print_output(result)
    if check is not None and not check(result):
        click.get_current_context().exit(1)
    return result
