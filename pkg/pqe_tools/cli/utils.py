import click


def add_param(param, value):
    ctx = click.get_current_context()
    obj = ctx.ensure_object(dict)
    options = obj.setdefault('options', {})
    if param in options:
        ovalue = options[param]
        if not isinstance(ovalue, bool) and ovalue != value:
            param = param.replace('_', '-')
            raise click.UsageError(f'Conflicting values for --{param}: {ovalue}, {value}')
    options[param] = value


def get_options():
    ctx = click.get_current_context()
    obj = ctx.ensure_object(dict)
    return dict(obj.get('options', {}))


def param_callback(ctx, param, value):
    if value in (None, ()):
        return
    add_param(param.name.lower().replace('-', '_'), value)


def click_text(text):
    def _emit(text):
        if text[0] == '@':
            text = text[1:]
            initial_indent = ''
        else:
            initial_indent = '  '
        click.echo(click.wrap_text(text, initial_indent=initial_indent, subsequent_indent='  '))
    paragraph = ''
    for line in text.splitlines():
        if not line or line.lstrip().startswith('-'):
            if paragraph:
                _emit(paragraph)
                paragraph = ''
            click.echo(line)
        elif paragraph:
            paragraph += ' ' + line
        else:
            paragraph = line
    if paragraph:
        _emit(paragraph)


def print_option_help(options, width):
    for option, help in options.items():
        text = f'--{option}'
        spacer = ' ' * (width - len(text))
        text = f'{text}{spacer}{help}'
        click.echo(click.wrap_text(text, initial_indent='  ', subsequent_indent=' ' * (width + 2)))


_input_options = {
    'query': click.option('-q', '--query', required=True,
                          help='Query file (.ucq, .rpq, .dl) or inline query text.'),
    'instance': click.option('-i', '--instance', required=True,
                             help='Instance file, or inline facts separated by semicolons. '
                                  'Constants may contain "#" and "@", the separators of generated names.'),
    'edge': click.option('--edge', required=True, help='Directed edge, as "u,v".'),
    'left': click.option('--left', help='Left-incident fact, e.g. "R(l,u)"; a "-" suffix marks an inverse. '
                                        'Defaults to the first incident pair together with --right.'),
    'right': click.option('--right', help='Right-incident fact, e.g. "T(v,r)".'),
    'mid': click.option('--mid', help='Covered fact F_m, e.g. "S(u,v)". Defaults to the first non-unary covered fact.'),
    'graph': click.option('-g', '--graph', required=True, help='Graph JSON file, or inline JSON.'),
    'seeds': click.option('--seeds', '--seed-file', 'seeds', multiple=True,
                          help='Seed model file; may be repeated. Seeds are enumerated from the query if omitted.'),
}


def input_options(*names):
    def apply(func):
        for name in reversed(names):
            func = _input_options[name](func)
        return func
    return apply
