import os

from .exceptions import ParseError
from .homomorphism import DEFAULT_BUDGET
from .logic import Query
from .ucq import UCQ
from .rpq import RPQ
from .datalog import DatalogProgram

QUERY_TYPES = {'ucq': UCQ, 'rpq': RPQ, 'datalog': DatalogProgram}
EXTENSIONS = {'.ucq': 'ucq', '.cq': 'ucq', '.rpq': 'rpq', '.dl': 'datalog', '.datalog': 'datalog'}


def query_kind(text):
    '''Guess the query language of a text: RPQs have no rules, UCQs only ``q :-`` lines.'''
    body = '\n'.join(line.split('%', 1)[0] for line in text.splitlines())
    if ':-' not in body:
        return 'rpq'
    heads = [stmt.split(':-', 1)[0].strip() for stmt in body.split('.') if stmt.strip()]
    if all(h.rstrip('()').strip().lower() == 'q' for h in heads):
        return 'ucq'
    return 'datalog'


def parse_query(text, kind=None, source=None):
    kind = kind or query_kind(text)
    try:
        cls = QUERY_TYPES[kind]
    except KeyError:
        raise ParseError(f'unknown query kind {kind!r}', source=source)
    return cls.parse(text, source=source)


def load_query(path_or_text, kind=None):
    '''Load a query from a file, or parse the argument itself as query text.'''
    if isinstance(path_or_text, Query):
        return path_or_text
    if os.path.isfile(path_or_text):
        ext = os.path.splitext(path_or_text)[1].lower()
        with open(path_or_text, 'r') as fp:
            text = fp.read()
        return parse_query(text, kind=kind or EXTENSIONS.get(ext), source=path_or_text)
    return parse_query(path_or_text, kind=kind)


def eval_query(query, instance, budget=DEFAULT_BUDGET):
    '''True iff ``instance`` satisfies ``query``.'''
    return query.holds(instance, budget=budget)
