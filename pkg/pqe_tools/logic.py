import re
from collections import namedtuple

from .exceptions import ParseError
from .facts import Fact
from .instance import Instance
from .homomorphism import DEFAULT_BUDGET

RE_PREDICATE = r'[A-Za-z0-9_]+'
RE_VARIABLE = r'[A-Z][A-Za-z0-9_]*'
RE_ATOM = re.compile(rf'^\s*({RE_PREDICATE})\s*(?:\(([^()]*)\))?\s*$')
COMMENT = '%'


class Atom(namedtuple('Atom', ['predicate', 'args'])):
    '''An atom p(X,Y), p(X) or p(). Ground atoms carry constants in ``args``.'''

    @classmethod
    def from_string(cls, text):
        match = RE_ATOM.match(text)
        if not match:
            raise ParseError('expected an atom such as r(X,Y)', text=text)
        pred, args = match.groups()
        args = tuple(a.strip() for a in args.split(',')) if args and args.strip() else ()
        for arg in args:
            if not re.fullmatch(RE_VARIABLE, arg):
                raise ParseError(f'atom arguments must be variables (uppercase), got {arg!r}', text=text)
        if len(args) > 2:
            raise ParseError('atoms have at most two arguments', text=text)
        return cls(pred, args)

    def substitute(self, mapping):
        return Atom(self.predicate, tuple(mapping.get(a, a) for a in self.args))

    def to_fact(self):
        '''Freeze the atom, reading its variables as constants.'''
        if len(self.args) == 1:
            return Fact(self.predicate, self.args[0], None)
        if len(self.args) != 2:
            raise ValueError(f'Cannot freeze a {len(self.args)}-ary atom')
        return Fact(self.predicate, *self.args)

    def to_string(self):
        if not self.args:
            return self.predicate
        return f'{self.predicate}({",".join(self.args)})'

    def __str__(self):
        return self.to_string()


def split_atoms(text):
    '''Split a comma-separated conjunction of atoms at parenthesis depth zero.'''
    parts, depth, current = [], 0, ''
    for ch in text:
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        if ch == ',' and depth == 0:
            parts.append(current)
            current = ''
        else:
            current += ch
    if current.strip():
        parts.append(current)
    return [Atom.from_string(p) for p in parts]


def statements(text):
    '''Yield (lineno, statement) pairs of a '.'-terminated rule file.'''
    pending, start = '', None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split(COMMENT, 1)[0].strip()
        if not line:
            continue
        if start is None:
            start = lineno
        pending += ' ' + line
        while '.' in pending:
            stmt, pending = pending.split('.', 1)
            if stmt.strip():
                yield start, stmt.strip()
            start = lineno if pending.strip() else None
    if pending.strip():
        yield start, pending.strip()


def set_partitions(items, max_blocks):
    '''Partitions of ``items`` into at most ``max_blocks`` blocks, as block-index lists.'''
    items = list(items)

    def grow(prefix, used):
        if len(prefix) == len(items):
            yield list(prefix)
            return
        for block in range(min(used + 1, max_blocks)):
            prefix.append(block)
            yield from grow(prefix, max(used, block + 1))
            prefix.pop()

    if not items:
        yield []
        return
    yield from grow([], 0)


def quotients(instance, max_constants):
    '''All homomorphic images of ``instance`` that identify constants into
    at most ``max_constants`` classes, with constants renamed c0, c1, ...'''
    elements = sorted(instance.domain)
    for blocks in set_partitions(elements, max_constants):
        mapping = {elem: f'c{block}' for elem, block in zip(elements, blocks)}
        yield instance.rename(mapping)


class Query(object):
    '''Base class of the homomorphism-closed query classes.'''

    kind = None

    def holds(self, instance, budget=DEFAULT_BUDGET):
        raise NotImplementedError

    def expansions(self, max_facts):
        '''Canonical instances of the CQs this query unfolds into, up to
        ``max_facts`` facts each.'''
        raise NotImplementedError

    def relations(self):
        raise NotImplementedError

    def monadic_relations(self):
        return set()

    def binarized(self, names):
        return self

    def to_string(self):
        raise NotImplementedError

    def __str__(self):
        return self.to_string()

    def __eq__(self, other):
        return type(self) is type(other) and self.to_string() == other.to_string()

    def __hash__(self):
        return hash((type(self).__name__, self.to_string()))


def canonical_instance(atoms):
    return Instance(atom.to_fact() for atom in atoms)
