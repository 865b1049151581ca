import re
from collections import namedtuple

from .exceptions import ParseError, InvalidInputError

RE_RELATION = r'[A-Za-z0-9_]+'
# Generated constants join plain names with '#' or '@'; see instance.FreshNames
RE_CONSTANT = r'[A-Za-z0-9_]+(?:[#@][A-Za-z0-9_]+)*'
RE_FACT = re.compile(rf'^\s*({RE_RELATION})\s*(-?)\s*\(\s*({RE_CONSTANT})\s*(?:,\s*({RE_CONSTANT})\s*)?\)\s*$')
INVERSE_SUFFIX = '-'


class Signature(namedtuple('Signature', ['relations'])):
    '''An ordered set of binary relation names.

    The oriented alphabet holds each relation R together with its
    inverse, written R- in text and R⁻ in prose.
    '''

    def __new__(cls, relations=()):
        relations = tuple(sorted(set(relations)))
        for name in relations:
            if not name or not re.fullmatch(RE_RELATION, name):
                raise InvalidInputError(f'Invalid relation name: {name!r}')
        return super(Signature, cls).__new__(cls, relations)

    def oriented(self):
        return [(rel, inverse) for rel in self.relations for inverse in (False, True)]

    def __contains__(self, name):
        return name in self.relations

    def __str__(self):
        return ', '.join(self.relations)


class Fact(namedtuple('Fact', ['relation', 'subject', 'object'])):
    '''A fact R(a,b). A fact with object None is a monadic fact R(a).'''

    @classmethod
    def from_string(cls, text, monadic=False):
        match = RE_FACT.match(text)
        if not match or match.group(2):
            raise ParseError('expected a fact of the form R(a,b)', text=text)
        rel, _, subject, obj = match.groups()
        if obj is None and not monadic:
            raise ParseError('arity-one facts are only accepted in monadic mode', text=text)
        return cls(rel, subject, obj)

    @property
    def is_monadic(self):
        return self.object is None

    @property
    def is_unary(self):
        return self.object is not None and self.subject == self.object

    @property
    def domain(self):
        if self.object is None:
            return frozenset((self.subject,))
        return frozenset((self.subject, self.object))

    def rename(self, mapping):
        subject = mapping.get(self.subject, self.subject)
        obj = self.object if self.object is None else mapping.get(self.object, self.object)
        return Fact(self.relation, subject, obj)

    def sort_key(self):
        return (self.relation, self.subject, self.object or '')

    def to_string(self):
        if self.object is None:
            return f'{self.relation}({self.subject})'
        return f'{self.relation}({self.subject},{self.object})'

    def __str__(self):
        return self.to_string()


class OrientedFact(namedtuple('OrientedFact', ['relation', 'inverse', 'source', 'target'])):
    '''A fact seen from the oriented alphabet.

    R-(b,a) denotes the same underlying fact as R(a,b).
    '''

    @classmethod
    def from_string(cls, text):
        match = RE_FACT.match(text)
        if not match or match.group(4) is None:
            raise ParseError('expected an oriented fact of the form R(a,b) or R-(a,b)', text=text)
        rel, minus, source, target = match.groups()
        return cls(rel, bool(minus), source, target)

    @classmethod
    def from_fact(cls, fact, source):
        '''View a binary fact as leaving the given endpoint.'''
        if fact.object is None:
            raise InvalidInputError(f'Monadic fact has no orientation: {fact}')
        if source == fact.subject:
            return cls(fact.relation, False, fact.subject, fact.object)
        elif source == fact.object:
            return cls(fact.relation, True, fact.object, fact.subject)
        raise InvalidInputError(f'{source} does not occur in {fact}')

    def to_fact(self):
        if self.inverse:
            return Fact(self.relation, self.target, self.source)
        return Fact(self.relation, self.source, self.target)

    def reverse(self):
        return OrientedFact(self.relation, not self.inverse, self.target, self.source)

    def relocate(self, source=None, target=None):
        return OrientedFact(self.relation, self.inverse,
                            self.source if source is None else source,
                            self.target if target is None else target)

    @property
    def is_unary(self):
        return self.source == self.target

    def sort_key(self):
        return (self.relation, self.inverse, self.source, self.target)

    def to_string(self):
        minus = INVERSE_SUFFIX if self.inverse else ''
        return f'{self.relation}{minus}({self.source},{self.target})'

    def __str__(self):
        return self.to_string()


class DirectedEdge(namedtuple('DirectedEdge', ['u', 'v'])):
    @classmethod
    def from_string(cls, text):
        parts = [p.strip() for p in text.split(',')]
        if len(parts) != 2 or not all(re.fullmatch(RE_CONSTANT, p) for p in parts):
            raise ParseError('expected an edge of the form u,v', text=text)
        return cls(*parts)

    def reverse(self):
        return DirectedEdge(self.v, self.u)

    def undirected(self):
        return tuple(sorted(self))

    def to_string(self):
        return f'{self.u},{self.v}'

    def __str__(self):
        return self.to_string()


class IncidentPair(namedtuple('IncidentPair', ['left', 'right'])):
    '''A left-incident fact R_l(l,u) and a right-incident fact R_r(v,r).'''

    @classmethod
    def from_strings(cls, left, right):
        return cls(OrientedFact.from_string(left), OrientedFact.from_string(right))

    def __str__(self):
        return f'({self.left}, {self.right})'
