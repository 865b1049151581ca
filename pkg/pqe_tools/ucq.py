from collections import namedtuple

from .exceptions import ParseError, InvalidInputError
from .homomorphism import find_homomorphism, DEFAULT_BUDGET
from .logic import Atom, Query, split_atoms, statements, canonical_instance


class CQ(namedtuple('CQ', ['atoms'])):
    '''A Boolean conjunctive query: an existentially closed conjunction of atoms.'''

    def __new__(cls, atoms):
        atoms = tuple(atoms)
        if not atoms:
            raise InvalidInputError('A CQ needs at least one atom')
        for atom in atoms:
            if len(atom.args) not in (1, 2):
                raise InvalidInputError(f'CQ atoms are unary or binary: {atom}')
        return super(CQ, cls).__new__(cls, atoms)

    def canonical_instance(self):
        return canonical_instance(self.atoms)

    def to_string(self, head='q'):
        return f'{head} :- ' + ', '.join(map(str, self.atoms)) + '.'


class UCQ(Query):
    '''A finite disjunction of CQs; one ``q :- ...`` line per disjunct.'''

    kind = 'ucq'

    def __init__(self, disjuncts):
        self.disjuncts = tuple(d if isinstance(d, CQ) else CQ(d) for d in disjuncts)
        if not self.disjuncts:
            raise InvalidInputError('A UCQ needs at least one disjunct')
        self._canonical = [d.canonical_instance() for d in self.disjuncts]

    @classmethod
    def parse(cls, text, source=None):
        disjuncts = []
        for lineno, stmt in statements(text):
            head, sep, body = stmt.partition(':-')
            try:
                head = Atom.from_string(head)
                if not sep or head.args:
                    raise ParseError('expected q :- atom, atom, ...')
                disjuncts.append(CQ(split_atoms(body)))
            except (ParseError, InvalidInputError) as exc:
                raise ParseError(str(exc).splitlines()[0], source=source, lineno=lineno, text=stmt)
        if not disjuncts:
            raise ParseError('no disjuncts found', source=source)
        return cls(disjuncts)

    def holds(self, instance, budget=DEFAULT_BUDGET):
        return any(find_homomorphism(canon, instance, budget=budget) is not None
                   for canon in self._canonical)

    def expansions(self, max_facts):
        return [canon for canon in self._canonical if len(canon) <= max_facts]

    def relations(self):
        return {atom.predicate for d in self.disjuncts for atom in d.atoms}

    def monadic_relations(self):
        return {atom.predicate for d in self.disjuncts for atom in d.atoms if len(atom.args) == 1}

    def binarized(self, names):
        def convert(atom):
            if len(atom.args) == 1 and atom.predicate in names:
                return Atom(names[atom.predicate], atom.args * 2)
            return atom
        return UCQ(CQ([convert(a) for a in d.atoms]) for d in self.disjuncts)

    def to_string(self):
        return '\n'.join(d.to_string() for d in self.disjuncts) + '\n'
