import itertools
from collections import defaultdict, namedtuple

from .exceptions import ParseError, InvalidInputError
from .homomorphism import DEFAULT_BUDGET
from .logic import Atom, Query, split_atoms, statements, canonical_instance

GOAL = 'goal'


class Rule(namedtuple('Rule', ['head', 'body'])):
    def variables(self):
        return {v for atom in (self.head,) + self.body for v in atom.args}

    def rename(self, mapping):
        return Rule(self.head.substitute(mapping),
                    tuple(a.substitute(mapping) for a in self.body))

    def to_string(self):
        if not self.body:
            return f'{self.head}.'
        return f'{self.head} :- ' + ', '.join(map(str, self.body)) + '.'

    def __str__(self):
        return self.to_string()


class _Store(object):
    '''Ground tuples per predicate, indexed by (predicate, position, value).'''

    def __init__(self):
        self.tuples = defaultdict(set)
        self.index = defaultdict(set)

    def add(self, pred, args):
        if args in self.tuples[pred]:
            return False
        self.tuples[pred].add(args)
        for pos, val in enumerate(args):
            self.index[(pred, pos, val)].add(args)
        return True

    def lookup(self, pred, pattern):
        bound = [(pos, val) for pos, val in enumerate(pattern) if val is not None]
        if not bound:
            return self.tuples.get(pred, ())
        best = min((self.index.get((pred, pos, val), ()) for pos, val in bound), key=len)
        return [t for t in best if all(t[pos] == val for pos, val in bound)]

    def __bool__(self):
        return any(self.tuples.values())


def _join(body, sources, binding):
    if not body:
        yield binding
        return
    atom, source = body[0], sources[0]
    pattern = tuple(binding.get(v) for v in atom.args)
    for tup in source.lookup(atom.predicate, pattern):
        if len(tup) != len(atom.args):
            continue
        new = dict(binding)
        if all(new.setdefault(var, val) == val for var, val in zip(atom.args, tup)):
            yield from _join(body[1:], sources[1:], new)


def _fire(rule, body, sources):
    for binding in _join(body, sources, {}):
        yield rule.head.predicate, tuple(binding[v] for v in rule.head.args)


class DatalogProgram(Query):
    '''A negation-free Datalog program with a 0-ary Goal predicate.'''

    kind = 'datalog'

    def __init__(self, rules):
        self.rules = tuple(rules)
        self.intensional = {rule.head.predicate for rule in self.rules}
        goals = {p for p in self.intensional if p.lower() == GOAL}
        if len(goals) != 1:
            raise InvalidInputError('A Datalog program needs exactly one goal predicate in a rule head')
        self.goal = goals.pop()
        arities = {}
        for rule in self.rules:
            for atom in (rule.head,) + rule.body:
                if arities.setdefault(atom.predicate, len(atom.args)) != len(atom.args):
                    raise InvalidInputError(f'Predicate {atom.predicate} is used with different arities')
            if rule.head.predicate == self.goal and rule.head.args:
                raise InvalidInputError(f'The goal predicate is 0-ary: {rule}')
            body_vars = {v for atom in rule.body for v in atom.args}
            missing = set(rule.head.args) - body_vars
            if missing:
                raise InvalidInputError(f'Rule is not range-restricted ({", ".join(sorted(missing))}): {rule}')
        self.arities = arities

    @classmethod
    def parse(cls, text, source=None):
        rules = []
        for lineno, stmt in statements(text):
            head, sep, body = stmt.partition(':-')
            try:
                rules.append(Rule(Atom.from_string(head), tuple(split_atoms(body)) if sep else ()))
            except ParseError as exc:
                raise ParseError(str(exc).splitlines()[0], source=source, lineno=lineno, text=stmt)
        try:
            return cls(rules)
        except InvalidInputError as exc:
            raise ParseError(str(exc), source=source)

    def extensional(self):
        return {a.predicate for r in self.rules for a in r.body} - self.intensional

    def relations(self):
        return self.extensional()

    def monadic_relations(self):
        return {p for p in self.extensional() if self.arities[p] == 1}

    def binarized(self, names):
        def convert(atom):
            if atom.predicate in names and len(atom.args) == 1:
                return Atom(names[atom.predicate], atom.args * 2)
            return atom
        return DatalogProgram(Rule(r.head, tuple(convert(a) for a in r.body)) for r in self.rules)

    def _edb(self, instance):
        store = _Store()
        for fact in instance.facts:
            if fact.relation in self.intensional:
                continue
            args = (fact.subject,) if fact.is_monadic else (fact.subject, fact.object)
            store.add(fact.relation, args)
        return store

    def fixpoint(self, instance, naive=False):
        full = self._edb(instance)
        derived = set()
        if naive:
            changed = True
            while changed:
                changed = False
                new = [f for rule in self.rules
                       for f in _fire(rule, rule.body, [full] * len(rule.body))]
                for pred, args in new:
                    if full.add(pred, args):
                        derived.add(Atom(pred, args))
                        changed = True
            return frozenset(derived)

        delta = _Store()
        for rule in self.rules:
            for pred, args in _fire(rule, rule.body, [full] * len(rule.body)):
                delta.add(pred, args)
        pending = [(p, a) for p, tups in delta.tuples.items() for a in tups]
        while pending:
            delta = _Store()
            for pred, args in pending:
                if full.add(pred, args):
                    delta.add(pred, args)
                    derived.add(Atom(pred, args))
            if not delta:
                break
            pending = []
            for rule in self.rules:
                for pos, atom in enumerate(rule.body):
                    if atom.predicate not in self.intensional:
                        continue
                    body = (atom,) + rule.body[:pos] + rule.body[pos + 1:]
                    sources = [delta] + [full] * (len(body) - 1)
                    pending.extend(_fire(rule, body, sources))
        return frozenset(derived)

    def holds(self, instance, budget=DEFAULT_BUDGET, naive=False):
        return Atom(self.goal, ()) in self.fixpoint(instance, naive=naive)

    def expansions(self, max_facts):
        '''Unfold the goal top-down into conjunctions of extensional atoms.'''
        by_head = defaultdict(list)
        for rule in self.rules:
            by_head[rule.head.predicate].append(rule)
        fresh = itertools.count(1)
        max_depth = 2 * max_facts + 2
        seen, result = set(), []
        stack = [((Atom(self.goal, ()),), 0)]
        while stack:
            atoms, depth = stack.pop()
            edb = [a for a in atoms if a.predicate not in self.intensional]
            if len(edb) > max_facts:
                continue
            idb = [a for a in atoms if a.predicate in self.intensional]
            if not idb:
                inst = canonical_instance(edb)
                key = inst.to_string()
                if inst and key not in seen:
                    seen.add(key)
                    result.append(inst)
                continue
            if depth >= max_depth:
                continue
            target = idb[0]
            rest = list(atoms)
            rest.remove(target)
            for rule in by_head[target.predicate]:
                rule = rule.rename({v: f'V{next(fresh)}' for v in sorted(rule.variables())})
                subst, merge = {}, {}
                for hv, av in zip(rule.head.args, target.args):
                    if hv in subst and subst[hv] != av:
                        merge[av] = subst[hv]
                    subst.setdefault(hv, av)
                new = [a.substitute(subst) for a in rule.body] + rest
                if merge:
                    new = [a.substitute(merge) for a in new]
                stack.append((tuple(new), depth + 1))
        return sorted(result, key=lambda inst: (len(inst), inst.to_string()))

    def to_string(self):
        return '\n'.join(map(str, self.rules)) + '\n'


def datalog_fixpoint(program, instance, naive=False):
    '''The intensional facts in the least fixpoint of ``program`` over ``instance``.'''
    return program.fixpoint(instance, naive=naive)
