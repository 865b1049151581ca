import re
from collections import defaultdict, deque, namedtuple

from .exceptions import ParseError
from .facts import Fact, INVERSE_SUFFIX
from .homomorphism import DEFAULT_BUDGET
from .instance import Instance
from .logic import Query, COMMENT

RE_TOKEN = re.compile(r'\s*(?:([A-Za-z0-9_]+)(-?)|([*+|()]))')


class Letter(namedtuple('Letter', ['relation', 'inverse'])):
    '''A symbol of the oriented alphabet: R or R-.'''

    @classmethod
    def from_string(cls, text):
        text = text.strip()
        inverse = text.endswith(INVERSE_SUFFIX)
        return cls(text[:-1] if inverse else text, inverse)

    def __str__(self):
        return self.relation + (INVERSE_SUFFIX if self.inverse else '')


Symbol = namedtuple('Symbol', ['letter'])
Concat = namedtuple('Concat', ['left', 'right'])
Union = namedtuple('Union', ['left', 'right'])
Star = namedtuple('Star', ['inner'])
Plus = namedtuple('Plus', ['inner'])


def _tokenize(text):
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        match = RE_TOKEN.match(text, pos)
        if not match:
            raise ParseError(f'unexpected character {text[pos:].strip()[:1]!r}', text=text)
        name, minus, op = match.groups()
        tokens.append(Letter(name, bool(minus)) if name else op)
        pos = match.end()
    return tokens


class _Parser(object):
    # union := concat ('|' concat)* ; concat := postfix+ ; postfix := atom ('*'|'+')*
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def error(self, msg):
        raise ParseError(msg, text=self.text)

    def parse(self):
        if not self.tokens:
            self.error('empty regular expression')
        node = self.union()
        if self.peek() is not None:
            self.error(f'unexpected {self.peek()!s}')
        return node

    def union(self):
        node = self.concat()
        while self.peek() == '|':
            self.pos += 1
            node = Union(node, self.concat())
        return node

    def concat(self):
        node = None
        while isinstance(self.peek(), Letter) or self.peek() == '(':
            part = self.postfix()
            node = part if node is None else Concat(node, part)
        if node is None:
            self.error('expected a relation name or "("')
        return node

    def postfix(self):
        node = self.atom()
        while self.peek() in ('*', '+'):
            node = Star(node) if self.tokens[self.pos] == '*' else Plus(node)
            self.pos += 1
        return node

    def atom(self):
        tok = self.peek()
        self.pos += 1
        if isinstance(tok, Letter):
            return Symbol(tok)
        node = self.union()
        if self.peek() != ')':
            self.error('missing ")"')
        self.pos += 1
        return node


def _to_string(node, prec=0):
    if isinstance(node, Symbol):
        return str(node.letter)
    if isinstance(node, Union):
        text = f'{_to_string(node.left, 0)}|{_to_string(node.right, 0)}'
        return f'({text})' if prec > 0 else text
    if isinstance(node, Concat):
        text = f'{_to_string(node.left, 1)} {_to_string(node.right, 1)}'
        return f'({text})' if prec > 1 else text
    op = '*' if isinstance(node, Star) else '+'
    return _to_string(node.inner, 2) + op


class NFA(object):
    '''A Thompson automaton with a single start and a single accepting state.'''

    def __init__(self):
        self.transitions = defaultdict(list)
        self.nstates = 0
        self.start = self.accept = None
        self._closures = {}

    def new_state(self):
        self.nstates += 1
        return self.nstates - 1

    def add(self, src, letter, dst):
        self.transitions[src].append((letter, dst))

    def closure(self, states):
        result, stack = set(states), list(states)
        while stack:
            state = stack.pop()
            for letter, dst in self.transitions[state]:
                if letter is None and dst not in result:
                    result.add(dst)
                    stack.append(dst)
        return frozenset(result)

    def state_closure(self, state):
        if state not in self._closures:
            self._closures[state] = self.closure((state,))
        return self._closures[state]

    def step(self, states, letter):
        targets = {dst for s in states for lt, dst in self.transitions[s] if lt == letter}
        return self.closure(targets)

    def letters(self):
        return sorted({lt for moves in self.transitions.values() for lt, _ in moves if lt is not None})

    def accepts(self, word):
        if isinstance(word, str):
            word = [Letter.from_string(tok) for tok in word.split()]
        states = self.state_closure(self.start)
        for letter in word:
            states = self.step(states, letter)
        return self.accept in states


def rpq_to_nfa(rpq):
    node = rpq.ast if isinstance(rpq, RPQ) else rpq
    nfa = NFA()

    def build(node):
        start, end = nfa.new_state(), nfa.new_state()
        if isinstance(node, Symbol):
            nfa.add(start, node.letter, end)
        elif isinstance(node, Concat):
            s1, e1 = build(node.left)
            s2, e2 = build(node.right)
            nfa.add(start, None, s1)
            nfa.add(e1, None, s2)
            nfa.add(e2, None, end)
        elif isinstance(node, Union):
            for part in (node.left, node.right):
                s, e = build(part)
                nfa.add(start, None, s)
                nfa.add(e, None, end)
        else:
            s, e = build(node.inner)
            nfa.add(start, None, s)
            nfa.add(e, None, end)
            nfa.add(e, None, s)
            if isinstance(node, Star):
                nfa.add(start, None, end)
        return start, end

    nfa.start, nfa.accept = build(node)
    return nfa


class RPQ(Query):
    '''A regular path query with inverses, matched anywhere in the instance.'''

    kind = 'rpq'

    def __init__(self, text):
        if isinstance(text, str):
            lines = [ln.split(COMMENT, 1)[0].strip() for ln in text.splitlines()]
            text = ' '.join(ln for ln in lines if ln)
            self.ast = _Parser(text).parse()
        else:
            self.ast = text
        self.nfa = rpq_to_nfa(self.ast)

    @classmethod
    def parse(cls, text, source=None):
        try:
            return cls(text)
        except ParseError as exc:
            raise ParseError(str(exc).splitlines()[0].replace('Parse error: ', ''), source=source, text=text)

    def holds(self, instance, budget=DEFAULT_BUDGET):
        nfa = self.nfa
        initial = nfa.state_closure(nfa.start)
        if nfa.accept in initial:
            return bool(instance.domain)
        forward, backward = defaultdict(set), defaultdict(set)
        for fact in instance.facts:
            if not fact.is_monadic:
                forward[(fact.relation, fact.subject)].add(fact.object)
                backward[(fact.relation, fact.object)].add(fact.subject)
        visited = {(c, s) for c in instance.domain for s in initial}
        queue = deque(sorted(visited))
        while queue:
            const, state = queue.popleft()
            for letter, dst in nfa.transitions[state]:
                if letter is None:
                    continue
                index = backward if letter.inverse else forward
                for nxt in index.get((letter.relation, const), ()):
                    for reached in nfa.state_closure(dst):
                        if reached == nfa.accept:
                            return True
                        if (nxt, reached) not in visited:
                            visited.add((nxt, reached))
                            queue.append((nxt, reached))
        return False

    def words(self, max_length):
        '''Accepted words of length 1..max_length, shortest first.'''
        nfa, letters, result = self.nfa, self.nfa.letters(), []
        layer = [((), nfa.state_closure(nfa.start))]
        for _ in range(max_length):
            nxt = []
            for word, states in layer:
                for letter in letters:
                    reached = nfa.step(states, letter)
                    if reached:
                        nxt.append((word + (letter,), reached))
                        if nfa.accept in reached:
                            result.append(word + (letter,))
            layer = nxt
        return result

    def expansions(self, max_facts):
        result = []
        for word in self.words(max_facts):
            facts = []
            for i, letter in enumerate(word):
                a, b = f'X{i}', f'X{i + 1}'
                facts.append(Fact(letter.relation, b, a) if letter.inverse else Fact(letter.relation, a, b))
            result.append(Instance(facts))
        return result

    def relations(self):
        return {letter.relation for letter in self.nfa.letters()}

    def to_string(self):
        return _to_string(self.ast) + '\n'
