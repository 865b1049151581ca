import json
from fractions import Fraction

from .config import DEFAULTS
from .exceptions import ParseError, InvalidInputError, WorldCapExceeded
from .facts import Fact
from .homomorphism import DEFAULT_BUDGET
from .instance import Instance, COMMENT

DEFAULT_WORLD_CAP = DEFAULTS['max_worlds']
HALF = Fraction(1, 2)


def parse_probability(text):
    try:
        p = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f'invalid probability {text.strip()!r}')
    if not 0 <= p <= 1:
        raise ParseError(f'probability {p} is outside [0,1]')
    return p


class TID(object):
    '''A tuple-independent probabilistic instance: every fact carries an
    independent, exact probability of being present.'''

    def __init__(self, probabilities):
        self.prob = {}
        for fact, p in dict(probabilities).items():
            p = Fraction(p)
            if not 0 <= p <= 1:
                raise InvalidInputError(f'Probability of {fact} is outside [0,1]: {p}')
            self.prob[fact] = p
        self.instance = Instance(self.prob)

    @classmethod
    def from_instance(cls, instance, p=1):
        return cls({fact: p for fact in instance.facts})

    @classmethod
    def parse(cls, text, monadic=False, source=None):
        probabilities = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split(COMMENT, 1)[0].strip()
            if not line:
                continue
            if line.endswith('.'):
                line = line[:-1]
            fact_text, sep, prob_text = line.partition(':')
            try:
                fact = Fact.from_string(fact_text, monadic=monadic)
                p = parse_probability(prob_text) if sep else Fraction(1)
            except ParseError as exc:
                raise ParseError(str(exc).splitlines()[0].replace('Parse error: ', ''),
                                 source=source, lineno=lineno, text=line)
            if fact in probabilities and probabilities[fact] != p:
                raise ParseError(f'conflicting probabilities for {fact}',
                                 source=source, lineno=lineno, text=line)
            probabilities[fact] = p
        return cls(probabilities)

    @classmethod
    def load(cls, path, monadic=False):
        with open(path, 'r') as fp:
            return cls.parse(fp.read(), monadic=monadic, source=path)

    def to_string(self):
        return ''.join(f'{fact} : {self.prob[fact]}.\n' for fact in self.instance.sorted_facts())

    def uncertain(self):
        return [f for f in self.instance.sorted_facts() if 0 < self.prob[f] < 1]

    def pinned(self):
        return [f for f in self.instance.sorted_facts() if self.prob[f] == 1]

    def is_gfomc(self):
        return all(p in (0, HALF, 1) for p in self.prob.values())

    def world_instance(self, kept):
        '''The world keeping the pinned facts and the given uncertain facts.'''
        return Instance(set(self.pinned()) | set(kept))

    def records(self):
        return [{'fact': str(f), 'probability': str(self.prob[f])}
                for f in self.instance.sorted_facts()]

    def __len__(self):
        return len(self.prob)

    def __eq__(self, other):
        return isinstance(other, TID) and self.prob == other.prob

    def __hash__(self):
        return hash(frozenset(self.prob.items()))

    def __repr__(self):
        return 'TID({' + ', '.join(f'{f}: {self.prob[f]}' for f in self.instance.sorted_facts()) + '})'


def world_probability(tid, world):
    world = set(world)
    if not world <= tid.instance.facts:
        raise InvalidInputError('The world is not a subset of the TID facts')
    result = Fraction(1)
    for fact, p in tid.prob.items():
        result *= p if fact in world else 1 - p
    return result


def check_world_cap(count, cap, what='uncertain facts'):
    if count < 0 or 2 ** count > cap:
        raise WorldCapExceeded(count, cap, what)


def pqe_exact(query, tid, world_cap=DEFAULT_WORLD_CAP, budget=DEFAULT_BUDGET):
    '''The exact probability that ``query`` holds in a world of ``tid``.

    Facts with probability 1 are kept in every world and facts with
    probability 0 are left out; only the uncertain facts are enumerated.
    '''
    uncertain = tid.uncertain()
    m = len(uncertain)
    check_world_cap(m, world_cap)
    pinned = set(tid.pinned())
    probs = [tid.prob[f] for f in uncertain]
    uniform = all(p == HALF for p in probs)
    total = Fraction(0)
    satisfied = 0
    for mask in range(2 ** m):
        world = pinned.union(uncertain[i] for i in range(m) if mask >> i & 1)
        if not query.holds(Instance(world), budget=budget):
            continue
        if uniform:
            satisfied += 1
            continue
        weight = Fraction(1)
        for i, p in enumerate(probs):
            weight *= p if mask >> i & 1 else 1 - p
        total += weight
    if uniform:
        return Fraction(satisfied, 2 ** m)
    return total


def is_gfomc(tid):
    return tid.is_gfomc()


class WorldMap(object):
    '''A bijection between the elements of a combinatorial object (vertices
    or edges) and the uncertain facts of a coding TID.

    A world on either side is a set; ``to_facts`` and ``from_facts``
    translate between them.
    '''

    def __init__(self, kind, entries):
        self.kind = kind
        self.entries = [(key, fact) for key, fact in entries]
        self._forward = dict(self.entries)
        self._backward = {fact: key for key, fact in self.entries}
        if len(self._forward) != len(self.entries) or len(self._backward) != len(self.entries):
            raise InvalidInputError('World map entries are not a bijection')

    def keys(self):
        return [key for key, _ in self.entries]

    def facts(self):
        return [fact for _, fact in self.entries]

    def to_facts(self, world):
        return frozenset(self._forward[key] for key in world)

    def from_facts(self, facts):
        return frozenset(self._backward[f] for f in facts if f in self._backward)

    def round_trip(self, world):
        world = frozenset(world)
        return self.from_facts(self.to_facts(world)) == world

    def __len__(self):
        return len(self.entries)

    def to_json(self):
        def encode(key):
            return list(key) if isinstance(key, tuple) else key
        return json.dumps({'kind': self.kind,
                           'entries': [{'element': encode(k), 'fact': str(f)} for k, f in self.entries]},
                          indent=2)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)

        def decode(key):
            return tuple(key) if isinstance(key, list) else key
        return cls(data['kind'], [(decode(e['element']), Fact.from_string(e['fact']))
                                  for e in data['entries']])
