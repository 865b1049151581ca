import networkx as nx

from .exceptions import ParseError, InvalidInputError
from .facts import Fact, OrientedFact, DirectedEdge, IncidentPair, Signature

COMMENT = '%'

# Covered-fact kinds, in display order
_U_LOOP, _V_LOOP, _FORWARD, _BACKWARD = range(4)


class FreshNames(object):
    '''Allocates constants that do not occur in a given domain.

    Generated names combine an existing name with a '#' or '@' tag,
    and collisions get a further '#k' suffix.
    '''

    def __init__(self, taken):
        self._taken = set(taken)

    def fresh(self, name):
        candidate, k = name, 2
        while candidate in self._taken:
            candidate = f'{name}#{k}'
            k += 1
        self._taken.add(candidate)
        return candidate


class Instance(object):
    '''A finite set of facts over binary (and, in monadic mode, unary) relations.

    Instances are immutable; every operation returns a new instance.
    '''

    def __init__(self, facts=()):
        facts = frozenset(facts)
        for fact in facts:
            if not isinstance(fact, Fact):
                raise TypeError(f'Not a Fact: {fact!r}')
        self._facts = facts
        self._domain = None
        self._graph = None

    @classmethod
    def parse(cls, text, monadic=False, source=None):
        facts = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split(COMMENT, 1)[0].strip()
            if not line:
                continue
            if line.endswith('.'):
                line = line[:-1]
            try:
                facts.append(Fact.from_string(line, monadic=monadic))
            except ParseError as exc:
                raise ParseError(str(exc).splitlines()[0].replace('Parse error: ', ''),
                                 source=source, lineno=lineno, text=line)
        return cls(facts)

    @classmethod
    def load(cls, path, monadic=False):
        with open(path, 'r') as fp:
            return cls.parse(fp.read(), monadic=monadic, source=path)

    def to_string(self):
        return ''.join(f'{fact}.\n' for fact in self.sorted_facts())

    @property
    def facts(self):
        return self._facts

    @property
    def domain(self):
        if self._domain is None:
            self._domain = frozenset(c for fact in self._facts for c in fact.domain)
        return self._domain

    @property
    def signature(self):
        return Signature(fact.relation for fact in self._facts if not fact.is_monadic)

    @property
    def has_monadic(self):
        return any(fact.is_monadic for fact in self._facts)

    def require_binary(self):
        if self.has_monadic:
            raise InvalidInputError('Instance has arity-one facts; translate it with to-binary first')
        return self

    def sorted_facts(self):
        return sorted(self._facts, key=Fact.sort_key)

    @property
    def gaifman(self):
        if self._graph is None:
            graph = nx.Graph()
            graph.add_nodes_from(self.domain)
            graph.add_edges_from((f.subject, f.object) for f in self._facts
                                 if not f.is_monadic and not f.is_unary)
            self._graph = graph
        return self._graph

    def edges(self):
        return sorted(tuple(sorted(edge)) for edge in self.gaifman.edges())

    def is_edge(self, u, v):
        return u != v and self.gaifman.has_edge(u, v)

    def degree(self, a):
        return self.gaifman.degree(a) if a in self.domain else 0

    def facts_at(self, elements):
        elements = set(elements)
        return [f for f in self.sorted_facts() if f.domain & elements]

    def induced(self, elements):
        elements = set(elements)
        return Instance(f for f in self._facts if f.domain <= elements)

    def union(self, facts):
        return Instance(self._facts.union(facts))

    def difference(self, facts):
        return Instance(self._facts.difference(facts))

    def rename(self, mapping):
        return Instance(f.rename(mapping) for f in self._facts)

    def components(self):
        '''Connected components of the Gaifman graph, as instances.'''
        result = [self.induced(nodes) for nodes in nx.connected_components(self.gaifman)]
        return sorted(result, key=lambda inst: (min(inst.domain), inst.to_string()))

    def oriented_facts(self):
        result = []
        for fact in self._facts:
            if fact.is_monadic:
                continue
            result.append(OrientedFact.from_fact(fact, fact.subject))
            if not fact.is_unary:
                result.append(OrientedFact.from_fact(fact, fact.object))
        return sorted(result, key=OrientedFact.sort_key)

    def __len__(self):
        return len(self._facts)

    def __iter__(self):
        return iter(self.sorted_facts())

    def __contains__(self, fact):
        return fact in self._facts

    def __eq__(self, other):
        return isinstance(other, Instance) and self._facts == other._facts

    def __hash__(self):
        return hash(self._facts)

    def __repr__(self):
        return 'Instance({' + ', '.join(map(str, self.sorted_facts())) + '})'


def check_edge(instance, edge):
    edge = DirectedEdge(*edge)
    if not instance.is_edge(edge.u, edge.v):
        raise InvalidInputError(f'({edge}) is not an edge of the instance')
    return edge


def check_non_leaf_edge(instance, edge):
    edge = check_edge(instance, edge)
    for elem in edge:
        if instance.degree(elem) < 2:
            raise InvalidInputError(f'({edge}) is a leaf edge: {elem} occurs in only one edge')
    return edge


def _covered(instance, edge):
    u, v = edge
    result = []
    for fact in instance.facts:
        if fact.is_monadic:
            continue
        if fact.subject == fact.object == u:
            result.append((_U_LOOP, fact, OrientedFact(fact.relation, False, u, u)))
        elif fact.subject == fact.object == v:
            result.append((_V_LOOP, fact, OrientedFact(fact.relation, False, v, v)))
        elif (fact.subject, fact.object) == (u, v):
            result.append((_FORWARD, fact, OrientedFact(fact.relation, False, u, v)))
        elif (fact.subject, fact.object) == (v, u):
            result.append((_BACKWARD, fact, OrientedFact(fact.relation, True, u, v)))
    return sorted(result, key=lambda x: (x[0], x[1].relation))


def covered_facts(instance, edge):
    '''The facts covered by a directed edge (u,v), as oriented facts.

    Returns the loops S(u,u), then S(v,v), then S(u,v), then S-(u,v)
    for each S(v,u); within a kind, by relation name.
    '''
    edge = check_edge(instance, edge)
    return [oriented for _, _, oriented in _covered(instance, edge)]


def edge_copy_facts(instance, edge, dst, exclude=None):
    '''The facts produced by copying edge (u,v) onto dst = (x,y).

    A covered fact equal to ``exclude`` is left out of the copy.
    '''
    x, y = dst
    if x == y:
        raise InvalidInputError(f'Cannot copy an edge onto ({x},{y})')
    target = {_U_LOOP: (x, x), _V_LOOP: (y, y), _FORWARD: (x, y), _BACKWARD: (y, x)}
    return {Fact(fact.relation, *target[kind])
            for kind, fact, _ in _covered(instance, edge) if fact != exclude}


def copy_edge(instance, src, dst):
    src = check_edge(instance, src)
    return instance.union(edge_copy_facts(instance, src, dst))


def non_leaf_edges(instance):
    graph = instance.gaifman
    return [(u, v) for u, v in instance.edges()
            if graph.degree(u) >= 2 and graph.degree(v) >= 2]


def left_incident(instance, edge):
    '''Oriented facts R(l,u) with l outside the edge.'''
    u, v = edge
    result = [OrientedFact.from_fact(fact, fact.subject if fact.object == u else fact.object)
              for fact in instance.facts
              if not fact.is_monadic and u in fact.domain and not fact.domain & {v}
              and not fact.is_unary]
    return sorted(result, key=OrientedFact.sort_key)


def right_incident(instance, edge):
    '''Oriented facts R(v,r) with r outside the edge.'''
    u, v = edge
    result = [OrientedFact.from_fact(fact, v)
              for fact in instance.facts
              if not fact.is_monadic and v in fact.domain and not fact.domain & {u}
              and not fact.is_unary]
    return sorted(result, key=OrientedFact.sort_key)


def incident_pairs(instance, edge):
    edge = check_non_leaf_edge(instance, edge)
    return [IncidentPair(left, right)
            for left in left_incident(instance, edge)
            for right in right_incident(instance, edge)]


def check_incident_pair(instance, edge, pair):
    edge = check_non_leaf_edge(instance, edge)
    left, right = pair
    if left.target != edge.u or left.source in edge or left.to_fact() not in instance:
        raise InvalidInputError(f'{left} is not left-incident to ({edge})')
    if right.source != edge.v or right.target in edge or right.to_fact() not in instance:
        raise InvalidInputError(f'{right} is not right-incident to ({edge})')
    return edge, IncidentPair(left, right)


def check_covered_fact(instance, edge, fact):
    '''Validate F_m: a non-unary fact covered by the edge.'''
    edge = check_edge(instance, edge)
    if isinstance(fact, OrientedFact):
        fact = fact.to_fact()
    if fact.is_unary or fact.is_monadic:
        raise InvalidInputError(f'{fact} is unary; a non-unary covered fact is required')
    if fact not in instance or fact.domain != frozenset(edge):
        raise InvalidInputError(f'{fact} is not covered by ({edge})')
    return edge, fact
