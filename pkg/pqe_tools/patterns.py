from collections import namedtuple

from .config import DEFAULTS
from .exceptions import InvalidInputError
from .facts import DirectedEdge
from .homomorphism import is_isomorphic, DEFAULT_BUDGET
from .instance import (check_non_leaf_edge, check_incident_pair, covered_facts,
                       left_incident, right_incident, non_leaf_edges)
from .logic import quotients
from .rewrite import iterate_edge, dissociate_edge


class SearchBounds(namedtuple('SearchBounds', ['domain_bound', 'max_facts', 'n_max', 'hom_budget'])):
    def __new__(cls, domain_bound=None, max_facts=None, n_max=None, hom_budget=None):
        return super(SearchBounds, cls).__new__(
            cls,
            DEFAULTS['domain_bound'] if domain_bound is None else domain_bound,
            DEFAULTS['max_facts'] if max_facts is None else max_facts,
            DEFAULTS['n_max'] if n_max is None else n_max,
            DEFAULTS['hom_budget'] if hom_budget is None else hom_budget)


class EdgeMetrics(namedtuple('EdgeMetrics', ['weight', 'side_weight'])):
    pass


class IterabilityVerdict(namedtuple('IterabilityVerdict', ['iterable', 'n0', 'bound'])):
    '''Either NonIterable with the first failing iterate n0, or
    IterableUpTo the checked bound.'''

    @classmethod
    def non_iterable(cls, n0, bound):
        return cls(False, n0, bound)

    @classmethod
    def iterable_up_to(cls, bound):
        return cls(True, None, bound)

    def record(self):
        return {'verdict': 'IterableUpTo' if self.iterable else 'NonIterable',
                'n0': self.n0, 'bound': self.bound}

    def __str__(self):
        if self.iterable:
            return f'IterableUpTo({self.bound})'
        return f'NonIterable({self.n0})'


class TightPattern(namedtuple('TightPattern', ['instance', 'edge', 'metrics'])):
    def key(self):
        return (self.metrics.weight, self.metrics.side_weight,
                self.instance.to_string(), str(self.edge))

    def check(self, query, budget=DEFAULT_BUDGET):
        '''Re-verify the pattern from scratch.'''
        check_non_leaf_edge(self.instance, self.edge)
        return (query.holds(self.instance, budget=budget)
                and not query.holds(dissociate_edge(self.instance, self.edge), budget=budget)
                and edge_metrics(self.instance, self.edge) == self.metrics)

    def record(self):
        return {'instance': self.instance.to_string(),
                'edge': str(self.edge),
                'weight': self.metrics.weight,
                'side_weight': self.metrics.side_weight,
                'dissociated': dissociate_edge(self.instance, self.edge).to_string()}


def edge_metrics(instance, edge):
    edge = check_non_leaf_edge(instance, edge)
    side = len(left_incident(instance, edge)) + len(right_incident(instance, edge))
    return EdgeMetrics(len(covered_facts(instance, edge)), side)


def _require_model(query, instance, budget):
    if not query.holds(instance, budget=budget):
        raise InvalidInputError('The instance does not satisfy the query')


def probe_iterability(query, instance, edge, pair, n_max=DEFAULTS['n_max'], budget=DEFAULT_BUDGET):
    '''Evaluate the query on iterates 2..n_max in order.

    Satisfaction is downward closed along iterates, so the first failure
    is the witness n0.
    '''
    if n_max < 2:
        raise InvalidInputError(f'n_max must be at least 2, got {n_max}')
    edge, pair = check_incident_pair(instance, edge, pair)
    _require_model(query, instance, budget)
    for n in range(2, n_max + 1):
        if not query.holds(iterate_edge(instance, edge, pair, n), budget=budget):
            return IterabilityVerdict.non_iterable(n, n_max)
    return IterabilityVerdict.iterable_up_to(n_max)


def is_tight(query, instance, edge, budget=DEFAULT_BUDGET):
    edge = check_non_leaf_edge(instance, edge)
    _require_model(query, instance, budget)
    return not query.holds(dissociate_edge(instance, edge), budget=budget)


def minimize_model(query, instance, budget=DEFAULT_BUDGET):
    '''Drop facts one at a time while the query still holds.

    One pass suffices: by monotonicity a fact that could not be dropped
    earlier cannot be dropped from a smaller instance either.
    '''
    _require_model(query, instance, budget)
    current = instance
    for fact in instance.sorted_facts():
        candidate = current.difference((fact,))
        if query.holds(candidate, budget=budget):
            current = candidate
    return current


def enumerate_seed_models(query, domain_bound=DEFAULTS['domain_bound'],
                          max_facts=DEFAULTS['max_facts'], budget=DEFAULT_BUDGET):
    '''Minimal models obtained from the query's expansions of at most
    ``max_facts`` facts by identifying constants down to at most
    ``domain_bound`` elements, one per isomorphism class.'''
    found, seen = [], set()
    for expansion in query.expansions(max_facts):
        for image in quotients(expansion, domain_bound):
            if image.has_monadic or not query.holds(image, budget=budget):
                continue
            model = minimize_model(query, image, budget=budget)
            key = model.to_string()
            if key in seen:
                continue
            seen.add(key)
            if not any(is_isomorphic(model, other, budget=budget) for other in found):
                found.append(model)
    return sorted(found, key=lambda m: (len(m), m.to_string()))


def dissociation_process(query, instance, budget=DEFAULT_BUDGET):
    '''Dissociate non-tight non-leaf edges until only tight ones remain.

    Returns the tight patterns met along the way and the number of
    dissociations performed.
    '''
    patterns, steps = [], 0
    while True:
        loose = None
        for u, v in non_leaf_edges(instance):
            edge = DirectedEdge(u, v)
            if is_tight(query, instance, edge, budget=budget):
                patterns.append(TightPattern(instance, edge, edge_metrics(instance, edge)))
            elif loose is None:
                loose = edge
        if loose is None:
            return patterns, steps
        instance = dissociate_edge(instance, loose)
        steps += 1


def dissociate_all(instance):
    '''Dissociate non-leaf edges until none remain; returns (result, steps).'''
    steps = 0
    while True:
        edges = non_leaf_edges(instance)
        if not edges:
            return instance, steps
        instance = dissociate_edge(instance, DirectedEdge(*edges[0]))
        steps += 1


def _is_non_leaf(instance, edge):
    return tuple(sorted(edge)) in non_leaf_edges(instance)


def reduce_pattern(query, pattern, budget=DEFAULT_BUDGET):
    '''Drop facts from a tight pattern while it stays a tight pattern.

    Patterns met by the dissociation process can carry copies left over
    from earlier dissociations; after reduction no single fact can be
    removed without losing the query, the non-leaf edge or tightness.
    '''
    instance, edge = pattern.instance, pattern.edge
    changed = True
    while changed:
        changed = False
        for fact in instance.sorted_facts():
            candidate = instance.difference((fact,))
            if (_is_non_leaf(candidate, edge) and query.holds(candidate, budget=budget)
                    and not query.holds(dissociate_edge(candidate, edge), budget=budget)):
                instance, changed = candidate, True
                break
    if instance == pattern.instance:
        return pattern
    return TightPattern(instance, edge, edge_metrics(instance, edge))


def find_minimal_tight_pattern(query, seeds=None, bounds=None):
    '''The least tight pattern, by (weight, side weight, text), met by the
    dissociation process from any minimized seed; None if there is none.

    Every candidate is reduced first, so the result has no removable facts.
    '''
    bounds = bounds or SearchBounds()
    if not seeds:
        seeds = enumerate_seed_models(query, bounds.domain_bound, bounds.max_facts, bounds.hom_budget)
    best = None
    for seed in seeds:
        model = minimize_model(query, seed, budget=bounds.hom_budget)
        for pattern in dissociation_process(query, model, budget=bounds.hom_budget)[0]:
            pattern = reduce_pattern(query, pattern, budget=bounds.hom_budget)
            if best is None or pattern.key() < best.key():
                best = pattern
    return best
