from collections import defaultdict, namedtuple

from .exceptions import HomomorphismBudgetExceeded
from .config import DEFAULTS

DEFAULT_BUDGET = DEFAULTS['hom_budget']


class Homomorphism(namedtuple('Homomorphism', ['mapping'])):
    '''A total map from the domain of a source instance to a target domain.'''

    def __call__(self, elem):
        return self.mapping[elem]

    def image(self, fact):
        return fact.rename(self.mapping)

    def is_valid(self, src, dst):
        if not src.domain <= set(self.mapping):
            return False
        return all(self.image(fact) in dst for fact in src.facts)

    def compose(self, other):
        '''Apply self, then other.'''
        return Homomorphism({k: other.mapping[v] for k, v in self.mapping.items()})

    def records(self):
        return [{'element': k, 'image': v} for k, v in sorted(self.mapping.items())]

    def __str__(self):
        return ', '.join(f'{k}->{v}' for k, v in sorted(self.mapping.items()))


class _Target(object):
    '''Adjacency indexes of the target instance, per relation.'''

    def __init__(self, dst):
        self.domain = frozenset(dst.domain)
        self.out = defaultdict(lambda: defaultdict(set))
        self.inc = defaultdict(lambda: defaultdict(set))
        self.loops = defaultdict(set)
        self.monadic = defaultdict(set)
        for fact in dst.facts:
            if fact.is_monadic:
                self.monadic[fact.relation].add(fact.subject)
            else:
                self.out[fact.relation][fact.subject].add(fact.object)
                self.inc[fact.relation][fact.object].add(fact.subject)
                if fact.is_unary:
                    self.loops[fact.relation].add(fact.subject)


def _constraints(src):
    # elem -> list of (relation, role, other); role is 'out', 'in', 'loop' or 'monadic'
    result = defaultdict(list)
    for fact in src.facts:
        if fact.is_monadic:
            result[fact.subject].append((fact.relation, 'monadic', None))
        elif fact.is_unary:
            result[fact.subject].append((fact.relation, 'loop', None))
        else:
            result[fact.subject].append((fact.relation, 'out', fact.object))
            result[fact.object].append((fact.relation, 'in', fact.subject))
    return result


def _initial_candidates(elem, constraints, target):
    cands = set(target.domain)
    for rel, role, _ in constraints:
        if role == 'monadic':
            cands &= target.monadic.get(rel, set())
        elif role == 'loop':
            cands &= target.loops.get(rel, set())
        elif role == 'out':
            cands &= set(k for k, v in target.out.get(rel, {}).items() if v)
        else:
            cands &= set(k for k, v in target.inc.get(rel, {}).items() if v)
        if not cands:
            break
    return cands


def find_homomorphism(src, dst, budget=DEFAULT_BUDGET, injective=False):
    '''Search for a homomorphism from ``src`` to ``dst``.

    Backtracks over the elements of ``src`` in most-constrained-first
    order, filtering candidates through per-relation adjacency of the
    target. Returns a Homomorphism or None; raises
    HomomorphismBudgetExceeded if more than ``budget`` candidate
    assignments are tried before the search space is exhausted.
    '''
    target = _Target(dst)
    constraints = _constraints(src)
    elements = sorted(src.domain)
    domains = {}
    for elem in elements:
        domains[elem] = _initial_candidates(elem, constraints[elem], target)
        if not domains[elem]:
            return None
    if injective and len(elements) > len(target.domain):
        return None

    assignment = {}
    used = set()
    steps = [0]

    def candidates(elem):
        cands = domains[elem]
        for rel, role, other in constraints[elem]:
            if other is None or other not in assignment:
                continue
            if role == 'out':
                cands = cands & target.inc[rel].get(assignment[other], set())
            else:
                cands = cands & target.out[rel].get(assignment[other], set())
            if not cands:
                break
        if injective:
            cands = cands - used
        return cands

    def choose():
        best = None
        for elem in elements:
            if elem in assignment:
                continue
            cands = candidates(elem)
            bound = sum(1 for _, _, other in constraints[elem] if other in assignment)
            key = (len(cands), -bound, -len(constraints[elem]), elem)
            if best is None or key < best[0]:
                best = (key, elem, cands)
                if not cands:
                    break
        return best[1], best[2]

    def extend():
        if len(assignment) == len(elements):
            return True
        elem, cands = choose()
        for cand in sorted(cands):
            steps[0] += 1
            if steps[0] > budget:
                raise HomomorphismBudgetExceeded(budget)
            assignment[elem] = cand
            used.add(cand)
            if extend():
                return True
            used.discard(cand)
            del assignment[elem]
        return False

    if extend():
        return Homomorphism(dict(assignment))
    return None


def has_homomorphism(src, dst, budget=DEFAULT_BUDGET):
    return find_homomorphism(src, dst, budget=budget) is not None


def find_isomorphism(a, b, budget=DEFAULT_BUDGET):
    '''A bijection between the domains mapping the facts of ``a`` onto those of ``b``.'''
    if len(a) != len(b) or len(a.domain) != len(b.domain):
        return None
    if sorted(f.relation for f in a.facts) != sorted(f.relation for f in b.facts):
        return None
    return find_homomorphism(a, b, budget=budget, injective=True)


def is_isomorphic(a, b, budget=DEFAULT_BUDGET):
    return find_isomorphism(a, b, budget=budget) is not None
