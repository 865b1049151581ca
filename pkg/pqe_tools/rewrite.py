from collections import namedtuple

from .exceptions import PQEException, InvalidInputError
from .facts import Fact
from .homomorphism import Homomorphism, find_isomorphism, find_homomorphism, DEFAULT_BUDGET
from .instance import (Instance, FreshNames, check_non_leaf_edge, check_incident_pair,
                       check_covered_fact, edge_copy_facts, left_incident, right_incident,
                       non_leaf_edges)
from .logic import Query
from .tid import TID

BINARY_SUFFIX = '_2'

StarCollapse = namedtuple('StarCollapse', ['instance', 'homomorphism'])


def _others(facts, chosen):
    return [f for f in facts if f != chosen]


def iterate_edge(instance, edge, pair, n):
    '''The n-th iterate of a non-leaf edge relative to an incident pair.

    The edge (u,v) becomes a zig-zag path u=u1, v1, u2, v2, ..., un, vn=v
    of 2n-1 edge copies. F_l stays at u1 and F_r at vn only; the other
    left- and right-incident facts are repeated at every ui and vi.
    '''
    instance.require_binary()
    edge, pair = check_incident_pair(instance, edge, pair)
    if n < 1:
        raise InvalidInputError(f'The iterate index must be at least 1, got {n}')
    u, v = edge
    names = FreshNames(instance.domain)
    us = [u] + [names.fresh(f'{u}#{i}') for i in range(2, n + 1)]
    vs = [names.fresh(f'{v}#{i}') for i in range(1, n)] + [v]
    facts = set(instance.induced(instance.domain - {u, v}).facts)
    facts.update((pair.left.to_fact(), pair.right.to_fact()))
    for other in _others(left_incident(instance, edge), pair.left):
        facts.update(other.relocate(target=ui).to_fact() for ui in us)
    for other in _others(right_incident(instance, edge), pair.right):
        facts.update(other.relocate(source=vi).to_fact() for vi in vs)
    for i in range(n):
        facts |= edge_copy_facts(instance, edge, (us[i], vs[i]))
    for i in range(n - 1):
        facts |= edge_copy_facts(instance, edge, (us[i + 1], vs[i]))
    return Instance(facts)


def iterate_chain_holds(instance, edge, pair, i, j, budget=DEFAULT_BUDGET):
    '''True iff the j-th iterate maps homomorphically to the i-th.'''
    return find_homomorphism(iterate_edge(instance, edge, pair, j),
                             iterate_edge(instance, edge, pair, i), budget=budget) is not None


def dissociate_edge(instance, edge):
    '''Split a non-leaf edge (u,v): copy it onto (u,v') and (u',v) for fresh
    u', v', then drop the non-unary facts it covered.'''
    instance.require_binary()
    edge = check_non_leaf_edge(instance, edge)
    u, v = edge
    names = FreshNames(instance.domain)
    u2, v2 = names.fresh(f'{u}#d'), names.fresh(f'{v}#d')
    facts = set(instance.facts)
    facts |= edge_copy_facts(instance, edge, (u, v2))
    facts |= edge_copy_facts(instance, edge, (u2, v))
    facts -= {f for f in instance.facts if f.domain == {u, v}}
    return Instance(facts)


def fine_dissociate(instance, edge, pair, fm):
    '''The fine dissociation of (u,v) relative to an incident pair and a
    covered fact F_m.

    F_l stays at u and F_r at v. The other incident facts are placed at
    both u, u' and v, v'. Full copies of the edge go on (u,v') and (u',v);
    copies without F_m go on (u,v) and (u',v').

    The other incident facts at u' and v' are required: a bad world of an
    s-t coding maps onto the result only if u' and v' carry them as well.
    '''
    instance.require_binary()
    edge, pair = check_incident_pair(instance, edge, pair)
    edge, fm = check_covered_fact(instance, edge, fm)
    u, v = edge
    names = FreshNames(instance.domain)
    u2, v2 = names.fresh(f'{u}#f'), names.fresh(f'{v}#f')
    facts = set(instance.induced(instance.domain - {u, v}).facts)
    facts.update((pair.left.to_fact(), pair.right.to_fact()))
    for other in _others(left_incident(instance, edge), pair.left):
        facts.update(other.relocate(target=x).to_fact() for x in (u, u2))
    for other in _others(right_incident(instance, edge), pair.right):
        facts.update(other.relocate(source=y).to_fact() for y in (v, v2))
    facts |= edge_copy_facts(instance, edge, (u, v2))
    facts |= edge_copy_facts(instance, edge, (u2, v))
    facts |= edge_copy_facts(instance, edge, (u, v), exclude=fm)
    facts |= edge_copy_facts(instance, edge, (u2, v2), exclude=fm)
    return Instance(facts)


def _leaf_profile(component, center, leaf):
    profile = set()
    for fact in component.facts:
        if fact.domain == {leaf}:
            profile.add((fact.relation, 'loop'))
        elif fact.domain == {center, leaf}:
            profile.add((fact.relation, 'out' if fact.subject == center else 'in'))
    return frozenset(profile)


def collapse_stars(instance, budget=DEFAULT_BUDGET):
    '''Shrink an instance without non-leaf edges to a subinstance it maps onto.

    In every star, leaf edges with the same covered facts (up to renaming
    the leaf) are merged into the lexicographically smallest leaf; then
    isomorphic components are merged into the one with the smallest text.
    '''
    instance.require_binary()
    remaining = non_leaf_edges(instance)
    if remaining:
        raise InvalidInputError(f'The instance still has non-leaf edges: {remaining}')
    collapsed = []
    for comp in instance.components():
        comp_map = {elem: elem for elem in comp.domain}
        centers = sorted(elem for elem in comp.domain if comp.degree(elem) >= 2)
        if centers:
            center = centers[0]
            classes = {}
            for leaf in sorted(comp.gaifman.neighbors(center)):
                comp_map[leaf] = classes.setdefault(_leaf_profile(comp, center, leaf), leaf)
        collapsed.append((comp.rename(comp_map), comp_map))
    collapsed.sort(key=lambda x: (len(x[0]), x[0].to_string()))
    kept, mapping = [], {}
    for comp, comp_map in collapsed:
        for rep in kept:
            iso = find_isomorphism(comp, rep, budget=budget)
            if iso is not None:
                mapping.update((k, iso(v)) for k, v in comp_map.items())
                break
        else:
            kept.append(comp)
            mapping.update(comp_map)
    result = Instance(f for comp in kept for f in comp.facts)
    hom = Homomorphism(mapping)
    if not hom.is_valid(instance, result) or not result.facts <= instance.facts:
        raise PQEException('Star collapse produced an invalid homomorphism')
    return StarCollapse(result, hom)


def binary_names(monadic, taken):
    names = {rel: f'{rel}{BINARY_SUFFIX}' for rel in sorted(monadic)}
    clash = sorted(set(names.values()) & set(taken))
    if clash:
        raise InvalidInputError(f'Cannot translate arity-one relations: {", ".join(clash)} already exist')
    return names


def _binary_fact(fact, names):
    if fact.is_monadic:
        return Fact(names[fact.relation], fact.subject, fact.subject)
    return fact


def unary_to_binary(x):
    '''Replace each arity-one relation R by a binary relation R_2, turning
    R(a) into R_2(a,a). Works on instances, TIDs and queries; TID
    probabilities are carried over unchanged.'''
    if isinstance(x, TID):
        facts = x.instance.facts
        names = binary_names({f.relation for f in facts if f.is_monadic},
                             {f.relation for f in facts if not f.is_monadic})
        return TID({_binary_fact(f, names): p for f, p in x.prob.items()})
    if isinstance(x, Instance):
        names = binary_names({f.relation for f in x.facts if f.is_monadic},
                             {f.relation for f in x.facts if not f.is_monadic})
        return Instance(_binary_fact(f, names) for f in x.facts)
    if isinstance(x, Query):
        monadic = x.monadic_relations()
        taken = x.relations() - monadic
        taken |= getattr(x, 'intensional', set())
        return x.binarized(binary_names(monadic, taken))
    raise TypeError(f'Cannot translate an object of type {type(x).__name__}')
