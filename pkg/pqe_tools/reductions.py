import random
from fractions import Fraction

from .config import DEFAULTS
from .exceptions import InvalidInputError
from .facts import DirectedEdge
from .graphs import count_pp2dnf, count_stcon
from .homomorphism import find_homomorphism, DEFAULT_BUDGET
from .instance import (FreshNames, check_incident_pair, check_covered_fact, covered_facts,
                       edge_copy_facts, left_incident, right_incident, incident_pairs,
                       non_leaf_edges)
from .patterns import (SearchBounds, TightPattern, edge_metrics, probe_iterability,
                       minimize_model, enumerate_seed_models, find_minimal_tight_pattern)
from .rewrite import iterate_edge, fine_dissociate
from .tid import TID, WorldMap, HALF, DEFAULT_WORLD_CAP, pqe_exact


class _Coding(object):
    '''Accumulates the facts and probabilities of a coding TID.'''

    def __init__(self, instance, edge):
        self.instance = instance
        self.edge = edge
        self.prob = {f: Fraction(1) for f in instance.induced(instance.domain - set(edge)).facts}
        self.entries = []

    def certain(self, facts):
        for fact in facts:
            self.prob.setdefault(fact, Fraction(1))

    def uncertain(self, key, fact):
        self.prob[fact] = HALF
        self.entries.append((key, fact))

    def copy(self, dst, exclude=None):
        self.certain(edge_copy_facts(self.instance, self.edge, dst, exclude=exclude))

    def result(self, kind):
        return TID(self.prob), WorldMap(kind, self.entries)


def code_pp2dnf(instance, edge, pair, n, h):
    '''Code a connected bipartite graph H into a TID relative to the n-th
    iterate of (I, e, Pi).

    Each vertex a of A gets an element u@a with an uncertain copy of F_l,
    each vertex b of B an element v@b with an uncertain copy of F_r, and
    each edge (a,b) a zig-zag path of 2n-1 certain edge copies from u@a
    to v@b.
    '''
    instance.require_binary()
    edge, pair = check_incident_pair(instance, edge, pair)
    if n < 1:
        raise InvalidInputError(f'The iterate index must be at least 1, got {n}')
    if not h.is_connected():
        raise InvalidInputError('The bipartite graph must be connected; decompose it first')
    u, v = edge
    names = FreshNames(instance.domain)
    ua = {a: names.fresh(f'{u}@a{i}') for i, a in enumerate(h.A)}
    vb = {b: names.fresh(f'{v}@b{j}') for j, b in enumerate(h.B)}
    lefts = [f for f in left_incident(instance, edge) if f != pair.left]
    rights = [f for f in right_incident(instance, edge) if f != pair.right]
    coding = _Coding(instance, edge)
    for a in h.A:
        coding.uncertain(a, pair.left.relocate(target=ua[a]).to_fact())
        coding.certain(f.relocate(target=ua[a]).to_fact() for f in lefts)
    for b in h.B:
        coding.uncertain(b, pair.right.relocate(source=vb[b]).to_fact())
        coding.certain(f.relocate(source=vb[b]).to_fact() for f in rights)
    for k, (a, b) in enumerate(h.C):
        us = [ua[a]] + [names.fresh(f'{u}@c{k}#{j}') for j in range(2, n + 1)]
        vs = [names.fresh(f'{v}@c{k}#{j}') for j in range(1, n)] + [vb[b]]
        for x in us[1:]:
            coding.certain(f.relocate(target=x).to_fact() for f in lefts)
        for y in vs[:-1]:
            coding.certain(f.relocate(source=y).to_fact() for f in rights)
        for i in range(n):
            coding.copy((us[i], vs[i]))
        for i in range(n - 1):
            coding.copy((us[i + 1], vs[i]))
    return coding.result('pp2dnf')


def code_stcon(instance, edge, pair, fm, g):
    '''Code an s-t graph G into a TID relative to (I, e, Pi) and F_m.

    Vertices w become elements v@w (with t becoming v itself) and edges c
    become elements u@c joined to both endpoints by edge copies. The copy
    towards the lexicographically smaller endpoint has an uncertain F_m.
    '''
    instance.require_binary()
    edge, pair = check_incident_pair(instance, edge, pair)
    edge, fm = check_covered_fact(instance, edge, fm)
    if g.s == g.t:
        raise InvalidInputError('s and t must be distinct')
    u, v = edge
    names = FreshNames(instance.domain)
    uc = {c: names.fresh(f'{u}@c{k}') for k, c in enumerate(g.C)}
    vw = {w: v if w == g.t else names.fresh(f'{v}@w{i}') for i, w in enumerate(g.W)}
    lefts = [f for f in left_incident(instance, edge) if f != pair.left]
    rights = [f for f in right_incident(instance, edge) if f != pair.right]
    coding = _Coding(instance, edge)
    coding.certain((pair.left.to_fact(), pair.right.to_fact()))
    for x in [u] + [uc[c] for c in g.C]:
        coding.certain(f.relocate(target=x).to_fact() for f in lefts)
    for w in g.W:
        coding.certain(f.relocate(source=vw[w]).to_fact() for f in rights)
    coding.copy((u, vw[g.s]))
    for c in g.C:
        oriented = min(c)
        for w in c:
            if w == oriented:
                mapping = {u: uc[c], v: vw[w]}
                coding.uncertain(c, fm.rename(mapping))
                coding.copy((uc[c], vw[w]), exclude=fm)
            else:
                coding.copy((uc[c], vw[w]))
    return coding.result('stcon')


def _sample_masks(m, sample, rng):
    if 2 ** m <= sample:
        return list(range(2 ** m))
    return sorted(rng.sample(range(2 ** m), sample))


def _spot_checks(query, tid, wmap, masks, is_good, source_for_good, target_for_bad, budget):
    keys = wmap.keys()
    failed = []
    for mask in masks:
        kept = [k for i, k in enumerate(keys) if mask >> i & 1]
        facts = wmap.to_facts(kept)
        world = tid.world_instance(facts)
        good = is_good(kept)
        problems = []
        if not wmap.round_trip(kept):
            problems.append('world map round trip')
        if query.holds(world, budget=budget) != good:
            problems.append('query disagrees with the combinatorial world')
        if good:
            if find_homomorphism(source_for_good(kept), world, budget=budget) is None:
                problems.append('no homomorphism from the iterate')
        elif find_homomorphism(world, target_for_bad, budget=budget) is None:
            problems.append('no homomorphism to the target')
        if problems:
            failed.append({'world': [list(k) if isinstance(k, tuple) else k for k in kept],
                           'good': good, 'problems': problems})
    return {'checked': len(masks), 'failed': failed}


def _edge_fields(edge, pair):
    return {'edge': str(DirectedEdge(*edge)), 'left': str(pair[0]), 'right': str(pair[1])}


def verify_pp2dnf(query, instance, edge, pair, n0, h, world_cap=DEFAULT_WORLD_CAP,
                  budget=DEFAULT_BUDGET, sample=DEFAULTS['sample'], rng_seed=DEFAULTS['rng_seed']):
    '''Check #PP2DNF(H) = Pr(Q) * 2^(|A|+|B|) on the coding of H with n = n0-1.'''
    edge, pair = check_incident_pair(instance, edge, pair)
    if n0 < 2:
        raise InvalidInputError(f'n0 must be at least 2, got {n0}')
    n = n0 - 1
    report = {'route': 'pp2dnf', 'query': query.to_string().strip()}
    report.update(_edge_fields(edge, pair))
    report.update(n0=n0, n=n)
    low, high = iterate_edge(instance, edge, pair, n), iterate_edge(instance, edge, pair, 3 * n - 1)
    prereq = {'iterate_n_satisfies': query.holds(low, budget=budget),
              'iterate_3n_minus_1_violates': not query.holds(high, budget=budget)}
    report['prerequisites'] = prereq
    if not all(prereq.values()):
        report.update(status='prerequisite failed', equal=None)
        return report

    rng = random.Random(rng_seed)
    components, bad, checked, failed, uncertain, gfomc = [], 1, 0, [], 0, True
    for comp in h.components():
        m = len(comp.A) + len(comp.B)
        record = {'A': list(comp.A), 'B': list(comp.B), 'edges': len(comp.C)}
        if not comp.C:
            record.update(count=0, probability='0', equal=True)
            bad *= 2 ** m
            components.append(record)
            continue
        tid, wmap = code_pp2dnf(instance, edge, pair, n, comp)
        pr = pqe_exact(query, tid, world_cap=world_cap, budget=budget)
        count = count_pp2dnf(comp, world_cap=world_cap)
        spots = _spot_checks(query, tid, wmap, _sample_masks(m, sample, rng), comp.is_good,
                             lambda kept: low, high, budget)
        record.update(count=count, probability=str(pr), uncertain_facts=len(tid.uncertain()),
                      elements=len(tid.instance.domain), facts=len(tid),
                      equal=count == pr * 2 ** m)
        components.append(record)
        bad *= 2 ** m - pr * 2 ** m
        checked += spots['checked']
        failed.extend(spots['failed'])
        uncertain += len(tid.uncertain())
        gfomc = gfomc and tid.is_gfomc()
    total = len(h.A) + len(h.B)
    count = count_pp2dnf(h, world_cap=world_cap)
    pr = (2 ** total - bad) / Fraction(2 ** total)
    equal = count == pr * 2 ** total and all(c['equal'] for c in components)
    report.update(components=components, count=count, probability=str(pr),
                  uncertain_facts=uncertain, gfomc=gfomc, equal=equal,
                  spot_checks={'checked': checked, 'failed': failed})
    report['status'] = 'ok' if equal and not failed else 'failed'
    return report


def verify_stcon(query, pattern, pair, fm, g, world_cap=DEFAULT_WORLD_CAP,
                 budget=DEFAULT_BUDGET, sample=DEFAULTS['sample'], rng_seed=DEFAULTS['rng_seed']):
    '''Check #U-ST-CON(G) = Pr(Q) * 2^|C| on the coding of G relative to a tight pattern.'''
    if not isinstance(pattern, TightPattern):
        instance, edge = pattern
        pattern = TightPattern(instance, DirectedEdge(*edge), edge_metrics(instance, edge))
    instance = pattern.instance
    edge, pair = check_incident_pair(instance, pattern.edge, pair)
    edge, fm = check_covered_fact(instance, edge, fm)
    report = {'route': 'stcon', 'query': query.to_string().strip()}
    report.update(_edge_fields(edge, pair))
    report.update(mid=str(fm), weight=pattern.metrics.weight, side_weight=pattern.metrics.side_weight)
    fine = fine_dissociate(instance, edge, pair, fm)
    depth = len(g.W)
    prereq = {'tight_pattern': pattern.check(query, budget=budget),
              'fine_dissociation_violates': not query.holds(fine, budget=budget),
              'iterates_satisfy': all(query.holds(iterate_edge(instance, edge, pair, n), budget=budget)
                                      for n in range(1, depth + 1))}
    report['prerequisites'] = prereq
    if not all(prereq.values()):
        report.update(status='prerequisite failed', equal=None)
        return report

    tid, wmap = code_stcon(instance, edge, pair, fm, g)
    pr = pqe_exact(query, tid, world_cap=world_cap, budget=budget)
    count = count_stcon(g, world_cap=world_cap)
    m = len(g.C)
    iterates = {}

    def from_path(kept):
        n = len(g.path(kept)) - 1
        if n + 1 not in iterates:
            iterates[n + 1] = iterate_edge(instance, edge, pair, n + 1)
        return iterates[n + 1]

    rng = random.Random(rng_seed)
    spots = _spot_checks(query, tid, wmap, _sample_masks(m, sample, rng), g.is_good,
                         from_path, fine, budget)
    equal = count == pr * 2 ** m
    report.update(count=count, probability=str(pr), uncertain_facts=len(tid.uncertain()),
                  elements=len(tid.instance.domain), facts=len(tid),
                  gfomc=tid.is_gfomc(), equal=equal, spot_checks=spots)
    report['status'] = 'ok' if equal and not spots['failed'] else 'failed'
    return report


def first_mid_fact(instance, edge):
    '''The first non-unary fact covered by the edge, as a plain fact.'''
    for oriented in covered_facts(instance, edge):
        if not oriented.is_unary:
            return oriented.to_fact()
    raise InvalidInputError(f'({DirectedEdge(*edge)}) covers no non-unary fact')


def hardness_pipeline(query, seeds=None, bounds=None, message=None):
    '''Pick a hardness route for the query.

    A model with a non-iterable non-leaf edge selects the #PP2DNF coding;
    otherwise a tight pattern with an iterable edge selects the
    #U-ST-CON coding; anything else is inconclusive within the bounds.
    '''
    bounds = bounds or SearchBounds()
    budget = bounds.hom_budget
    if not seeds:
        seeds = enumerate_seed_models(query, bounds.domain_bound, bounds.max_facts, budget)
    if message:
        message(f'Classifying with {len(seeds)} seed model(s).')
    report = {'query': query.to_string().strip(), 'seeds': len(seeds), 'bounds': dict(bounds._asdict())}
    checks = 0

    def pp2dnf(model, edge, pair, verdict):
        report.update(route='pp2dnf', model=model.to_string(), n0=verdict.n0,
                      verdict=verdict.record(), iterability_checks=checks)
        report.update(_edge_fields(edge, pair))
        return report

    models = []
    for seed in seeds:
        if not query.holds(seed, budget=budget):
            raise InvalidInputError(f'Seed does not satisfy the query:\n{seed.to_string()}')
        model = minimize_model(query, seed, budget=budget)
        models.append(model)
        for u, v in non_leaf_edges(model):
            edge = DirectedEdge(u, v)
            for pair in incident_pairs(model, edge):
                verdict = probe_iterability(query, model, edge, pair, bounds.n_max, budget)
                checks += 1
                if not verdict.iterable:
                    return pp2dnf(model, edge, pair, verdict)

    pattern = find_minimal_tight_pattern(query, models, bounds)
    if pattern is None:
        report.update(route='inconclusive', reason='no tight pattern found within the bounds',
                      iterability_checks=checks)
        return report
    verdicts = []
    for pair in incident_pairs(pattern.instance, pattern.edge):
        verdict = probe_iterability(query, pattern.instance, pattern.edge, pair, bounds.n_max, budget)
        checks += 1
        if not verdict.iterable:
            return pp2dnf(pattern.instance, pattern.edge, pair, verdict)
        verdicts.append((pair, verdict))
    pair, verdict = verdicts[0]
    report.update(route='stcon', pattern=pattern.record(), verdict=verdict.record(),
                  mid=str(first_mid_fact(pattern.instance, pattern.edge)), iterability_checks=checks)
    report.update(_edge_fields(pattern.edge, pair))
    return report
