import pytest

from pqe_tools.exceptions import InvalidInputError
from pqe_tools.facts import DirectedEdge, IncidentPair
from pqe_tools.homomorphism import is_isomorphic
from pqe_tools.instance import Instance, non_leaf_edges
from pqe_tools.patterns import (SearchBounds, EdgeMetrics, IterabilityVerdict, edge_metrics,
                                probe_iterability, is_tight, minimize_model, enumerate_seed_models,
                                dissociation_process, dissociate_all, find_minimal_tight_pattern,
                                reduce_pattern, TightPattern)

# RST still holds once (b,c) is dissociated, through R(a,b), T(b,e)
SHORTCUT = 'R(a,b). S(b,c). T(c,d). T(b,e).'

# The path model of R S* T with a second left-incident fact at b
EXTRA_LEFT = 'R(a,b). R(x,b). S(b,c). T(c,d).'


def _inst(text):
    return Instance.parse(text.replace('. ', '.\n'))


def _assert_minimal(query, model):
    assert query.holds(model)
    for fact in model.facts:
        assert not query.holds(model.difference((fact,))), fact


def _assert_irreducible(query, pattern):
    assert pattern.check(query)
    for fact in pattern.instance.facts:
        smaller = pattern.instance.difference((fact,))
        edge = tuple(sorted(pattern.edge))
        assert (edge not in non_leaf_edges(smaller) or not query.holds(smaller)
                or not is_tight(query, smaller, pattern.edge)), fact


def test_edge_metrics(path, path_edge, looped):
    assert edge_metrics(path, path_edge) == EdgeMetrics(1, 2)
    assert edge_metrics(looped, DirectedEdge('a', 'b')) == EdgeMetrics(5, 3)
    with pytest.raises(InvalidInputError):
        edge_metrics(path, DirectedEdge('a', 'b'))


def test_probe_iterability(rst, zigzag, path, path_edge, path_pair):
    verdict = probe_iterability(rst, path, path_edge, path_pair, n_max=4)
    assert verdict == IterabilityVerdict.non_iterable(2, 4)
    assert str(verdict) == 'NonIterable(2)'
    verdict = probe_iterability(zigzag, path, path_edge, path_pair, n_max=4)
    assert verdict.iterable
    assert verdict.record() == {'verdict': 'IterableUpTo', 'n0': None, 'bound': 4}


def test_probe_iterability_rejects(rst, q0_loops, path, path_edge, path_pair):
    with pytest.raises(InvalidInputError):
        probe_iterability(rst, path, path_edge, path_pair, n_max=1)
    with pytest.raises(InvalidInputError):
        probe_iterability(q0_loops, path, path_edge, path_pair, n_max=4)
    with pytest.raises(InvalidInputError):
        probe_iterability(rst, path, path_edge, IncidentPair.from_strings('S(b,c)', 'T(c,d)'))


def test_is_tight(rst, path, path_edge):
    assert is_tight(rst, path, path_edge)
    assert not is_tight(rst, _inst(SHORTCUT), DirectedEdge('b', 'c'))


def test_minimize_model(rst, looped, q0_loops):
    model = minimize_model(rst, looped)
    assert model == _inst('R(a,c). S(c,b). T(b,a).')
    _assert_minimal(rst, model)
    with pytest.raises(InvalidInputError):
        minimize_model(q0_loops, looped)


def test_enumerate_seed_models(rst, path):
    seeds = enumerate_seed_models(rst, domain_bound=4, max_facts=3)
    assert seeds
    for i, seed in enumerate(seeds):
        _assert_minimal(rst, seed)
        assert not any(is_isomorphic(seed, other) for other in seeds[i + 1:])
    assert any(is_isomorphic(seed, path) for seed in seeds)
    assert [len(s) for s in seeds] == sorted(len(s) for s in seeds)


def test_dissociation_process(rst, path, path_edge):
    patterns, steps = dissociation_process(rst, path)
    assert steps == 0
    assert [(p.instance, p.edge, p.metrics) for p in patterns] == [(path, path_edge, EdgeMetrics(1, 2))]
    patterns, steps = dissociation_process(rst, _inst(SHORTCUT))
    assert (patterns, steps) == ([], 1)


def test_dissociate_all(looped):
    result, steps = dissociate_all(looped)
    assert steps >= 1
    assert non_leaf_edges(result) == []


def test_find_minimal_tight_pattern(rst, path, path_edge):
    pattern = find_minimal_tight_pattern(rst, seeds=[path])
    assert pattern.edge == path_edge
    assert pattern.check(rst)
    record = pattern.record()
    assert record['weight'] == 1 and record['side_weight'] == 2
    assert record['dissociated'] == 'R(a,b).\nS(b,c#d).\nS(b#d,c).\nT(c,d).\n'


def test_find_minimal_tight_pattern_none(q0_loops):
    assert find_minimal_tight_pattern(q0_loops, bounds=SearchBounds(max_facts=3)) is None


def test_search_bounds_defaults():
    bounds = SearchBounds(n_max=6)
    assert bounds.n_max == 6
    assert bounds.domain_bound == 4 and bounds.max_facts == 4


def test_reduce_pattern(rst, path, path_edge):
    inst = _inst(EXTRA_LEFT)
    pattern = TightPattern(inst, path_edge, edge_metrics(inst, path_edge))
    assert pattern.metrics == EdgeMetrics(1, 3)
    reduced = reduce_pattern(rst, pattern)
    assert reduced.instance == _inst('R(x,b). S(b,c). T(c,d).')
    assert reduced.metrics == EdgeMetrics(1, 2)
    _assert_irreducible(rst, reduced)
    kept = TightPattern(path, path_edge, edge_metrics(path, path_edge))
    assert reduce_pattern(rst, kept) is kept


def test_find_minimal_tight_pattern_irreducible(zigzag):
    pattern = find_minimal_tight_pattern(zigzag, bounds=SearchBounds(max_facts=4, n_max=6))
    assert pattern.metrics == EdgeMetrics(1, 2)
    _assert_irreducible(zigzag, pattern)
