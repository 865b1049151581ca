import pytest

from pqe_tools.exceptions import InvalidInputError
from pqe_tools.facts import Fact, DirectedEdge, IncidentPair
from pqe_tools.homomorphism import is_isomorphic
from pqe_tools.instance import Instance, non_leaf_edges
from pqe_tools.queries import parse_query
from pqe_tools.rewrite import (iterate_edge, iterate_chain_holds, dissociate_edge, fine_dissociate,
                               collapse_stars, unary_to_binary)
from pqe_tools.tid import TID

SECOND_ITERATE = '''\
R(a,b).
S(b,c#1).
S(b#2,c#1).
S(b#2,c).
T(c,d).
'''

LOOPED_DISSOCIATED = '''\
R(a,c).
S(c,b).
S(d,b).
U(a,a).
U(b,b).
U(b#d,b#d).
R(a,b#d).
S(b#d,a).
T(b#d,a).
U(a#d,a#d).
R(a#d,b).
S(b,a#d).
T(b,a#d).
'''

PATH_FINE = 'R(a,b). S(b,c#f). S(b#f,c). T(c,d).'
STAR = 'R(c,x). R(c,y). S(z,c). R(p,q).'


def _inst(text):
    return Instance.parse(text.replace('. ', '.\n'))


def test_iterate_path(path, path_edge, path_pair):
    assert iterate_edge(path, path_edge, path_pair, 1) == path
    second = iterate_edge(path, path_edge, path_pair, 2)
    assert second == Instance.parse(SECOND_ITERATE)
    assert len(iterate_edge(path, path_edge, path_pair, 4)) == 2 + 7


def test_iterate_repeats_other_incident_facts(looped):
    edge = DirectedEdge('a', 'b')
    pair = IncidentPair.from_strings('R-(c,a)', 'S-(b,c)')
    third = iterate_edge(looped, edge, pair, 3)
    # S(d,b) is repeated at b and both fresh right endpoints
    assert {f for f in third.facts if f.relation == 'S' and f.subject == 'd'} == \
        {Fact('S', 'd', v) for v in ('b', 'b#1', 'b#2')}
    assert len([f for f in third.facts if f.relation == 'R' and f.object == 'c']) == 1
    assert len([f for f in third.facts if f.relation == 'U']) == 6


def test_iterate_rejects(path, path_edge, path_pair):
    with pytest.raises(InvalidInputError):
        iterate_edge(path, path_edge, path_pair, 0)
    with pytest.raises(InvalidInputError):
        iterate_edge(path, DirectedEdge('a', 'b'), path_pair, 2)
    with pytest.raises(InvalidInputError):
        iterate_edge(path, path_edge, IncidentPair.from_strings('T(c,d)', 'R(a,b)'), 2)


def test_iterates_and_queries(path, path_edge, path_pair, rst, zigzag):
    assert rst.holds(iterate_edge(path, path_edge, path_pair, 1))
    for n in (2, 3, 4):
        iterate = iterate_edge(path, path_edge, path_pair, n)
        assert not rst.holds(iterate)
        assert zigzag.holds(iterate)


def test_iterate_chain(path, path_edge, path_pair):
    assert iterate_chain_holds(path, path_edge, path_pair, 2, 3)
    assert iterate_chain_holds(path, path_edge, path_pair, 1, 4)
    assert not iterate_chain_holds(path, path_edge, path_pair, 3, 2)


def test_dissociate(looped):
    result = dissociate_edge(looped, DirectedEdge('a', 'b'))
    assert result == Instance.parse(LOOPED_DISSOCIATED)
    assert is_isomorphic(result, dissociate_edge(looped, DirectedEdge('b', 'a')))


def test_dissociate_path(path, path_edge, rst, zigzag):
    result = dissociate_edge(path, path_edge)
    assert result == _inst('R(a,b). S(b,c#d). S(b#d,c). T(c,d).')
    assert non_leaf_edges(result) == []
    assert not rst.holds(result)
    assert not zigzag.holds(result)
    with pytest.raises(InvalidInputError):
        dissociate_edge(path, DirectedEdge('a', 'b'))


def test_fine_dissociate(path, path_edge, path_pair, rst):
    result = fine_dissociate(path, path_edge, path_pair, Fact('S', 'b', 'c'))
    assert result == _inst(PATH_FINE)
    assert not rst.holds(result)
    with pytest.raises(InvalidInputError):
        fine_dissociate(path, path_edge, path_pair, Fact('R', 'a', 'b'))


def test_fine_dissociate_keeps_other_covered_facts(looped):
    edge = DirectedEdge('a', 'b')
    pair = IncidentPair.from_strings('R-(c,a)', 'S-(b,c)')
    result = fine_dissociate(looped, edge, pair, Fact('S', 'b', 'a'))
    assert Fact('S', 'b', 'a') not in result
    assert {Fact('R', 'a', 'b'), Fact('T', 'b', 'a'), Fact('R', 'a#f', 'b#f')} <= result.facts
    assert {Fact('S', 'b', 'a#f'), Fact('S', 'b#f', 'a')} <= result.facts
    assert Fact('S', 'b#f', 'a#f') not in result
    assert {Fact('S', 'd', 'b'), Fact('S', 'd', 'b#f')} <= result.facts
    assert Fact('S', 'c', 'b#f') not in result


def test_collapse_stars():
    inst = _inst(STAR)
    result, hom = collapse_stars(inst)
    assert result == _inst('R(c,x). S(z,c). R(p,q).')
    assert hom('y') == 'x'
    assert hom.is_valid(inst, result)


def test_collapse_isomorphic_components():
    result, hom = collapse_stars(_inst('R(c,d). R(a,b).'))
    assert result == _inst('R(a,b).')
    assert hom.mapping == {'a': 'a', 'b': 'b', 'c': 'a', 'd': 'b'}


def test_collapse_requires_leaf_edges(path):
    with pytest.raises(InvalidInputError):
        collapse_stars(path)


def test_unary_to_binary():
    inst = Instance.parse('A(a).\nR(a,b).', monadic=True)
    assert unary_to_binary(inst) == _inst('A_2(a,a). R(a,b).')
    tid = TID.parse('A(a) : 1/2.\nR(a,b).', monadic=True)
    assert unary_to_binary(tid) == TID.parse('A_2(a,a) : 1/2.\nR(a,b) : 1.')
    query = parse_query('goal :- A(X), R(X,Y).', 'datalog')
    binary = unary_to_binary(query)
    assert binary.relations() == {'A_2', 'R'}
    assert binary.holds(unary_to_binary(inst))


def test_unary_to_binary_clash():
    with pytest.raises(InvalidInputError):
        unary_to_binary(Instance.parse('A(a).\nA_2(a,b).', monadic=True))
