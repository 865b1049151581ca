import itertools
import random
from fractions import Fraction

import pytest

from pqe_tools.exceptions import ParseError, InvalidInputError, WorldCapExceeded
from pqe_tools.facts import Fact
from pqe_tools.queries import parse_query
from pqe_tools.tid import TID, WorldMap, pqe_exact, world_probability, is_gfomc

from .conftest import Q0
from .utils import _data

PATH_TID = '''\
R(a,b) : 1/2.
S(b,c) : 1/3.
T(c,d) : 1.
U(d,d) : 0.
'''


def _assert_probability(query, text, expected, **kwargs):
    result = pqe_exact(parse_query(query), TID.parse(text), **kwargs)
    assert isinstance(result, Fraction)
    assert result == Fraction(expected)


def test_parse():
    tid = TID.parse(PATH_TID)
    assert len(tid) == 4
    assert tid.prob[Fact('S', 'b', 'c')] == Fraction(1, 3)
    assert [str(f) for f in tid.uncertain()] == ['R(a,b)', 'S(b,c)']
    assert [str(f) for f in tid.pinned()] == ['T(c,d)']
    assert TID.parse(tid.to_string()) == tid
    assert TID.load(_data('single.tid')).prob == {Fact('R', 'a', 'b'): Fraction(1, 2)}


def test_parse_errors():
    for text in ('R(a,b) : 3/2.', 'R(a,b) : x.', 'R(a,b) : 1/2.\nR(a,b) : 1/3.', 'R(a) : 1/2.'):
        with pytest.raises(ParseError):
            TID.parse(text)
    with pytest.raises(InvalidInputError):
        TID({Fact('R', 'a', 'b'): 2})


def test_pqe_exact():
    _assert_probability(Q0, PATH_TID, Fraction(1, 6))
    _assert_probability('R S* T', PATH_TID, Fraction(1, 6))
    _assert_probability('q :- R(X,Y).', 'R(a,b) : 1/2.\nR(b,c) : 1/2.', Fraction(3, 4))
    _assert_probability('q :- U(X,X).', PATH_TID, 0)
    _assert_probability('q :- T(X,Y).', PATH_TID, 1)


def test_pqe_matches_world_sum():
    tid = TID.parse('R(a,b) : 1/2.\nS(b,c) : 1/4.\nS(b,d) : 2/3.\nT(c,e) : 1/5.\nT(d,e) : 1.')
    query = parse_query('R S T', 'rpq')
    expected = Fraction(0)
    facts = tid.instance.sorted_facts()
    for mask in range(2 ** len(facts)):
        world = {f for i, f in enumerate(facts) if mask >> i & 1}
        if query.holds(tid.world_instance(world)):
            expected += world_probability(tid, world)
    assert pqe_exact(query, tid) == expected


def test_world_cap():
    tid = TID.parse('R(a,b) : 1/2.\nR(b,c) : 1/2.\nR(c,d) : 1/2.')
    with pytest.raises(WorldCapExceeded) as excinfo:
        pqe_exact(parse_query('q :- R(X,Y).'), tid, world_cap=4)
    assert excinfo.value.uncertain == 3
    _assert_probability('q :- R(X,Y).', tid.to_string(), Fraction(7, 8), world_cap=8)


def test_gfomc():
    assert is_gfomc(TID.parse('R(a,b) : 1/2.\nS(b,c) : 1.'))
    assert not is_gfomc(TID.parse(PATH_TID))


def test_world_map():
    wmap = WorldMap('vertices', [('a1', Fact('R', 'a', 'b')), (('a1', 'b1'), Fact('S', 'b', 'c'))])
    assert wmap.to_facts({'a1'}) == {Fact('R', 'a', 'b')}
    assert wmap.from_facts({Fact('S', 'b', 'c'), Fact('T', 'c', 'd')}) == {('a1', 'b1')}
    assert wmap.round_trip({'a1', ('a1', 'b1')})
    loaded = WorldMap.from_json(wmap.to_json())
    assert loaded.entries == wmap.entries
    assert loaded.kind == 'vertices'
    with pytest.raises(InvalidInputError):
        WorldMap('edges', [('a1', Fact('R', 'a', 'b')), ('a2', Fact('R', 'a', 'b'))])


def test_world_probabilities_sum_to_one():
    rng = random.Random(3)
    probabilities = {}
    while len(probabilities) < 12:
        fact = Fact(rng.choice('RST'), rng.choice('abcd'), rng.choice('abcd'))
        probabilities[fact] = Fraction(rng.randint(1, 9), 10)
    tid = TID(probabilities)
    facts = tid.uncertain()
    assert len(facts) == 12
    total = sum(world_probability(tid, [f for f, keep in zip(facts, mask) if keep])
                for mask in itertools.product((False, True), repeat=len(facts)))
    assert total == 1
