import itertools
import random

import pytest

from pqe_tools.exceptions import HomomorphismBudgetExceeded
from pqe_tools.instance import Instance
from pqe_tools.homomorphism import (Homomorphism, find_homomorphism, has_homomorphism,
                                    find_isomorphism, is_isomorphic)

from .utils import _random_instance

COLLAPSED = 'R(x,y). S(y,y). T(y,z).'
REVERSED_T = 'R(a,b). S(b,c). T(d,c).'
SMALL = ['R(a,b). R(b,c).',
         'R(a,b). R(b,a).',
         'R(a,a).',
         'R(a,b). S(b,b).',
         'R(a,b). S(b,c). T(c,d).',
         'R(x,y). S(y,y). T(y,z).']


def _inst(text):
    return Instance.parse(text.replace('. ', '.\n'))


def _brute_force(src, dst):
    elements, targets = sorted(src.domain), sorted(dst.domain)
    for images in itertools.product(targets, repeat=len(elements)):
        if Homomorphism(dict(zip(elements, images))).is_valid(src, dst):
            return True
    return False


def _assert_valid(hom, src, dst):
    assert hom is not None
    assert hom.is_valid(src, dst)


def test_path_to_collapsed(path):
    dst = _inst(COLLAPSED)
    hom = find_homomorphism(path, dst)
    _assert_valid(hom, path, dst)
    assert hom('b') == hom('c') == 'y'
    assert find_homomorphism(dst, path) is None


def test_injective(path):
    assert find_homomorphism(path, _inst(COLLAPSED), injective=True) is None
    renamed = path.rename({'a': 'p', 'b': 'q', 'c': 'r', 'd': 's'})
    _assert_valid(find_homomorphism(path, renamed, injective=True), path, renamed)


def test_monadic_facts():
    src = Instance.parse('A(a).\nR(a,b).', monadic=True)
    assert has_homomorphism(src, Instance.parse('A(x).\nR(x,y).\nR(y,y).', monadic=True))
    assert not has_homomorphism(src, Instance.parse('A(y).\nR(x,y).', monadic=True))


def test_agrees_with_brute_force():
    for a, b in itertools.product(SMALL, repeat=2):
        src, dst = _inst(a), _inst(b)
        assert has_homomorphism(src, dst) == _brute_force(src, dst), (a, b)


def test_agrees_with_brute_force_on_random_pairs():
    rng = random.Random(11)
    corpus = [_random_instance(rng, 'abcde', 'RS', 1, 4) for _ in range(15)]
    found = 0
    for src, dst in itertools.product(corpus, repeat=2):
        expected = _brute_force(src, dst)
        hom = find_homomorphism(src, dst)
        assert (hom is not None) == expected, (src, dst)
        if hom is not None:
            assert hom.is_valid(src, dst)
            found += 1
    assert found >= len(corpus)


def test_budget():
    src, dst = _inst('R(a,b).'), _inst('R(x,y).')
    with pytest.raises(HomomorphismBudgetExceeded) as excinfo:
        find_homomorphism(src, dst, budget=1)
    assert excinfo.value.budget == 1
    assert has_homomorphism(src, dst, budget=2)


def test_isomorphism(path):
    renamed = path.rename({'a': 'd', 'd': 'a'})
    iso = find_isomorphism(path, renamed)
    _assert_valid(iso, path, renamed)
    assert len(set(iso.mapping.values())) == len(path.domain)
    assert not is_isomorphic(path, _inst(REVERSED_T))
    assert not is_isomorphic(path, _inst(COLLAPSED))


def test_compose_and_records():
    first = Homomorphism({'a': 'x', 'b': 'y'})
    second = Homomorphism({'x': 1, 'y': 1})
    assert first.compose(second).mapping == {'a': 1, 'b': 1}
    assert first.records() == [{'element': 'a', 'image': 'x'}, {'element': 'b', 'image': 'y'}]
    assert str(first) == 'a->x, b->y'
