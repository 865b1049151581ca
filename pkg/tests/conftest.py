import pytest

from pqe_tools.instance import Instance
from pqe_tools.facts import DirectedEdge, IncidentPair
from pqe_tools.queries import parse_query


# The path model of R S* T; (b,c) is its only non-leaf edge
PATH = '''\
R(a,b).
S(b,c).
T(c,d).
'''

# A model with loops and an extra incident fact on each side of (a,b)
LOOPED = '''\
R(a,b).
S(b,a).
T(b,a).
R(a,c).
S(c,b).
S(d,b).
U(a,a).
U(b,b).
'''

RST = 'R S* T'

UNARY_PATH = '''\
U(X) :- R(X,Y).
U(Y) :- U(X), S(X,Y).
goal :- U(X), T(X,Y).
'''

# Paths R S S- S ... S T; every non-leaf edge of every model is iterable
ZIGZAG = '''\
A(Y) :- R(X,Y).
B(Y) :- A(X), S(X,Y).
A(Y) :- B(X), S(Y,X).
goal :- B(X), T(X,Y).
'''

Q0 = 'q :- R(W,X), S(X,Y), T(Y,Z).'
Q0_LOOPS = 'q :- R(X,X), S(X,Y), T(Y,Y).'


@pytest.fixture
def path():
    return Instance.parse(PATH)


@pytest.fixture
def looped():
    return Instance.parse(LOOPED)


@pytest.fixture
def path_edge():
    return DirectedEdge('b', 'c')


@pytest.fixture
def path_pair():
    return IncidentPair.from_strings('R(a,b)', 'T(c,d)')


@pytest.fixture
def rst():
    return parse_query(RST, 'rpq')


@pytest.fixture
def unary_path():
    return parse_query(UNARY_PATH, 'datalog')


@pytest.fixture
def zigzag():
    return parse_query(ZIGZAG, 'datalog')


@pytest.fixture
def q0():
    return parse_query(Q0, 'ucq')


@pytest.fixture
def q0_loops():
    return parse_query(Q0_LOOPS, 'ucq')
