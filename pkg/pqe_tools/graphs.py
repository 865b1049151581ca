import json
from collections import namedtuple

import networkx as nx
from networkx.utils import UnionFind

from .exceptions import ParseError, InvalidInputError
from .tid import DEFAULT_WORLD_CAP, check_world_cap


def _load_json(text, source):
    try:
        return json.loads(text)
    except ValueError as exc:
        raise ParseError(f'invalid JSON: {exc}', source=source)


class BipartiteGraph(namedtuple('BipartiteGraph', ['A', 'B', 'C'])):
    '''A bipartite graph (A, B, C) with C a set of pairs from A x B.'''

    def __new__(cls, A, B, C):
        A, B = tuple(sorted(set(A))), tuple(sorted(set(B)))
        if set(A) & set(B):
            raise InvalidInputError(f'A and B share vertices: {sorted(set(A) & set(B))}')
        C = tuple(sorted({(a, b) for a, b in C}))
        for a, b in C:
            if a not in A or b not in B:
                raise InvalidInputError(f'Edge ({a},{b}) does not join A to B')
        return super(BipartiteGraph, cls).__new__(cls, A, B, C)

    @classmethod
    def from_json(cls, text, source=None):
        data = _load_json(text, source)
        try:
            return cls(data['A'], data['B'], [tuple(e) for e in data['C']])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f'expected {{"A": [...], "B": [...], "C": [[a, b], ...]}}: {exc}', source=source)

    @classmethod
    def load(cls, path):
        with open(path, 'r') as fp:
            return cls.from_json(fp.read(), source=path)

    def to_json(self):
        return json.dumps({'A': list(self.A), 'B': list(self.B), 'C': [list(e) for e in self.C]})

    @property
    def graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(self.A + self.B)
        graph.add_edges_from(self.C)
        return graph

    def is_connected(self):
        return len(self.A) + len(self.B) > 0 and nx.is_connected(self.graph)

    def components(self):
        result = []
        for nodes in nx.connected_components(self.graph):
            result.append(BipartiteGraph([a for a in self.A if a in nodes],
                                         [b for b in self.B if b in nodes],
                                         [e for e in self.C if e[0] in nodes]))
        return sorted(result, key=lambda h: (h.A, h.B))

    def is_good(self, kept):
        '''A world (set of kept vertices) is good if it keeps both ends of an edge.'''
        return any(a in kept and b in kept for a, b in self.C)


class StGraph(namedtuple('StGraph', ['W', 'C', 's', 't'])):
    '''An undirected graph with a source s and a target t.'''

    def __new__(cls, W, C, s, t):
        W = tuple(sorted(set(W)))
        edges = set()
        for edge in C:
            a, b = edge
            if a == b or a not in W or b not in W:
                raise InvalidInputError(f'Invalid edge ({a},{b})')
            edges.add(tuple(sorted((a, b))))
        if s not in W or t not in W:
            raise InvalidInputError('s and t must be vertices')
        if s == t:
            raise InvalidInputError('s and t must be distinct')
        return super(StGraph, cls).__new__(cls, W, tuple(sorted(edges)), s, t)

    @classmethod
    def from_json(cls, text, source=None):
        data = _load_json(text, source)
        try:
            return cls(data['W'], [tuple(e) for e in data['C']], data['s'], data['t'])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f'expected {{"W": [...], "C": [[a, b], ...], "s": ..., "t": ...}}: {exc}',
                             source=source)

    @classmethod
    def load(cls, path):
        with open(path, 'r') as fp:
            return cls.from_json(fp.read(), source=path)

    def to_json(self):
        return json.dumps({'W': list(self.W), 'C': [list(e) for e in self.C], 's': self.s, 't': self.t})

    def is_good(self, kept):
        uf = UnionFind(self.W)
        for a, b in kept:
            uf.union(a, b)
        return uf[self.s] == uf[self.t]

    def path(self, kept):
        '''A shortest s-t path in the kept edges, as a vertex list, or None.'''
        graph = nx.Graph()
        graph.add_nodes_from(self.W)
        graph.add_edges_from(kept)
        try:
            return nx.shortest_path(graph, self.s, self.t)
        except nx.NetworkXNoPath:
            return None


def _good_in_component(h):
    index = {b: i for i, b in enumerate(h.B)}
    nbrs = [0] * len(h.A)
    for i, a in enumerate(h.A):
        for a2, b in h.C:
            if a2 == a:
                nbrs[i] |= 1 << index[b]
    total = 0
    nb = len(h.B)
    for mask in range(2 ** len(h.A)):
        covered = 0
        for i in range(len(h.A)):
            if mask >> i & 1:
                covered |= nbrs[i]
        k = bin(covered).count('1')
        total += 2 ** nb - 2 ** (nb - k)
    return total


def count_pp2dnf(h, world_cap=DEFAULT_WORLD_CAP):
    '''The number of good worlds (A', B') of a bipartite graph.

    A world is bad iff it is bad on every connected component, so bad
    counts multiply across components; an isolated vertex contributes 2.
    '''
    check_world_cap(len(h.A) + len(h.B), world_cap, 'vertices')
    bad = 1
    for comp in h.components():
        n = len(comp.A) + len(comp.B)
        bad *= 2 ** n - _good_in_component(comp)
    return 2 ** (len(h.A) + len(h.B)) - bad


def count_stcon(g, world_cap=DEFAULT_WORLD_CAP):
    '''The number of edge subsets connecting s and t.'''
    check_world_cap(len(g.C), world_cap, 'edges')
    total = 0
    for mask in range(2 ** len(g.C)):
        if g.is_good([e for i, e in enumerate(g.C) if mask >> i & 1]):
            total += 1
    return total
