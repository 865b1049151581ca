import os
import sys

from .config import config
from .datalog import DatalogProgram
from .exceptions import InvalidInputError
from .facts import DirectedEdge, Fact, IncidentPair
from .graphs import BipartiteGraph, StGraph, count_pp2dnf, count_stcon
from .homomorphism import find_homomorphism
from .instance import Instance, covered_facts, incident_pairs, non_leaf_edges
from .logic import Query
from .patterns import (SearchBounds, TightPattern, edge_metrics, probe_iterability, dissociate_all,
                       minimize_model, enumerate_seed_models, find_minimal_tight_pattern)
from .queries import load_query, eval_query
from .reductions import (code_pp2dnf, code_stcon, verify_pp2dnf, verify_stcon,
                         first_mid_fact, hardness_pipeline)
from .rewrite import (iterate_edge, dissociate_edge, fine_dissociate, collapse_stars,
                      unary_to_binary)
from .tid import TID, pqe_exact

_EDGE_COLUMNS = ['edge', 'left', 'right']
_METRIC_COLUMNS = ['edge', 'weight', 'side_weight', 'covered']
_VERDICT_COLUMNS = ['verdict', 'n0', 'bound']
_LIMIT_COLUMNS = ['key', 'value', 'source']


class Toolbox(object):
    '''Entry point for the pqe tools.

    Arguments naming an instance, TID, query or graph may be file paths or
    inline text. Every public method takes a ``format`` argument:
      - None: return library objects.
      - 'table': return (records, columns) for printing.
      - 'tableif': like 'table' for tabular results; anything else is
        returned as text.
      - 'dataframe': return a pandas DataFrame.
    '''

    def __init__(self, **limits):
        self.limits = config.limits(**limits)

    @staticmethod
    def _message(msg, nl=True):
        print(msg, file=sys.stderr, end='\n' if nl else '')

    @property
    def bounds(self):
        return SearchBounds(self.limits['domain_bound'], self.limits['max_facts'],
                            self.limits['n_max'], self.limits['hom_budget'])

    @property
    def budget(self):
        return self.limits['hom_budget']

    # Loading

    @staticmethod
    def _read(cls, value, **kwargs):
        if isinstance(value, cls):
            return value
        if os.path.isfile(value):
            return cls.load(value, **kwargs)
        return cls.parse(value.replace(';', '\n'), source='<inline>', **kwargs)

    def _instance(self, value, monadic=False):
        return self._read(Instance, value, monadic=monadic)

    def _tid(self, value, monadic=False):
        return self._read(TID, value, monadic=monadic)

    @staticmethod
    def _query(value, kind=None):
        return load_query(value, kind=kind)

    @staticmethod
    def _graph(cls, value):
        if isinstance(value, cls):
            return value
        if os.path.isfile(value):
            return cls.load(value)
        return cls.from_json(value, source='<inline>')

    @staticmethod
    def _edge(edge):
        if isinstance(edge, str):
            return DirectedEdge.from_string(edge)
        return DirectedEdge(*edge)

    def _pair(self, instance, edge, left, right):
        if left is None and right is None:
            pairs = incident_pairs(instance, edge)
            if not pairs:
                raise InvalidInputError(f'({edge}) has no incident pair')
            return pairs[0]
        if left is None or right is None:
            raise InvalidInputError('Supply both the left and the right incident fact')
        if isinstance(left, str):
            return IncidentPair.from_strings(left, right)
        return IncidentPair(left, right)

    def _seeds(self, seeds):
        return [self._instance(s) for s in seeds or ()]

    # Formatting

    def _format_table(self, response, columns, quiet=False):
        if not quiet:
            # Fact lists become one row per fact
            if isinstance(response, TID):
                response, columns = response.records(), ['fact', 'probability']
            elif isinstance(response, Instance):
                response, columns = [{'fact': str(f)} for f in response.sorted_facts()], ['fact']
            elif isinstance(response, Query):
                response = response.to_string().rstrip('\n')
        if isinstance(response, dict):
            is_series = True
            response = [response]
        elif isinstance(response, list) and all(isinstance(x, dict) for x in response):
            is_series = False
        elif quiet:
            return self._format_text(response)
        elif isinstance(response, (str, int)):
            return ([(response,)], ['result'])
        else:
            raise ValueError('Not a tabular data format')
        clist = list(columns or ())
        cset = set(clist)
        for rec in response:
            clist.extend(c for c in rec if c not in cset)
            cset.update(rec)
        if is_series:
            result = [(k, response[0].get(k)) for k in clist]
            clist = ['field', 'value']
        else:
            result = [tuple(rec.get(k) for k in clist) for rec in response]
        return (result, clist)

    @staticmethod
    def _format_text(response):
        if isinstance(response, (Instance, TID, Query)):
            return response.to_string().rstrip('\n')
        if isinstance(response, int):
            return str(response)
        return response

    def _format_response(self, response, format, columns=None):
        if format in ('table', 'tableif'):
            return self._format_table(response, columns, quiet=format == 'tableif')
        elif format == 'text':
            return self._format_text(response)
        elif format == 'dataframe':
            records, columns = self._format_table(response, columns)
            try:
                import pandas as pd
            except ImportError:
                raise ImportError('Pandas must be installed in order to use format="dataframe"')
            return pd.DataFrame(records, columns=columns)
        else:
            return response

    # Evaluation

    def eval(self, query, instance, kind=None, monadic=False, naive=False, format=None):
        query = self._query(query, kind)
        instance = self._instance(instance, monadic=monadic)
        if naive and isinstance(query, DatalogProgram):
            holds = query.holds(instance, naive=True)
        else:
            holds = eval_query(query, instance, budget=self.budget)
        if format is None:
            return holds
        return self._format_response('true' if holds else 'false', format)

    def pqe(self, query, tid, kind=None, monadic=False, format=None):
        query = self._query(query, kind)
        tid = self._tid(tid, monadic=monadic)
        self._message(f'Enumerating 2^{len(tid.uncertain())} worlds.')
        pr = pqe_exact(query, tid, world_cap=self.limits['max_worlds'], budget=self.budget)
        return self._format_response(pr if format is None else str(pr), format)

    def hom(self, source, target, injective=False, format=None):
        source, target = self._instance(source), self._instance(target)
        hom = find_homomorphism(source, target, budget=self.budget, injective=injective)
        if hom is None:
            self._message('No homomorphism exists.')
            return None
        if format is None:
            return hom
        return self._format_response(hom.records(), format, ['element', 'image'])

    # Rewrites

    def iterate(self, instance, edge, left=None, right=None, n=2, format=None):
        instance, edge = self._instance(instance), self._edge(edge)
        pair = self._pair(instance, edge, left, right)
        return self._format_response(iterate_edge(instance, edge, pair, n), format)

    def dissociate(self, instance, edge=None, all=False, format=None):
        instance = self._instance(instance)
        if all:
            result, steps = dissociate_all(instance)
            self._message(f'Performed {steps} dissociation(s).')
        else:
            if edge is None:
                raise InvalidInputError('Supply an edge, or dissociate all edges')
            result = dissociate_edge(instance, self._edge(edge))
        return self._format_response(result, format)

    def fine_dissociate(self, instance, edge, left=None, right=None, mid=None, format=None):
        instance, edge = self._instance(instance), self._edge(edge)
        pair = self._pair(instance, edge, left, right)
        mid = first_mid_fact(instance, edge) if mid is None else Fact.from_string(mid)
        return self._format_response(fine_dissociate(instance, edge, pair, mid), format)

    def collapse_stars(self, instance, mapping=False, format=None):
        instance = self._instance(instance)
        result = collapse_stars(instance, budget=self.budget)
        self._message(f'Collapsed {len(instance)} facts to {len(result.instance)}.')
        if format is None:
            return result
        if mapping:
            return self._format_response(result.homomorphism.records(), format, ['element', 'image'])
        return self._format_response(result.instance, format)

    def to_binary(self, value, what='instance', format=None):
        if what == 'query':
            value = self._query(value)
        elif what == 'tid':
            value = self._tid(value, monadic=True)
        else:
            value = self._instance(value, monadic=True)
        return self._format_response(unary_to_binary(value), format)

    # Edge inspection

    def edges(self, instance, format=None):
        instance = self._instance(instance)
        records = []
        for u, v in non_leaf_edges(instance):
            edge = DirectedEdge(u, v)
            for pair in incident_pairs(instance, edge):
                records.append({'edge': str(edge), 'left': str(pair.left), 'right': str(pair.right)})
        return self._format_response(records, format, _EDGE_COLUMNS)

    def covered(self, instance, edge, format=None):
        instance, edge = self._instance(instance), self._edge(edge)
        records = [{'fact': str(f), 'unary': f.is_unary} for f in covered_facts(instance, edge)]
        return self._format_response(records, format, ['fact', 'unary'])

    def metrics(self, instance, edge, format=None):
        instance, edge = self._instance(instance), self._edge(edge)
        metrics = edge_metrics(instance, edge)
        record = {'edge': str(edge), 'weight': metrics.weight, 'side_weight': metrics.side_weight,
                  'covered': ' '.join(str(f) for f in covered_facts(instance, edge))}
        return self._format_response(record, format, _METRIC_COLUMNS)

    # Pattern analysis

    def probe_iterability(self, query, instance, edge, left=None, right=None, format=None):
        query = self._query(query)
        instance, edge = self._instance(instance), self._edge(edge)
        pair = self._pair(instance, edge, left, right)
        self._message(f'Probing ({edge}) up to n = {self.limits["n_max"]}.')
        verdict = probe_iterability(query, instance, edge, pair, self.limits['n_max'], self.budget)
        if format is None:
            return verdict
        return self._format_response(verdict.record(), format, _VERDICT_COLUMNS)

    def minimize(self, query, instance, format=None):
        query, instance = self._query(query), self._instance(instance)
        return self._format_response(minimize_model(query, instance, budget=self.budget), format)

    def seeds(self, query):
        query = self._query(query)
        bounds = self.bounds
        seeds = enumerate_seed_models(query, bounds.domain_bound, bounds.max_facts, bounds.hom_budget)
        self._message(f'Found {len(seeds)} seed model(s).')
        return seeds

    def tight_pattern(self, query, seeds=None):
        '''The minimal tight pattern as a record, or None.'''
        query = self._query(query)
        seeds = self._seeds(seeds) or self.seeds(query)
        pattern = find_minimal_tight_pattern(query, seeds, self.bounds)
        if pattern is None:
            self._message('No tight pattern found within the bounds.')
            return None
        return pattern.record()

    def classify(self, query, seeds=None):
        query = self._query(query)
        return hardness_pipeline(query, self._seeds(seeds), self.bounds, message=self._message)

    # Reductions

    def count_pp2dnf(self, graph, format=None):
        count = count_pp2dnf(self._graph(BipartiteGraph, graph), world_cap=self.limits['max_worlds'])
        return self._format_response(count, format)

    def count_stcon(self, graph, format=None):
        count = count_stcon(self._graph(StGraph, graph), world_cap=self.limits['max_worlds'])
        return self._format_response(count, format)

    @staticmethod
    def _write(path, text):
        with open(path, 'w') as fp:
            fp.write(text)

    def _emit_coding(self, tid, wmap, output, world_map, format):
        if world_map:
            self._write(world_map, wmap.to_json() + '\n')
            self._message(f'Wrote the world map to {world_map}.')
        if output:
            self._write(output, tid.to_string())
            self._message(f'Wrote {len(tid)} facts ({len(wmap)} uncertain) to {output}.')
            return None
        if format is None:
            return tid, wmap
        return self._format_response(tid, format)

    def code_pp2dnf(self, instance, edge, graph, n=1, left=None, right=None,
                    output=None, world_map=None, format=None):
        instance, edge = self._instance(instance), self._edge(edge)
        pair = self._pair(instance, edge, left, right)
        tid, wmap = code_pp2dnf(instance, edge, pair, n, self._graph(BipartiteGraph, graph))
        return self._emit_coding(tid, wmap, output, world_map, format)

    def code_stcon(self, instance, edge, graph, left=None, right=None, mid=None,
                   output=None, world_map=None, format=None):
        instance, edge = self._instance(instance), self._edge(edge)
        pair = self._pair(instance, edge, left, right)
        mid = first_mid_fact(instance, edge) if mid is None else Fact.from_string(mid)
        tid, wmap = code_stcon(instance, edge, pair, mid, self._graph(StGraph, graph))
        return self._emit_coding(tid, wmap, output, world_map, format)

    def _verify_options(self):
        return dict(world_cap=self.limits['max_worlds'], budget=self.budget,
                    sample=self.limits['sample'], rng_seed=self.limits['rng_seed'])

    def verify_pp2dnf(self, query, instance, edge, graph, n0=None, left=None, right=None):
        query = self._query(query)
        instance, edge = self._instance(instance), self._edge(edge)
        pair = self._pair(instance, edge, left, right)
        if n0 is None:
            verdict = probe_iterability(query, instance, edge, pair, self.limits['n_max'], self.budget)
            if verdict.iterable:
                raise InvalidInputError(f'({edge}) is iterable up to {verdict.bound}; no n0 to verify with')
            n0 = verdict.n0
            self._message(f'Using n0 = {n0}.')
        return verify_pp2dnf(query, instance, edge, pair, n0, self._graph(BipartiteGraph, graph),
                             **self._verify_options())

    def verify_stcon(self, query, instance, edge, graph, left=None, right=None, mid=None):
        query = self._query(query)
        instance, edge = self._instance(instance), self._edge(edge)
        pair = self._pair(instance, edge, left, right)
        mid = first_mid_fact(instance, edge) if mid is None else Fact.from_string(mid)
        pattern = TightPattern(instance, edge, edge_metrics(instance, edge))
        return verify_stcon(query, pattern, pair, mid, self._graph(StGraph, graph),
                            **self._verify_options())

    # Configuration

    def config_list(self, format=None):
        records = [{'key': k, 'value': v, 'source': s} for k, v, s in config.list()]
        return self._format_response(records, format, _LIMIT_COLUMNS)

    def config_set(self, key, value):
        config.set(key, value)
        config.save()
        self._message(f'Set {key} = {config.get(key)}.')
