"""
Retrieving an adaptive distinguishing test case from a complete splitting
graph, and the statistics reported for it.

The walk threads the current set (the states still consistent with the
observations so far) through the term. Where the term ends while the
current set still holds an incompatible pair, the witness of an LCA of
that set is grafted in.
"""

import logging

from django.conf import settings

from adgraph.automata.models import StateSet
from adgraph.exceptions import IncompleteGraphError, ObservationCapExceeded
from adgraph.games.compatibility import compatibility
from adgraph.splitting.builder import LCA_MOST_INJECTIVE, choose_lca
from adgraph.testcases.semantics import adg_check, depth, is_test_case_for
from adgraph.testcases.terms import NIL, Prefix, Sum, prefix
from adgraph.utils import state_name

logger = logging.getLogger(__name__)


class Retrieval:
    """
    One run of the retrieval over ``graph``. Results are memoized on
    (current set, term); ``grafts`` maps each of those to the largest
    number of grafts made along one branch below it.
    """
    def __init__(self, automaton, graph, table):
        self.automaton = automaton
        self.graph = graph
        self.table = table
        self.policy = getattr(graph, 'policy', None)
        self.results = {}
        self.grafts = {}
        self._chosen = {}

    def _graft(self, states):
        if states not in self._chosen:
            selection = getattr(self.policy, 'lca_selection', LCA_MOST_INJECTIVE)
            node = choose_lca(self.graph, self.table, states, selection=selection)
            if node is None:
                raise IncompleteGraphError("%s has no LCA in the splitting graph" % states)
            logger.debug("graft %s at %s", self.graph.witness[node], states)
            self._chosen[states] = node
        return self.graph.witness[self._chosen[states]]

    def _dependencies(self, states, term):
        if self.table.is_compatible_set(states):
            return []
        if isinstance(term, Prefix):
            return [(self.automaton.after(states, term.label), term.body)]
        if isinstance(term, Sum):
            return [(states, term.left), (states, term.right)]
        return [(states, self._graft(states))]

    def _combine(self, key):
        states, term = key
        if self.table.is_compatible_set(states):
            return term, 0

        deps = self._dependencies(states, term)
        found = [self.results[dep] for dep in deps]
        grafts = [self.grafts[dep] for dep in deps]
        if isinstance(term, Prefix):
            return prefix(term.label, found[0]), grafts[0]
        if isinstance(term, Sum):
            return Sum(found[0], found[1]), max(grafts)
        return found[0], grafts[0] + 1

    def run(self, states=None):
        start = (StateSet(self.automaton.states if states is None else states), NIL)
        stack = [(start, False)]
        while stack:
            key, expanded = stack.pop()
            if key in self.results:
                continue
            if expanded:
                self.results[key], self.grafts[key] = self._combine(key)
                continue

            stack.append((key, True))
            stack.extend((dep, False) for dep in self._dependencies(*key)
                         if dep not in self.results)

        return self.results[start], self.grafts[start]


def _table(automaton, graph, table):
    if table is not None:
        return table
    return graph.table if graph.table is not None else compatibility(automaton)

def comp_dg(automaton, graph, table=None):
    """
    The test case retrieved from the complete splitting graph ``graph``,
    starting from all states and the empty term.
    """
    table = _table(automaton, graph, table)
    term, _ = Retrieval(automaton, graph, table).run()
    return term

def post_contract_violations(automaton, table, term, states=None):
    """
    The current sets at leaves of ``term`` that still hold an
    incompatible pair, in walk order.
    """
    start = StateSet(automaton.states if states is None else states)
    seen = set()
    violations = []
    stack = [(term, start)]
    while stack:
        item = stack.pop()
        if item in seen:
            continue
        seen.add(item)

        t, current = item
        derivatives = t.derivatives()
        if not derivatives:
            if not table.is_compatible_set(current) and current not in violations:
                violations.append(current)
            continue
        for label, derivative in reversed(derivatives):
            stack.append((derivative, automaton.after(current, label)))
    return violations

def leaf_sizes(automaton, term, states=None, cap=None):
    """
    For each leaf of ``term``, in order, how many of ``states`` enable the
    observation leading there. Shared subterms are unfolded, so the walk
    stops with ObservationCapExceeded past ``cap`` leaves.
    """
    cap = settings.ADG_OBS_CAP if cap is None else cap
    start = StateSet(automaton.states if states is None else states)
    sizes = []
    stack = [(term, frozenset((q, q) for q in start))]
    while stack:
        t, current = stack.pop()
        derivatives = t.derivatives()
        if not derivatives:
            sizes.append(len({origin for origin, _ in current}))
            if len(sizes) > cap:
                raise ObservationCapExceeded(cap)
            continue
        for label, derivative in reversed(derivatives):
            moved = frozenset((origin, automaton.target(q, label)) for origin, q in current
                              if automaton.target(q, label) is not None)
            stack.append((derivative, moved))
    return sizes


class AdgReport:
    def __init__(self, term, depth, incompatible_pairs, distinguished, missed,
                 splitting_nodes, leaf_sizes=None, grafts=0, is_test_case=True,
                 violations=()):
        self.term = term
        self.depth = depth
        self.incompatible_pairs = incompatible_pairs
        self.distinguished = distinguished
        self.missed = missed
        self.splitting_nodes = splitting_nodes
        self.leaf_sizes = leaf_sizes
        self.grafts = grafts
        self.is_test_case = is_test_case
        self.violations = list(violations)

    @property
    def is_adg(self):
        return not self.missed

    def to_json(self):
        return {
            'term': str(self.term),
            'depth': self.depth,
            'incompatible_pairs': self.incompatible_pairs,
            'distinguished': self.distinguished,
            'missed': [[state_name(q), state_name(q2)] for q, q2 in self.missed],
            'splitting_nodes': self.splitting_nodes,
            'leaf_sizes': self.leaf_sizes,
        }

    def __repr__(self):
        return "<AdgReport: depth %d, %d of %d pairs distinguished>" % (
            self.depth, self.distinguished, self.incompatible_pairs)


def extract_report(automaton, graph, table=None, obs_cap=None):
    table = _table(automaton, graph, table)
    retrieval = Retrieval(automaton, graph, table)
    term, grafts = retrieval.run()

    verdict = is_test_case_for(term, automaton, automaton.states)
    if not verdict:
        logger.warning("retrieved term is not a test case: %s clause fails at %s",
                       verdict.clause, state_name(verdict.state))

    check = adg_check(term, automaton, automaton.states, table, strict=False)

    try:
        sizes = leaf_sizes(automaton, term, cap=obs_cap)
    except ObservationCapExceeded as e:
        logger.warning("leaf sizes not reported: %s", e.message)
        sizes = None

    return AdgReport(term=term,
                     depth=depth(term),
                     incompatible_pairs=len(check.distinguished) + len(check.missed),
                     distinguished=len(check.distinguished),
                     missed=check.missed,
                     splitting_nodes=len(graph),
                     leaf_sizes=sizes,
                     grafts=grafts,
                     is_test_case=bool(verdict),
                     violations=post_contract_violations(automaton, table, term))
