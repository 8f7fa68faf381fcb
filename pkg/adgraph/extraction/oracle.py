"""
Exhaustive search for an adaptive distinguishing test case.

A configuration maps every origin state to the state it has reached. The
tester either applies an input enabled in every current state or waits
and must handle every output some current state enables. A configuration
is won once no two incompatible origins remain, and lost for good once
two incompatible origins share their current state. The game is solved to
a fixpoint over the configurations within ``depth_bound`` moves, so a
negative answer is definitive unless the bound cut the exploration.
"""

from collections import deque
import logging

from django.conf import settings

from adgraph.automata.models import StateSet
from adgraph.exceptions import InstanceTooLargeError
from adgraph.games.compatibility import compatibility
from adgraph.testcases.terms import NIL, prefix, sum_of
from adgraph.utils import name_key

logger = logging.getLogger(__name__)

(ORACLE_FOUND,
 ORACLE_NONE,
 ORACLE_INCONCLUSIVE) = ('found', 'none', 'inconclusive')

(MOVE_INPUT,
 MOVE_OUTPUT) = ('input', 'output')


class OracleResult:
    def __init__(self, verdict, term=None, configurations=0, cut=0):
        self.verdict = verdict
        self.term = term
        self.configurations = configurations
        self.cut = cut

    @property
    def found(self):
        return self.verdict == ORACLE_FOUND

    @property
    def definitive(self):
        return self.verdict != ORACLE_INCONCLUSIVE

    def to_json(self):
        return {
            'verdict': self.verdict,
            'term': None if self.term is None else str(self.term),
            'configurations': self.configurations,
        }

    def __repr__(self):
        return "<OracleResult: %s after %d configurations>" % (self.verdict, self.configurations)


class AdgGame:
    def __init__(self, automaton, table, states):
        self.automaton = automaton
        self.table = table
        self.states = StateSet(states)
        self.incompatible = [frozenset(pair) for pair in table.incompatible_pairs_in(self.states)]
        self.outputs = sorted(automaton.outputs, key=name_key)
        self.inputs = sorted(automaton.inputs, key=name_key)

    def initial(self):
        return frozenset((q, q) for q in self.states)

    def is_won(self, config):
        origins = {origin for origin, _ in config}
        return not any(pair <= origins for pair in self.incompatible)

    def is_dead(self, config):
        by_current = {}
        for origin, current in config:
            by_current.setdefault(current, []).append(origin)
        for origins in by_current.values():
            for i, origin in enumerate(origins):
                for other in origins[i + 1:]:
                    if not self.table.compatible(origin, other):
                        return True
        return False

    def _step(self, config, label):
        automaton = self.automaton
        return frozenset((origin, automaton.target(current, label)) for origin, current in config
                         if automaton.target(current, label) is not None)

    def moves(self, config):
        """
        ``(kind, label, successors)`` triples; an output move has one
        successor per output that some current state enables.
        """
        automaton = self.automaton
        currents = {current for _, current in config}

        enabled = [x for x in self.outputs if any(x in automaton.outs(q) for q in currents)]
        moves = [(MOVE_OUTPUT, None, [(x, self._step(config, x)) for x in enabled])]
        for a in self.inputs:
            if all(automaton.target(q, a) is not None for q in currents):
                moves.append((MOVE_INPUT, a, [(a, self._step(config, a))]))
        return moves


def adg_exists_oracle(automaton, states=None, depth_bound=None, table=None):
    """
    Searches for a test case that distinguishes every incompatible pair of
    ``states`` (default: all states).
    """
    states = StateSet(automaton.states if states is None else states)
    depth_bound = settings.ADG_ORACLE_DEPTH if depth_bound is None else depth_bound
    if len(automaton.states) > settings.ADG_ORACLE_MAX_STATES:
        raise InstanceTooLargeError("exhaustive search is limited to %d states, got %d" %
                                    (settings.ADG_ORACLE_MAX_STATES, len(automaton.states)))

    table = table if table is not None else compatibility(automaton)
    game = AdgGame(automaton, table, states)
    start = game.initial()

    # Breadth-first exploration up to depth_bound
    moves = {}
    rank = {}
    cut = set()
    distance = {start: 0}
    queue = deque([start])
    while queue:
        config = queue.popleft()
        if game.is_won(config):
            rank[config] = 0
            continue
        if game.is_dead(config):
            continue
        if distance[config] >= depth_bound:
            cut.add(config)
            continue

        moves[config] = game.moves(config)
        for _, _, successors in moves[config]:
            for _, successor in successors:
                if successor not in distance:
                    distance[successor] = distance[config] + 1
                    queue.append(successor)

    # Attractor: a configuration is won in round r when some move leads
    # only to configurations won in earlier rounds.
    strategy = {}
    level = 0
    changed = True
    while changed:
        changed = False
        level += 1
        for config, options in moves.items():
            if config in rank:
                continue
            for move in options:
                successors = move[2]
                if successors and all(s in rank and rank[s] < level for _, s in successors):
                    rank[config] = level
                    strategy[config] = move
                    changed = True
                    break

    logger.debug("oracle explored %d configurations, %d cut", len(distance), len(cut))

    if start not in rank:
        verdict = ORACLE_INCONCLUSIVE if cut else ORACLE_NONE
        return OracleResult(verdict, configurations=len(distance), cut=len(cut))

    memo = {}

    def extract(config):
        if config in memo:
            return memo[config]
        if rank[config] == 0:
            term = NIL
        else:
            kind, label, successors = strategy[config]
            if kind == MOVE_INPUT:
                term = prefix(label, extract(successors[0][1]))
            else:
                term = sum_of(prefix(x, extract(successor)) for x, successor in successors)
        memo[config] = term
        return term

    return OracleResult(ORACLE_FOUND, extract(start), configurations=len(distance), cut=len(cut))
