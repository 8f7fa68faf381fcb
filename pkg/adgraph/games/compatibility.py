import logging

from adgraph.automata.composition import compose
from adgraph.automata.models import StateSet
from adgraph.exceptions import CompatibleStatesError, UnknownStateError
from adgraph.games.solver import THETA, compute_invalid
from adgraph.testcases.terms import NIL, prefix, sum_of
from adgraph.utils import name_key, state_name

logger = logging.getLogger(__name__)


class CompatibilityTable:
    """
    Compatibility of state pairs, read off the validity game on the full
    self-composition: q and q' are compatible iff (q, q') is valid.
    """
    def __init__(self, automaton, game):
        self.automaton = automaton
        self.game = game

    def _pair(self, state, other):
        for q in (state, other):
            if q not in self.automaton.states:
                raise UnknownStateError(q)
        return (state, other)

    def compatible(self, state, other):
        return self.game.is_valid(self._pair(state, other))

    def move(self, state, other):
        return self.game.move.get(self._pair(state, other))

    def level(self, state, other):
        return self.game.level.get(self._pair(state, other))

    def is_compatible_set(self, states):
        return all(self.compatible(q, q2) for q, q2 in StateSet(states).pairs())

    def incompatible_pairs_in(self, states):
        return [(q, q2) for q, q2 in StateSet(states).pairs() if not self.compatible(q, q2)]

    def compatible_pairs(self):
        """
        Distinct compatible pairs (q, q') with q before q' canonically.
        """
        return [(q, q2) for q, q2 in self.automaton.states.pairs() if self.compatible(q, q2)]

    def incompatible_pairs(self):
        return self.incompatible_pairs_in(self.automaton.states)

    def to_json(self):
        return {
            'compatible_pairs': [[state_name(q), state_name(q2)]
                                 for q, q2 in self.compatible_pairs()],
            'incompatible_count': len(self.incompatible_pairs()),
        }


def compatibility(automaton):
    game = compute_invalid(compose(automaton, automaton, full=True))
    table = CompatibilityTable(automaton, game)
    logger.debug("%d compatible pairs among %d states",
                 len(table.compatible_pairs()), len(automaton.states))
    return table

def pairwise_distinguisher(automaton, state, other, table=None):
    """
    A test case that distinguishes two incompatible states, read off the
    tester's winning strategy on the pair. Where the strategy waits, every
    output of the alphabet gets a branch; outputs the two states do not
    share end the test.
    """
    if table is None:
        table = compatibility(automaton)

    if table.compatible(state, other):
        raise CompatibleStatesError(state, other)

    outputs = sorted(automaton.outputs, key=name_key)
    memo = {}

    def build(pair):
        if pair in memo:
            return memo[pair]

        r, r2 = pair
        move = table.move(r, r2)
        if move is THETA:
            shared = automaton.outs(r) & automaton.outs(r2)
            branches = []
            for x in outputs:
                if x in shared:
                    branches.append(prefix(x, build((automaton.target(r, x), automaton.target(r2, x)))))
                else:
                    branches.append(prefix(x, NIL))
            term = sum_of(branches)
        else:
            term = prefix(move, build((automaton.target(r, move), automaton.target(r2, move))))

        memo[pair] = term
        return term

    return build((state, other))
