"""
The tester-versus-system reachability game.

The tester wins in a state when it can force the automaton into a
blocking state: either by choosing an input that leads to a state it
already wins in, or by waiting when every output leads to such a state.
"""

from collections import deque
import logging

from adgraph.automata.models import StateSet

logger = logging.getLogger(__name__)


class Theta:
    """
    The tester's "no input" move.
    """
    __slots__ = ()

    def __repr__(self):
        return "THETA"

    def __str__(self):
        return "θ"

THETA = Theta()


class GameResult:
    def __init__(self, automaton, move, level, visits=0):
        self.automaton = automaton
        self.invalid = StateSet(move)
        self.move = dict(move)
        self.level = dict(level)
        self.visits = visits

    @property
    def valid(self):
        return self.automaton.states - self.invalid

    def is_valid(self, state):
        return state not in self.move

    def __repr__(self):
        return "<GameResult: %d invalid of %d>" % (len(self.invalid), len(self.automaton.states))


def compute_invalid(automaton):
    """
    Computes the invalid states with their winning move and level.

    Runs a worklist over incoming transitions, keeping for every state the
    number of outputs not yet known to lead into an invalid state. The
    worklist is FIFO and visits every transition at most twice, counted in
    ``GameResult.visits``.
    """
    remaining = {q: len(automaton.outs(q)) for q in automaton.states}
    move = {}
    level = {}
    worklist = deque()

    for q in automaton.states:
        if remaining[q] == 0:
            move[q] = THETA
            level[q] = 0
            worklist.append(q)

    visits = 0
    while worklist:
        p = worklist.popleft()
        for q, label in automaton.incoming(p):
            visits += 1
            if q in move:
                continue

            if label in automaton.inputs:
                move[q] = label
                level[q] = level[p] + 1
                worklist.append(q)
                continue

            remaining[q] -= 1
            if remaining[q] == 0:
                successors = [automaton.target(q, x) for x in automaton.outs(q)]
                visits += len(successors)
                move[q] = THETA
                level[q] = 1 + max(level[s] for s in successors)
                worklist.append(q)

    logger.debug("%d of %d states invalid, %d transition visits",
                 len(move), len(automaton.states), visits)
    return GameResult(automaton, move, level, visits)

def naive_invalid_oracle(automaton):
    """
    The least fixpoint by plain iteration: keep adding states that have an
    input into the set or only outputs into it.
    """
    invalid = set()
    changed = True
    while changed:
        changed = False
        for q in automaton.states:
            if q in invalid:
                continue

            forced_by_input = any(automaton.target(q, a) in invalid for a in automaton.ins(q))
            forced_by_outputs = all(automaton.target(q, x) in invalid for x in automaton.outs(q))
            if forced_by_input or forced_by_outputs:
                invalid.add(q)
                changed = True

    return StateSet(invalid)
