from collections import deque
from itertools import product

from adgraph.automata.models import Automaton
from adgraph.exceptions import AlphabetMismatchError


def compose(first, second, full=False):
    """
    Synchronous composition ``first ∥ second``.

    A product transition exists exactly when both components define the
    label. With ``full`` every state pair is part of the result, otherwise
    only the pairs reachable from ``(q01, q02)``.
    """
    if first.inputs != second.inputs or first.outputs != second.outputs:
        raise AlphabetMismatchError("cannot compose automata over different alphabets")

    initial = (first.initial, second.initial)

    if full:
        states = list(product(first.states, second.states))
    else:
        states = []
        seen = {initial}
        queue = deque([initial])
        while queue:
            pair = queue.popleft()
            states.append(pair)
            for target in _successors(first, second, pair).values():
                if target not in seen:
                    seen.add(target)
                    queue.append(target)

    transitions = [(pair, label, target)
                   for pair in states
                   for label, target in _successors(first, second, pair).items()]

    automaton = Automaton(inputs=first.inputs, outputs=first.outputs,
                          transitions=transitions, initial=initial, states=states)
    automaton.components = (first, second)
    return automaton

def _successors(first, second, pair):
    left, right = pair
    result = {}
    for label in first.enabled_labels(left) & second.enabled_labels(right):
        result[label] = (first.target(left, label), second.target(right, label))
    return result
