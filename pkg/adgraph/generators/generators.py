"""
The shipped fixture automata, the S_n family and seeded random
suspension automata.
"""

import logging
import string

from adgraph.automata.formats import serialize_automaton
from adgraph.automata.models import Automaton, SuspensionAutomaton
from adgraph.exceptions import InfeasibleParametersError, UnknownFixtureError
from adgraph.generators.prng import SplitMix64
from adgraph.testcases.grammar import parse_ccs, print_ccs

logger = logging.getLogger(__name__)

# Declared when an automaton has no inputs of its own
DUMMY_INPUT = "a0"

OUTPUT_NAMES = "xyzuvw"

RUNNING_EXAMPLE = dict(
    inputs=["a"], outputs=["x", "y"], initial="1",
    transitions=[("1", "x", "1"), ("1", "y", "1"), ("1", "a", "3"),
                 ("2", "a", "4"), ("2", "x", "4"), ("3", "x", "4"),
                 ("4", "y", "2")])

NO_ADG = dict(
    inputs=["a", "b"], outputs=["x", "y"], initial="1",
    transitions=[("1", "a", "1"), ("1", "y", "2"), ("1", "b", "2"),
                 ("2", "a", "1"), ("2", "b", "3"), ("2", "x", "2"),
                 ("3", "y", "2"), ("3", "a", "2"), ("3", "b", "3")])

INDUCED_SPLIT_TRAP = dict(
    inputs=["a"], outputs=["x", "y", "z"], initial="1",
    transitions=[("1", "x", "1"), ("1", "a", "3"), ("2", "x", "2"),
                 ("2", "a", "4"), ("3", "z", "4"), ("4", "z", "6"),
                 ("5", "z", "3"), ("5", "a", "7"), ("6", "z", "5"),
                 ("6", "a", "8"), ("7", "x", "8"), ("8", "y", "8")])

COMPAT_FAILURE = dict(
    inputs=["a", "b"], outputs=["t", "x", "y", "z"], initial="1",
    transitions=[("1", "t", "1"), ("2", "x", "2"), ("3", "x", "3"),
                 ("4", "x", "4"), ("5", "z", "5"), ("6", "y", "6"),
                 ("7", "y", "7"), ("8", "y", "8"),
                 ("2", "a", "6"), ("6", "a", "2"), ("3", "a", "6"),
                 ("7", "a", "2"), ("4", "a", "8"), ("8", "a", "4"),
                 ("2", "b", "1"), ("6", "b", "1"), ("4", "b", "5"),
                 ("8", "b", "5")])

NONDISJUNCT = dict(
    inputs=[DUMMY_INPUT], outputs=["x", "y"], initial="1",
    transitions=[("1", "x", "2"), ("2", "x", "3"), ("2", "y", "3"),
                 ("3", "y", "1")])

CCS_EXAMPLE = "a.(x.0 + y.0)"

FIXTURES = {
    'running_example': RUNNING_EXAMPLE,
    'no_adg': NO_ADG,
    'induced_split_trap': INDUCED_SPLIT_TRAP,
    'compat_failure': COMPAT_FAILURE,
    'nondisjunct': NONDISJUNCT,
    'ccs_example': CCS_EXAMPLE,
}

TERM_FIXTURES = ('ccs_example',)

def fixture_filename(name):
    return name + (".ccs" if name in TERM_FIXTURES else ".sa")

def fixture(name):
    """
    The named fixture: a SuspensionAutomaton, or a term for ``ccs_example``.
    """
    try:
        data = FIXTURES[name]
    except KeyError:
        raise UnknownFixtureError(name)

    if name in TERM_FIXTURES:
        return parse_ccs(data)
    return SuspensionAutomaton(**data)

def fixture_text(name):
    """
    The bytes of the shipped fixture file for ``name``.
    """
    value = fixture(name)
    if name in TERM_FIXTURES:
        return (print_ccs(value) + "\n").encode('utf-8')
    return serialize_automaton(value)

def gen_sn(n):
    """
    S_n: every pair of its n states is incompatible, and its complete
    splitting graph has 2^(n-1) nodes.
    """
    if n < 3:
        raise InfeasibleParametersError("S_n needs n >= 3, got %d" % n)

    names = [str(i) for i in range(1, n + 1)]
    transitions = [(names[-1], names[-1], names[0])]
    for s in range(1, n):
        for x in range(1, n):
            if s != x:
                transitions.append((str(s), str(x), str(s + 1)))

    return SuspensionAutomaton(inputs=[DUMMY_INPUT], outputs=names,
                               transitions=transitions, initial=names[0], states=names)

def input_names(count):
    letters = string.ascii_lowercase
    if count <= len(letters):
        return list(letters[:count])
    return ["i%d" % i for i in range(1, count + 1)]

def output_names(count):
    if count <= len(OUTPUT_NAMES):
        return list(OUTPUT_NAMES[:count])
    return ["o%d" % i for i in range(1, count + 1)]

def _check_parameters(states, inputs, outputs, density):
    if states < 1:
        raise InfeasibleParametersError("need at least one state")
    if inputs < 0:
        raise InfeasibleParametersError("input count cannot be negative")
    if outputs < 1:
        raise InfeasibleParametersError("need at least one output label")
    if not 0.0 <= density <= 1.0:
        raise InfeasibleParametersError("density %s is not within [0, 1]" % density)

def _random_transitions(prng, names, labels, density):
    transitions = []
    for q in names:
        for label in labels:
            if prng.random() < density:
                transitions.append((q, label, prng.choice(names)))
    return transitions

def gen_random_automaton(states, inputs, outputs, density=0.5, seed=0):
    """
    A seeded random automaton; states may block.
    """
    _check_parameters(states, inputs, outputs, density)
    prng = SplitMix64(seed)
    names = [str(i) for i in range(1, states + 1)]
    ins = input_names(inputs) or [DUMMY_INPUT]
    outs = output_names(outputs)

    return Automaton(inputs=ins, outputs=outs,
                     transitions=_random_transitions(prng, names, input_names(inputs) + outs, density),
                     initial=names[0], states=names)

def gen_random(states, inputs, outputs, density=0.5, seed=0):
    """
    A seeded random suspension automaton. Every (state, label) slot gets a
    transition with probability ``density``; states left without an
    output then get one output transition.
    """
    _check_parameters(states, inputs, outputs, density)
    prng = SplitMix64(seed)
    names = [str(i) for i in range(1, states + 1)]
    ins = input_names(inputs) or [DUMMY_INPUT]
    outs = output_names(outputs)

    transitions = _random_transitions(prng, names, input_names(inputs) + outs, density)
    enabled = {source for source, label, _ in transitions if label in outs}
    for q in names:
        if q not in enabled:
            transitions.append((q, prng.choice(outs), prng.choice(names)))

    automaton = SuspensionAutomaton(inputs=ins, outputs=outs, transitions=transitions,
                                    initial=names[0], states=names)
    logger.debug("random automaton seed=%d: %r", seed, automaton)
    return automaton
