"""
What a test-case expression means: its automaton, its observations, and
whether it is a test case for, or distinguishes, states of a suspension
automaton.

Walks run over product states of the term and the automaton and never
materialise observation sets, which can be exponential in the size of a
shared term.
"""

from collections import namedtuple
import logging

from django.conf import settings

from adgraph.automata.formats import automaton_dot, automaton_json
from adgraph.automata.models import Automaton, StateSet
from adgraph.exceptions import (NondeterministicTermError, NotATestCaseError,
                                ObservationCapExceeded, TestCaseShapeError)
from adgraph.utils import name_key

logger = logging.getLogger(__name__)

(CLAUSE_INPUT,
 CLAUSE_OUTPUT) = ('input', 'output')

(STATE_INPUT,
 STATE_OUTPUT,
 STATE_LEAF) = ('input', 'output', 'leaf')


class TestCaseAutomaton(Automaton):
    """
    Acyclic automaton of a test-case expression; states are the distinct
    subexpressions, named by their position in ``terms``.
    """
    check_alphabet = False

    def state_kind(self, state):
        labels = self.enabled_labels(state)
        if not labels:
            return STATE_LEAF
        if labels & self.inputs:
            return STATE_INPUT
        return STATE_OUTPUT


class TestCaseVerdict(namedtuple('TestCaseVerdict', 'ok term state clause')):
    __slots__ = ()

    def __bool__(self):
        return self.ok

PASSED = TestCaseVerdict(True, None, None, None)


class AdgCheck(namedtuple('AdgCheck', 'distinguished missed')):
    __slots__ = ()

    @property
    def is_adg(self):
        return not self.missed


def is_deterministic(term):
    for sub in term.subterms():
        targets = {}
        for label, derivative in sub.derivatives():
            if targets.setdefault(label, derivative) is not derivative:
                return False
    return True

def _labels(term):
    return {label for sub in term.subterms() for label, _ in sub.derivatives()}

def check_shape(term, inputs):
    """
    Raise unless ``term`` is deterministic and each of its states enables
    a single input or only outputs.
    """
    if not is_deterministic(term):
        raise NondeterministicTermError("%s is not deterministic" % term)

    for sub in term.subterms():
        labels = sub.successors().keys()
        offered = [label for label in labels if label in inputs]
        if offered and len(labels) > 1:
            raise TestCaseShapeError("%s enables input %s together with other labels" %
                                     (sub, offered[0]))

def associated_automaton(term, inputs=()):
    """
    The automaton of ``term``. Labels in ``inputs`` are inputs, every other
    label of the term is an output.
    """
    inputs = frozenset(inputs)
    check_shape(term, inputs)

    subterms = term.subterms()
    names = {sub: str(i) for i, sub in enumerate(subterms)}
    labels = _labels(term)
    automaton = TestCaseAutomaton(
        inputs=labels & inputs,
        outputs=labels - inputs,
        transitions=[(names[sub], label, names[derivative])
                     for sub in subterms
                     for label, derivative in sub.derivatives()],
        initial=names[term],
        states=names.values())
    automaton.terms = {name: sub for sub, name in names.items()}
    return automaton

def depth(term):
    """
    Length of the longest trace of ``term``.
    """
    memo = {}
    stack = [(term, False)]
    while stack:
        t, expanded = stack.pop()
        if t in memo:
            continue
        if expanded:
            memo[t] = max((1 + memo[d] for _, d in t.derivatives()), default=0)
        else:
            stack.append((t, True))
            stack.extend((d, False) for _, d in t.derivatives() if d not in memo)
    return memo[term]

def obs(term, cap=None):
    """
    The traces that reach a leaf of ``term``, as label tuples.
    """
    cap = settings.ADG_OBS_CAP if cap is None else cap
    found = set()
    stack = [(term, ())]
    while stack:
        t, trace = stack.pop()
        derivatives = t.derivatives()
        if not derivatives:
            found.add(trace)
            if len(found) > cap:
                raise ObservationCapExceeded(cap)
            continue
        for label, derivative in derivatives:
            stack.append((derivative, trace + (label,)))
    return frozenset(found)

def pruned_obs(term, automaton, state, cap=None):
    """
    Observations of ``term ∥ automaton/state``: traces into states of the
    composition where the two cannot move together.
    """
    cap = settings.ADG_OBS_CAP if cap is None else cap
    found = set()
    stack = [(term, state, ())]
    while stack:
        t, r, trace = stack.pop()
        moves = [(label, derivative, automaton.target(r, label))
                 for label, derivative in t.derivatives()
                 if automaton.target(r, label) is not None]
        if not moves:
            found.add(trace)
            if len(found) > cap:
                raise ObservationCapExceeded(cap)
            continue
        for label, derivative, target in moves:
            stack.append((derivative, target, trace + (label,)))
    return frozenset(found)

def _states(states):
    if isinstance(states, (str, tuple)):
        return [states]
    return list(StateSet(states))

def is_test_case_for(term, automaton, states):
    """
    Checks both test-case clauses in every reachable state of the
    composition: an input the term offers must be enabled, and every
    output the automaton enables must be offered.

    Returns a falsy TestCaseVerdict naming the first failure.
    """
    check_shape(term, automaton.inputs)

    for state in _states(states):
        seen = set()
        stack = [(term, state)]
        while stack:
            t, r = stack.pop()
            if (t, r) in seen:
                continue
            seen.add((t, r))

            successors = t.successors()
            if not successors:
                continue

            labels = set(successors)
            if labels & automaton.inputs:
                (a,) = labels
                target = automaton.target(r, a)
                if target is None:
                    return TestCaseVerdict(False, t, r, CLAUSE_INPUT)
                stack.append((successors[a], target))
                continue

            enabled = automaton.outs(r)
            if not enabled <= labels:
                return TestCaseVerdict(False, t, r, CLAUSE_OUTPUT)
            for x in sorted(enabled, key=name_key, reverse=True):
                stack.append((successors[x], automaton.target(r, x)))

    return PASSED

def separates(term, automaton, state, other):
    """
    Joint walk from (term, state, other) looking for an observation both
    states can produce. A state that cannot take an input the term
    prescribes counts as not separated.
    """
    seen = set()
    stack = [(term, state, other)]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)

        t, r, r2 = node
        derivatives = t.derivatives()
        if not derivatives:
            return False

        labels = [label for label, _ in derivatives]
        if len(labels) == 1 and labels[0] in automaton.inputs:
            a, derivative = derivatives[0]
            left, right = automaton.target(r, a), automaton.target(r2, a)
            if left is None or right is None:
                return False
            stack.append((derivative, left, right))
            continue

        left_moves = [label for label in labels if automaton.target(r, label) is not None]
        right_moves = [label for label in labels if automaton.target(r2, label) is not None]
        if not left_moves and not right_moves:
            return False

        for label, derivative in derivatives:
            if label in left_moves and label in right_moves:
                stack.append((derivative, automaton.target(r, label), automaton.target(r2, label)))

    return True

def distinguishes(term, automaton, state, other):
    for q in (state, other):
        verdict = is_test_case_for(term, automaton, [q])
        if not verdict:
            raise NotATestCaseError("%s is not a test case for %s" % (term, q), verdict)

    return separates(term, automaton, state, other)

def adg_check(term, automaton, states, table, strict=True):
    """
    Sorts the incompatible pairs of ``states`` into distinguished and
    missed. With ``strict`` the term must be a test case for ``states``.
    """
    if strict:
        verdict = is_test_case_for(term, automaton, states)
        if not verdict:
            raise NotATestCaseError("%s is not a test case for %s" % (term, StateSet(states)),
                                    verdict)

    distinguished, missed = [], []
    for q, q2 in table.incompatible_pairs_in(states):
        if separates(term, automaton, q, q2):
            distinguished.append((q, q2))
        else:
            missed.append((q, q2))

    if missed:
        logger.info("%d of %d incompatible pairs missed", len(missed),
                    len(missed) + len(distinguished))
    return AdgCheck(distinguished, missed)

def term_to_json(term, inputs=()):
    automaton = associated_automaton(term, inputs)
    data = automaton_json(automaton)
    data['nodes'] = [{'id': state, 'kind': automaton.state_kind(state)}
                     for state in automaton.states]
    return data

def term_to_dot(term, inputs=()):
    return "".join(automaton_dot(associated_automaton(term, inputs), name="testcase"))
