"""
The automaton data model: labelled transition systems with disjoint input
and output alphabets, a partial deterministic transition map and an
initial state.
"""

from collections import namedtuple
from adgraph.exceptions import (AlphabetError, BlockingStatesError,
                                NondeterminismError, UnknownReferenceError,
                                UnknownStateError)
from adgraph.utils import name_key, state_name

(INPUT,
 OUTPUT) = range(2)


class Label(namedtuple('Label', 'name kind')):
    __slots__ = ()

    @property
    def is_input(self):
        return self.kind == INPUT

    def __str__(self):
        return self.name


class StateSet(frozenset):
    """
    Duplicate-free set of states that iterates in canonical order.

    Equal membership means equal sets; set operators return StateSets.
    """
    __slots__ = ('_order',)

    def __new__(cls, states=()):
        return super().__new__(cls, states)

    def _ordered(self):
        try:
            return self._order
        except AttributeError:
            self._order = tuple(sorted(frozenset.__iter__(self), key=name_key))
            return self._order

    def __iter__(self):
        return iter(self._ordered())

    def __getitem__(self, index):
        return self._ordered()[index]

    def __and__(self, other):
        return StateSet(frozenset.__and__(self, frozenset(other)))

    def __or__(self, other):
        return StateSet(frozenset.__or__(self, frozenset(other)))

    def __sub__(self, other):
        return StateSet(frozenset.__sub__(self, frozenset(other)))

    __rand__ = __and__
    __ror__ = __or__

    def sort_key(self):
        return tuple(name_key(s) for s in self._ordered())

    def pairs(self):
        states = self._ordered()
        for i, state in enumerate(states):
            for other in states[i + 1:]:
                yield state, other

    def __repr__(self):
        return "StateSet(%s)" % self

    def __str__(self):
        return "{%s}" % ",".join(state_name(s) for s in self._ordered())


def as_trace(sigma):
    # A bare string names a single label.
    if isinstance(sigma, str):
        return (sigma,)

    return tuple(sigma)


class Automaton:
    """
    A deterministic automaton with inputs and outputs.

    ``transitions`` is an iterable of ``(source, label, target)`` triples.
    States are declared by appearing in ``states``, in a transition or as
    the initial state.
    """
    check_alphabet = True

    def __init__(self, inputs, outputs, transitions, initial, states=()):
        self.inputs = frozenset(inputs)
        self.outputs = frozenset(outputs)
        self._validate_alphabet()

        self.initial = initial
        self._delta = {}
        self._incoming = {}

        declared = set(states)
        declared.add(initial)
        triples = []
        for source, label, target in transitions:
            if label not in self.inputs and label not in self.outputs:
                raise UnknownReferenceError("unknown label %s" % label)

            row = self._delta.setdefault(source, {})
            if label in row:
                raise NondeterminismError(source, label)

            row[label] = target
            declared.add(source)
            declared.add(target)
            triples.append((source, label, target))

        self.states = StateSet(declared)
        for source, label, target in triples:
            self._incoming.setdefault(target, []).append((source, label))

        for incoming in self._incoming.values():
            incoming.sort(key=lambda pair: (name_key(pair[0]), name_key(pair[1])))

    def _validate_alphabet(self):
        if self.inputs & self.outputs:
            raise AlphabetError("labels declared as input and output: %s" %
                                " ".join(sorted(self.inputs & self.outputs, key=name_key)))

        if self.check_alphabet:
            if not self.inputs:
                raise AlphabetError("input alphabet is empty")
            if not self.outputs:
                raise AlphabetError("output alphabet is empty")

    @property
    def alphabet(self):
        return self.inputs | self.outputs

    def label(self, name):
        if name in self.inputs:
            return Label(name, INPUT)
        if name in self.outputs:
            return Label(name, OUTPUT)

        raise UnknownReferenceError("unknown label %s" % name)

    @property
    def transitions(self):
        """
        All transitions as sorted ``(source, label, target)`` triples.
        """
        triples = [(source, label, target)
                   for source, row in self._delta.items()
                   for label, target in row.items()]
        return sorted(triples, key=lambda t: (name_key(t[0]), name_key(t[1]), name_key(t[2])))

    def __len__(self):
        return len(self.states)

    @property
    def transition_count(self):
        return sum(len(row) for row in self._delta.values())

    def _check_state(self, state):
        if state not in self.states:
            raise UnknownStateError(state)

    def target(self, state, label):
        """
        The state reached from ``state`` by ``label``, or None.
        """
        return self._delta.get(state, {}).get(label)

    def enabled_labels(self, state):
        self._check_state(state)
        return frozenset(self._delta.get(state, ()))

    def incoming(self, state):
        """
        Sorted ``(source, label)`` pairs of the transitions into ``state``.
        """
        return self._incoming.get(state, [])

    def outs(self, q):
        """
        Outputs enabled in ``q``; a collection of states gives the union.
        """
        if isinstance(q, (str, tuple)):
            return self.enabled_labels(q) & self.outputs

        return frozenset().union(*(self.outs(state) for state in q))

    def ins(self, q):
        if isinstance(q, (str, tuple)):
            return self.enabled_labels(q) & self.inputs

        return frozenset().union(*(self.ins(state) for state in q))

    def is_blocking(self, state):
        return not self.outs(state)

    @property
    def blocking_states(self):
        return [q for q in self.states if self.is_blocking(q)]

    def after(self, states, sigma=()):
        """
        The states reached from ``states`` by the trace ``sigma``.
        """
        current = set(states)
        for label in as_trace(sigma):
            current = {self.target(q, label) for q in current} - {None}
        return StateSet(current)

    def before(self, states, sigma=()):
        """
        The states from which ``sigma`` leads into ``states``.
        """
        current = set(states)
        for label in reversed(as_trace(sigma)):
            current = {source
                       for target in current
                       for source, through in self.incoming(target)
                       if through == label}
        return StateSet(current)

    def enabled(self, states, sigma=()):
        """
        The members of ``states`` that enable ``sigma``.
        """
        sigma = as_trace(sigma)
        return StateSet(q for q in states if self.after((q,), sigma))

    def traces(self, state=None, length=4):
        """
        Traces of at most ``length`` labels from ``state`` (default: initial).
        """
        state = self.initial if state is None else state
        self._check_state(state)

        found = {()}
        frontier = [((), state)]
        for _ in range(length):
            next_frontier = []
            for trace, q in frontier:
                for label, target in self._delta.get(q, {}).items():
                    extended = trace + (label,)
                    found.add(extended)
                    next_frontier.append((extended, target))
            frontier = next_frontier
        return found

    def reinitialized(self, state):
        """
        A/q: the same automaton started in ``state``.
        """
        self._check_state(state)
        return self._rebuild(initial=state)

    def _rebuild(self, **kwargs):
        fields = dict(inputs=self.inputs, outputs=self.outputs,
                      transitions=self.transitions, initial=self.initial,
                      states=self.states)
        fields.update(kwargs)
        return type(self)(**fields)

    def structure(self):
        return (self.inputs, self.outputs, self.states,
                tuple(self.transitions), self.initial)

    def __eq__(self, other):
        if not isinstance(other, Automaton):
            return NotImplemented
        return self.structure() == other.structure()

    def __hash__(self):
        return hash(self.structure())

    def __repr__(self):
        return "<%s: %d states, %d transitions>" % (type(self).__name__, len(self.states),
                                                    self.transition_count)


class SuspensionAutomaton(Automaton):
    """
    An automaton in which every state enables at least one output.
    """
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

        blocking = self.blocking_states
        if blocking:
            raise BlockingStatesError(blocking)

    @classmethod
    def from_automaton(cls, automaton):
        return cls(inputs=automaton.inputs, outputs=automaton.outputs,
                   transitions=automaton.transitions, initial=automaton.initial,
                   states=automaton.states)


SuspensionCheck = namedtuple('SuspensionCheck', 'automaton blocking')

def check_suspension(automaton):
    """
    Returns a SuspensionCheck; ``automaton`` is the SuspensionAutomaton
    when no state blocks, otherwise None and ``blocking`` lists the
    offending states.
    """
    blocking = automaton.blocking_states
    if blocking:
        return SuspensionCheck(None, blocking)

    if isinstance(automaton, SuspensionAutomaton):
        return SuspensionCheck(automaton, [])

    return SuspensionCheck(SuspensionAutomaton.from_automaton(automaton), [])

def quiescence_complete(automaton, delta_name):
    if delta_name in automaton.alphabet:
        raise AlphabetError("label %s already in the alphabet" % delta_name)

    loops = [(q, delta_name, q) for q in automaton.blocking_states]
    return SuspensionAutomaton(inputs=automaton.inputs,
                               outputs=automaton.outputs | {delta_name},
                               transitions=automaton.transitions + loops,
                               initial=automaton.initial,
                               states=automaton.states)
