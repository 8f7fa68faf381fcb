class AdgraphError(Exception):
    def __init__(self, message, *args):
        super().__init__(message, *args)
        self.message = message


class ParseError(AdgraphError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = "line %d, column %d: %s" % (line, column or 1, message)
        super().__init__(message)
        self.line = line
        self.column = column


class AutomatonSyntaxError(ParseError):
    pass


class CcsSyntaxError(ParseError):
    pass


class UnknownReferenceError(ParseError):
    pass


class MissingDirectiveError(ParseError):
    pass


class AlphabetError(AdgraphError):
    pass


class AlphabetMismatchError(AlphabetError):
    pass


class DomainError(AdgraphError):
    pass


class NondeterminismError(DomainError):
    def __init__(self, state, label, line=None):
        message = "nondeterministic transition for (%s, %s)" % (state, label)
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.state = state
        self.label = label


class BlockingStatesError(DomainError):
    def __init__(self, states):
        super().__init__("blocking states: %s" % ", ".join(str(s) for s in states))
        self.states = list(states)


class UnknownStateError(AdgraphError):
    def __init__(self, state):
        super().__init__("unknown state %s" % (state,))
        self.state = state


class CyclicAutomatonError(AdgraphError):
    pass


class CompatibleStatesError(DomainError):
    def __init__(self, state, other):
        super().__init__("states %s and %s are compatible" % (state, other))
        self.states = (state, other)


class NondeterministicTermError(AdgraphError):
    pass


class TestCaseShapeError(AdgraphError):
    pass


class NotATestCaseError(AdgraphError):
    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class ObservationCapExceeded(AdgraphError):
    def __init__(self, cap):
        super().__init__("more than %d observations" % cap)
        self.cap = cap


class SplitPreconditionError(AdgraphError):
    pass


class InvalidSplitError(AdgraphError):
    def __init__(self, message, children=None):
        super().__init__(message)
        self.children = list(children or [])


class NoSplittableLeafError(AdgraphError):
    pass


class StrictSplitError(AdgraphError):
    def __init__(self, leaf):
        super().__init__("no injective split of %s" % (leaf,))
        self.leaf = leaf


class IncompleteGraphError(AdgraphError):
    pass


class InstanceTooLargeError(AdgraphError):
    pass


class InfeasibleParametersError(AdgraphError):
    pass


class UnknownFixtureError(AdgraphError):
    def __init__(self, name):
        super().__init__("unknown fixture %s" % name)
        self.name = name
