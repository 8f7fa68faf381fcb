"""
Test-case expressions: ``0``, ``a.F`` and ``F + F``.

Terms are hash-consed, so structurally equal terms are the same object and
shared subterms stay shared. Equality and hashing are by identity.
"""

import threading
import weakref

_interned = weakref.WeakValueDictionary()
_lock = threading.Lock()


class Term:
    __slots__ = ('_derivatives', '__weakref__')

    def __new__(cls, *args):
        key = (cls,) + args
        with _lock:
            term = _interned.get(key)
            if term is None:
                term = super().__new__(cls)
                term._setup(*args)
                term._derivatives = None
                _interned[key] = term
        return term

    def _setup(self):
        pass

    def derivatives(self):
        """
        The ``(label, term)`` transitions of this expression, in order of
        appearance.
        """
        if self._derivatives is None:
            self._derivatives = tuple(self._compute_derivatives())
        return self._derivatives

    def successors(self):
        """
        Label → derivative map; assumes a deterministic term.
        """
        return dict(self.derivatives())

    def is_leaf(self):
        return not self.derivatives()

    def subterms(self):
        """
        Every distinct subexpression, this one first.
        """
        seen = set()
        order = []
        stack = [self]
        while stack:
            term = stack.pop()
            if term in seen:
                continue
            seen.add(term)
            order.append(term)
            stack.extend(reversed(term.children()))
        return order

    def children(self):
        return ()

    def __str__(self):
        from adgraph.testcases.grammar import print_ccs
        return print_ccs(self)

    def __repr__(self):
        return "<%s %s>" % (type(self).__name__, self)

    def __reduce__(self):
        return (type(self), self._args())


class Nil(Term):
    __slots__ = ()

    def _compute_derivatives(self):
        return ()

    def _args(self):
        return ()


class Prefix(Term):
    __slots__ = ('label', 'body')

    def _setup(self, label, body):
        self.label = label
        self.body = body

    def _compute_derivatives(self):
        return ((self.label, self.body),)

    def children(self):
        return (self.body,)

    def _args(self):
        return (self.label, self.body)


class Sum(Term):
    __slots__ = ('left', 'right')

    def _setup(self, left, right):
        self.left = left
        self.right = right

    def _compute_derivatives(self):
        derivatives = list(self.left.derivatives())
        for derivative in self.right.derivatives():
            if derivative not in derivatives:
                derivatives.append(derivative)
        return derivatives

    def children(self):
        return (self.left, self.right)

    def _args(self):
        return (self.left, self.right)


NIL = Nil()

def prefix(label, body=NIL):
    return Prefix(label, body)

def sum_of(terms):
    """
    Left-nested sum of ``terms``; 0 when empty.
    """
    result = None
    for term in terms:
        result = term if result is None else Sum(result, term)
    return NIL if result is None else result
