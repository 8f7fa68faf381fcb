"""
Constructing a complete splitting graph by repeatedly splitting a leaf
that still holds an incompatible pair.
"""

import logging

from adgraph.automata.models import StateSet
from adgraph.exceptions import (InvalidSplitError, NoSplittableLeafError,
                                SplitPreconditionError, StrictSplitError)
from adgraph.games.compatibility import compatibility
from adgraph.splitting.graph import SplittingGraph, lca_set, node_key
from adgraph.testcases.terms import prefix, sum_of
from adgraph.utils import name_key

logger = logging.getLogger(__name__)

(SPLIT_OUTPUT,
 SPLIT_INPUT) = ('output', 'input')

(LEAF_MIN_LEVEL,
 LEAF_CANONICAL) = ('min-level', 'canonical')

(LCA_MOST_INJECTIVE,
 LCA_CANONICAL) = ('most-injective', 'canonical')


class SplitPolicy:
    """
    The free choices of the construction.

    ``leaf_selection`` picks the leaf holding the incompatible pair of
    least level, or the first open leaf. Output splits go first unless
    ``prefer_input``. ``lca_selection`` picks the LCA separating the most
    incompatible pairs, or the first. With ``strict_injective`` only
    injective splits are made; ``prefer_injective`` tries the injective
    splits of a leaf first and falls back to the others.
    ``complete_input_children=False`` drops the states that do not enable
    the input from every child, which cannot cover the leaf and is
    rejected by the split guard.
    """
    def __init__(self, leaf_selection=LEAF_MIN_LEVEL, prefer_input=False,
                 lca_selection=LCA_MOST_INJECTIVE, strict_injective=False,
                 complete_input_children=True, prefer_injective=False):
        self.leaf_selection = leaf_selection
        self.prefer_input = prefer_input
        self.lca_selection = lca_selection
        self.strict_injective = strict_injective
        self.complete_input_children = complete_input_children
        self.prefer_injective = prefer_injective

    def __repr__(self):
        return ("SplitPolicy(leaf_selection=%r, prefer_input=%r, lca_selection=%r, "
                "strict_injective=%r, prefer_injective=%r)" %
                (self.leaf_selection, self.prefer_input, self.lca_selection,
                 self.strict_injective, self.prefer_injective))


def _check_leaf(graph, leaf):
    if leaf not in graph or not graph.is_leaf(leaf):
        raise SplitPreconditionError("%s is not a leaf" % StateSet(leaf))

def splittable_on_output(graph, leaf):
    automaton = graph.automaton
    _check_leaf(graph, leaf)

    for x in automaton.outs(leaf):
        if any(x not in automaton.outs(q) for q in leaf):
            continue
        if not lca_set(graph, automaton.after(leaf, x)):
            return False
    return True

def splittable_on_input(graph, leaf):
    """
    The inputs of ``leaf`` whose successor set has an LCA.
    """
    automaton = graph.automaton
    _check_leaf(graph, leaf)

    return [a for a in sorted(automaton.ins(leaf), key=name_key)
            if lca_set(graph, automaton.after(leaf, a))]

def induced_split(graph, states, label, node):
    """
    The nonempty sets of ``states`` whose ``label``-successors lie in one
    child of ``node``. The blocks may overlap.
    """
    automaton = graph.automaton
    states = StateSet(states)
    if node not in graph or graph.is_leaf(node):
        raise SplitPreconditionError("%s is not an internal node" % StateSet(node))
    if not automaton.after(states, label) <= node:
        raise SplitPreconditionError("%s after %s is not inside %s" % (states, label, node))

    blocks = []
    for child in graph.post(node):
        block = automaton.before(child, label) & states
        if block and block not in blocks:
            blocks.append(block)
    return blocks

def label_injective(table, states, label):
    """
    Whether every incompatible pair of ``states`` either moves on ``label``
    to an incompatible pair or is told apart by the output ``label``.
    """
    automaton = table.automaton
    for q, q2 in table.incompatible_pairs_in(states):
        target, other = automaton.target(q, label), automaton.target(q2, label)
        if target is not None and other is not None and not table.compatible(target, other):
            continue
        if label in automaton.outputs and not (label in automaton.outs(q) and
                                               label in automaton.outs(q2)):
            continue
        return False
    return True

def separated_pairs(table, pairs, blocks):
    return sum(1 for q, q2 in pairs
               if not any(q in block and q2 in block for block in blocks))

def choose_lca(graph, table, states, label=None, selection=LCA_MOST_INJECTIVE):
    """
    The LCA to split ``states`` by: the one whose children separate the
    most incompatible pairs, first in canonical order on ties. With a
    ``label`` the pairs are those enabling it and the blocks its induced
    split; without one the blocks are the children themselves.
    """
    automaton = graph.automaton
    if label is None:
        lcas = lca_set(graph, states)
    else:
        lcas = lca_set(graph, automaton.after(states, label))

    if not lcas:
        return None
    if selection == LCA_CANONICAL or len(lcas) == 1:
        return lcas[0]

    if label is None:
        pairs = table.incompatible_pairs_in(states)
        blocks = {node: graph.post(node) for node in lcas}
    else:
        pairs = table.incompatible_pairs_in(automaton.enabled(states, label))
        blocks = {node: induced_split(graph, states, label, node) for node in lcas}

    return min(lcas, key=lambda node: (-separated_pairs(table, pairs, blocks[node]),
                                       node_key(node)))


class SplittingGraphBuilder:
    def __init__(self, automaton, table=None, policy=None, graph=None):
        self.automaton = automaton
        self.table = table if table is not None else compatibility(automaton)
        self.policy = policy if policy is not None else SplitPolicy()
        self.graph = graph if graph is not None else SplittingGraph(automaton)
        self.graph.table = self.table
        self.graph.policy = self.policy

    def _leaf_key(self, leaf):
        if self.policy.leaf_selection == LEAF_MIN_LEVEL:
            level = min(self.table.level(q, q2) for q, q2 in self.table.incompatible_pairs_in(leaf))
            return (level, leaf.sort_key())
        return (0, leaf.sort_key())

    def open_leaves(self):
        """
        Leaves still holding an incompatible pair, in selection order.
        """
        leaves = [leaf for leaf in self.graph.leaves if not self.table.is_compatible_set(leaf)]
        return sorted(leaves, key=self._leaf_key)

    def options(self, leaf):
        outputs = [(SPLIT_OUTPUT, None)] if splittable_on_output(self.graph, leaf) else []
        inputs = [(SPLIT_INPUT, a) for a in splittable_on_input(self.graph, leaf)]
        options = inputs + outputs if self.policy.prefer_input else outputs + inputs
        if self.policy.prefer_injective:
            # Stable: ties keep the output/input order.
            options.sort(key=lambda option: not self.is_injective(leaf, *option))
        return options

    def is_injective(self, leaf, kind, label):
        if kind == SPLIT_OUTPUT:
            return all(label_injective(self.table, leaf, x) for x in self.automaton.outs(leaf))
        return label_injective(self.table, leaf, label)

    def _lca(self, leaf, label):
        return choose_lca(self.graph, self.table, leaf, label, self.policy.lca_selection)

    def split(self, leaf, kind, label=None):
        automaton, graph = self.automaton, self.graph

        if kind == SPLIT_OUTPUT:
            children, branches = [], []
            for x in sorted(automaton.outs(leaf), key=name_key):
                if any(x not in automaton.outs(q) for q in leaf):
                    children.append(automaton.enabled(leaf, x))
                    branches.append(prefix(x))
                else:
                    node = self._lca(leaf, x)
                    children.extend(induced_split(graph, leaf, x, node))
                    branches.append(prefix(x, graph.witness[node]))
            witness = sum_of(branches)
            label = "outputs"
        else:
            node = self._lca(leaf, label)
            blocks = induced_split(graph, leaf, label, node)
            if self.policy.complete_input_children:
                disabled = leaf - automaton.enabled(leaf, label)
                children = [block | disabled for block in blocks]
            else:
                children = blocks
            witness = prefix(label, graph.witness[node])

        unique = []
        for child in children:
            if child not in unique:
                unique.append(child)

        self._guard(leaf, label, unique)
        graph.add_split(leaf, unique, witness)
        logger.debug("split %s on %s into %s", leaf, label, " ".join(str(c) for c in unique))
        return unique

    def _guard(self, leaf, label, children):
        if not children:
            raise InvalidSplitError("split of %s on %s has no children" % (leaf, label), children)

        uncovered = leaf - StateSet().union(*children)
        if uncovered:
            raise InvalidSplitError("split of %s on %s does not cover %s" %
                                    (leaf, label, StateSet(uncovered)), children)

        for child in children:
            if child == leaf:
                raise InvalidSplitError("split of %s on %s keeps the whole set" % (leaf, label),
                                        children)

    def split_node(self):
        leaves = self.open_leaves()
        if not leaves:
            raise NoSplittableLeafError("splitting graph is already complete")

        for leaf in leaves:
            for kind, label in self.options(leaf):
                if self.policy.strict_injective and not self.is_injective(leaf, kind, label):
                    continue
                self.split(leaf, kind, label)
                return leaf

        if self.policy.strict_injective:
            raise StrictSplitError(leaves[0])
        raise NoSplittableLeafError("no splittable leaf among %s" %
                                    ", ".join(str(leaf) for leaf in leaves))

    def build(self):
        while self.open_leaves():
            self.split_node()

        logger.info("splitting graph for %d states: %d nodes",
                    len(self.automaton.states), len(self.graph))
        return self.graph


def split_node(graph, table, policy=None):
    """
    Splits one open leaf of ``graph`` in place and returns the graph.
    """
    SplittingGraphBuilder(graph.automaton, table, policy, graph).split_node()
    return graph

def build_splitting_graph(automaton, policy=None, table=None):
    return SplittingGraphBuilder(automaton, table, policy).build()
