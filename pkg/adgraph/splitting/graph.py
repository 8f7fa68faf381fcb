"""
Splitting graphs: DAGs of state sets rooted at the full state set, where
every internal node is the union of its children and carries a witness
test case whose observations each stay inside one child.
"""

from collections import namedtuple

import networkx as nx

from adgraph.automata.models import StateSet
from adgraph.testcases.grammar import print_ccs
from adgraph.utils import state_name

(VIOLATION_ROOT,
 VIOLATION_SUBSET,
 VIOLATION_UNION,
 VIOLATION_CYCLE,
 VIOLATION_WITNESS) = range(5)

VIOLATIONS = {
    VIOLATION_ROOT: u"root",
    VIOLATION_SUBSET: u"not a strict subset",
    VIOLATION_UNION: u"not the union of its children",
    VIOLATION_CYCLE: u"cycle",
    VIOLATION_WITNESS: u"unsound witness",
}

def node_key(node):
    # Larger sets first, then canonical order.
    return (-len(node), node.sort_key())


class SplittingGraph:
    def __init__(self, automaton):
        self.automaton = automaton
        self.root = StateSet(automaton.states)
        self.dag = nx.DiGraph()
        self.dag.add_node(self.root)
        self.witness = {}
        # Set by the builder
        self.table = None
        self.policy = None

    def __contains__(self, node):
        return node in self.dag

    def __len__(self):
        return self.dag.number_of_nodes()

    @property
    def nodes(self):
        return sorted(self.dag.nodes, key=node_key)

    def post(self, node):
        return sorted(self.dag.successors(node), key=node_key)

    def pre(self, node):
        return sorted(self.dag.predecessors(node), key=node_key)

    def is_leaf(self, node):
        return self.dag.out_degree(node) == 0

    @property
    def leaves(self):
        return [node for node in self.nodes if self.is_leaf(node)]

    @property
    def internal_nodes(self):
        return [node for node in self.nodes if not self.is_leaf(node)]

    def add_split(self, node, children, witness):
        for child in children:
            self.dag.add_edge(node, StateSet(child))
        self.witness[node] = witness

    def is_complete(self, table):
        return all(table.is_compatible_set(leaf) for leaf in self.leaves)

    def leaf_sizes(self):
        return [(leaf, len(leaf)) for leaf in self.leaves]

    def to_json(self):
        nodes = self.nodes
        index = {node: i for i, node in enumerate(nodes)}
        return {
            'nodes': [[state_name(q) for q in node] for node in nodes],
            'edges': sorted([index[parent], index[child]] for parent, child in self.dag.edges),
            'witnesses': [print_ccs(self.witness[node]) if node in self.witness else None
                          for node in nodes],
        }

    def to_dot(self):
        return "".join(splitting_graph_dot(self))

    def __repr__(self):
        return "<SplittingGraph: %d nodes, %d leaves>" % (len(self), len(self.leaves))


def _gvquote(s):
    return '"{}"'.format(str(s).replace('"', r'\"'))

def splitting_graph_dot(graph):
    """
    Produce a graphviz dot file as an iterable of strings. Internal nodes
    show their witness under the state set.
    """
    nodes = graph.nodes
    index = {node: "n%d" % i for i, node in enumerate(nodes)}
    yield "digraph splitting {\n"
    yield "  node [shape=box];\n"
    for node in nodes:
        label = str(node)
        if node in graph.witness:
            label += "\\n" + print_ccs(graph.witness[node])
        yield "  {} [label={}];\n".format(index[node], _gvquote(label))
    for parent, child in sorted(graph.dag.edges, key=lambda e: (node_key(e[0]), node_key(e[1]))):
        yield "  {} -> {};\n".format(index[parent], index[child])
    yield "}\n"


def lca_set(graph, states):
    """
    The internal nodes that contain ``states`` while none of their
    children does, in canonical order.
    """
    states = StateSet(states)
    return [node for node in graph.internal_nodes
            if states <= node and not any(states <= child for child in graph.dag.successors(node))]


Violation = namedtuple('Violation', 'kind node detail')


class SplittingGraphReport:
    def __init__(self, violations=None):
        self.violations = violations if violations is not None else []

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    @property
    def messages(self):
        return ["%s: %s (%s)" % (node, VIOLATIONS[kind], detail)
                for kind, node, detail in self.violations]


def unsound_observation(automaton, node, children, witness):
    """
    Walks ``witness`` from every state of ``node`` and returns the states
    enabling some observation that no child contains, or None.
    """
    seen = set()
    stack = [(witness, frozenset((q, q) for q in node))]
    while stack:
        item = stack.pop()
        if item in seen:
            continue
        seen.add(item)

        term, current = item
        if not current:
            continue

        derivatives = term.derivatives()
        if not derivatives:
            enabled = frozenset(origin for origin, _ in current)
            if not any(enabled <= child for child in children):
                return StateSet(enabled)
            continue

        for label, derivative in derivatives:
            moved = frozenset((origin, automaton.target(q, label)) for origin, q in current
                              if automaton.target(q, label) is not None)
            stack.append((derivative, moved))
    return None

def check_splitting_graph(automaton, graph):
    """
    Checks a splitting graph independently of how it was built.
    """
    violations = []
    dag = graph.dag
    root = StateSet(automaton.states)

    roots = [node for node in dag.nodes if dag.in_degree(node) == 0]
    if roots != [root]:
        violations.append(Violation(VIOLATION_ROOT, root,
                                    "roots %s" % ", ".join(str(r) for r in roots)))

    if not nx.is_directed_acyclic_graph(dag):
        violations.append(Violation(VIOLATION_CYCLE, root, "graph has a cycle"))

    for parent, child in dag.edges:
        if not child < parent:
            violations.append(Violation(VIOLATION_SUBSET, parent, "child %s" % StateSet(child)))

    for node in graph.nodes:
        children = list(dag.successors(node))
        if not children:
            continue

        union = StateSet().union(*children)
        if union != node:
            violations.append(Violation(VIOLATION_UNION, node, "children cover %s" % StateSet(union)))

        if node not in graph.witness:
            violations.append(Violation(VIOLATION_WITNESS, node, "no witness"))
            continue

        enabled = unsound_observation(automaton, node, children, graph.witness[node])
        if enabled is not None:
            violations.append(Violation(VIOLATION_WITNESS, node,
                                        "observation enabled by %s" % enabled))

    return SplittingGraphReport(violations)
