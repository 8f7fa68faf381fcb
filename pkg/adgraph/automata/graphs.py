import networkx as nx

from adgraph.exceptions import CyclicAutomatonError


def digraph(automaton):
    """
    digraph(A): states as nodes, one edge per pair joined by a transition.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(automaton.states)
    graph.add_edges_from((source, target) for source, _, target in automaton.transitions)
    return graph

def is_acyclic(automaton):
    return nx.is_directed_acyclic_graph(digraph(automaton))

def longest_path(automaton):
    """
    Length of the longest path from the initial state.
    """
    graph = digraph(automaton)
    if not nx.is_directed_acyclic_graph(graph):
        raise CyclicAutomatonError("longest path of a cyclic automaton")

    reachable = nx.descendants(graph, automaton.initial) | {automaton.initial}
    return nx.dag_longest_path_length(graph.subgraph(reachable))
