from unittest import TestCase

from adgraph.automata.models import StateSet
from adgraph.exceptions import InvalidSplitError, NoSplittableLeafError, StrictSplitError
from adgraph.games.compatibility import compatibility
from adgraph.generators.generators import gen_sn
from adgraph.splitting.builder import (LCA_CANONICAL, LEAF_CANONICAL, SplitPolicy,
                                       SplittingGraphBuilder, build_splitting_graph,
                                       induced_split, split_node, splittable_on_input,
                                       splittable_on_output)
from adgraph.splitting.graph import SplittingGraph, check_splitting_graph
from adgraph.testcases.grammar import print_ccs
from adgraph.testutils import FixtureTestCase, random_corpus

def S(*states):
    return StateSet(states)


class BuildSplittingGraphTest(FixtureTestCase, TestCase):
    def assertValid(self, automaton, graph):
        report = check_splitting_graph(automaton, graph)
        self.assertTrue(report, report.messages)
        self.assertTrue(graph.is_complete(compatibility(automaton)))

    def test_running_example(self):
        automaton = self.load_automaton('running_example')
        graph = build_splitting_graph(automaton)
        self.assertEqual(set(graph.nodes), {S("1", "2", "3", "4"), S("1", "2", "3"), S("1", "4"),
                                            S("1", "3"), S("2", "3"), S("1"), S("3"), S("4")})
        witnesses = {str(node): print_ccs(term) for node, term in graph.witness.items()}
        self.assertEqual(witnesses, {
            "{1,2,3,4}": "x.0 + y.0",
            "{1,2,3}": "a.(x.0 + y.0)",
            "{1,4}": "x.0 + y.a.(x.0 + y.0)",
            "{1,3}": "x.(x.0 + y.a.(x.0 + y.0)) + y.0",
        })
        self.assertValid(automaton, graph)

    def test_input_split_keeps_disabled_states(self):
        automaton = self.load_automaton('running_example')
        graph = build_splitting_graph(automaton)
        self.assertEqual(graph.post(S("1", "2", "3")), [S("1", "3"), S("2", "3")])

    def test_exponential_family(self):
        for n in range(3, 9):
            automaton = gen_sn(n)
            graph = build_splitting_graph(automaton)
            self.assertEqual(len(graph), 2 ** (n - 1), n)
            self.assertValid(automaton, graph)

    def test_nondisjunct_outputs(self):
        automaton = self.load_automaton('nondisjunct')
        graph = build_splitting_graph(automaton)
        self.assertEqual(set(graph.nodes), {S("1", "2", "3"), S("1", "2"), S("2", "3"),
                                            S("1"), S("2"), S("3")})
        self.assertValid(automaton, graph)

    def test_compat_failure(self):
        automaton = self.load_automaton('compat_failure')
        graph = build_splitting_graph(automaton)
        self.assertEqual(graph.post(graph.root), [S("2", "3", "4"), S("6", "7", "8"), S("1"), S("5")])
        self.assertEqual(print_ccs(graph.witness[graph.root]), "t.0 + x.0 + y.0 + z.0")
        self.assertEqual(graph.post(S("2", "3", "4")), [S("2", "3"), S("3", "4")])
        self.assertValid(automaton, graph)

    def test_induced_split_trap(self):
        automaton = self.load_automaton('induced_split_trap')
        graph = build_splitting_graph(automaton)
        self.assertEqual(graph.post(graph.root),
                         [S("3", "4", "5", "6"), S("1", "2", "7"), S("8")])
        self.assertEqual(graph.post(S("1", "2", "7")), [S("1", "2"), S("7")])
        self.assertEqual(graph.post(S("3", "4", "5", "6")),
                         [S("3", "4", "5"), S("3", "4", "6")])
        self.assertValid(automaton, graph)

    def test_induced_split_trap_first_step(self):
        automaton = self.load_automaton('induced_split_trap')
        graph = split_node(SplittingGraph(automaton), compatibility(automaton))
        leaf = S("3", "4", "5", "6")
        self.assertTrue(graph.is_leaf(leaf))
        self.assertEqual(induced_split(graph, leaf, "a", graph.root), [S("5"), S("6")])
        self.assertFalse(splittable_on_output(graph, leaf))
        self.assertEqual(splittable_on_input(graph, leaf), ["a"])

    def test_induced_split_only(self):
        automaton = self.load_automaton('induced_split_trap')
        with self.assertRaises(InvalidSplitError) as cm:
            build_splitting_graph(automaton, SplitPolicy(complete_input_children=False))
        self.assertEqual(cm.exception.children, [S("5"), S("6")])
        self.assertIn("{3,4,5,6}", cm.exception.message)

    def test_policies_on_corpus(self):
        policies = [SplitPolicy(), SplitPolicy(prefer_input=True),
                    SplitPolicy(prefer_injective=True),
                    SplitPolicy(leaf_selection=LEAF_CANONICAL, lca_selection=LCA_CANONICAL)]
        for automaton in random_corpus(40, states=7, inputs=2, outputs=2):
            for policy in policies:
                graph = build_splitting_graph(automaton, policy)
                self.assertValid(automaton, graph)
                self.assertLessEqual(len(graph), 2 ** len(automaton.states))


class StrictSplitTest(FixtureTestCase, TestCase):
    def test_compat_failure(self):
        automaton = self.load_automaton('compat_failure')
        with self.assertRaises(StrictSplitError) as cm:
            build_splitting_graph(automaton, SplitPolicy(strict_injective=True))
        self.assertEqual(cm.exception.message, "no injective split of {2,3,4}")
        self.assertEqual(cm.exception.leaf, S("2", "3", "4"))

    def test_no_adg(self):
        with self.assertRaises(StrictSplitError):
            build_splitting_graph(self.load_automaton('no_adg'), SplitPolicy(strict_injective=True))

    def test_exponential_family(self):
        for n in range(3, 7):
            graph = build_splitting_graph(gen_sn(n), SplitPolicy(strict_injective=True))
            self.assertEqual(len(graph), 2 ** (n - 1))


class SplitNodeTest(FixtureTestCase, TestCase):
    def test_one_step(self):
        automaton = self.load_automaton('running_example')
        table = compatibility(automaton)
        graph = SplittingGraph(automaton)

        split_node(graph, table)
        self.assertEqual(graph.internal_nodes, [graph.root])
        self.assertEqual(graph.leaves, [S("1", "2", "3"), S("1", "4")])

        split_node(graph, table)
        self.assertEqual(graph.internal_nodes, [graph.root, S("1", "2", "3")])

    def test_complete_graph(self):
        automaton = self.load_automaton('running_example')
        builder = SplittingGraphBuilder(automaton)
        builder.build()
        self.assertEqual(builder.open_leaves(), [])
        with self.assertRaises(NoSplittableLeafError):
            builder.split_node()

    def test_open_leaves_by_level(self):
        automaton = self.load_automaton('running_example')
        builder = SplittingGraphBuilder(automaton)
        builder.split_node()
        # (1,2) is told apart sooner than (1,4)
        self.assertEqual(builder.open_leaves(), [S("1", "2", "3"), S("1", "4")])
