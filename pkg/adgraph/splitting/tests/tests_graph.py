from unittest import TestCase

from adgraph.automata.models import StateSet
from adgraph.exceptions import SplitPreconditionError
from adgraph.games.compatibility import compatibility
from adgraph.splitting.builder import (build_splitting_graph, induced_split, label_injective,
                                       splittable_on_input, splittable_on_output)
from adgraph.splitting.graph import (VIOLATION_ROOT, VIOLATION_SUBSET, VIOLATION_UNION,
                                     VIOLATION_WITNESS, SplittingGraph, check_splitting_graph,
                                     lca_set)
from adgraph.testcases.grammar import parse_ccs
from adgraph.testutils import FixtureTestCase

def S(*states):
    return StateSet(states)


class SplittingGraphTest(FixtureTestCase, TestCase):
    def setUp(self):
        self.automaton = self.load_automaton('running_example')
        self.table = compatibility(self.automaton)
        self.graph = build_splitting_graph(self.automaton, table=self.table)

    def test_structure(self):
        root = S("1", "2", "3", "4")
        self.assertEqual(self.graph.root, root)
        self.assertEqual(self.graph.post(root), [S("1", "2", "3"), S("1", "4")])
        self.assertEqual(self.graph.pre(S("2", "3")), [S("1", "2", "3")])
        self.assertEqual(self.graph.leaves, [S("2", "3"), S("1"), S("3"), S("4")])
        self.assertTrue(self.graph.is_leaf(S("1")))
        self.assertFalse(self.graph.is_leaf(root))
        self.assertIn(S("1", "3"), self.graph)
        self.assertTrue(self.graph.is_complete(self.table))

    def test_lca_set(self):
        self.assertEqual(lca_set(self.graph, ["1", "2"]), [S("1", "2", "3")])
        self.assertEqual(lca_set(self.graph, ["1", "4"]), [S("1", "4")])
        self.assertEqual(lca_set(self.graph, ["3", "4"]), [S("1", "2", "3", "4")])
        self.assertEqual(lca_set(self.graph, ["2", "3"]), [])

    def test_induced_split(self):
        root = self.graph.root
        self.assertEqual(induced_split(self.graph, S("1", "2", "3"), "a", root), [S("1"), S("2")])
        self.assertEqual(induced_split(self.graph, S("1", "4"), "y", S("1", "2", "3")),
                         [S("1"), S("4")])

    def test_induced_split_preconditions(self):
        with self.assertRaises(SplitPreconditionError):
            induced_split(self.graph, S("1", "2"), "a", S("1"))
        with self.assertRaises(SplitPreconditionError):
            induced_split(self.graph, S("1", "2", "3"), "a", S("1", "4"))

    def test_split_conditions_need_a_leaf(self):
        with self.assertRaises(SplitPreconditionError):
            splittable_on_output(self.graph, self.graph.root)
        with self.assertRaises(SplitPreconditionError):
            splittable_on_input(self.graph, S("1", "2"))

    def test_split_conditions(self):
        graph = SplittingGraph(self.automaton)
        self.assertTrue(splittable_on_output(graph, graph.root))
        self.assertEqual(splittable_on_input(graph, graph.root), [])

        graph.add_split(graph.root, [S("1", "2", "3"), S("1", "4")], parse_ccs("x.0 + y.0"))
        self.assertFalse(splittable_on_output(graph, S("1", "2", "3")))
        self.assertEqual(splittable_on_input(graph, S("1", "2", "3")), ["a"])
        self.assertFalse(splittable_on_output(graph, S("1", "4")))

    def test_label_injective(self):
        self.assertFalse(label_injective(self.table, S("1", "2", "3"), "a"))
        self.assertTrue(label_injective(self.table, S("1", "2"), "a"))
        self.assertTrue(label_injective(self.table, S("1", "4"), "x"))
        self.assertTrue(label_injective(self.table, S("1", "4"), "y"))

    def test_json(self):
        data = self.graph.to_json()
        self.assertEqual(len(data['nodes']), 8)
        self.assertEqual(data['nodes'][0], ["1", "2", "3", "4"])
        self.assertEqual(data['witnesses'][0], "x.0 + y.0")
        self.assertIn([0, 1], data['edges'])
        self.assertEqual(data['witnesses'].count(None), 4)

    def test_dot(self):
        dot = self.graph.to_dot()
        self.assertTrue(dot.startswith("digraph splitting {\n"))
        self.assertIn('[label="{1,2,3,4}\\nx.0 + y.0"]', dot)

    def test_leaf_sizes(self):
        self.assertEqual(self.graph.leaf_sizes(),
                         [(S("2", "3"), 2), (S("1"), 1), (S("3"), 1), (S("4"), 1)])


class CheckSplittingGraphTest(FixtureTestCase, TestCase):
    def setUp(self):
        self.automaton = self.load_automaton('running_example')

    def test_valid(self):
        report = check_splitting_graph(self.automaton, build_splitting_graph(self.automaton))
        self.assertTrue(report)
        self.assertEqual(report.messages, [])

    def test_union(self):
        graph = SplittingGraph(self.automaton)
        graph.add_split(graph.root, [S("1", "2"), S("3")], parse_ccs("x.0 + y.0"))
        report = check_splitting_graph(self.automaton, graph)
        self.assertFalse(report)
        self.assertIn(VIOLATION_UNION, [v.kind for v in report.violations])

    def test_unsound_witness(self):
        graph = SplittingGraph(self.automaton)
        graph.add_split(graph.root, [S("1", "2", "3"), S("1", "4")], parse_ccs("0"))
        report = check_splitting_graph(self.automaton, graph)
        self.assertEqual([v.kind for v in report.violations], [VIOLATION_WITNESS])
        self.assertEqual(report.messages,
                         ["{1,2,3,4}: unsound witness (observation enabled by {1,2,3,4})"])

    def test_second_root(self):
        graph = SplittingGraph(self.automaton)
        graph.dag.add_node(S("1"))
        report = check_splitting_graph(self.automaton, graph)
        self.assertEqual([v.kind for v in report.violations], [VIOLATION_ROOT])

    def test_child_equal_to_parent(self):
        graph = SplittingGraph(self.automaton)
        graph.add_split(graph.root, [S("1", "2", "3"), S("1", "4")], parse_ccs("x.0 + y.0"))
        graph.add_split(S("1", "4"), [S("1", "4")], parse_ccs("x.0 + y.0"))
        report = check_splitting_graph(self.automaton, graph)
        self.assertFalse(report)
        self.assertIn(VIOLATION_SUBSET, [v.kind for v in report.violations])
        self.assertIn("{1,4}: not a strict subset (child {1,4})", report.messages)
