from unittest import TestCase

from django.test.utils import override_settings

from adgraph.automata.models import StateSet, SuspensionAutomaton
from adgraph.exceptions import (IncompleteGraphError, InstanceTooLargeError,
                                ObservationCapExceeded, StrictSplitError)
from adgraph.extraction.oracle import (ORACLE_FOUND, ORACLE_INCONCLUSIVE, ORACLE_NONE,
                                       adg_exists_oracle)
from adgraph.extraction.retrieval import (comp_dg, extract_report, leaf_sizes,
                                          post_contract_violations)
from adgraph.extraction.statistics import format_table, percentage, statistics_row
from adgraph.games.compatibility import compatibility
from adgraph.generators.generators import gen_sn
from adgraph.splitting.builder import SplitPolicy, build_splitting_graph
from adgraph.splitting.graph import SplittingGraph
from adgraph.testcases.grammar import parse_ccs, print_ccs
from adgraph.testcases.semantics import adg_check, is_test_case_for
from adgraph.testcases.terms import NIL
from adgraph.testutils import FixtureTestCase, random_corpus

RUNNING_ADG = "x.(x.0 + y.a.(x.0 + y.0)) + y.a.(x.0 + y.0)"

STRICT = SplitPolicy(strict_injective=True)


class RetrievalTest(FixtureTestCase, TestCase):
    def test_running_example(self):
        automaton = self.load_automaton('running_example')
        graph = build_splitting_graph(automaton)
        report = extract_report(automaton, graph)

        self.assertEqual(print_ccs(report.term), RUNNING_ADG)
        self.assertEqual(report.depth, 4)
        self.assertEqual(report.grafts, 2)
        self.assertEqual(report.leaf_sizes, [1, 1, 2, 1, 1])
        self.assertEqual(report.incompatible_pairs, 5)
        self.assertEqual(report.distinguished, 5)
        self.assertEqual(report.missed, [])
        self.assertEqual(report.splitting_nodes, 8)
        self.assertTrue(report.is_test_case)
        self.assertTrue(report.is_adg)
        self.assertEqual(report.violations, [])

    def test_report_json(self):
        automaton = self.load_automaton('running_example')
        report = extract_report(automaton, build_splitting_graph(automaton))
        self.assertEqual(report.to_json(), {
            'term': RUNNING_ADG,
            'depth': 4,
            'incompatible_pairs': 5,
            'distinguished': 5,
            'missed': [],
            'splitting_nodes': 8,
            'leaf_sizes': [1, 1, 2, 1, 1],
        })

    def test_comp_dg_uses_graph_table(self):
        automaton = self.load_automaton('running_example')
        graph = build_splitting_graph(automaton)
        self.assertIs(comp_dg(automaton, graph), parse_ccs(RUNNING_ADG))

    def test_single_state(self):
        automaton = SuspensionAutomaton(inputs=["a"], outputs=["x"],
                                        transitions=[("1", "x", "1")], initial="1")
        graph = build_splitting_graph(automaton)
        report = extract_report(automaton, graph)
        self.assertIs(report.term, NIL)
        self.assertEqual(report.depth, 0)
        self.assertEqual(report.grafts, 0)
        self.assertEqual(report.leaf_sizes, [1])
        self.assertEqual(report.incompatible_pairs, 0)

    def test_incomplete_graph(self):
        automaton = self.load_automaton('running_example')
        with self.assertRaises(IncompleteGraphError):
            comp_dg(automaton, SplittingGraph(automaton))

    def test_exponential_family(self):
        for n in range(3, 7):
            automaton = gen_sn(n)
            report = extract_report(automaton, build_splitting_graph(automaton))
            self.assertEqual(report.missed, [], n)
            self.assertEqual(report.incompatible_pairs, n * (n - 1) // 2)

    def test_compat_failure(self):
        automaton = self.load_automaton('compat_failure')
        report = extract_report(automaton, build_splitting_graph(automaton))
        self.assertEqual(report.missed, [("3", "4")])
        self.assertFalse(report.is_test_case)
        self.assertFalse(report.is_adg)

    def test_no_adg(self):
        automaton = self.load_automaton('no_adg')
        report = extract_report(automaton, build_splitting_graph(automaton))
        self.assertNotEqual(report.missed, [])

    def test_observation_cap(self):
        automaton = self.load_automaton('running_example')
        term = parse_ccs(RUNNING_ADG)
        with self.assertRaises(ObservationCapExceeded):
            leaf_sizes(automaton, term, cap=4)

        report = extract_report(automaton, build_splitting_graph(automaton), obs_cap=4)
        self.assertIsNone(report.leaf_sizes)
        self.assertEqual(report.depth, 4)

    def test_post_contract(self):
        for automaton in random_corpus(200, states=6, inputs=2, outputs=2):
            table = compatibility(automaton)
            graph = build_splitting_graph(automaton, table=table)
            report = extract_report(automaton, graph, table)
            self.assertEqual(post_contract_violations(automaton, table, report.term), [])
            self.assertLessEqual(report.grafts, len(automaton.states) - 1)

    def test_post_contract_violations(self):
        automaton = self.load_automaton('running_example')
        table = compatibility(automaton)
        self.assertEqual(post_contract_violations(automaton, table, NIL),
                         [StateSet(automaton.states)])
        self.assertEqual(post_contract_violations(automaton, table, parse_ccs("x.0 + y.0")),
                         [StateSet(["1", "4"]), StateSet(["1", "2"])])

    def test_injective_construction(self):
        instances = [gen_sn(n) for n in range(3, 7)]
        instances.extend(random_corpus(150, states=5, inputs=2, outputs=3))
        for automaton in instances:
            table = compatibility(automaton)
            if table.compatible_pairs():
                continue
            try:
                graph = build_splitting_graph(automaton, STRICT, table)
            except StrictSplitError:
                continue

            term = comp_dg(automaton, graph, table)
            self.assertTrue(is_test_case_for(term, automaton, automaton.states))
            check = adg_check(term, automaton, automaton.states, table)
            self.assertEqual(check.missed, [])

    def test_prefer_injective_distinguishes_no_less(self):
        totals = {}
        policies = {'default': SplitPolicy(), 'prefer': SplitPolicy(prefer_injective=True)}
        for name, policy in policies.items():
            distinguished = incompatible = 0
            for automaton in random_corpus(200, states=8, inputs=2, outputs=3):
                report = extract_report(automaton, build_splitting_graph(automaton, policy))
                distinguished += report.distinguished
                incompatible += report.incompatible_pairs
            totals[name] = (distinguished, incompatible)

        self.assertEqual(totals['prefer'][1], totals['default'][1])
        self.assertGreaterEqual(totals['prefer'][0], totals['default'][0])
        self.assertGreater(totals['prefer'][0], 0)


class OracleTest(FixtureTestCase, TestCase):
    def assertFound(self, automaton):
        result = adg_exists_oracle(automaton)
        self.assertEqual(result.verdict, ORACLE_FOUND)
        self.assertTrue(result.found)
        check = adg_check(result.term, automaton, automaton.states, compatibility(automaton),
                          strict=False)
        self.assertEqual(check.missed, [])
        return result

    def test_running_example(self):
        self.assertFound(self.load_automaton('running_example'))

    def test_compat_failure(self):
        self.assertFound(self.load_automaton('compat_failure'))

    def test_nondisjunct(self):
        self.assertFound(self.load_automaton('nondisjunct'))

    def test_no_adg(self):
        result = adg_exists_oracle(self.load_automaton('no_adg'))
        self.assertEqual(result.verdict, ORACLE_NONE)
        self.assertTrue(result.definitive)
        self.assertIsNone(result.term)

    def test_depth_bound(self):
        result = adg_exists_oracle(self.load_automaton('running_example'), depth_bound=0)
        self.assertEqual(result.verdict, ORACLE_INCONCLUSIVE)
        self.assertFalse(result.definitive)

    def test_too_large(self):
        with self.assertRaises(InstanceTooLargeError):
            adg_exists_oracle(gen_sn(9))

    @override_settings(ADG_ORACLE_MAX_STATES=3)
    def test_configured_limit(self):
        with self.assertRaises(InstanceTooLargeError):
            adg_exists_oracle(self.load_automaton('running_example'))

    def test_json(self):
        result = adg_exists_oracle(self.load_automaton('no_adg'))
        self.assertEqual(result.to_json(), {
            'verdict': 'none',
            'term': None,
            'configurations': result.configurations,
        })


class StatisticsTest(FixtureTestCase, TestCase):
    def test_percentage(self):
        self.assertEqual(percentage(1, 4), 16.667)
        self.assertEqual(percentage(0, 4), 0.0)
        self.assertEqual(percentage(0, 1), 0.0)

    def test_running_example(self):
        row = statistics_row('running_example', self.load_automaton('running_example'))
        self.assertEqual(list(row.values()),
                         ['running_example', 4, 1, 16.667, 8, 4, 0, 0.0])

    def test_format_table(self):
        rows = [statistics_row('running_example', self.load_automaton('running_example')),
                statistics_row('s4', gen_sn(4))]
        lines = format_table(rows).splitlines()
        self.assertEqual(len(lines), 3)
        self.assertEqual(lines[0].split(), ['file', 'states', 'compatible', 'pairs', '%',
                                            'splitting', 'nodes', 'ADG', 'depth',
                                            'not', 'distinguished', '%'])
        self.assertEqual(lines[1].split(), ['running_example', '4', '1', '16.667', '8', '4', '0', '0.0'])
        self.assertEqual(lines[2].split(), ['s4', '4', '0', '0.0', '8', str(rows[1]['depth']), '0', '0.0'])
        self.assertEqual(len(set(len(line) for line in lines[1:])), 1)
