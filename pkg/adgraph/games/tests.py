import os.path
from unittest import TestCase

from adgraph.automata.composition import compose
from adgraph.automata.formats import parse_automaton
from adgraph.automata.graphs import is_acyclic
from adgraph.automata.models import Automaton, SuspensionAutomaton
from adgraph.exceptions import CompatibleStatesError, UnknownStateError
from adgraph.games.compatibility import compatibility, pairwise_distinguisher
from adgraph.games.solver import THETA, compute_invalid, naive_invalid_oracle
from adgraph.generators.generators import FIXTURES, TERM_FIXTURES, gen_random_automaton, gen_sn
from adgraph.testcases.grammar import print_ccs
from adgraph.testcases.semantics import (associated_automaton, distinguishes,
                                         is_deterministic, is_test_case_for)
from adgraph.testutils import FixtureTestCase

testdata_dir = os.path.join(os.path.dirname(__file__), 'testdata')

def random_automata(count):
    for seed in range(count):
        yield gen_random_automaton(states=2 + seed % 7, inputs=1 + seed % 3,
                                   outputs=1 + (seed // 3) % 3, density=0.4, seed=seed)


class ComputeInvalidTest(FixtureTestCase, TestCase):
    def assertLevels(self, automaton, game):
        for q in game.invalid:
            move = game.move[q]
            self.assertEqual(game.level[q] == 0, automaton.is_blocking(q))
            if move is THETA:
                for x in automaton.outs(q):
                    self.assertLess(game.level[automaton.target(q, x)], game.level[q])
            else:
                self.assertIn(move, automaton.inputs)
                target = automaton.target(q, move)
                self.assertIn(target, game.invalid)
                self.assertLess(game.level[target], game.level[q])

    def test_running_example_self_composition(self):
        automaton = self.load_automaton('running_example')
        product = compose(automaton, automaton, full=True)
        game = compute_invalid(product)
        self.assertEqual(len(game.invalid), 10)
        self.assertEqual(game.valid, {("1", "1"), ("2", "2"), ("3", "3"), ("4", "4"),
                                      ("2", "3"), ("3", "2")})
        self.assertLevels(product, game)

    def test_running_example_alone(self):
        automaton = self.load_automaton('running_example')
        self.assertEqual(compute_invalid(automaton).invalid, frozenset())
        self.assertEqual(naive_invalid_oracle(automaton), frozenset())

    def test_no_inputs_no_blocking(self):
        automaton = Automaton(inputs=["a"], outputs=["x"],
                              transitions=[("1", "x", "2"), ("2", "x", "1")], initial="1")
        self.assertEqual(compute_invalid(automaton).invalid, frozenset())

    def test_blocking_states(self):
        automaton = Automaton(inputs=["a"], outputs=["x"],
                              transitions=[("1", "a", "2")], initial="1")
        game = compute_invalid(automaton)
        self.assertEqual(game.invalid, {"1", "2"})
        self.assertIs(game.move["2"], THETA)
        self.assertEqual(game.level["2"], 0)
        self.assertEqual(naive_invalid_oracle(automaton), {"1", "2"})

    def test_input_move(self):
        automaton = Automaton(inputs=["a"], outputs=["x"],
                              transitions=[("1", "a", "2"), ("1", "x", "1"), ("2", "a", "1")],
                              initial="1")
        game = compute_invalid(automaton)
        self.assertEqual(game.move["1"], "a")
        self.assertEqual(game.level["1"], 1)

    def test_agrees_with_fixpoint(self):
        for automaton in random_automata(500):
            game = compute_invalid(automaton)
            self.assertEqual(game.invalid, naive_invalid_oracle(automaton), repr(automaton))
            self.assertLessEqual(game.visits, 2 * automaton.transition_count)
            self.assertLevels(automaton, game)

    def test_agrees_on_self_compositions(self):
        for automaton in random_automata(60):
            product = compose(automaton, automaton, full=True)
            self.assertEqual(compute_invalid(product).invalid, naive_invalid_oracle(product))


class CompatibilityTest(FixtureTestCase, TestCase):
    def test_running_example(self):
        table = compatibility(self.load_automaton('running_example'))
        self.assertEqual(table.compatible_pairs(), [("2", "3")])
        self.assertEqual(len(table.incompatible_pairs()), 5)
        self.assertEqual(table.to_json(), {'compatible_pairs': [["2", "3"]],
                                           'incompatible_count': 5})

    def test_levels_and_moves(self):
        table = compatibility(self.load_automaton('running_example'))
        self.assertEqual(table.move("1", "2"), "a")
        self.assertEqual(table.level("1", "2"), 1)
        self.assertIs(table.move("1", "4"), THETA)
        self.assertEqual(table.level("1", "4"), 2)
        self.assertIs(table.move("1", "3"), THETA)
        self.assertEqual(table.level("1", "3"), 3)
        self.assertEqual(table.level("2", "4"), 0)
        self.assertIsNone(table.move("2", "3"))

    def test_reflexive_and_symmetric(self):
        for name in ('running_example', 'compat_failure', 'induced_split_trap'):
            automaton = self.load_automaton(name)
            table = compatibility(automaton)
            for q in automaton.states:
                self.assertTrue(table.compatible(q, q))
                for q2 in automaton.states:
                    self.assertEqual(table.compatible(q, q2), table.compatible(q2, q))

    def test_compat_failure(self):
        table = compatibility(self.load_automaton('compat_failure'))
        self.assertEqual(table.compatible_pairs(), [("2", "3"), ("6", "7")])

    def test_pairwise_incompatible(self):
        self.assertEqual(compatibility(self.load_automaton('no_adg')).compatible_pairs(), [])
        for n in range(3, 9):
            self.assertEqual(compatibility(gen_sn(n)).compatible_pairs(), [], n)

    def test_not_transitive(self):
        with open(os.path.join(testdata_dir, 'nontransitive.sa'), 'rb') as f:
            automaton = SuspensionAutomaton.from_automaton(parse_automaton(f.read()))
        table = compatibility(automaton)
        self.assertTrue(table.compatible("1", "2"))
        self.assertTrue(table.compatible("2", "3"))
        self.assertFalse(table.compatible("1", "3"))
        self.assertFalse(table.is_compatible_set(automaton.states))
        self.assertTrue(table.is_compatible_set(["1", "2"]))

    def test_unknown_state(self):
        table = compatibility(self.load_automaton('running_example'))
        with self.assertRaises(UnknownStateError):
            table.compatible("1", "9")


class PairwiseDistinguisherTest(FixtureTestCase, TestCase):
    def setUp(self):
        self.automaton = self.load_automaton('running_example')

    def test_input_first(self):
        term = pairwise_distinguisher(self.automaton, "1", "2")
        self.assertEqual(print_ccs(term), "a.(x.0 + y.0)")

    def test_disjoint_outputs(self):
        term = pairwise_distinguisher(self.automaton, "2", "4")
        self.assertEqual(print_ccs(term), "x.0 + y.0")

    def test_compatible_pair(self):
        with self.assertRaises(CompatibleStatesError):
            pairwise_distinguisher(self.automaton, "2", "3")

    def test_every_fixture_pair(self):
        for name in sorted(FIXTURES):
            if name in TERM_FIXTURES:
                continue
            automaton = self.load_automaton(name)
            table = compatibility(automaton)
            for q, q2 in table.incompatible_pairs():
                term = pairwise_distinguisher(automaton, q, q2, table)
                self.assertTrue(is_deterministic(term))
                self.assertTrue(is_acyclic(associated_automaton(term, automaton.inputs)))
                self.assertTrue(is_test_case_for(term, automaton, [q, q2]))
                self.assertTrue(distinguishes(term, automaton, q, q2), (name, q, q2))
                self.assertTrue(distinguishes(term, automaton, q2, q), (name, q, q2))
