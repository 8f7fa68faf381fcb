from unittest import TestCase

from adgraph.automata.formats import serialize_automaton
from adgraph.automata.models import SuspensionAutomaton
from adgraph.exceptions import InfeasibleParametersError, UnknownFixtureError
from adgraph.games.compatibility import compatibility
from adgraph.generators.generators import (DUMMY_INPUT, FIXTURES, TERM_FIXTURES, fixture,
                                           fixture_filename, fixture_text, gen_random,
                                           gen_random_automaton, gen_sn, input_names,
                                           output_names)
from adgraph.generators.prng import SplitMix64
from adgraph.testcases.terms import Prefix
from adgraph.testutils import FixtureTestCase


class FixtureTest(FixtureTestCase, TestCase):
    def test_shipped_files(self):
        for name in FIXTURES:
            self.assertEqual(fixture_text(name), self.read_fixture(fixture_filename(name)), name)

    def test_sizes(self):
        sizes = {
            'running_example': (4, 7),
            'no_adg': (3, 9),
            'induced_split_trap': (8, 12),
            'compat_failure': (8, 18),
            'nondisjunct': (3, 4),
        }
        for name, (states, transitions) in sizes.items():
            automaton = fixture(name)
            self.assertIsInstance(automaton, SuspensionAutomaton)
            self.assertEqual(len(automaton.states), states, name)
            self.assertEqual(automaton.transition_count, transitions, name)
            self.assertEqual(automaton.initial, "1")

    def test_term_fixture(self):
        self.assertEqual(TERM_FIXTURES, ('ccs_example',))
        self.assertEqual(fixture_filename('ccs_example'), "ccs_example.ccs")
        term = fixture('ccs_example')
        self.assertIsInstance(term, Prefix)
        self.assertEqual(term.label, "a")

    def test_compatible_pairs(self):
        self.assertEqual(compatibility(fixture('compat_failure')).compatible_pairs(),
                         [("2", "3"), ("6", "7")])
        self.assertEqual(compatibility(fixture('running_example')).compatible_pairs(),
                         [("2", "3")])

    def test_unknown(self):
        with self.assertRaises(UnknownFixtureError) as cm:
            fixture('nonexistent')
        self.assertEqual(cm.exception.message, "unknown fixture nonexistent")


class ExponentialFamilyTest(TestCase):
    def test_s3(self):
        self.assertEqual(serialize_automaton(gen_sn(3)),
                         b"inputs a0\noutputs 1 2 3\nstates 1 2 3\ninitial 1\n"
                         b"trans 1 2 2\ntrans 2 1 3\ntrans 3 3 1\n")

    def test_all_pairs_incompatible(self):
        for n in range(3, 8):
            automaton = gen_sn(n)
            self.assertEqual(len(automaton.states), n)
            self.assertEqual(automaton.inputs, {DUMMY_INPUT})
            self.assertEqual(compatibility(automaton).compatible_pairs(), [])

    def test_dummy_input_unused(self):
        automaton = gen_sn(5)
        self.assertFalse(any(label == DUMMY_INPUT for _, label, _ in automaton.transitions))

    def test_too_small(self):
        for n in (0, 1, 2):
            with self.assertRaises(InfeasibleParametersError):
                gen_sn(n)


class RandomTest(TestCase):
    def test_prng(self):
        self.assertEqual(SplitMix64(0).next(), 0xE220A8397B1DCDAF)
        prng = SplitMix64(42)
        for _ in range(100):
            value = prng.random()
            self.assertGreaterEqual(value, 0.0)
            self.assertLess(value, 1.0)
        with self.assertRaises(ValueError):
            prng.below(0)

    def test_names(self):
        self.assertEqual(input_names(3), ["a", "b", "c"])
        self.assertEqual(input_names(0), [])
        self.assertEqual(input_names(27)[-1], "i27")
        self.assertEqual(output_names(2), ["x", "y"])
        self.assertEqual(output_names(7)[0], "o1")

    def test_deterministic(self):
        first = gen_random(7, 2, 3, 0.4, seed=11)
        self.assertEqual(first, gen_random(7, 2, 3, 0.4, seed=11))
        self.assertNotEqual(first, gen_random(7, 2, 3, 0.4, seed=12))
        self.assertEqual(gen_random_automaton(7, 2, 3, 0.4, seed=11),
                         gen_random_automaton(7, 2, 3, 0.4, seed=11))

    def test_never_blocking(self):
        for seed in range(1000):
            automaton = gen_random(5, 2, 2, density=0.2, seed=seed)
            self.assertEqual(automaton.blocking_states, [])

    def test_blocking_allowed(self):
        automaton = gen_random_automaton(6, 1, 1, density=0.0, seed=0)
        self.assertEqual(automaton.transition_count, 0)
        self.assertEqual(len(automaton.blocking_states), 6)

    def test_no_inputs(self):
        automaton = gen_random(6, 0, 2, density=0.5, seed=3)
        self.assertEqual(automaton.inputs, {DUMMY_INPUT})
        self.assertFalse(any(label == DUMMY_INPUT for _, label, _ in automaton.transitions))

    def test_density(self):
        states, inputs, outputs, samples = 8, 3, 3, 200
        input_transitions = total = 0
        for seed in range(samples):
            automaton = gen_random(states, inputs, outputs, 0.5, seed)
            total += automaton.transition_count
            input_transitions += sum(1 for _, label, _ in automaton.transitions
                                     if label in automaton.inputs)

        self.assertAlmostEqual(input_transitions / (samples * states * inputs), 0.5, delta=0.05)
        self.assertAlmostEqual(total / (samples * states * (inputs + outputs)), 0.5, delta=0.05)

    def test_parameters(self):
        for args in [(0, 1, 1, 0.5), (3, -1, 1, 0.5), (3, 1, 0, 0.5), (3, 1, 1, 1.5),
                     (3, 1, 1, -0.1)]:
            with self.assertRaises(InfeasibleParametersError):
                gen_random(*args)
