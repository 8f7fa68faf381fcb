import itertools
from unittest import TestCase

from adgraph.automata import formats
from adgraph.automata.composition import compose
from adgraph.automata.graphs import is_acyclic, longest_path
from adgraph.automata.models import (Automaton, StateSet, SuspensionAutomaton,
                                     check_suspension, quiescence_complete)
from adgraph.exceptions import (AlphabetError, AlphabetMismatchError, AutomatonSyntaxError,
                                BlockingStatesError, CyclicAutomatonError,
                                MissingDirectiveError, NondeterminismError,
                                UnknownReferenceError, UnknownStateError)
from adgraph.generators.generators import gen_random_automaton
from adgraph.testcases.grammar import parse_ccs
from adgraph.testcases.semantics import associated_automaton
from adgraph.testutils import FixtureTestCase, random_corpus
from adgraph.utils import parse_state_name, state_name

def blocking_automaton():
    return Automaton(inputs=["a"], outputs=["x"],
                     transitions=[("1", "x", "2"), ("2", "a", "1")], initial="1")


class StateSetTest(TestCase):
    def test_canonical_order(self):
        states = StateSet(["10", "b", "2", "a"])
        self.assertEqual(list(states), ["2", "10", "a", "b"])
        self.assertEqual(states[0], "2")
        self.assertEqual(str(StateSet(["3", "1", "2"])), "{1,2,3}")

    def test_operators_keep_type(self):
        states = StateSet(["1", "2", "3"])
        self.assertIsInstance(states & {"1"}, StateSet)
        self.assertIsInstance(states | {"4"}, StateSet)
        self.assertIsInstance(states - {"1"}, StateSet)
        self.assertEqual(states, frozenset(["1", "2", "3"]))

    def test_pairs(self):
        self.assertEqual(list(StateSet(["3", "1", "2"]).pairs()),
                         [("1", "2"), ("1", "3"), ("2", "3")])

    def test_product_state_names(self):
        self.assertEqual(str(StateSet([("1", "2"), ("1", "1")])), "{(1,1),(1,2)}")


class AutomatonTest(FixtureTestCase, TestCase):
    def setUp(self):
        self.automaton = self.load_automaton('running_example')

    def test_sizes(self):
        self.assertEqual(len(self.automaton.states), 4)
        self.assertEqual(self.automaton.transition_count, 7)
        self.assertEqual(self.automaton.initial, "1")

    def test_out_and_in(self):
        self.assertEqual(self.automaton.outs("1"), {"x", "y"})
        self.assertEqual(self.automaton.outs("2"), {"x"})
        self.assertEqual(self.automaton.ins("3"), frozenset())
        self.assertEqual(self.automaton.outs(["2", "4"]), {"x", "y"})
        self.assertEqual(self.automaton.ins(["1", "2"]), {"a"})

    def test_after(self):
        self.assertEqual(self.automaton.after(["1", "2"], "a"), {"3", "4"})
        self.assertEqual(self.automaton.after(["1"], ["a", "x"]), {"4"})
        self.assertEqual(self.automaton.after(["3"], "y"), StateSet())
        self.assertEqual(self.automaton.after(["1", "2", "3", "4"]), {"1", "2", "3", "4"})

    def test_before_and_enabled(self):
        self.assertEqual(self.automaton.before(["4"], "x"), {"2", "3"})
        self.assertEqual(self.automaton.before(["4"], ["a", "x"]), {"1"})
        self.assertEqual(self.automaton.enabled(self.automaton.states, "a"), {"1", "2"})
        self.assertEqual(self.automaton.enabled(self.automaton.states, ["x", "y"]), {"1", "2", "3"})

    def test_target(self):
        self.assertEqual(self.automaton.target("4", "y"), "2")
        self.assertIsNone(self.automaton.target("4", "x"))
        self.assertEqual(self.automaton.incoming("4"), [("2", "a"), ("2", "x"), ("3", "x")])

    def test_traces(self):
        self.assertEqual(self.automaton.traces("3", 2), {(), ("x",), ("x", "y")})
        self.assertIn(("a", "x", "y"), self.automaton.traces(length=3))

    def test_unknown_state(self):
        with self.assertRaises(UnknownStateError):
            self.automaton.enabled_labels("5")

    def test_reinitialized(self):
        other = self.automaton.reinitialized("3")
        self.assertEqual(other.initial, "3")
        self.assertEqual(other.transitions, self.automaton.transitions)
        self.assertNotEqual(other, self.automaton)

    def test_labels(self):
        self.assertTrue(self.automaton.label("a").is_input)
        self.assertFalse(self.automaton.label("x").is_input)
        self.assertEqual(str(self.automaton.label("y")), "y")
        with self.assertRaises(UnknownReferenceError):
            self.automaton.label("q")

    def test_nondeterminism(self):
        with self.assertRaises(NondeterminismError):
            Automaton(inputs=["a"], outputs=["x"],
                      transitions=[("1", "x", "1"), ("1", "x", "2")], initial="1")

    def test_alphabets(self):
        with self.assertRaises(AlphabetError):
            Automaton(inputs=[], outputs=["x"], transitions=[], initial="1")
        with self.assertRaises(AlphabetError):
            Automaton(inputs=["a"], outputs=[], transitions=[], initial="1")
        with self.assertRaises(AlphabetError):
            Automaton(inputs=["a", "x"], outputs=["x"], transitions=[], initial="1")
        with self.assertRaises(UnknownReferenceError):
            Automaton(inputs=["a"], outputs=["x"], transitions=[("1", "q", "1")], initial="1")


class SuspensionTest(TestCase):
    def test_blocking_states(self):
        automaton = blocking_automaton()
        check = check_suspension(automaton)
        self.assertIsNone(check.automaton)
        self.assertEqual(check.blocking, ["2"])

        with self.assertRaises(BlockingStatesError) as cm:
            SuspensionAutomaton.from_automaton(automaton)
        self.assertEqual(cm.exception.message, "blocking states: 2")

    def test_quiescence_completion(self):
        completed = quiescence_complete(blocking_automaton(), "delta")
        self.assertIsInstance(completed, SuspensionAutomaton)
        self.assertEqual(completed.outputs, {"x", "delta"})
        self.assertEqual(completed.target("2", "delta"), "2")
        self.assertIsNone(completed.target("1", "delta"))

    def test_quiescence_name_collision(self):
        with self.assertRaises(AlphabetError):
            quiescence_complete(blocking_automaton(), "a")


class CompositionTest(FixtureTestCase, TestCase):
    def setUp(self):
        self.automaton = self.load_automaton('running_example')

    def test_reachable_part(self):
        product = compose(self.automaton, self.automaton)
        self.assertEqual(product.initial, ("1", "1"))
        self.assertEqual(product.states, {("1", "1"), ("2", "2"), ("3", "3"), ("4", "4")})

    def test_full_product(self):
        product = compose(self.automaton, self.automaton, full=True)
        self.assertEqual(len(product.states), 16)
        self.assertEqual(product.target(("1", "2"), "a"), ("3", "4"))
        self.assertEqual(product.target(("1", "2"), "x"), ("1", "4"))
        self.assertIsNone(product.target(("1", "2"), "y"))
        self.assertEqual(product.components, (self.automaton, self.automaton))

    def test_alphabet_mismatch(self):
        with self.assertRaises(AlphabetMismatchError):
            compose(self.automaton, self.load_automaton('no_adg'))


class GraphsTest(FixtureTestCase, TestCase):
    def test_cyclic(self):
        automaton = self.load_automaton('running_example')
        self.assertFalse(is_acyclic(automaton))
        with self.assertRaises(CyclicAutomatonError):
            longest_path(automaton)

    def test_acyclic(self):
        automaton = associated_automaton(parse_ccs("a.(x.0 + y.0)"), {"a"})
        self.assertTrue(is_acyclic(automaton))
        self.assertEqual(longest_path(automaton), 2)


class ParseAutomatonTest(FixtureTestCase, TestCase):
    def test_running_example(self):
        automaton = formats.parse_automaton(self.read_fixture('running_example.sa'))
        self.assertEqual(automaton.inputs, {"a"})
        self.assertEqual(automaton.outputs, {"x", "y"})
        self.assertEqual(automaton.transition_count, 7)

    def test_comments_and_implicit_states(self):
        automaton = formats.parse_automaton(
            "# two states\n"
            "inputs a   # one input\n"
            "outputs x\n"
            "\n"
            "initial 1\n"
            "trans 1 x 2\n"
            "trans 2 a 1")
        self.assertEqual(automaton.states, {"1", "2"})

    def test_syntax_error_position(self):
        with self.assertRaises(AutomatonSyntaxError) as cm:
            formats.parse_automaton("inputs a\noutputs x\ninitial 1\ntrans 1 x\n")
        self.assertEqual(cm.exception.line, 4)
        self.assertTrue(cm.exception.message.startswith("line 4, column"))

    def test_duplicate_directive(self):
        with self.assertRaises(AutomatonSyntaxError) as cm:
            formats.parse_automaton("inputs a\ninputs b\noutputs x\ninitial 1\n")
        self.assertEqual(cm.exception.line, 2)

    def test_missing_initial(self):
        with self.assertRaises(MissingDirectiveError):
            formats.parse_automaton("inputs a\noutputs x\ntrans 1 x 1\n")

    def test_states_directive_is_exhaustive(self):
        with self.assertRaises(UnknownReferenceError) as cm:
            formats.parse_automaton("inputs a\noutputs x\nstates 1 2\ninitial 1\ntrans 1 x 3\n")
        self.assertEqual(cm.exception.line, 5)

    def test_unknown_label(self):
        with self.assertRaises(UnknownReferenceError):
            formats.parse_automaton("inputs a\noutputs x\ninitial 1\ntrans 1 q 1\n")

    def test_nondeterminism(self):
        with self.assertRaises(NondeterminismError) as cm:
            formats.parse_automaton("inputs a\noutputs x\ninitial 1\ntrans 1 x 1\ntrans 1 x 2\n")
        self.assertIn("line 5", cm.exception.message)

    def test_empty_alphabet(self):
        with self.assertRaises(AlphabetError):
            formats.parse_automaton("outputs x\ninitial 1\ntrans 1 x 1\n")

    def test_sa_writer(self):
        automaton = formats.parse_automaton(self.read_fixture('running_example.sa'))
        self.assertEqual(formats.serialize_automaton(automaton),
                         self.read_fixture('running_example.sa'))

    def test_json_writer(self):
        data = formats.automaton_json(self.load_automaton('running_example'))
        self.assertEqual(data['states'], ["1", "2", "3", "4"])
        self.assertEqual(data['initial'], "1")
        self.assertEqual(data['transitions'][0], {"from": "1", "label": "a", "to": "3"})

    def test_dot_writer(self):
        dot = formats.serialize_automaton(self.load_automaton('running_example'),
                                          formats.FORMAT_DOT).decode('utf-8')
        self.assertTrue(dot.startswith('digraph "automaton" {'))
        self.assertIn('"1" -> "3" [label="a?"];', dot)
        self.assertIn('"4" -> "2" [label="y!"];', dot)

    def test_product_round_trip(self):
        automaton = self.load_automaton('running_example')
        for product_automaton in (compose(automaton, automaton),
                                  compose(automaton, automaton, full=True),
                                  compose(compose(automaton, automaton), automaton)):
            text = formats.serialize_automaton(product_automaton)
            self.assertEqual(formats.parse_automaton(text), product_automaton)

    def test_random_round_trip(self):
        for automaton in random_corpus(20, states=5):
            self.assertEqual(formats.parse_automaton(formats.serialize_automaton(automaton)),
                             automaton)

        pairs = zip(random_corpus(10, states=4), random_corpus(10, states=4, first_seed=100))
        for first, second in pairs:
            product_automaton = compose(first, second, full=True)
            text = formats.serialize_automaton(product_automaton)
            self.assertEqual(formats.parse_automaton(text), product_automaton)


class StateNameTest(TestCase):
    def test_inverse(self):
        for state in ["1", "q0", ("1", "2"), (("1", "2"), "3"), ("a", ("b", ("c", "d")))]:
            self.assertEqual(parse_state_name(state_name(state)), state)

    def test_plain_names(self):
        for name in ["(", "()", "(1)", "(1,", "(1,)", "(1,2", "1,2)", "(1))(2", "x(1,2)"]:
            self.assertEqual(parse_state_name(name), name)


def words(alphabet, length):
    for n in range(length + 1):
        yield from itertools.product(sorted(alphabet), repeat=n)


class AutomatonPropertiesTest(TestCase):
    """
    Set operations and composition checked on seeded random automata.
    """
    def corpus(self, count=10, first_seed=0):
        for seed in range(first_seed, first_seed + count):
            yield gen_random_automaton(4, 1, 2, density=0.6, seed=seed)

    def test_after_before_duality(self):
        for automaton in self.corpus():
            for sigma in words(automaton.alphabet, 6):
                after = {q: automaton.after([q], sigma) for q in automaton.states}
                before = {q: automaton.before([q], sigma) for q in automaton.states}
                for q, q2 in itertools.product(automaton.states, repeat=2):
                    self.assertEqual(q2 in after[q], q in before[q2], (q, q2, sigma))

    def test_enabled(self):
        for automaton in self.corpus():
            subsets = [automaton.states, StateSet(automaton.states[:2]), StateSet()]
            for sigma in words(automaton.alphabet, 4):
                for states in subsets:
                    enabled = automaton.enabled(states, sigma)
                    self.assertLessEqual(enabled, states)
                    self.assertEqual(not automaton.after(states, sigma), not enabled)

    def test_pointwise_lifting(self):
        for automaton in self.corpus():
            states = StateSet(automaton.states[1:])
            for sigma in words(automaton.alphabet, 4):
                self.assertEqual(automaton.after(states, sigma),
                                 StateSet().union(*(automaton.after([q], sigma) for q in states)))
                self.assertEqual(automaton.before(states, sigma),
                                 StateSet().union(*(automaton.before([q], sigma) for q in states)))
                self.assertEqual(automaton.enabled(states, sigma),
                                 {q for q in states if automaton.enabled([q], sigma)})

    def test_composition_traces(self):
        pairs = zip(self.corpus(), self.corpus(first_seed=100))
        for first, second in pairs:
            product_automaton = compose(first, second)
            self.assertEqual(product_automaton.traces(length=6),
                             first.traces(length=6) & second.traces(length=6))
