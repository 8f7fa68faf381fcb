from unittest import TestCase

from adgraph.exceptions import (CcsSyntaxError, NondeterministicTermError, NotATestCaseError,
                                ObservationCapExceeded, TestCaseShapeError)
from adgraph.games.compatibility import compatibility
from adgraph.testcases.grammar import parse_ccs, print_ccs
from adgraph.testcases.semantics import (CLAUSE_INPUT, CLAUSE_OUTPUT, STATE_INPUT, STATE_LEAF,
                                         STATE_OUTPUT, adg_check, associated_automaton, depth,
                                         distinguishes, is_deterministic, is_test_case_for, obs,
                                         pruned_obs, term_to_dot, term_to_json)
from adgraph.testcases.terms import NIL, Prefix, Sum, prefix, sum_of
from adgraph.testutils import FixtureTestCase

RUNNING_ADG = "x.(x.0 + y.a.(x.0 + y.0)) + y.a.(x.0 + y.0)"
COMPAT_FAILURE_ADG = "x.a.b.(z.0 + t.0) + y.a.b.(z.0 + t.0) + z.0 + t.0"


class TermTest(TestCase):
    def test_hash_consing(self):
        self.assertIs(prefix("x"), Prefix("x", NIL))
        self.assertIs(parse_ccs("a.(x.0 + y.0)"), prefix("a", Sum(prefix("x"), prefix("y"))))

    def test_sum_of(self):
        self.assertIs(sum_of([]), NIL)
        term = sum_of([prefix("x"), prefix("y"), prefix("z")])
        self.assertIs(term, Sum(Sum(prefix("x"), prefix("y")), prefix("z")))

    def test_derivatives(self):
        term = parse_ccs("x.0 + y.a.0")
        self.assertEqual(term.derivatives(), (("x", NIL), ("y", prefix("a"))))
        self.assertTrue(NIL.is_leaf())

    def test_subterms_are_shared(self):
        term = parse_ccs("a.(x.0 + y.0)")
        self.assertEqual(len(term.subterms()), 5)
        shared = parse_ccs("x.a.(x.0 + y.0) + y.a.(x.0 + y.0)")
        self.assertEqual(len(shared.subterms()), 8)


class GrammarTest(TestCase):
    def test_nil(self):
        self.assertIs(parse_ccs("0"), NIL)
        self.assertIs(parse_ccs(" ( 0 ) "), NIL)

    def test_prefix_binds_tighter(self):
        self.assertIs(parse_ccs("a.x.0 + y.0"), Sum(prefix("a", prefix("x")), prefix("y")))

    def test_sum_nests_left(self):
        self.assertIs(parse_ccs("x.0 + y.0 + z.0"),
                      Sum(Sum(prefix("x"), prefix("y")), prefix("z")))

    def test_print_minimal_parentheses(self):
        for text in ("0", "a.(x.0 + y.0)", "x.0 + y.a.(x.0 + y.0)", RUNNING_ADG,
                     COMPAT_FAILURE_ADG):
            self.assertEqual(print_ccs(parse_ccs(text)), text)
        self.assertEqual(print_ccs(parse_ccs("x.0 + (y.0 + z.0)")), "x.0 + (y.0 + z.0)")
        self.assertEqual(print_ccs(parse_ccs("(x.0 + y.0) + z.0")), "x.0 + y.0 + z.0")
        self.assertEqual(str(parse_ccs("a.(x.0)")), "a.x.0")

    def test_numeral_labels(self):
        self.assertIs(parse_ccs("1.0 + 2.0"), Sum(prefix("1"), prefix("2")))

    def test_syntax_errors(self):
        for text in ("", "a.(x.0", "x.0 +", "a.b", "x.0 y.0"):
            with self.assertRaises(CcsSyntaxError):
                parse_ccs(text)

    def test_not_nil_position(self):
        with self.assertRaises(CcsSyntaxError) as cm:
            parse_ccs("a.\n b")
        self.assertEqual(cm.exception.line, 2)


class DeterminismTest(TestCase):
    def test_deterministic(self):
        self.assertTrue(is_deterministic(parse_ccs("x.0 + y.0")))
        self.assertTrue(is_deterministic(parse_ccs("x.0 + x.0")))
        self.assertFalse(is_deterministic(parse_ccs("x.0 + x.y.0")))


class AssociatedAutomatonTest(TestCase):
    def test_example(self):
        automaton = associated_automaton(parse_ccs("a.(x.0 + y.0)"), {"a"})
        self.assertEqual(len(automaton.states), 5)
        self.assertEqual(automaton.transition_count, 5)
        self.assertEqual(automaton.inputs, {"a"})
        self.assertEqual(automaton.outputs, {"x", "y"})
        self.assertEqual(automaton.state_kind(automaton.initial), STATE_INPUT)
        self.assertIs(automaton.terms[automaton.initial], parse_ccs("a.(x.0 + y.0)"))

        kinds = {automaton.state_kind(q) for q in automaton.states}
        self.assertEqual(kinds, {STATE_INPUT, STATE_OUTPUT, STATE_LEAF})

    def test_nil(self):
        automaton = associated_automaton(NIL)
        self.assertEqual(len(automaton.states), 1)
        self.assertEqual(automaton.transition_count, 0)

    def test_input_mixed_with_output(self):
        with self.assertRaises(TestCaseShapeError):
            associated_automaton(parse_ccs("a.0 + x.0"), {"a"})

    def test_nondeterministic(self):
        with self.assertRaises(NondeterministicTermError):
            associated_automaton(parse_ccs("x.0 + x.y.0"))

    def test_depth(self):
        self.assertEqual(depth(NIL), 0)
        self.assertEqual(depth(parse_ccs("a.(x.0 + y.0)")), 2)
        self.assertEqual(depth(parse_ccs(RUNNING_ADG)), 4)

    def test_exports(self):
        term = parse_ccs("a.(x.0 + y.0)")
        data = term_to_json(term, {"a"})
        self.assertEqual(data['initial'], "0")
        self.assertEqual(len(data['nodes']), 5)
        self.assertEqual(data['nodes'][0], {'id': "0", 'kind': STATE_INPUT})
        self.assertTrue(term_to_dot(term, {"a"}).startswith('digraph "testcase" {'))


class ObservationTest(FixtureTestCase, TestCase):
    def test_obs(self):
        self.assertEqual(obs(parse_ccs("a.(x.0 + y.0)")), {("a", "x"), ("a", "y")})
        self.assertEqual(obs(NIL), {()})
        self.assertEqual(obs(parse_ccs("x.0 + y.a.(x.0 + y.0)")),
                         {("x",), ("y", "a", "x"), ("y", "a", "y")})

    def test_obs_cap(self):
        with self.assertRaises(ObservationCapExceeded):
            obs(parse_ccs("a.(x.0 + y.0)"), cap=1)

    def test_pruned_obs(self):
        automaton = self.load_automaton('running_example')
        term = parse_ccs("a.(x.0 + y.0)")
        self.assertEqual(pruned_obs(term, automaton, "1"), {("a", "x")})
        self.assertEqual(pruned_obs(term, automaton, "2"), {("a", "y")})

    def test_pruning_law(self):
        automaton = self.load_automaton('running_example')
        term = parse_ccs(RUNNING_ADG)
        for q in automaton.states:
            self.assertLessEqual(pruned_obs(term, automaton, q), obs(term))


class TestCaseForTest(FixtureTestCase, TestCase):
    def setUp(self):
        self.automaton = self.load_automaton('running_example')
        self.table = compatibility(self.automaton)

    def test_test_case_for(self):
        term = parse_ccs("a.(x.0 + y.0)")
        self.assertTrue(is_test_case_for(term, self.automaton, ["1", "2"]))

    def test_input_clause(self):
        verdict = is_test_case_for(parse_ccs("a.(x.0 + y.0)"), self.automaton, ["3"])
        self.assertFalse(verdict)
        self.assertEqual(verdict.clause, CLAUSE_INPUT)
        self.assertEqual(verdict.state, "3")

    def test_output_clause(self):
        verdict = is_test_case_for(parse_ccs("x.0"), self.automaton, ["1"])
        self.assertFalse(verdict)
        self.assertEqual(verdict.clause, CLAUSE_OUTPUT)

    def test_distinguishes(self):
        term = parse_ccs("a.(x.0 + y.0)")
        self.assertTrue(distinguishes(term, self.automaton, "1", "2"))
        self.assertTrue(distinguishes(term, self.automaton, "2", "1"))
        self.assertFalse(distinguishes(NIL, self.automaton, "1", "2"))

    def test_distinguishes_needs_test_case(self):
        with self.assertRaises(NotATestCaseError):
            distinguishes(parse_ccs("x.0"), self.automaton, "1", "2")

    def test_walk_agrees_with_observations(self):
        term = parse_ccs(RUNNING_ADG)
        for q, q2 in self.table.incompatible_pairs():
            disjoint = not (pruned_obs(term, self.automaton, q) &
                            pruned_obs(term, self.automaton, q2))
            self.assertEqual(distinguishes(term, self.automaton, q, q2), disjoint)

    def test_running_adg(self):
        check = adg_check(parse_ccs(RUNNING_ADG), self.automaton, self.automaton.states, self.table)
        self.assertEqual(check.missed, [])
        self.assertEqual(len(check.distinguished), 5)
        self.assertTrue(check.is_adg)

    def test_nil_misses(self):
        check = adg_check(NIL, self.automaton, ["1", "2"], self.table)
        self.assertEqual(check.missed, [("1", "2")])

    def test_not_a_test_case(self):
        with self.assertRaises(NotATestCaseError):
            adg_check(parse_ccs("x.0"), self.automaton, self.automaton.states, self.table)

    def test_hand_written_term_on_compat_failure(self):
        automaton = self.load_automaton('compat_failure')
        table = compatibility(automaton)
        check = adg_check(parse_ccs(COMPAT_FAILURE_ADG), automaton, automaton.states, table)
        self.assertEqual(check.missed, [])
