from io import BytesIO, StringIO
import json

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from adgraph.automata.composition import compose
from adgraph.automata.formats import serialize_automaton
from adgraph.core.management.commands import EXIT_DOMAIN, EXIT_STRICT, EXIT_USAGE
from adgraph.testutils import FixtureTestCase, fixture_path

BLOCKING = b"inputs a\noutputs x\nstates 1 2\ninitial 1\ntrans 1 x 2\n"


class CommandTestCase(FixtureTestCase, SimpleTestCase):
    def call(self, *args, **kwargs):
        stdout, stderr = StringIO(), StringIO()
        call_command(*args, stdout=stdout, stderr=stderr, **kwargs)
        return stdout.getvalue(), stderr.getvalue()

    def assertExit(self, returncode, *args, **kwargs):
        with self.assertRaises(CommandError) as cm:
            self.call(*args, **kwargs)
        self.assertEqual(cm.exception.returncode, returncode)
        return cm.exception


class ValidateTest(CommandTestCase):
    def test_summary(self):
        stdout, _ = self.call('validate', fixture_path('running_example.sa'))
        self.assertEqual(stdout, "4 states, 7 transitions, 1 inputs, 2 outputs\n")

    def test_stdin(self):
        stdout, _ = self.call('validate', '-', stdin=BytesIO(self.read_fixture('no_adg.sa')))
        self.assertEqual(stdout, "3 states, 9 transitions, 2 inputs, 2 outputs\n")

    def test_blocking(self):
        error = self.assertExit(EXIT_DOMAIN, 'validate', '-', stdin=BytesIO(BLOCKING))
        self.assertEqual(str(error), "blocking states: 2")

    def test_complete_quiescence(self):
        stdout, _ = self.call('validate', '-', '--complete-quiescence', 'delta',
                              stdin=BytesIO(BLOCKING))
        self.assertIn("outputs delta x\n", stdout)
        self.assertIn("trans 2 delta 2\n", stdout)

    def test_syntax_error(self):
        self.assertExit(EXIT_USAGE, 'validate', '-', stdin=BytesIO(b"inputs a\nbogus 1\n"))

    def test_missing_file(self):
        error = self.assertExit(EXIT_USAGE, 'validate', fixture_path('missing.sa'))
        self.assertTrue(str(error).startswith("cannot read "))


class CompatTest(CommandTestCase):
    def test_compat_failure(self):
        stdout, _ = self.call('compat', fixture_path('compat_failure.sa'))
        self.assertEqual(json.loads(stdout), {
            'compatible_pairs': [["2", "3"], ["6", "7"]],
            'incompatible_count': 26,
        })

    def test_blocking(self):
        self.assertExit(EXIT_DOMAIN, 'compat', '-', stdin=BytesIO(BLOCKING))


class SplitTest(CommandTestCase):
    def test_running_example(self):
        stdout, stderr = self.call('split', fixture_path('running_example.sa'))
        data = json.loads(stdout)
        self.assertEqual(len(data['nodes']), 8)
        self.assertEqual(data['nodes'][0], ["1", "2", "3", "4"])
        self.assertEqual(data['witnesses'][0], "x.0 + y.0")
        self.assertEqual(stderr, "8 nodes, 4 leaves\n")

    def test_dot(self):
        stdout, _ = self.call('split', fixture_path('running_example.sa'), '--format', 'dot')
        self.assertTrue(stdout.startswith("digraph splitting {\n"))
        self.assertTrue(stdout.endswith("}\n"))

    def test_strict(self):
        error = self.assertExit(EXIT_STRICT, 'split', fixture_path('compat_failure.sa'),
                                '--strict-injective')
        self.assertEqual(str(error), "no injective split of {2,3,4}")

    def test_prefer_input(self):
        stdout, stderr = self.call('split', fixture_path('running_example.sa'), '--prefer-input')
        self.assertEqual(stderr, "8 nodes, 4 leaves\n")

    def test_prefer_injective(self):
        stdout, stderr = self.call('split', fixture_path('compat_failure.sa'), '--prefer-injective')
        self.assertRegex(stderr, r"^\d+ nodes, \d+ leaves\n$")
        self.assertTrue(stdout)


class AdgTest(CommandTestCase):
    def test_ccs(self):
        stdout, stderr = self.call('adg', fixture_path('running_example.sa'), '--format', 'ccs')
        self.assertEqual(stdout, "x.(x.0 + y.a.(x.0 + y.0)) + y.a.(x.0 + y.0)\n")
        self.assertEqual(stderr, "")

    def test_json(self):
        stdout, _ = self.call('adg', fixture_path('running_example.sa'))
        data = json.loads(stdout)
        self.assertEqual(data['depth'], 4)
        self.assertEqual(data['missed'], [])
        self.assertEqual(data['leaf_sizes'], [1, 1, 2, 1, 1])
        self.assertNotIn('oracle', data)

    def test_dot(self):
        stdout, _ = self.call('adg', fixture_path('running_example.sa'), '--format', 'dot')
        self.assertTrue(stdout.startswith('digraph "testcase" {\n'))

    def test_no_adg_oracle(self):
        stdout, stderr = self.call('adg', fixture_path('no_adg.sa'), '--oracle')
        self.assertEqual(json.loads(stdout)['oracle']['verdict'], 'none')
        self.assertTrue(stderr.startswith("warning: "))
        self.assertIn("oracle: no adaptive distinguishing test case exists\n", stderr)

    def test_compat_failure_oracle(self):
        _, stderr = self.call('adg', fixture_path('compat_failure.sa'), '--oracle')
        self.assertIn("warning: 1 of 26 incompatible pairs not distinguished\n", stderr)
        self.assertIn("oracle: an adaptive distinguishing test case exists: ", stderr)

    def test_strict(self):
        self.assertExit(EXIT_STRICT, 'adg', fixture_path('no_adg.sa'), '--strict-injective')

    def test_obs_cap(self):
        stdout, _ = self.call('adg', fixture_path('running_example.sa'), '--obs-cap', '2')
        self.assertIsNone(json.loads(stdout)['leaf_sizes'])


class DistinguishTest(CommandTestCase):
    def test_ccs(self):
        stdout, _ = self.call('distinguish', fixture_path('running_example.sa'), '1', '2')
        self.assertEqual(stdout, "a.(x.0 + y.0)\n")

    def test_json(self):
        stdout, _ = self.call('distinguish', fixture_path('running_example.sa'), '2', '4',
                              '--format', 'json')
        kinds = [node['kind'] for node in json.loads(stdout)['nodes']]
        self.assertEqual(len(kinds), 4)

    def test_compatible(self):
        error = self.assertExit(EXIT_DOMAIN, 'distinguish', fixture_path('running_example.sa'),
                                '2', '3')
        self.assertEqual(str(error), "states 2 and 3 are compatible")

    def test_unknown_state(self):
        self.assertExit(EXIT_USAGE, 'distinguish', fixture_path('running_example.sa'), '1', '9')

    def test_product_states(self):
        automaton = self.load_automaton('running_example')
        text = serialize_automaton(compose(automaton, automaton))
        stdout, _ = self.call('distinguish', '-', '(1,1)', '(2,2)', stdin=BytesIO(text))
        self.assertEqual(stdout, "a.(x.0 + y.0)\n")


class GenTest(CommandTestCase):
    def test_sn(self):
        stdout, _ = self.call('gen', 'sn', '3')
        self.assertEqual(stdout, "inputs a0\noutputs 1 2 3\nstates 1 2 3\ninitial 1\n"
                                 "trans 1 2 2\ntrans 2 1 3\ntrans 3 3 1\n")

    def test_sn_errors(self):
        self.assertExit(EXIT_USAGE, 'gen', 'sn', 'three')
        self.assertExit(EXIT_USAGE, 'gen', 'sn', '2')

    def test_fixture(self):
        stdout, _ = self.call('gen', 'fixture', 'running_example')
        self.assertEqual(stdout.encode('utf-8'), self.read_fixture('running_example.sa'))
        stdout, _ = self.call('gen', 'fixture', 'ccs_example')
        self.assertEqual(stdout, "a.(x.0 + y.0)\n")

    def test_fixture_json(self):
        stdout, _ = self.call('gen', 'fixture', 'nondisjunct', '--format', 'json')
        self.assertEqual(json.loads(stdout)['initial'], "1")

    def test_unknown_fixture(self):
        error = self.assertExit(EXIT_USAGE, 'gen', 'fixture', 'bogus')
        self.assertEqual(str(error), "unknown fixture bogus")
        self.assertExit(EXIT_USAGE, 'gen', 'fixture')

    def test_random(self):
        args = ('gen', 'random', '--states', '5', '--seed', '7')
        stdout, _ = self.call(*args)
        self.assertEqual(stdout, self.call(*args)[0])
        self.assertIn("states 1 2 3 4 5\n", stdout)
        self.assertNotEqual(stdout, self.call('gen', 'random', '--states', '5', '--seed', '8')[0])

    def test_random_infeasible(self):
        self.assertExit(EXIT_USAGE, 'gen', 'random', '--density', '2')


class StatsTest(CommandTestCase):
    def test_text(self):
        stdout, _ = self.call('stats', fixture_path('running_example.sa'),
                              fixture_path('nondisjunct.sa'))
        lines = stdout.splitlines()
        self.assertEqual(len(lines), 3)
        self.assertEqual(lines[1].split(),
                         ['running_example.sa', '4', '1', '16.667', '8', '4', '0', '0.0'])
        self.assertEqual(lines[2].split()[0], 'nondisjunct.sa')

    def test_json(self):
        stdout, _ = self.call('stats', fixture_path('running_example.sa'), '--format', 'json')
        self.assertEqual(json.loads(stdout), [{
            'name': 'running_example.sa',
            'states': 4,
            'compatible': 1,
            'compatible_pct': 16.667,
            'nodes': 8,
            'depth': 4,
            'missed': 0,
            'missed_pct': 0.0,
        }])

    def test_stdin(self):
        stdout, _ = self.call('stats', '-', '--format', 'json',
                              stdin=BytesIO(self.read_fixture('running_example.sa')))
        self.assertEqual(json.loads(stdout)[0]['name'], '-')
