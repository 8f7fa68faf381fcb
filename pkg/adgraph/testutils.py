import os

from django.conf import settings

from adgraph.automata.formats import parse_automaton
from adgraph.automata.models import SuspensionAutomaton
from adgraph.generators.generators import gen_random

def fixture_path(filename):
    return os.path.join(settings.ADG_FIXTURES_DIR, filename)

def random_corpus(count, states=6, inputs=2, outputs=2, density=0.5, first_seed=0):
    """
    ``count`` seeded random suspension automata, seeds counting up from
    ``first_seed``.
    """
    for seed in range(first_seed, first_seed + count):
        yield gen_random(states, inputs, outputs, density, seed)


class FixtureTestCase(object):
    def read_fixture(self, filename):
        with open(fixture_path(filename), 'rb') as f:
            return f.read()

    def load_automaton(self, name):
        return SuspensionAutomaton.from_automaton(parse_automaton(self.read_fixture(name + ".sa")))
