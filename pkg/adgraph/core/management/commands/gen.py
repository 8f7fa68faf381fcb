from django.core.management.base import CommandError

from adgraph.automata.formats import FORMATS, serialize_automaton
from adgraph.core.management.commands import EXIT_USAGE, AutomatonCommand
from adgraph.generators.generators import (FIXTURES, TERM_FIXTURES, fixture, fixture_text,
                                           gen_random, gen_sn)

(KIND_SN,
 KIND_FIXTURE,
 KIND_RANDOM) = ('sn', 'fixture', 'random')


class Command(AutomatonCommand):
    help = "Writes a generated automaton in .sa format to stdout."

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=(KIND_SN, KIND_FIXTURE, KIND_RANDOM))
        parser.add_argument('param', nargs='?',
                            help="n for sn, the fixture name for fixture (one of %s)" %
                                 ", ".join(sorted(FIXTURES)))
        parser.add_argument('--states', type=int, default=6)
        parser.add_argument('--inputs', type=int, default=2)
        parser.add_argument('--outputs', type=int, default=2)
        parser.add_argument('--density', type=float, default=0.5)
        parser.add_argument('--seed', type=int, default=0)
        self.add_format_argument(parser, FORMATS)

    def run(self, *args, **options):
        kind, param = options['kind'], options['param']

        if kind == KIND_FIXTURE:
            if param is None:
                raise CommandError("gen fixture needs a fixture name", returncode=EXIT_USAGE)
            if param in TERM_FIXTURES or options['format'] == 'sa':
                self.stdout.write(fixture_text(param).decode('utf-8'), ending='')
                return
            automaton = fixture(param)
        elif kind == KIND_SN:
            try:
                n = int(param)
            except (TypeError, ValueError):
                raise CommandError("gen sn needs an integer n", returncode=EXIT_USAGE)
            automaton = gen_sn(n)
        else:
            automaton = gen_random(options['states'], options['inputs'], options['outputs'],
                                   options['density'], options['seed'])

        self.stdout.write(serialize_automaton(automaton, options['format']).decode('utf-8'),
                          ending='')
