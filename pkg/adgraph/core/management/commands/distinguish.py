from adgraph.core.management.commands import AutomatonCommand
from adgraph.games.compatibility import pairwise_distinguisher
from adgraph.testcases.semantics import term_to_dot, term_to_json
from adgraph.utils import parse_state_name


class Command(AutomatonCommand):
    help = "Prints a test case distinguishing two incompatible states."

    def add_arguments(self, parser):
        self.add_path_argument(parser)
        parser.add_argument('state')
        parser.add_argument('other')
        self.add_format_argument(parser, ('ccs', 'json', 'dot'))

    def run(self, *args, **options):
        automaton = self.load_automaton(options['path'], options.get('stdin'))
        term = pairwise_distinguisher(automaton, parse_state_name(options['state']),
                                      parse_state_name(options['other']))

        if options['format'] == 'json':
            self.write_json(term_to_json(term, automaton.inputs))
        elif options['format'] == 'dot':
            self.stdout.write(term_to_dot(term, automaton.inputs), ending='')
        else:
            self.stdout.write(str(term))
