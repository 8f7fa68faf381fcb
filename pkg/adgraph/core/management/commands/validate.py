from adgraph.automata.formats import FORMATS, parse_automaton, serialize_automaton
from adgraph.automata.models import check_suspension, quiescence_complete
from adgraph.core.management.commands import AutomatonCommand
from adgraph.exceptions import BlockingStatesError


class Command(AutomatonCommand):
    help = "Checks that an automaton is a suspension automaton."

    def add_arguments(self, parser):
        self.add_path_argument(parser)
        parser.add_argument('--complete-quiescence', metavar='NAME',
                            help="add a NAME self-loop output to every blocking state "
                                 "and print the completed automaton")
        self.add_format_argument(parser, FORMATS)

    def run(self, *args, **options):
        automaton = parse_automaton(self.read_input(options['path'], options.get('stdin')))

        if options['complete_quiescence']:
            completed = quiescence_complete(automaton, options['complete_quiescence'])
            self.stdout.write(serialize_automaton(completed, options['format']).decode('utf-8'),
                              ending='')
            return

        check = check_suspension(automaton)
        if check.automaton is None:
            raise BlockingStatesError(check.blocking)

        self.stdout.write("%d states, %d transitions, %d inputs, %d outputs" % (
            len(automaton.states), automaton.transition_count,
            len(automaton.inputs), len(automaton.outputs)))
