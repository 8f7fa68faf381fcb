from adgraph.core.management.commands import AutomatonCommand
from adgraph.games.compatibility import compatibility


class Command(AutomatonCommand):
    help = "Prints the compatible pairs of distinct states."

    def add_arguments(self, parser):
        self.add_path_argument(parser)
        self.add_format_argument(parser, ('json',))

    def run(self, *args, **options):
        automaton = self.load_automaton(options['path'], options.get('stdin'))
        self.write_json(compatibility(automaton).to_json())
