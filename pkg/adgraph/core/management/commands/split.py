from adgraph.core.management.commands import AutomatonCommand
from adgraph.games.compatibility import compatibility
from adgraph.splitting.builder import build_splitting_graph


class Command(AutomatonCommand):
    help = "Builds a complete splitting graph; a summary line goes to stderr."

    def add_arguments(self, parser):
        self.add_path_argument(parser)
        self.add_format_argument(parser, ('json', 'dot'))
        self.add_policy_arguments(parser)

    def run(self, *args, **options):
        automaton = self.load_automaton(options['path'], options.get('stdin'))
        table = compatibility(automaton)
        graph = build_splitting_graph(automaton, self.policy(options), table)

        if options['format'] == 'dot':
            self.stdout.write(graph.to_dot(), ending='')
        else:
            self.write_json(graph.to_json())

        self.stderr.write("%d nodes, %d leaves" % (len(graph), len(graph.leaves)))
