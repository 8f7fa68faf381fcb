import os

from django.conf import settings

from adgraph.core.management.commands import AutomatonCommand
from adgraph.extraction.statistics import format_table, statistics_row


class Command(AutomatonCommand):
    help = "Prints the computation statistics table for one or more automata."

    def add_arguments(self, parser):
        self.add_path_argument(parser, nargs='+')
        self.add_format_argument(parser, ('text', 'json'))
        self.add_policy_arguments(parser)
        parser.add_argument('--obs-cap', type=int, default=settings.ADG_OBS_CAP)

    def run(self, *args, **options):
        policy = self.policy(options)
        rows = []
        for path in options['path']:
            automaton = self.load_automaton(path, options.get('stdin'))
            name = "-" if path == "-" else os.path.basename(path)
            rows.append(statistics_row(name, automaton, policy, options['obs_cap']))

        if options['format'] == 'json':
            self.write_json(rows)
        else:
            self.stdout.write(format_table(rows), ending='')
