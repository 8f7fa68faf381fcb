from django.conf import settings

from adgraph.core.management.commands import AutomatonCommand
from adgraph.extraction.oracle import ORACLE_FOUND, ORACLE_NONE, adg_exists_oracle
from adgraph.extraction.statistics import pipeline
from adgraph.testcases.semantics import term_to_dot


class Command(AutomatonCommand):
    help = "Retrieves an adaptive distinguishing test case and reports on it."

    def add_arguments(self, parser):
        self.add_path_argument(parser)
        self.add_format_argument(parser, ('json', 'ccs', 'dot'))
        self.add_policy_arguments(parser)
        parser.add_argument('--obs-cap', type=int, default=settings.ADG_OBS_CAP,
                            help="observation cap for leaf sizes (default: %(default)s)")
        parser.add_argument('--oracle', action='store_true',
                            help="also search exhaustively for an adaptive distinguishing "
                                 "test case (at most %d states)" % settings.ADG_ORACLE_MAX_STATES)

    def run(self, *args, **options):
        automaton = self.load_automaton(options['path'], options.get('stdin'))
        table, graph, report = pipeline(automaton, self.policy(options), options['obs_cap'])

        oracle = None
        if options['oracle']:
            oracle = adg_exists_oracle(automaton, table=table)

        if options['format'] == 'ccs':
            self.stdout.write(str(report.term))
        elif options['format'] == 'dot':
            self.stdout.write(term_to_dot(report.term, automaton.inputs), ending='')
        else:
            data = report.to_json()
            if oracle is not None:
                data['oracle'] = oracle.to_json()
            self.write_json(data)

        if report.missed:
            self.stderr.write("warning: %d of %d incompatible pairs not distinguished" %
                              (len(report.missed), report.incompatible_pairs))
            if oracle is not None and oracle.verdict == ORACLE_NONE:
                self.stderr.write("oracle: no adaptive distinguishing test case exists")
            elif oracle is not None and oracle.verdict == ORACLE_FOUND:
                self.stderr.write("oracle: an adaptive distinguishing test case exists: %s" %
                                  oracle.term)
            elif oracle is not None:
                self.stderr.write("oracle: inconclusive within %d moves" %
                                  settings.ADG_ORACLE_DEPTH)
