"""
    adgraph command-line front end

    Every command reads a ``.sa`` file (or ``-`` for standard input) and
    reports failures through CommandError with a stable exit status.
"""

import sys

from django.core.management.base import BaseCommand, CommandError

from adgraph.automata.formats import parse_automaton
from adgraph.automata.models import check_suspension
from adgraph.exceptions import (AdgraphError, BlockingStatesError, DomainError,
                                StrictSplitError)
from adgraph.splitting.builder import SplitPolicy
from adgraph.utils import dump_json

(EXIT_OK,
 EXIT_USAGE,
 EXIT_DOMAIN,
 EXIT_STRICT) = range(4)

def returncode(error):
    if isinstance(error, StrictSplitError):
        return EXIT_STRICT
    if isinstance(error, DomainError):
        return EXIT_DOMAIN
    return EXIT_USAGE


class AutomatonCommand(BaseCommand):
    requires_system_checks = []
    stealth_options = ('stdin',)

    def add_path_argument(self, parser, nargs=None):
        kwargs = {'nargs': nargs} if nargs else {}
        parser.add_argument('path', help="a .sa file, or - for standard input", **kwargs)

    def add_format_argument(self, parser, choices, default=None):
        parser.add_argument('--format', choices=choices, default=default or choices[0],
                            help="output format (default: %(default)s)")

    def add_policy_arguments(self, parser):
        parser.add_argument('--strict-injective', action='store_true',
                            help="only make injective splits; fail when none exists")
        parser.add_argument('--prefer-input', action='store_true',
                            help="try input splits before output splits")
        parser.add_argument('--prefer-injective', action='store_true',
                            help="try injective splits first, then fall back to the others")

    def policy(self, options):
        return SplitPolicy(prefer_input=options['prefer_input'],
                           strict_injective=options['strict_injective'],
                           prefer_injective=options['prefer_injective'])

    def read_input(self, path, stdin=None):
        if path == '-':
            stream = stdin or sys.stdin
            return getattr(stream, 'buffer', stream).read()

        try:
            with open(path, 'rb') as f:
                return f.read()
        except OSError as e:
            raise CommandError("cannot read %s: %s" % (path, e.strerror), returncode=EXIT_USAGE)

    def load_automaton(self, path, stdin=None):
        """
        Parses ``path`` and insists on a suspension automaton.
        """
        automaton = parse_automaton(self.read_input(path, stdin))
        check = check_suspension(automaton)
        if check.automaton is None:
            raise BlockingStatesError(check.blocking)
        return check.automaton

    def write_json(self, data):
        self.stdout.write(dump_json(data, pretty=True))

    def handle(self, *args, **options):
        try:
            self.run(*args, **options)
        except AdgraphError as e:
            raise CommandError(e.message, returncode=returncode(e))

    def run(self, *args, **options):
        raise NotImplementedError('subclasses of AutomatonCommand must provide a run() method')
