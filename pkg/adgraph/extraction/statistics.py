"""
The full pipeline on one automaton, summarised as a row of the
computation statistics table.
"""

from collections import OrderedDict

from adgraph.extraction.retrieval import extract_report
from adgraph.games.compatibility import compatibility
from adgraph.splitting.builder import build_splitting_graph

COLUMNS = ('name', 'states', 'compatible', 'compatible_pct', 'nodes', 'depth',
           'missed', 'missed_pct')

HEADERS = ('file', 'states', 'compatible pairs', '%', 'splitting nodes',
           'ADG depth', 'not distinguished', '%')

def percentage(count, states):
    # Against the n(n-1)/2 unordered pairs of distinct states
    pairs = states * (states - 1) // 2
    return round(100.0 * count / pairs, 3) if pairs else 0.0

def pipeline(automaton, policy=None, obs_cap=None):
    table = compatibility(automaton)
    graph = build_splitting_graph(automaton, policy, table)
    return table, graph, extract_report(automaton, graph, table, obs_cap=obs_cap)

def statistics_row(name, automaton, policy=None, obs_cap=None):
    table, graph, report = pipeline(automaton, policy, obs_cap)
    states = len(automaton.states)
    compatible = len(table.compatible_pairs())

    return OrderedDict([
        ('name', name),
        ('states', states),
        ('compatible', compatible),
        ('compatible_pct', percentage(compatible, states)),
        ('nodes', len(graph)),
        ('depth', report.depth),
        ('missed', len(report.missed)),
        ('missed_pct', percentage(len(report.missed), states)),
    ])

def format_table(rows):
    """
    Fixed-width text rendering of ``rows``, headers first.
    """
    cells = [list(HEADERS)]
    cells.extend([str(row[column]) for column in COLUMNS] for row in rows)
    widths = [max(len(line[i]) for line in cells) for i in range(len(COLUMNS))]

    lines = []
    for line in cells:
        padded = [line[0].ljust(widths[0])]
        padded.extend(cell.rjust(width) for cell, width in zip(line[1:], widths[1:]))
        lines.append("  ".join(padded).rstrip())
    return "\n".join(lines) + "\n"
