"""
Reading and writing automata: the line-based ``.sa`` format, JSON and DOT.

A ``.sa`` file holds one directive per line::

    # running example
    inputs a
    outputs x y
    initial 1
    trans 1 a 3
"""

from lark import Lark
from lark.exceptions import UnexpectedInput

from adgraph.automata.models import Automaton
from adgraph.exceptions import (AutomatonSyntaxError, MissingDirectiveError,
                                NondeterminismError, UnknownReferenceError)
from adgraph.utils import dump_json, name_key, parse_state_name, state_name

(FORMAT_SA,
 FORMAT_JSON,
 FORMAT_DOT) = ('sa', 'json', 'dot')

FORMATS = (FORMAT_SA, FORMAT_JSON, FORMAT_DOT)

parser = Lark(
    r"""
    start:      _line*
    _line:      directive? _NL
    ?directive: inputs | outputs | states | initial | trans
    inputs:     "inputs" NAME*
    outputs:    "outputs" NAME*
    states:     "states" NAME*
    initial:    "initial" NAME
    trans:      "trans" NAME NAME NAME

    NAME:       /[^\s#]+/
    COMMENT:    /#[^\n]*/
    _NL:        /\r?\n/

    %import common.WS_INLINE
    %ignore WS_INLINE
    %ignore COMMENT
    """,
    parser='lalr',
    propagate_positions=True,
)

def _position(node):
    if node.children:
        return node.children[0].line, node.children[0].column
    return getattr(node.meta, 'line', None), getattr(node.meta, 'column', None)

def parse_automaton(text):
    """
    Parse ``.sa`` text (bytes or str) into an Automaton.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError:
            raise AutomatonSyntaxError("input is not valid UTF-8")

    try:
        tree = parser.parse(text + "\n")
    except UnexpectedInput as e:
        line = e.line if (getattr(e, 'line', None) or -1) > 0 else None
        raise AutomatonSyntaxError("unexpected input", line, getattr(e, 'column', None))

    directives = {}
    transitions = []
    for node in tree.children:
        if node.data == 'trans':
            transitions.append(node)
            continue

        if node.data in directives:
            line, column = _position(node)
            raise AutomatonSyntaxError("duplicate %s directive" % node.data, line, column)
        directives[node.data] = node

    if 'initial' not in directives:
        raise MissingDirectiveError("missing initial directive")

    inputs = [str(token) for token in directives['inputs'].children] if 'inputs' in directives else []
    outputs = [str(token) for token in directives['outputs'].children] if 'outputs' in directives else []
    initial = directives['initial'].children[0]

    declared = None
    if 'states' in directives:
        # An explicit states line lists every state of the automaton.
        declared = set(str(token) for token in directives['states'].children)

    def check_state(token):
        if declared is not None and str(token) not in declared:
            raise UnknownReferenceError("unknown state %s" % token, token.line, token.column)
        return str(token)

    check_state(initial)

    alphabet = set(inputs) | set(outputs)
    seen = set()
    triples = []
    for node in transitions:
        source, label, target = node.children
        check_state(source)
        check_state(target)
        if str(label) not in alphabet:
            raise UnknownReferenceError("unknown label %s" % label, label.line, label.column)
        if (str(source), str(label)) in seen:
            raise NondeterminismError(str(source), str(label), line=source.line)

        seen.add((str(source), str(label)))
        triples.append((parse_state_name(str(source)), str(label), parse_state_name(str(target))))

    # Product states written as "(a,b)" come back as tuples.
    states = [parse_state_name(name) for name in declared or ()]
    return Automaton(inputs=inputs, outputs=outputs, transitions=triples,
                     initial=parse_state_name(str(initial)), states=states)

def _names(names):
    return [state_name(name) for name in sorted(names, key=name_key)]

def automaton_sa(automaton):
    yield " ".join(["inputs"] + _names(automaton.inputs)) + "\n"
    yield " ".join(["outputs"] + _names(automaton.outputs)) + "\n"
    yield " ".join(["states"] + _names(automaton.states)) + "\n"
    yield "initial %s\n" % state_name(automaton.initial)
    for source, label, target in automaton.transitions:
        yield "trans %s %s %s\n" % (state_name(source), label, state_name(target))

def automaton_json(automaton):
    return {
        'states': _names(automaton.states),
        'inputs': _names(automaton.inputs),
        'outputs': _names(automaton.outputs),
        'initial': state_name(automaton.initial),
        'transitions': [{"from": state_name(source), "label": label, "to": state_name(target)}
                        for source, label, target in automaton.transitions],
    }

def _gvquote(s):
    return '"{}"'.format(str(s).replace('"', r'\"'))

def automaton_dot(automaton, name="automaton"):
    """
    Produce a graphviz dot file as an iterable of strings.
    """
    yield "digraph {} {{\n".format(_gvquote(name))
    yield "  rankdir=LR;\n"
    yield '  "__start" [style=invis];\n'
    for state in automaton.states:
        yield "  {} [shape=circle];\n".format(_gvquote(state_name(state)))
    yield '  "__start" -> {};\n'.format(_gvquote(state_name(automaton.initial)))
    for source, name, target in automaton.transitions:
        label = automaton.label(name)
        suffix = "?" if label.is_input else "!"
        yield "  {} -> {} [label={}];\n".format(_gvquote(state_name(source)),
                                               _gvquote(state_name(target)),
                                               _gvquote(str(label) + suffix))
    yield "}\n"

def serialize_automaton(automaton, format=FORMAT_SA):
    if format == FORMAT_SA:
        text = "".join(automaton_sa(automaton))
    elif format == FORMAT_JSON:
        text = dump_json(automaton_json(automaton), pretty=True) + "\n"
    elif format == FORMAT_DOT:
        text = "".join(automaton_dot(automaton))
    else:
        raise ValueError("unknown format %s" % format)

    return text.encode('utf-8')
