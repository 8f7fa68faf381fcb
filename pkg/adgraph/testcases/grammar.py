from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from adgraph.exceptions import CcsSyntaxError
from adgraph.testcases.terms import NIL, Prefix, Sum

# Prefix binds tighter than +, and + nests to the left. The nil constant
# shares its token with labels so that numerals can be labels too.
parser = Lark(
    r"""
    ?start:  sum
    ?sum:    sum "+" _unit -> plus
           | _unit
    _unit:   prefix | nil | "(" sum ")"
    prefix:  NAME "." _unit
    nil:     NAME

    NAME:    /[^\s.+()#]+/

    %import common.WS
    %ignore WS
    """,
    parser='lalr',
)


class NotNil(Exception):
    def __init__(self, token):
        super().__init__(str(token))
        self.token = token


@v_args(inline=True)
class TermBuilder(Transformer):
    def plus(self, left, right):
        return Sum(left, right)

    def prefix(self, label, body):
        return Prefix(str(label), body)

    def nil(self, token):
        if str(token) != "0":
            raise NotNil(token)
        return NIL


def parse_ccs(text):
    if isinstance(text, bytes):
        text = text.decode('utf-8')

    try:
        return TermBuilder().transform(parser.parse(text))
    except UnexpectedInput as e:
        line = e.line if (getattr(e, 'line', None) or -1) > 0 else None
        raise CcsSyntaxError("unexpected input", line, getattr(e, 'column', None))
    except VisitError as e:
        if isinstance(e.orig_exc, NotNil):
            token = e.orig_exc.token
            raise CcsSyntaxError("expected '0' or a prefix, got %s" % token,
                                 token.line, token.column)
        raise

def print_ccs(term):
    """
    Prints ``term`` with the fewest parentheses that parse back to it.
    """
    cache = {}

    def render(t):
        if t in cache:
            return cache[t]

        if isinstance(t, Prefix):
            body = render(t.body)
            if isinstance(t.body, Sum):
                body = "(%s)" % body
            text = "%s.%s" % (t.label, body)
        elif isinstance(t, Sum):
            right = render(t.right)
            if isinstance(t.right, Sum):
                right = "(%s)" % right
            text = "%s + %s" % (render(t.left), right)
        else:
            text = "0"

        cache[t] = text
        return text

    return render(term)
