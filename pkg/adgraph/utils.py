import json
import re

_DIGITS = re.compile(r'\d+$')

def name_key(name):
    """
    Sort key for state and label names. All-digit names sort numerically
    and before every other name; product states sort by their components.
    """
    if isinstance(name, tuple):
        return (2, 0, tuple(name_key(part) for part in name))

    name = str(name)
    if _DIGITS.match(name):
        return (0, int(name), name)

    return (1, 0, name)

def state_name(state):
    if isinstance(state, tuple):
        return "(%s)" % ",".join(state_name(part) for part in state)

    return str(state)

def _split_top_level(body):
    parts, depth, start = [], 0, 0
    for i, char in enumerate(body):
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
            if depth < 0:
                return None
        elif char == ',' and depth == 0:
            parts.append(body[start:i])
            start = i + 1

    if depth != 0:
        return None

    parts.append(body[start:])
    return parts

def parse_state_name(name):
    """
    Inverse of state_name: ``"(1,(2,3))"`` becomes ``('1', ('2', '3'))``.
    Names that are not a well-formed parenthesized list come back unchanged.
    """
    if len(name) < 2 or name[0] != '(' or name[-1] != ')':
        return name

    parts = _split_top_level(name[1:-1])
    if parts is None or len(parts) < 2 or not all(parts):
        return name

    return tuple(parse_state_name(part) for part in parts)

def dump_json(response, pretty=False):
    if pretty:
        return json.dumps(response, indent=2, sort_keys=True, ensure_ascii=False)
    else:
        return json.dumps(response, sort_keys=True, ensure_ascii=False)
