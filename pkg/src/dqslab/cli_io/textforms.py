"""Text forms for graphs: family descriptors, shorthands and graph6.

Grammar accepted by :func:`resolve_graph`::

    expr   := term ('+' term)*          disjoint union
    term   := [count '*'] atom          ``2*K2`` or ``2K2``
    atom   := kind '(' ints ')'         family descriptor, e.g. ``lollipop(11,6)``
            | complement '(' expr ')' | line_graph '(' expr ')' | join '(' expr ',' expr ')'
            | K<n> | C<n> | P<n> | E<n> | F<k> | S<n>
            | g6:<graph6> | <graph6>
"""
from __future__ import annotations

import re

from dqslab import families as F
from dqslab.cli_io.graph6 import decode_graph6
from dqslab.graph_core import Graph

SHORTHANDS = {
    "K": F.complete,
    "C": F.cycle,
    "P": F.path,
    "E": F.empty,
    "F": F.friendship,
    "S": F.star,
}
_SHORT = re.compile(r"^([KCPEFS])(\d+)$")
_COUNT = re.compile(r"^(\d+)\s*\*?\s*(?=[A-Za-z(])")
_CALL = re.compile(r"^([a-z_]+)\((.*)\)$", re.S)
_OPERATORS = ("complement", "line_graph", "join")


class TextFormError(ValueError):
    pass


def split_top(text: str, sep: str) -> list[str]:
    """Split on ``sep`` outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise TextFormError(f"unbalanced ')' in {text!r}")
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise TextFormError(f"unbalanced '(' in {text!r}")
    out.append("".join(cur))
    return out


def parse_family_spec(text: str) -> F.FamilySpec:
    """``kind(p1,p2,...)`` with non-negative integer parameters."""
    mt = _CALL.match(text.strip())
    if not mt:
        raise TextFormError(f"not a family descriptor: {text!r}")
    kind, args = mt.groups()
    try:
        params = tuple(int(a) for a in args.split(",")) if args.strip() else ()
    except ValueError:
        raise TextFormError(f"family parameters must be integers: {text!r}") from None
    return F.FamilySpec(kind, params)


def _atom(text: str) -> Graph:
    if text.startswith("g6:"):
        return decode_graph6(text[3:])
    mt = _SHORT.match(text)
    if mt:
        return SHORTHANDS[mt.group(1)](int(mt.group(2)))
    mt = _CALL.match(text)
    if mt:
        kind, args = mt.groups()
        if kind in _OPERATORS:
            parts = split_top(args, ",")
            if kind == "complement" and len(parts) == 1:
                return F.complement(resolve_graph(parts[0]))
            if kind == "line_graph" and len(parts) == 1:
                return F.line_graph(resolve_graph(parts[0]))
            if kind == "join" and len(parts) == 2:
                return F.join(resolve_graph(parts[0]), resolve_graph(parts[1]))
            raise TextFormError(f"wrong number of arguments in {text!r}")
        return F.build(parse_family_spec(text))
    # anything else must be graph6; digits, '(' and '+' never occur there
    return decode_graph6(text)


def resolve_graph(text: str) -> Graph:
    """Build a graph from any accepted text form (see module docstring)."""
    text = text.strip()
    if not text:
        raise TextFormError("empty graph expression")
    terms = split_top(text, "+")
    graphs = []
    for term in terms:
        term = term.strip()
        mt = _COUNT.match(term)
        r = 1
        if mt and not _SHORT.match(term):
            r = int(mt.group(1))
            term = term[mt.end():].strip()
        graphs.append(F.copies(_atom(term), r))
    return graphs[0] if len(graphs) == 1 else F.disjoint_union(graphs)


def parse_params(text: str) -> dict:
    """``G=K4,r=1`` style assignment lists; graph values are resolved, integers kept."""
    out = {}
    for item in split_top(text, ","):
        if not item.strip():
            continue
        if "=" not in item:
            raise TextFormError(f"expected key=value, got {item!r}")
        key, val = (s.strip() for s in item.split("=", 1))
        out[key] = int(val) if val.isdigit() else resolve_graph(val)
    return out
