"""
Datum files and element strings.

A datum file is JSON::

    {"group": {"kind": "dihedral", "n": 3},
     "base_genus": 0,
     "handles": [],
     "branches": [{"label": "t1", "order": 2, "element": "b"}, ...]}

Element grammar: "1", "a^k", "b", "a^k*b" (dihedral), "g^k" (cyclic) and
1-based image lists "[2,1,3]" (permutation).  Words such as "a^9" or
"b*a" are multiplied out to their normal form.
"""

import json
import re

from .datum import Branch, BranchDatum
from .errors import GroupError, ParseError
from .groups import make_group

__all__ = [
    "parse_element",
    "format_element",
    "parse_group",
    "parse_datum_file",
    "datum_to_dict",
    "serialize_datum",
    "load_json",
]

_POWER = re.compile(r"^([a-z])(?:\^(-?\d+))?$")


def parse_element(G, text):
    s = str(text).strip().replace(" ", "")
    if not s:
        raise ParseError("empty element string")
    if G.kind == "permutation" or s.startswith("["):
        if s == "1":
            return G.identity
        try:
            images = json.loads(s)
            perm = tuple(int(i) - 1 for i in images)
        except (ValueError, TypeError):
            raise ParseError(f"bad permutation image list {text!r}") from None
        if G.kind != "permutation":
            raise ParseError(f"{G.name()} elements are not image lists: {text!r}")
        try:
            return G._perms.index(perm)
        except ValueError:
            raise ParseError(f"{text!r} is not an element of {G.name()}") from None
    gens = {"cyclic": {"g": 1}, "dihedral": {"a": 1, "b": G.params if G.kind == "dihedral" else None}}
    names = gens.get(G.kind, {})
    out = G.identity
    for tok in s.split("*"):
        if tok == "1":
            continue
        m = _POWER.match(tok)
        if not m or m.group(1) not in names:
            raise ParseError(f"cannot parse element {text!r} in {G.name()}")
        g = names[m.group(1)]
        k = int(m.group(2)) if m.group(2) else 1
        out = G.mul(out, G.power(g, k))
    return out


def format_element(G, g):
    return G.label(g)


def parse_group(obj):
    if not isinstance(obj, dict):
        raise ParseError("group descriptor must be an object")
    try:
        return make_group(obj)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GroupError):
            raise ParseError(str(exc)) from exc
        raise ParseError(f"malformed group descriptor: {exc}") from exc


def load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def parse_datum_file(text):
    """JSON text -> BranchDatum (parsing does not imply validity)."""
    obj = load_json(text) if isinstance(text, str) else text
    if not isinstance(obj, dict) or "group" not in obj:
        raise ParseError("datum file must be an object with a 'group' entry")
    G = parse_group(obj["group"])
    base = obj.get("base_genus", 0)
    if not isinstance(base, int):
        raise ParseError("base_genus must be an integer")
    handles = tuple(parse_element(G, h) for h in obj.get("handles", []))
    branches = []
    for i, b in enumerate(obj.get("branches", [])):
        try:
            label = str(b.get("label", f"t{i + 1}"))
            elt = parse_element(G, b["element"])
            order = int(b["order"]) if "order" in b else G.order_of(elt)
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"branch {i}: malformed entry ({exc})") from exc
        branches.append(Branch(label, order, elt))
    return BranchDatum(G, base, handles, tuple(branches))


def datum_to_dict(d):
    G = d.group
    return {
        "group": G.descriptor(),
        "base_genus": d.base_genus,
        "handles": [G.label(h) for h in d.handles],
        "branches": [{"label": b.label, "order": b.order, "element": G.label(b.monodromy)}
                     for b in d.branches],
    }


def serialize_datum(d):
    return json.dumps(datum_to_dict(d), indent=2) + "\n"
