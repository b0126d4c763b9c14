"""Preference documents (JSON) to :class:`PreferenceFamily`.

Example::

    {
      "preferences": {
        "a": {"kind": "pairs", "pairs": [["oc3", "oc2"]]},
        "b": {"kind": "selfish"}
      },
      "payoffs": {"oc1": {"a": 1, "b": 0}, "oc2": {"a": 3, "b": 1}}
    }

A pair ``[x, y]`` means the agent prefers ``y`` to ``x``.  Numbers are read
exactly (as fractions), never through binary floats.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from fractions import Fraction

from . import preferences as P
from .errors import MissingPayoff, ParseError, UnknownKind
from .relation import Relation, intern_id
from .strategy import PreferenceFamily

PAYOFF_KINDS = ("selfish", "benevolent", "selfish-benevolent", "selfish-malevolent")
SET_KINDS = {"set-min": "min", "set-max": "max", "set-interval": "interval"}
KINDS = ("pairs", *PAYOFF_KINDS, *SET_KINDS)


def _load(document) -> Mapping:
    if isinstance(document, Mapping):
        return document
    try:
        data = json.loads(document, parse_float=Fraction, parse_int=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("preference document must be a JSON object")
    return data


def _mapping(value, what: str) -> Mapping:
    if not isinstance(value, Mapping):
        raise ParseError(f"{what} must be an object")
    return value


def _number(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (int, float, Fraction, str)):
        raise ParseError(f"{where}: expected a number, got {value!r}")
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            raise ParseError(f"{where}: expected a number, got {value!r}") from None
    return value


def _payoff_table(doc: Mapping) -> P.PayoffTable:
    rows = _mapping(doc["payoffs"], '"payoffs"')
    clean = {}
    for oc, row in rows.items():
        row = _mapping(row, f'"payoffs.{oc}"')
        clean[oc] = {a: _number(v, f"payoffs.{oc}.{a}") for a, v in row.items()}
    return P.PayoffTable(clean)


def _set_table(doc: Mapping) -> P.SetPayoffTable:
    rows = _mapping(doc["set_payoffs"], '"set_payoffs"')
    clean = {}
    for oc, row in rows.items():
        row = _mapping(row, f'"set_payoffs.{oc}"')
        out = {}
        for a, vals in row.items():
            if not isinstance(vals, list) or not vals:
                raise ParseError(f"set_payoffs.{oc}.{a}: expected a non-empty list of numbers")
            out[a] = [_number(v, f"set_payoffs.{oc}.{a}") for v in vals]
        clean[oc] = out
    return P.SetPayoffTable(clean)


def _pairs(spec: Mapping, agent: str) -> Relation:
    pairs = spec.get("pairs")
    if not isinstance(pairs, list):
        raise ParseError(f'agent {agent}: "pairs" must be a list of [x, y] pairs')
    arcs = []
    for pair in pairs:
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(e, str) for e in pair)):
            raise ParseError(f"agent {agent}: bad pair {pair!r}, expected two outcome names")
        arcs.append((intern_id(pair[0]), intern_id(pair[1])))
    return Relation.from_pairs(arcs)


def parse_prefs(document) -> PreferenceFamily:
    """Build a preference family from JSON text or an already-decoded mapping.

    Raises:
        ParseError: malformed JSON or document shape.
        UnknownKind: a spec names an unsupported kind.
        MissingPayoff: a payoff kind is used without the table it needs, or
            the table has holes.
    """
    doc = _load(document)
    specs = _mapping(doc.get("preferences"), '"preferences"')
    table = set_table = None
    prefs = {}
    for agent, spec in specs.items():
        spec = _mapping(spec, f"preference of agent {agent}")
        kind = spec.get("kind")
        if kind not in KINDS:
            raise UnknownKind(f"agent {agent}: unknown preference kind {kind!r}")
        agent = intern_id(agent)
        if kind == "pairs":
            prefs[agent] = _pairs(spec, agent)
            continue
        if kind in PAYOFF_KINDS:
            if "payoffs" not in doc:
                raise MissingPayoff(f'agent {agent}: kind {kind!r} needs a "payoffs" table')
            if table is None:
                table = _payoff_table(doc)
            agents = spec.get("agents", table.agents)
            if kind == "selfish":
                prefs[agent] = P.selfish(table, agent)
            elif kind == "benevolent":
                prefs[agent] = P.benevolent(table, agents)
            elif kind == "selfish-benevolent":
                prefs[agent] = P.selfish_benevolent(table, agent, agents)
            else:
                prefs[agent] = P.selfish_malevolent(table, agent, agents)
            continue
        if "set_payoffs" not in doc:
            raise MissingPayoff(f'agent {agent}: kind {kind!r} needs a "set_payoffs" table')
        if set_table is None:
            set_table = _set_table(doc)
        prefs[agent] = P.set_order(set_table, agent, SET_KINDS[kind])
    return PreferenceFamily(prefs, table)
