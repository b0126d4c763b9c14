"""Preference relations derived from payoff data.

Payoffs are kept as :class:`fractions.Fraction` so ties compare exactly.
Every constructor returns a rule-based :class:`~seqgame.relation.Relation`
where ``holds(x, y)`` means the agent prefers outcome ``y`` to outcome ``x``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from numbers import Rational
from typing import Literal

from .errors import MissingPayoff
from .relation import Relation, intern_id


def _exact(value) -> Fraction:
    if isinstance(value, bool):
        raise TypeError(f"payoff must be a number, got {value!r}")
    if isinstance(value, (Rational, str)):
        return Fraction(value)
    if isinstance(value, float):
        # Go through repr so 0.1 stays 1/10 rather than its binary expansion.
        return Fraction(repr(value))
    return Fraction(str(value))


class PayoffTable:
    """Real-valued payoffs per (outcome, agent).

    ``rows`` maps each outcome to a mapping from agent to payoff.  Every
    outcome must give a payoff to every agent that appears anywhere in the
    table.
    """

    def __init__(self, rows: Mapping[str, Mapping[str, object]]):
        self.rows = {
            intern_id(oc): {intern_id(a): _exact(v) for a, v in row.items()}
            for oc, row in rows.items()
        }
        self.agents = tuple(dict.fromkeys(a for row in self.rows.values() for a in row))
        for oc, row in self.rows.items():
            missing = [a for a in self.agents if a not in row]
            if missing:
                raise MissingPayoff(f"outcome {oc} has no payoff for agent(s) {', '.join(missing)}")

    @classmethod
    def from_vectors(cls, agents: Sequence[str], vectors: Mapping[str, Sequence]) -> PayoffTable:
        """``from_vectors(["a", "b"], {"x": (1, 0)})`` style construction."""
        return cls({oc: dict(zip(agents, vec, strict=True)) for oc, vec in vectors.items()})

    @property
    def outcomes(self) -> tuple[str, ...]:
        return tuple(self.rows)

    def payoff(self, outcome: str, agent: str) -> Fraction:
        try:
            return self.rows[outcome][agent]
        except KeyError:
            raise MissingPayoff(f"no payoff for outcome {outcome!r} and agent {agent!r}") from None

    def vector(self, outcome: str, agents: Iterable[str]) -> tuple[Fraction, ...]:
        return tuple(self.payoff(outcome, a) for a in agents)


class SetPayoffTable:
    """Payoffs that are non-empty finite sets of reals."""

    def __init__(self, rows: Mapping[str, Mapping[str, Iterable]]):
        self.rows = {}
        for oc, row in rows.items():
            out = {}
            for a, values in row.items():
                vals = frozenset(_exact(v) for v in values)
                if not vals:
                    raise ValueError(f"empty payoff set for outcome {oc!r}, agent {a!r}")
                out[intern_id(a)] = vals
            self.rows[intern_id(oc)] = out

    def payoff(self, outcome: str, agent: str) -> frozenset[Fraction]:
        try:
            return self.rows[outcome][agent]
        except KeyError:
            raise MissingPayoff(f"no payoff set for outcome {outcome!r} and agent {agent!r}") from None


def _pareto_better(table: PayoffTable, agents: Sequence[str], x: str, y: str) -> bool:
    px, py = table.vector(x, agents), table.vector(y, agents)
    return all(b >= a for a, b in zip(px, py)) and any(b > a for a, b in zip(px, py))


def selfish(table: PayoffTable, a: str) -> Relation:
    return Relation(lambda x, y: table.payoff(y, a) > table.payoff(x, a), table.outcomes)


def benevolent(table: PayoffTable, agents: Sequence[str]) -> Relation:
    """Pareto improvement: nobody worse off and somebody strictly better off."""
    agents = tuple(agents)
    return Relation(lambda x, y: _pareto_better(table, agents, x, y), table.outcomes)


def selfish_benevolent(table: PayoffTable, a: str, agents: Sequence[str]) -> Relation:
    own, pareto = selfish(table, a), benevolent(table, agents)
    return Relation(lambda x, y: own.holds(x, y) or pareto.holds(x, y), table.outcomes)


def selfish_malevolent(table: PayoffTable, a: str, agents: Sequence[str]) -> Relation:
    """Own payoff first; on a tie, prefer outcomes that leave the others worse off.

    "Others" are ``agents`` without ``a``.
    """
    others = tuple(b for b in agents if b != a)

    def holds(x, y):
        mine_x, mine_y = table.payoff(x, a), table.payoff(y, a)
        if mine_y != mine_x:
            return mine_y > mine_x
        # y hurts the others in the Pareto sense: x is a Pareto improvement over y.
        return _pareto_better(table, others, y, x)

    return Relation(holds, table.outcomes)


SetKind = Literal["min", "max", "interval"]


def set_order(table: SetPayoffTable, a: str, kind: SetKind) -> Relation:
    if kind == "min":
        return Relation(lambda x, y: min(table.payoff(y, a)) > min(table.payoff(x, a)), tuple(table.rows))
    if kind == "max":
        return Relation(lambda x, y: max(table.payoff(y, a)) > max(table.payoff(x, a)), tuple(table.rows))
    if kind == "interval":
        def holds(x, y):
            lo_x, hi_x = min(table.payoff(x, a)), max(table.payoff(x, a))
            lo_y, hi_y = min(table.payoff(y, a)), max(table.payoff(y, a))
            return lo_y >= lo_x and hi_y >= hi_x and (lo_y > lo_x or hi_y > hi_x)

        return Relation(holds, tuple(table.rows))
    raise ValueError(f"unknown set order kind {kind!r}")
