"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .relation import CyclePath


class SeqGameError(Exception):
    """Base class for every error raised by seqgame."""


class ParseError(SeqGameError):
    """Malformed game, profile, or preference input.

    ``line`` and ``column`` are 1-based and may be ``None`` when the error is
    not tied to a position (for instance a bad JSON shape).
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class EmptyNode(ParseError):
    """A parenthesised form names an agent but has no children."""


class ChoiceCountError(ParseError):
    """A profile node carries zero or several ``*`` choice marks."""


class UnknownKind(ParseError):
    """A preference spec names a kind this toolkit does not know."""


class MissingPayoff(SeqGameError):
    """A payoff table has no entry for a queried (outcome, agent) pair."""


class CyclicRelation(SeqGameError):
    """A relation that was required to be acyclic has a cycle."""

    def __init__(self, cycle: CyclePath):
        self.cycle = cycle
        super().__init__(f"relation is cyclic: {cycle}")


class CyclicPreference(SeqGameError):
    """An agent's preference is cyclic on the outcomes of a game."""

    def __init__(self, agent: str, cycle: CyclePath):
        self.agent = agent
        self.cycle = cycle
        super().__init__(f"preference of agent {agent} is cyclic: {cycle}")


class EmptyListError(SeqGameError, ValueError):
    pass


class EmptyCycle(SeqGameError, ValueError):
    pass


class TooLarge(SeqGameError):
    """Profile enumeration would exceed the configured bound."""

    def __init__(self, count: int, bound: int):
        self.count = count
        self.bound = bound
        super().__init__(f"game has {count} strategy profiles, bound is {bound}")


class GameMismatch(SeqGameError):
    """A profile's underlying game differs from the game it was checked against."""
