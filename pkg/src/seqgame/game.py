"""Sequential game trees.

A game is either a :class:`Leaf` holding an outcome, or a :class:`Node` owned by
an agent with a first child and a (possibly empty) tuple of further children.
Splitting the children into ``first`` and ``rest`` makes "at least one child"
part of the shape.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from typing import Union

from .relation import intern_id

AgentId = str


@dataclass(frozen=True)
class Leaf:
    outcome: str

    def __post_init__(self):
        object.__setattr__(self, "outcome", intern_id(self.outcome))


@dataclass(frozen=True)
class Node:
    owner: str
    first: Game
    rest: tuple[Game, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "owner", intern_id(self.owner))
        object.__setattr__(self, "rest", tuple(self.rest))

    @property
    def children(self) -> tuple[Game, ...]:
        return (self.first, *self.rest)


Game = Union[Leaf, Node]


def node(owner: str, *children: Game) -> Node:
    """Build a node from one or more children: ``node("a", g0, g1, g2)``."""
    if not children:
        raise ValueError("a game node needs at least one child")
    return Node(owner, children[0], children[1:])


def used_outcomes(g: Game) -> list[str]:
    """Leaf outcomes from left to right, duplicates kept."""
    out: list[str] = []
    stack = [g]
    while stack:
        cur = stack.pop()
        if isinstance(cur, Leaf):
            out.append(cur.outcome)
        else:
            stack.extend(reversed(cur.children))
    return out


def child_count(g: Game) -> int:
    return 0 if isinstance(g, Leaf) else 1 + len(g.rest)


def iter_nodes(g: Game) -> Iterator[Game]:
    """Every subtree of ``g`` in preorder (a node before its children, children left to right)."""
    stack = [g]
    while stack:
        cur = stack.pop()
        yield cur
        if isinstance(cur, Node):
            stack.extend(reversed(cur.children))


def owners(g: Game) -> list[str]:
    """Agents owning at least one node of ``g``, in preorder of first appearance."""
    return list(dict.fromkeys(n.owner for n in iter_nodes(g) if isinstance(n, Node)))


def profile_count(g: Game) -> int:
    """Number of strategy profiles over ``g``: the product of node arities."""
    count = 1
    for n in iter_nodes(g):
        if isinstance(n, Node):
            count *= 1 + len(n.rest)
    return count
