"""Strategy profiles, convertibility, and equilibrium predicates.

A strategy profile is a game tree in which every node marks one chosen
child.  :class:`ProfileNode` stores the children as ``left``, ``chosen`` and
``right`` so the choice is structural.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Union

from .game import Game, Leaf, Node
from .relation import Relation, intern_id


@dataclass(frozen=True)
class ProfileLeaf:
    outcome: str

    def __post_init__(self):
        object.__setattr__(self, "outcome", intern_id(self.outcome))


@dataclass(frozen=True)
class ProfileNode:
    owner: str
    left: tuple[Profile, ...]
    chosen: Profile
    right: tuple[Profile, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "owner", intern_id(self.owner))
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))

    @property
    def children(self) -> tuple[Profile, ...]:
        return (*self.left, self.chosen, *self.right)

    @property
    def choice_index(self) -> int:
        return len(self.left)


Profile = Union[ProfileLeaf, ProfileNode]


def choose(owner: str, children: Iterable[Profile], index: int) -> ProfileNode:
    """Build a node from its full child list and the index of the chosen child."""
    kids = tuple(children)
    if not 0 <= index < len(kids):
        raise IndexError(f"choice {index} out of range for {len(kids)} children")
    return ProfileNode(owner, kids[:index], kids[index], kids[index + 1:])


class PreferenceFamily:
    """Per-agent outcome preferences.

    Agents without an entry get the empty relation, so they are happy with
    every profile.  ``agents`` lists the agents given explicitly, in the
    order they were supplied.
    """

    def __init__(self, prefs: Mapping[str, Relation] | None = None, payoffs=None):
        self._prefs = {intern_id(a): r for a, r in (prefs or {}).items()}
        self.payoffs = payoffs
        self._empty = Relation.empty()

    @property
    def agents(self) -> tuple[str, ...]:
        return tuple(self._prefs)

    def prefs(self, agent: str) -> Relation:
        return self._prefs.get(agent, self._empty)

    __getitem__ = prefs

    def items(self):
        return self._prefs.items()

    def replace(self, agent: str, rel: Relation) -> PreferenceFamily:
        new = dict(self._prefs)
        new[intern_id(agent)] = rel
        return PreferenceFamily(new, self.payoffs)

    def __repr__(self) -> str:
        return f"PreferenceFamily({self._prefs!r})"


def underlying_game(s: Profile) -> Game:
    """Forget every choice of ``s``."""
    if isinstance(s, ProfileLeaf):
        return Leaf(s.outcome)
    if not s.left:
        return Node(s.owner, underlying_game(s.chosen), tuple(underlying_game(t) for t in s.right))
    rest = (*s.left[1:], s.chosen, *s.right)
    return Node(s.owner, underlying_game(s.left[0]), tuple(underlying_game(t) for t in rest))


def induced_outcome(s: Profile) -> str:
    while isinstance(s, ProfileNode):
        s = s.chosen
    return s.outcome


def profile_owners(s: Profile) -> list[str]:
    """Agents owning a node of ``s``, in preorder of first appearance."""
    seen: dict[str, None] = {}
    stack = [s]
    while stack:
        cur = stack.pop()
        if isinstance(cur, ProfileNode):
            seen.setdefault(cur.owner)
            stack.extend(reversed(cur.children))
    return list(seen)


def strat_pref(pf: PreferenceFamily, a: str, s: Profile, s2: Profile) -> bool:
    """Does agent ``a`` prefer ``s2`` to ``s``?"""
    return pf.prefs(a).holds(induced_outcome(s), induced_outcome(s2))


def is_convertible(a: str, s: Profile, s2: Profile) -> bool:
    """Can agent ``a`` turn ``s`` into ``s2`` by changing only choices at nodes ``a`` owns?"""
    if isinstance(s, ProfileLeaf) or isinstance(s2, ProfileLeaf):
        return isinstance(s, ProfileLeaf) and isinstance(s2, ProfileLeaf) and s.outcome == s2.outcome
    if s.owner != s2.owner:
        return False
    kids, kids2 = s.children, s2.children
    if len(kids) != len(kids2):
        return False
    if s.choice_index != s2.choice_index and s.owner != a:
        return False
    return all(is_convertible(a, x, y) for x, y in zip(kids, kids2))


def iter_conversions(a: str, s: Profile) -> Iterator[Profile]:
    """Lazily yield every profile ``a`` can convert ``s`` into.

    At a node owned by ``a`` the chosen position varies in the outer loop;
    within one position the children's own conversions vary as a product,
    leftmost child slowest.
    """
    if isinstance(s, ProfileLeaf):
        yield s
        return
    kids = s.children
    positions = range(len(kids)) if s.owner == a else (s.choice_index,)
    for pos in positions:
        for combo in itertools.product(*(_LazyList(iter_conversions(a, k)) for k in kids)):
            yield choose(s.owner, combo, pos)


class _LazyList:
    """Iterable that caches a generator so ``itertools.product`` can replay it."""

    __slots__ = ("_gen", "_items")

    def __init__(self, gen):
        self._gen = gen
        self._items = None

    def __iter__(self):
        if self._items is None:
            self._items = list(self._gen)
        return iter(self._items)


def conversions(a: str, s: Profile) -> list[Profile]:
    return list(iter_conversions(a, s))


def _outcome_conversions(a: str, s: Profile) -> Iterator[Profile]:
    # Conversions of s that leave every non-chosen subtree untouched.  Changes
    # there cannot affect the induced outcome, so this sub-fiber reaches the
    # same set of outcomes as the full one while staying linear in the leaves.
    if isinstance(s, ProfileLeaf):
        yield s
        return
    kids = s.children
    positions = range(len(kids)) if s.owner == a else (s.choice_index,)
    for pos in positions:
        for sub in _outcome_conversions(a, kids[pos]):
            yield choose(s.owner, kids[:pos] + (sub,) + kids[pos + 1:], pos)


def is_happy(pf: PreferenceFamily, s: Profile, a: str, exhaustive: bool = False) -> bool:
    """True when no conversion of ``s`` by ``a`` is preferred by ``a``.

    By default only conversions that keep unchosen subtrees fixed are
    visited; they induce exactly the outcomes of the full conversion set.
    ``exhaustive=True`` walks the full set instead.
    """
    rel = pf.prefs(a)
    current = induced_outcome(s)
    candidates = iter_conversions(a, s) if exhaustive else _outcome_conversions(a, s)
    return not any(rel.holds(current, induced_outcome(t)) for t in candidates)


def _agents_for(pf: PreferenceFamily, s: Profile) -> list[str]:
    # Non-owners can only "convert" s into itself, which still matters when
    # their preference is reflexive somewhere; explicit agents cover that.
    return list(dict.fromkeys([*profile_owners(s), *pf.agents]))


def is_nash(pf: PreferenceFamily, s: Profile, exhaustive: bool = False) -> bool:
    return all(is_happy(pf, s, a, exhaustive) for a in _agents_for(pf, s))


def is_spe(pf: PreferenceFamily, s: Profile, exhaustive: bool = False) -> bool:
    """Nash at ``s`` and at every subprofile."""
    if not is_nash(pf, s, exhaustive):
        return False
    if isinstance(s, ProfileLeaf):
        return True
    return all(is_spe(pf, t, exhaustive) for t in s.children)


def happiness(pf: PreferenceFamily, s: Profile) -> dict[str, bool]:
    """Happiness of every relevant agent: owners first, then explicit agents."""
    return {a: is_happy(pf, s, a) for a in _agents_for(pf, s)}
