"""Backward induction for arbitrary preferences, and the acyclic SPE pipeline."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Any, NamedTuple

from .errors import CyclicPreference, EmptyCycle, EmptyListError
from .game import Game, Leaf, Node, owners, used_outcomes
from .relation import CyclePath, Relation, find_cycle, is_no_succ, linear_extension, restriction
from .strategy import PreferenceFamily, Profile, ProfileLeaf, ProfileNode, induced_outcome


class SplitResult(NamedTuple):
    left: list
    choice: Any
    right: list


def choose_and_split(rel: Callable[[Any, Any], bool], items: Sequence) -> SplitResult:
    """Split ``items`` around the leftmost element with no ``rel``-successor to its right.

    The last element always qualifies, so a split exists for any non-empty
    list.  When ``rel`` is irreflexive and transitive the choice also has no
    successor on its left.
    """
    items = list(items)
    if not items:
        raise EmptyListError("choose_and_split needs a non-empty list")
    for i, x in enumerate(items):
        if is_no_succ(rel, x, items[i + 1:]):
            return SplitResult(items[:i], x, items[i + 1:])
    raise AssertionError("unreachable: the last element has no successor")


def backward_induction(g: Game, pf: PreferenceFamily) -> Profile:
    """Generalised backward induction.

    Children are solved first, then the owner keeps the leftmost solved child
    that none of its right-hand siblings beats under the owner's preference.
    """
    if isinstance(g, Leaf):
        return ProfileLeaf(g.outcome)
    solved = [backward_induction(c, pf) for c in g.children]
    rel = pf.prefs(g.owner)
    outcomes = [induced_outcome(s) for s in solved]
    # Split on indices so the lifted relation compares cached induced outcomes.
    split = choose_and_split(lambda i, j: rel.holds(outcomes[i], outcomes[j]), range(len(solved)))
    return ProfileNode(
        g.owner,
        tuple(solved[i] for i in split.left),
        solved[split.choice],
        tuple(solved[i] for i in split.right),
    )


def extended_preferences(g: Game, pf: PreferenceFamily) -> PreferenceFamily:
    """Linearly extend every relevant agent's preference on the outcomes of ``g``.

    Raises:
        CyclicPreference: some agent's preference has a cycle on those outcomes.
    """
    used = used_outcomes(g)
    ext = {}
    for a in dict.fromkeys([*owners(g), *pf.agents]):
        local = restriction(pf.prefs(a), used)
        cycle = find_cycle(local, used)
        if cycle is not None:
            raise CyclicPreference(a, cycle)
        ext[a] = linear_extension(local, used)
    return PreferenceFamily(ext, pf.payoffs)


def solve_spe(g: Game, pf: PreferenceFamily) -> Profile:
    """A subgame perfect equilibrium of ``g`` for acyclic preferences.

    Backward induction under linear extensions of the preferences restricted
    to the outcomes of ``g``; fewer arcs can only make agents happier, so the
    result is also an SPE for ``pf`` itself.
    """
    return backward_induction(g, extended_preferences(g, pf))


def no_equilibrium_game(a: str, cycle: CyclePath | Sequence[str]) -> Game:
    """A one-move game for ``a`` over the outcomes of ``cycle``; it has no Nash equilibrium."""
    nodes = tuple(cycle.nodes if isinstance(cycle, CyclePath) else cycle)
    if not nodes:
        raise EmptyCycle("a counterexample needs a non-empty cycle")
    return Node(a, Leaf(nodes[0]), tuple(Leaf(x) for x in nodes[1:]))


def counterexample(pf: PreferenceFamily, a: str, outcomes: Sequence[str]) -> Game | None:
    """The no-equilibrium game for agent ``a``, or ``None`` when ``a`` is acyclic on ``outcomes``."""
    rel: Relation = pf.prefs(a)
    cycle = find_cycle(rel, outcomes)
    return None if cycle is None else no_equilibrium_game(a, cycle)
