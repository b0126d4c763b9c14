"""Brute-force ground truth: every strategy profile of a game, classified.

Two engines give the same answers.  ``"kernel"`` flattens the game and runs
the compiled (or pure-Python fallback) classifier; ``"definitional"`` builds
each profile as a tree and applies :func:`~seqgame.strategy.is_nash` and
:func:`~seqgame.strategy.is_spe` to it.
"""

from __future__ import annotations

import itertools
from array import array
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Literal, NamedTuple

from . import _kernels
from .errors import TooLarge
from .game import Game, Leaf, Node, iter_nodes, owners, profile_count, used_outcomes
from .relation import dedupe
from .strategy import PreferenceFamily, Profile, ProfileLeaf, choose, is_nash, is_spe

DEFAULT_MAX_PROFILES = 100_000

Filter = Literal["nash", "spe", "all"]
Engine = Literal["kernel", "definitional"]


class Classified(NamedTuple):
    profile: Profile
    nash: bool
    spe: bool


def check_size(g: Game, max_profiles: int = DEFAULT_MAX_PROFILES) -> int:
    count = profile_count(g)
    if count > max_profiles:
        raise TooLarge(count, max_profiles)
    return count


def profile_from_choices(g: Game, choices: Sequence[int]) -> Profile:
    """Build the profile over ``g`` whose internal nodes, in preorder, pick ``choices``."""
    it = iter(choices)

    def build(h: Game) -> Profile:
        if isinstance(h, Leaf):
            return ProfileLeaf(h.outcome)
        pick = next(it)
        return choose(h.owner, [build(c) for c in h.children], pick)

    profile = build(g)
    if next(it, None) is not None:
        raise ValueError("more choices than internal nodes")
    return profile


def _arities(g: Game) -> list[int]:
    return [1 + len(n.rest) for n in iter_nodes(g) if isinstance(n, Node)]


def iter_profiles(g: Game) -> Iterator[Profile]:
    for choices in itertools.product(*(range(k) for k in _arities(g))):
        yield profile_from_choices(g, choices)


def all_profiles(g: Game, max_profiles: int = DEFAULT_MAX_PROFILES) -> list[Profile]:
    """Every profile whose underlying game is ``g``, in lexicographic choice order.

    Choices are read over internal nodes in preorder; the last node varies fastest.
    """
    check_size(g, max_profiles)
    return list(iter_profiles(g))


@dataclass(frozen=True)
class FlatGame:
    """A game laid out as parallel arrays in preorder, as the kernels expect."""

    owner: array
    leaf_out: array
    child_start: array
    child_count: array
    children: array
    slot: array
    agents: tuple[str, ...]
    outcomes: tuple[str, ...]

    @classmethod
    def build(cls, g: Game, agents: Sequence[str] = ()) -> FlatGame:
        agent_list = tuple(dedupe([*owners(g), *agents]))
        outcome_list = tuple(dedupe(used_outcomes(g)))
        agent_ix = {a: i for i, a in enumerate(agent_list)}
        outcome_ix = {o: i for i, o in enumerate(outcome_list)}
        owner, leaf_out, start, count, slot, children = (array("q") for _ in range(6))
        n_internal = 0

        def visit(h: Game) -> int:
            nonlocal n_internal
            v = len(owner)
            start.append(0)
            if isinstance(h, Leaf):
                owner.append(-1)
                leaf_out.append(outcome_ix[h.outcome])
                count.append(0)
                slot.append(-1)
                return v
            owner.append(agent_ix[h.owner])
            leaf_out.append(-1)
            count.append(1 + len(h.rest))
            slot.append(n_internal)
            n_internal += 1
            kids = [visit(c) for c in h.children]
            start[v] = len(children)
            children.extend(kids)
            return v

        visit(g)
        return cls(owner, leaf_out, start, count, children, slot, agent_list, outcome_list)

    def pref_bytes(self, pf: PreferenceFamily) -> bytes:
        outs = self.outcomes
        return bytes(
            1 if pf.prefs(a).holds(x, y) else 0
            for a in self.agents
            for x in outs
            for y in outs
        )


def classify_all(
    g: Game,
    pf: PreferenceFamily,
    max_profiles: int = DEFAULT_MAX_PROFILES,
    classify=None,
) -> tuple[bytearray, bytearray]:
    """Nash and SPE flags for every profile of ``g``, in :func:`all_profiles` order.

    ``classify`` overrides the kernel function (used by the benchmark and tests
    to pin a backend).
    """
    check_size(g, max_profiles)
    flat = FlatGame.build(g, pf.agents)
    fn = classify or _kernels.classify_profiles
    return fn(
        flat.owner, flat.leaf_out, flat.child_start, flat.child_count, flat.children,
        flat.slot, len(flat.agents), len(flat.outcomes), flat.pref_bytes(pf),
    )


def find_equilibria(
    g: Game,
    pf: PreferenceFamily,
    filter: Filter = "all",
    max_profiles: int = DEFAULT_MAX_PROFILES,
    engine: Engine = "kernel",
) -> list[Classified]:
    """Classify every profile of ``g`` and keep those passing ``filter``."""
    if filter not in ("nash", "spe", "all"):
        raise ValueError(f"unknown filter {filter!r}")
    check_size(g, max_profiles)
    if engine == "kernel":
        nash, spe = classify_all(g, pf, max_profiles)
        rows = (
            Classified(s, bool(n), bool(e))
            for s, n, e in zip(iter_profiles(g), nash, spe)
        )
    elif engine == "definitional":
        rows = (Classified(s, is_nash(pf, s), is_spe(pf, s)) for s in iter_profiles(g))
    else:
        raise ValueError(f"unknown engine {engine!r}")
    if filter == "all":
        return list(rows)
    return [r for r in rows if getattr(r, filter)]
