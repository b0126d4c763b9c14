"""Finite decidable binary relations over outcome identifiers.

A :class:`Relation` is a total, pure predicate ``holds(x, y)``.  In preference
terms ``holds(x, y)`` reads "``y`` is preferred to ``x``".  Relations are either
extensional (a stored pair set) or intensional (a rule evaluated on demand);
every operation here only ever queries ``holds``, so both behave the same.

All carrier arguments are lists that may contain duplicates; membership is
always set-wise and iteration follows first occurrence.
"""

from __future__ import annotations

import sys
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass
from typing import Any, NamedTuple

from .errors import CyclicRelation

OutcomeId = str


def intern_id(name: str) -> str:
    return sys.intern(str(name))


def dedupe(items: Iterable[Hashable]) -> list:
    """Drop repeated items, keeping the first occurrence of each."""
    return list(dict.fromkeys(items))


class Relation:
    """A decidable binary relation.

    Use :meth:`from_pairs` for an explicit arc set, or pass any two-argument
    predicate.  ``domain`` is an optional hint of the elements the relation
    was defined over; it does not restrict ``holds``.
    """

    __slots__ = ("_pred", "_pairs", "domain")

    def __init__(self, pred: Callable[[Any, Any], bool], domain: Sequence | None = None):
        self._pred = pred
        self._pairs: frozenset | None = None
        self.domain = tuple(domain) if domain is not None else None

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Any, Any]], domain: Sequence | None = None) -> Relation:
        arcs = frozenset((x, y) for x, y in pairs)
        rel = cls(lambda x, y: (x, y) in arcs, domain)
        rel._pairs = arcs
        if domain is None:
            rel.domain = tuple(dedupe(e for pair in sorted(arcs, key=repr) for e in pair))
        return rel

    @classmethod
    def empty(cls) -> Relation:
        return cls.from_pairs(())

    @property
    def pairs(self) -> frozenset | None:
        """The arc set of an extensional relation, ``None`` for rule-based ones."""
        return self._pairs

    def holds(self, x: Any, y: Any) -> bool:
        return bool(self._pred(x, y))

    __call__ = holds

    def arcs_on(self, carrier: Sequence) -> list[tuple[Any, Any]]:
        """All pairs of ``carrier`` elements related by this relation, in carrier order."""
        elems = dedupe(carrier)
        return [(x, y) for x in elems for y in elems if self.holds(x, y)]

    def __repr__(self) -> str:
        if self._pairs is not None:
            return f"Relation.from_pairs({sorted(self._pairs, key=repr)!r})"
        return f"Relation({self._pred!r})"


@dataclass(frozen=True)
class CyclePath:
    """A cycle ``x0 -> x1 -> ... -> xn -> x0`` through a relation."""

    nodes: tuple

    def __post_init__(self):
        if not self.nodes:
            raise ValueError("a cycle path needs at least one node")
        object.__setattr__(self, "nodes", tuple(self.nodes))

    def arcs(self) -> list[tuple[Any, Any]]:
        n = len(self.nodes)
        return [(self.nodes[i], self.nodes[(i + 1) % n]) for i in range(n)]

    def is_valid_for(self, r: Relation) -> bool:
        return all(r.holds(x, y) for x, y in self.arcs())

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __str__(self) -> str:
        return " -> ".join(str(n) for n in self.nodes + self.nodes[:1])


class PropertyReport(NamedTuple):
    irreflexive: bool
    transitive: bool
    total: bool


def restriction(r: Relation, outcomes: Sequence) -> Relation:
    """Restrict ``r`` to pairs whose both ends occur in ``outcomes``."""
    members = frozenset(outcomes)
    return Relation(lambda x, y: x in members and y in members and r.holds(x, y), dedupe(outcomes))


def is_subrelation(r: Relation, s: Relation, carrier: Sequence) -> bool:
    elems = dedupe(carrier)
    return all(s.holds(x, y) for x in elems for y in elems if r.holds(x, y))


def _successors(r: Relation, elems: list) -> dict:
    return {x: [y for y in elems if r.holds(x, y)] for x in elems}


def transitive_closure(r: Relation, carrier: Sequence) -> Relation:
    """Least transitive relation on ``carrier`` containing ``restriction(r, carrier)``.

    Computed as reachability by one or more arcs, a search from every element.
    """
    elems = dedupe(carrier)
    succ = _successors(r, elems)
    arcs = set()
    for x in elems:
        seen = set()
        stack = list(succ[x])
        while stack:
            y = stack.pop()
            if y in seen:
                continue
            seen.add(y)
            stack.extend(succ[y])
        arcs.update((x, y) for y in seen)
    return Relation.from_pairs(arcs, elems)


def find_cycle(r: Relation, carrier: Sequence) -> CyclePath | None:
    """Return the first simple cycle met by a depth-first search, or ``None``.

    Starts and successors are visited in carrier order, so the witness is
    deterministic.  A self-loop ``holds(x, x)`` yields the one-node cycle ``[x]``.
    """
    elems = dedupe(carrier)
    succ = _successors(r, elems)
    state: dict = {}  # absent: unvisited, 1: on stack, 2: finished
    for root in elems:
        if root in state:
            continue
        path = [root]
        state[root] = 1
        iters = [iter(succ[root])]
        while iters:
            for y in iters[-1]:
                mark = state.get(y)
                if mark == 1:
                    return CyclePath(tuple(path[path.index(y):]))
                if mark is None:
                    state[y] = 1
                    path.append(y)
                    iters.append(iter(succ[y]))
                    break
            else:
                iters.pop()
                state[path.pop()] = 2
    return None


def is_acyclic(r: Relation, carrier: Sequence) -> bool:
    return find_cycle(r, carrier) is None


def check_properties(r: Relation, carrier: Sequence) -> PropertyReport:
    elems = dedupe(carrier)
    irreflexive = not any(r.holds(x, x) for x in elems)
    transitive = all(
        r.holds(x, z)
        for x in elems
        for y in elems
        if r.holds(x, y)
        for z in elems
        if r.holds(y, z)
    )
    total = all(
        r.holds(x, y) or r.holds(y, x)
        for i, x in enumerate(elems)
        for y in elems[i + 1:]
    )
    return PropertyReport(irreflexive, transitive, total)


def linear_extension(r: Relation, carrier: Sequence) -> Relation:
    """A strict total order on ``carrier`` that contains ``restriction(r, carrier)``.

    Elements are emitted least-preferred first: at each step the first
    remaining element (in carrier order) with no remaining predecessor in the
    transitive closure.  The result relates every earlier element to every
    later one.

    Raises:
        CyclicRelation: ``r`` has a cycle on the carrier; carries the witness.
    """
    cycle = find_cycle(r, carrier)
    if cycle is not None:
        raise CyclicRelation(cycle)
    elems = dedupe(carrier)
    closure = transitive_closure(r, elems)
    remaining = list(elems)
    order = []
    while remaining:
        for x in remaining:
            if not any(closure.holds(u, x) for u in remaining):
                break
        else:  # pragma: no cover - ruled out by the acyclicity check
            raise CyclicRelation(find_cycle(r, elems))
        remaining.remove(x)
        order.append(x)
    return Relation.from_pairs(
        ((x, y) for i, x in enumerate(order) for y in order[i + 1:]), order
    )


def is_no_succ(r: Callable[[Any, Any], bool], x: Any, items: Iterable) -> bool:
    """True when ``x`` is related by ``r`` to no element of ``items``.

    ``r`` is any two-argument predicate, so this also works on strategy
    profiles under a lifted preference.
    """
    return not any(r(x, y) for y in items)
