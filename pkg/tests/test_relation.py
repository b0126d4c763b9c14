import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _gen import OUTCOMES, acyclic_relations, random_relation, relations
from seqgame.errors import CyclicRelation
from seqgame.relation import (
    CyclePath,
    Relation,
    check_properties,
    find_cycle,
    is_acyclic,
    is_no_succ,
    is_subrelation,
    linear_extension,
    restriction,
    transitive_closure,
)

CARRIER = list(OUTCOMES[:5])


def closure_by_composition(r, carrier):
    """Oracle: compose the arc set with itself until nothing new appears."""
    arcs = {(x, y) for x in carrier for y in carrier if r.holds(x, y)}
    while True:
        new = {(x, z) for (x, y) in arcs for (y2, z) in arcs if y == y2} - arcs
        if not new:
            return arcs
        arcs |= new


def pairs_of(r, carrier):
    return {(x, y) for x in carrier for y in carrier if r.holds(x, y)}


def divides(x, y):
    return y % x == 0


# restriction / subrelation

def test_restriction_to_empty_list_is_empty():
    r = Relation.from_pairs([("a", "b"), ("b", "b")])
    res = restriction(r, [])
    assert not any(res.holds(x, y) for x in "ab" for y in "ab")


def test_restriction_drops_arcs_leaving_the_list():
    r = Relation.from_pairs([("a", "b"), ("b", "c")])
    res = restriction(r, ["a", "b"])
    assert pairs_of(res, "abc") == {("a", "b")}


def test_restriction_ignores_duplicates():
    r = Relation.from_pairs([("a", "b")])
    assert pairs_of(restriction(r, ["a", "b", "a", "b"]), "ab") == {("a", "b")}


@given(relations(), st.lists(st.sampled_from(CARRIER), max_size=5), st.lists(st.sampled_from(CARRIER), max_size=4))
def test_restriction_monotone_in_the_list(r, small, extra):
    big = small + extra
    assert is_subrelation(restriction(r, small), restriction(r, big), CARRIER)


def test_is_subrelation_basics():
    r = Relation.from_pairs([("a", "b")])
    assert is_subrelation(r, r, ["a", "b", "c"])
    assert not is_subrelation(r, Relation.empty(), ["a", "b"])
    assert is_subrelation(r, Relation.empty(), [])


# closure and cycles

def test_closure_adds_composite_arc():
    r = Relation.from_pairs([("a", "b"), ("b", "c")])
    assert pairs_of(transitive_closure(r, "abc"), "abc") == {("a", "b"), ("b", "c"), ("a", "c")}


def test_closure_of_transitive_relation_is_its_restriction():
    lt = Relation(lambda x, y: x < y)
    carrier = [1, 2, 3, 4]
    assert pairs_of(transitive_closure(lt, carrier), carrier) == pairs_of(restriction(lt, carrier), carrier)


def test_closure_matches_composition_oracle_on_random_relations():
    rng = random.Random(7)
    for _ in range(300):
        carrier = CARRIER[: rng.randint(1, 5)]
        r = random_relation(rng, OUTCOMES, density=rng.random() * 0.5)
        assert pairs_of(transitive_closure(r, carrier), carrier) == closure_by_composition(r, carrier)


@given(relations())
def test_closure_is_idempotent(r):
    c = transitive_closure(r, CARRIER)
    assert pairs_of(transitive_closure(c, CARRIER), CARRIER) == pairs_of(c, CARRIER)


def test_two_cycle():
    r = Relation.from_pairs([("a", "b"), ("b", "a")])
    cyc = find_cycle(r, ["a", "b"])
    assert cyc is not None and set(cyc.nodes) == {"a", "b"} and len(cyc) == 2
    assert cyc.is_valid_for(r)


def test_self_loop_is_a_one_node_cycle():
    assert find_cycle(Relation.from_pairs([("x", "x")]), ["x"]) == CyclePath(("x",))


def test_strict_total_order_has_no_cycle():
    lt = Relation(lambda x, y: x < y)
    assert find_cycle(lt, [3, 1, 2, 5]) is None
    assert is_acyclic(lt, [3, 1, 2, 5])


def test_acyclic_examples():
    assert is_acyclic(Relation.empty(), CARRIER)
    assert not is_acyclic(Relation.from_pairs([("a", "b"), ("b", "c"), ("c", "a")]), "abc")


def test_find_cycle_is_deterministic_dfs_order():
    r = Relation.from_pairs([("a", "b"), ("b", "c"), ("c", "b"), ("c", "a")])
    assert find_cycle(r, ["a", "b", "c"]).nodes == ("a", "b", "c")
    assert find_cycle(r, ["b", "c", "a"]).nodes == ("b", "c")


def test_cycle_detection_agrees_with_closure_on_1000_random_relations():
    rng = random.Random(11)
    for _ in range(1000):
        carrier = CARRIER[: rng.randint(1, 5)]
        r = random_relation(rng, OUTCOMES, density=rng.random() * 0.4)
        closure = closure_by_composition(r, carrier)
        cyclic = any((x, x) in closure for x in carrier)
        cyc = find_cycle(r, carrier)
        assert (cyc is not None) == cyclic == (not is_acyclic(r, carrier))
        if cyc is not None:
            assert cyc.is_valid_for(r)
            assert len(set(cyc.nodes)) == len(cyc.nodes)
            assert set(cyc.nodes) <= set(carrier)


# properties

def test_usual_order_is_strict_total():
    lt = Relation.from_pairs([(1, 2), (1, 3), (2, 3)])
    assert check_properties(lt, [1, 2, 3]) == (True, True, True)


def test_divisibility_is_not_irreflexive():
    rep = check_properties(Relation(divides), [2, 3, 4, 9, 6, 16])
    assert rep.irreflexive is False
    assert rep.transitive is True
    assert rep.total is False


# linear extension

def test_extension_of_total_order_is_itself():
    lt = Relation(lambda x, y: x < y)
    carrier = [2, 5, 1, 4]
    ext = linear_extension(lt, carrier)
    assert pairs_of(ext, carrier) == pairs_of(restriction(lt, carrier), carrier)


def test_extension_of_single_arc():
    r = Relation.from_pairs([("oc3", "oc2")])
    carrier = ["oc1", "oc2", "oc3"]
    ext = linear_extension(r, carrier)
    valid = [
        {("oc3", "oc2"), ("oc3", "oc1"), ("oc2", "oc1")},
        {("oc3", "oc2"), ("oc1", "oc2"), ("oc3", "oc1")},
        {("oc1", "oc3"), ("oc1", "oc2"), ("oc3", "oc2")},
    ]
    assert pairs_of(ext, carrier) in valid
    # first-occurrence tie breaking: oc1 is free first, then oc3, then oc2
    assert pairs_of(ext, carrier) == valid[2]


def test_extension_refuses_cycles():
    r = Relation.from_pairs([("a", "b"), ("b", "a")])
    with pytest.raises(CyclicRelation) as err:
        linear_extension(r, ["a", "b"])
    assert err.value.cycle.is_valid_for(r)


def all_linear_extensions(r, carrier):
    """Oracle: every permutation, kept when it orders all arcs correctly."""
    out = []
    for perm in itertools.permutations(carrier):
        rank = {x: i for i, x in enumerate(perm)}
        if all(rank[x] < rank[y] for x, y in pairs_of(r, carrier)):
            out.append({(perm[i], perm[j]) for i in range(len(perm)) for j in range(i + 1, len(perm))})
    return out


def test_extension_property_suite_500_random_acyclic():
    rng = random.Random(3)
    for _ in range(500):
        n = rng.randint(1, 7)
        carrier = [f"x{i}" for i in range(n)]
        order = carrier[:]
        rng.shuffle(order)
        r = Relation.from_pairs(
            (order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3
        )
        ext = linear_extension(r, carrier)
        assert check_properties(ext, carrier) == (True, True, True)
        assert is_subrelation(restriction(r, carrier), ext, carrier)
        assert pairs_of(ext, carrier) == pairs_of(linear_extension(r, carrier), carrier)
        if n <= 5:
            assert pairs_of(ext, carrier) in all_linear_extensions(r, carrier)


@given(acyclic_relations(), st.permutations(list(OUTCOMES)))
@settings(max_examples=60)
def test_extension_with_duplicates_and_any_carrier_order(r, carrier):
    doubled = carrier + carrier[:2]
    ext = linear_extension(r, doubled)
    assert check_properties(ext, carrier) == (True, True, True)
    assert is_subrelation(restriction(r, carrier), ext, carrier)


# is_no_succ

def test_is_no_succ_examples():
    assert is_no_succ(divides, 9, [])
    assert is_no_succ(divides, 9, [6, 2, 16])
    assert not is_no_succ(divides, 4, [9, 6, 2, 16])


@given(relations(), st.sampled_from(CARRIER), st.lists(st.sampled_from(CARRIER)), st.lists(st.sampled_from(CARRIER)))
def test_is_no_succ_splits_over_append(r, x, left, right):
    assert is_no_succ(r, x, left + right) == (is_no_succ(r, x, left) and is_no_succ(r, x, right))
