import random

import pytest

from _gen import AGENTS, bounded_game, random_acyclic, random_game, random_relation
from seqgame import _kernels
from seqgame.errors import TooLarge
from seqgame.game import Leaf, profile_count
from seqgame.oracle import all_profiles, classify_all, find_equilibria, profile_from_choices
from seqgame.preferences import PayoffTable, selfish
from seqgame.relation import Relation
from seqgame.strategy import PreferenceFamily, ProfileNode, induced_outcome, is_convertible, underlying_game
from seqgame.syntax import format_profile, parse_game

BACKENDS = [pytest.param(_kernels.python_classify, id="python")]
if _kernels.cython_classify is not None:
    BACKENDS.append(pytest.param(_kernels.cython_classify, id="cython"))


def naive_nash(pf, s, agents):
    """Oracle: compare against every profile of the same game, filtered by convertibility."""
    everything = all_profiles(underlying_game(s))
    return all(
        not pf.prefs(a).holds(induced_outcome(s), induced_outcome(t))
        for a in agents
        for t in everything
        if is_convertible(a, s, t)
    )


def naive_spe(pf, s, agents):
    if not naive_nash(pf, s, agents):
        return False
    if isinstance(s, ProfileNode):
        return all(naive_spe(pf, c, agents) for c in s.children)
    return True


def test_profile_counts_and_order():
    g = parse_game("(a (b x y) z w)")
    ps = all_profiles(g)
    assert len(ps) == profile_count(g) == 6
    assert [format_profile(p) for p in ps[:3]] == ["(a *(b *x y) z w)", "(a *(b x *y) z w)", "(a (b *x y) *z w)"]
    assert len(set(ps)) == 6
    assert all(underlying_game(p) == g for p in ps)


def test_leaf_has_one_profile():
    assert all_profiles(Leaf("x")) == [profile_from_choices(Leaf("x"), [])]


def test_too_large():
    g = parse_game("(a (b x y z) (b x y z) (b x y z))")
    with pytest.raises(TooLarge) as err:
        all_profiles(g, max_profiles=10)
    assert err.value.count == 81
    with pytest.raises(TooLarge):
        find_equilibria(g, PreferenceFamily(), max_profiles=80)


def test_small_selfish_game():
    t = PayoffTable.from_vectors(["a", "b"], {"p10": (1, 0), "p31": (3, 1), "p22": (2, 2)})
    pf = PreferenceFamily({a: selfish(t, a) for a in "ab"})
    g = parse_game("(a (b p10 p31) p22)")
    nash = [format_profile(r.profile) for r in find_equilibria(g, pf, "nash")]
    spe = [format_profile(r.profile) for r in find_equilibria(g, pf, "spe")]
    assert nash == ["(a *(b p10 *p31) p22)", "(a (b *p10 p31) *p22)"]
    assert spe == ["(a *(b p10 *p31) p22)"]


@pytest.mark.parametrize("classify", BACKENDS)
def test_kernel_matches_naive_oracle(classify):
    rng = random.Random(17)
    for _ in range(120):
        g = bounded_game(rng, 60, max_depth=3, agents=AGENTS[:3])
        pf = PreferenceFamily({a: random_relation(rng, density=rng.random() * 0.4) for a in AGENTS[:3]})
        nash, spe = classify(*_flat_args(g, pf))
        profiles = all_profiles(g)
        for s, n, e in zip(profiles, nash, spe):
            assert bool(n) == naive_nash(pf, s, AGENTS[:3])
            assert bool(e) == naive_spe(pf, s, AGENTS[:3])


def _flat_args(g, pf):
    from seqgame.oracle import FlatGame

    flat = FlatGame.build(g, pf.agents)
    return (flat.owner, flat.leaf_out, flat.child_start, flat.child_count, flat.children,
            flat.slot, len(flat.agents), len(flat.outcomes), flat.pref_bytes(pf))


def test_engines_and_backends_agree():
    rng = random.Random(23)
    for _ in range(200):
        g = bounded_game(rng, 300, max_depth=4)
        pf = PreferenceFamily({a: random_acyclic(rng) if rng.random() < 0.5 else random_relation(rng)
                               for a in AGENTS})
        kernel = find_equilibria(g, pf, engine="kernel")
        assert kernel == find_equilibria(g, pf, engine="definitional")
        py = classify_all(g, pf, classify=_kernels.python_classify)
        assert py == (bytearray(r.nash for r in kernel), bytearray(r.spe for r in kernel))
        if _kernels.cython_classify is not None:
            assert classify_all(g, pf, classify=_kernels.cython_classify) == py


def test_filters():
    rng = random.Random(1)
    g = random_game(rng, max_depth=3)
    pf = PreferenceFamily({"a": Relation.from_pairs([("o1", "o2")])})
    rows = find_equilibria(g, pf)
    assert find_equilibria(g, pf, "nash") == [r for r in rows if r.nash]
    assert find_equilibria(g, pf, "spe") == [r for r in rows if r.spe]
    with pytest.raises(ValueError):
        find_equilibria(g, pf, "best")


def test_reflexive_arc_of_a_non_owner():
    g = parse_game("(a x y)")
    pf = PreferenceFamily({"z": Relation.from_pairs([("x", "x")])})
    flags = [(r.nash, r.spe) for r in find_equilibria(g, pf)]
    # choosing y is Nash, but the unchosen leaf x is its own subgame where z is unhappy
    assert flags == [(False, False), (True, False)]
