"""Compare the compiled and pure-Python profile classification kernels.

Usage: python benchmarks/bench_oracle.py [--repeat N] [--seed S]

Each row times one full classification of every strategy profile of a
random game and reports the speed-up of the compiled kernel.  Both kernels
must return identical flags; the script exits non-zero otherwise.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from seqgame import _kernels
from seqgame.game import Leaf, Node, profile_count
from seqgame.oracle import FlatGame
from seqgame.relation import Relation
from seqgame.strategy import PreferenceFamily

AGENTS = ("a", "b", "c")
OUTCOMES = tuple(f"o{i}" for i in range(8))


def random_game(rng: random.Random, depth: int, arity: int):
    if depth == 0:
        return Leaf(rng.choice(OUTCOMES))
    kids = [random_game(rng, depth - 1, arity) for _ in range(arity)]
    return Node(rng.choice(AGENTS), kids[0], tuple(kids[1:]))


def random_prefs(rng: random.Random) -> PreferenceFamily:
    return PreferenceFamily({
        a: Relation.from_pairs((x, y) for x in OUTCOMES for y in OUTCOMES if x != y and rng.random() < 0.3)
        for a in AGENTS
    })


def kernel_args(g, pf):
    flat = FlatGame.build(g, pf.agents)
    return (flat.owner, flat.leaf_out, flat.child_start, flat.child_count, flat.children,
            flat.slot, len(flat.agents), len(flat.outcomes), flat.pref_bytes(pf))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    if _kernels.cython_classify is None:
        print("compiled kernel not built; reinstall with Cython available", file=sys.stderr)
        return 1

    rng = random.Random(args.seed)
    shapes = [(2, 2), (3, 2), (2, 3), (4, 2), (2, 4)]
    print(f"{'depth':>5} {'arity':>5} {'profiles':>9} {'python s':>10} {'cython s':>10} {'speed-up':>9}")
    for depth, arity in shapes:
        g = random_game(rng, depth, arity)
        pf = random_prefs(rng)
        call = kernel_args(g, pf)
        if _kernels.python_classify(*call) != _kernels.cython_classify(*call):
            print(f"kernels disagree on depth={depth} arity={arity}", file=sys.stderr)
            return 2
        py = min(timeit.repeat(lambda: _kernels.python_classify(*call), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: _kernels.cython_classify(*call), number=1, repeat=args.repeat))
        print(f"{depth:>5} {arity:>5} {profile_count(g):>9} {py:>10.4f} {cy:>10.4f} {py / cy:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
