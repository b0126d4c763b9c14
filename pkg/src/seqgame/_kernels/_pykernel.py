"""Pure-Python profile classifier; reference for the Cython build.

The game arrives flattened in preorder (a node precedes its children, so
iterating node ids backwards visits children before parents):

* ``owner[v]``: agent index, or -1 for a leaf
* ``leaf_out[v]``: outcome index of a leaf, -1 otherwise
* ``child_start[v]``, ``child_count[v]``: slice of ``children`` holding v's children
* ``slot[v]``: position of internal node v in the choice vector, -1 for leaves
* ``prefs``: flat 0/1 bytes, ``prefs[(a * n_out + x) * n_out + y]`` is 1 when
  agent a prefers outcome y to outcome x

Profiles are enumerated as choice vectors over the internal nodes in
preorder, last node varying fastest.  For each profile, an agent's
conversions at a subtree induce exactly the outcomes reachable when that
agent may pick any child at its own nodes while everybody else keeps their
choice; each profile is classified from scratch.
"""

from __future__ import annotations


def classify_profiles(owner, leaf_out, child_start, child_count, children, slot,
                      n_agents, n_out, prefs):
    n = len(owner)
    internal = [v for v in range(n) if owner[v] >= 0]
    arity = [child_count[v] for v in internal]
    kids = [list(children[child_start[v]:child_start[v] + child_count[v]]) for v in range(n)]

    rows = []
    agents = []
    for a in range(n_agents):
        base = a * n_out * n_out
        masks = [sum(1 << y for y in range(n_out) if prefs[base + x * n_out + y]) for x in range(n_out)]
        if any(masks):
            agents.append(a)
            rows.append(masks)

    total = 1
    for k in arity:
        total *= k
    nash = bytearray(total)
    spe = bytearray(total)
    choice = [0] * len(internal)
    io = [0] * n
    sub_spe = [False] * n
    reach = [[0] * n for _ in agents]

    for p in range(total):
        root_nash = True
        for v in range(n - 1, -1, -1):
            o = owner[v]
            if o < 0:
                out = leaf_out[v]
                io[v] = out
                bit = 1 << out
                ok = True
                for i in range(len(agents)):
                    reach[i][v] = bit
                    if rows[i][out] & bit:
                        ok = False
                sub_spe[v] = ok
                root_nash = ok
                continue
            cs = kids[v]
            c = cs[choice[slot[v]]]
            out = io[c]
            io[v] = out
            ok = True
            for i, a in enumerate(agents):
                r = reach[i]
                if a == o:
                    m = 0
                    for k in cs:
                        m |= r[k]
                else:
                    m = r[c]
                r[v] = m
                if rows[i][out] & m:
                    ok = False
            root_nash = ok
            if ok:
                for k in cs:
                    if not sub_spe[k]:
                        ok = False
                        break
            sub_spe[v] = ok
        nash[p] = root_nash
        spe[p] = sub_spe[0]

        j = len(choice) - 1
        while j >= 0:
            choice[j] += 1
            if choice[j] < arity[j]:
                break
            choice[j] = 0
            j -= 1
    return nash, spe
