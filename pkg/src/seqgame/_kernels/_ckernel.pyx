# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled profile classifier.  Same contract as ``_pykernel.classify_profiles``."""

from libc.stdlib cimport calloc, free
from libc.stdint cimport uint64_t


def classify_profiles(owner, leaf_out, child_start, child_count, children, slot,
                      Py_ssize_t n_agents, Py_ssize_t n_out, prefs):
    cdef const long long[:] own = owner
    cdef const long long[:] lout = leaf_out
    cdef const long long[:] cst = child_start
    cdef const long long[:] ccnt = child_count
    cdef const long long[:] ch = children
    cdef const long long[:] slt = slot
    cdef const unsigned char[:] pr = prefs

    cdef Py_ssize_t n = own.shape[0]
    cdef Py_ssize_t nw = (n_out + 63) // 64
    cdef Py_ssize_t n_int = 0, v, a, i, k, x, y, w, j, p, c, o, out, total
    cdef bint ok, root_nash, any_arc

    for v in range(n):
        if own[v] >= 0:
            n_int += 1

    total = 1
    for v in range(n):
        if own[v] >= 0:
            total *= ccnt[v]

    nash = bytearray(total)
    spe = bytearray(total)
    cdef unsigned char[:] nash_v = nash
    cdef unsigned char[:] spe_v = spe

    cdef long long *active = <long long *>calloc(n_agents + 1, sizeof(long long))
    cdef uint64_t *rows = <uint64_t *>calloc(n_agents * n_out * nw + 1, sizeof(uint64_t))
    cdef uint64_t *reach = <uint64_t *>calloc(n_agents * n * nw + 1, sizeof(uint64_t))
    cdef long long *arity = <long long *>calloc(n_int + 1, sizeof(long long))
    cdef long long *choice = <long long *>calloc(n_int + 1, sizeof(long long))
    cdef long long *io = <long long *>calloc(n + 1, sizeof(long long))
    cdef unsigned char *sub_spe = <unsigned char *>calloc(n + 1, sizeof(unsigned char))
    cdef Py_ssize_t n_active = 0
    cdef uint64_t *r
    cdef uint64_t *row
    cdef uint64_t acc
    if not (active and rows and reach and arity and choice and io and sub_spe):
        free(active); free(rows); free(reach); free(arity); free(choice); free(io); free(sub_spe)
        raise MemoryError()

    try:
        for a in range(n_agents):
            any_arc = False
            for x in range(n_out):
                for y in range(n_out):
                    if pr[(a * n_out + x) * n_out + y]:
                        rows[(n_active * n_out + x) * nw + y // 64] |= (<uint64_t>1) << (y % 64)
                        any_arc = True
            if any_arc:
                active[n_active] = a
                n_active += 1

        i = 0
        for v in range(n):
            if own[v] >= 0:
                arity[i] = ccnt[v]
                i += 1

        for p in range(total):
            root_nash = True
            for v in range(n - 1, -1, -1):
                o = own[v]
                if o < 0:
                    out = lout[v]
                    io[v] = out
                    ok = True
                    for i in range(n_active):
                        r = reach + (i * n + v) * nw
                        for w in range(nw):
                            r[w] = 0
                        r[out // 64] = (<uint64_t>1) << (out % 64)
                        if rows[(i * n_out + out) * nw + out // 64] & r[out // 64]:
                            ok = False
                    sub_spe[v] = ok
                    root_nash = ok
                    continue
                c = ch[cst[v] + choice[slt[v]]]
                out = io[c]
                io[v] = out
                ok = True
                for i in range(n_active):
                    r = reach + (i * n + v) * nw
                    row = rows + (i * n_out + out) * nw
                    if active[i] == o:
                        for w in range(nw):
                            acc = 0
                            for k in range(ccnt[v]):
                                acc |= reach[(i * n + ch[cst[v] + k]) * nw + w]
                            r[w] = acc
                    else:
                        for w in range(nw):
                            r[w] = reach[(i * n + c) * nw + w]
                    for w in range(nw):
                        if row[w] & r[w]:
                            ok = False
                            break
                root_nash = ok
                if ok:
                    for k in range(ccnt[v]):
                        if not sub_spe[ch[cst[v] + k]]:
                            ok = False
                            break
                sub_spe[v] = ok
            nash_v[p] = root_nash
            spe_v[p] = sub_spe[0]

            j = n_int - 1
            while j >= 0:
                choice[j] += 1
                if choice[j] < arity[j]:
                    break
                choice[j] = 0
                j -= 1
    finally:
        free(active); free(rows); free(reach); free(arity); free(choice); free(io); free(sub_spe)
    return nash, spe
