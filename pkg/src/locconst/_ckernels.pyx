# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``; same signatures."""
import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


def associativity_witness(const i64[:] mul, Py_ssize_t order):
    cdef Py_ssize_t a, b, c, ab
    for a in range(order):
        for b in range(order):
            ab = mul[a * order + b]
            for c in range(order):
                if mul[ab * order + c] != mul[a * order + mul[b * order + c]]:
                    return (a, b, c)
    return None


def search_homs(const i64[:] mul, const i64[:] inv, Py_ssize_t order,
                Py_ssize_t n_gens, relators, limit):
    if n_gens == 0:
        return [()]
    if order ** n_gens > limit:
        return None
    cdef Py_ssize_t n_rel = len(relators)
    lengths = np.array([len(w) for w in relators] or [0], dtype=np.int64)
    flat = np.array([x for w in relators for x in w] or [0], dtype=np.int64)
    cdef const i64[:] lens = lengths
    cdef const i64[:] letters = flat
    cdef i64[:] images = np.zeros(n_gens, dtype=np.int64)
    cdef Py_ssize_t r, k, start, pos
    cdef i64 x, y, letter
    cdef bint ok
    found = []
    while True:
        ok = True
        start = 0
        for r in range(n_rel):
            x = 0
            for k in range(start, start + lens[r]):
                letter = letters[k]
                if letter > 0:
                    y = images[letter - 1]
                else:
                    y = inv[images[-letter - 1]]
                x = mul[x * order + y]
            start += lens[r]
            if x != 0:
                ok = False
                break
        if ok:
            found.append(tuple([int(images[k]) for k in range(n_gens)]))
        pos = n_gens - 1
        while pos >= 0:
            images[pos] += 1
            if images[pos] < order:
                break
            images[pos] = 0
            pos -= 1
        if pos < 0:
            return found


cdef inline i64 _coboundary_at(i64[:] c, Py_ssize_t t, Py_ssize_t nf,
                               const i64[:] face_idx, const i64[:] face_sign,
                               const i64[:] actor, const i64[:] act,
                               const i64[:] add, const i64[:] neg,
                               Py_ssize_t order) nogil:
    cdef Py_ssize_t j
    cdef i64 f, v, s = 0
    for j in range(nf):
        f = face_idx[t * nf + j]
        if f < 0:
            continue
        v = c[f]
        if j == 0:
            v = act[actor[t] * order + v]
        if face_sign[j] < 0:
            v = neg[v]
        s = add[s * order + v]
    return s


def count_solutions(Py_ssize_t order, Py_ssize_t n_slots, Py_ssize_t n_out,
                    Py_ssize_t nf, const i64[:] face_idx, const i64[:] face_sign,
                    const i64[:] actor, const i64[:] act, const i64[:] add,
                    const i64[:] neg, const i64[:] target):
    cdef i64[:] c = np.zeros(max(n_slots, 1), dtype=np.int64)
    cdef Py_ssize_t t, pos
    cdef long long count = 0
    cdef bint ok
    with nogil:
        while True:
            ok = True
            for t in range(n_out):
                if _coboundary_at(c, t, nf, face_idx, face_sign, actor, act,
                                  add, neg, order) != target[t]:
                    ok = False
                    break
            if ok:
                count += 1
            pos = n_slots - 1
            while pos >= 0:
                c[pos] += 1
                if c[pos] < order:
                    break
                c[pos] = 0
                pos -= 1
            if pos < 0:
                break
    return count


def count_images(Py_ssize_t order, Py_ssize_t n_slots, Py_ssize_t n_out,
                 Py_ssize_t nf, const i64[:] face_idx, const i64[:] face_sign,
                 const i64[:] actor, const i64[:] act, const i64[:] add,
                 const i64[:] neg):
    cdef i64[:] c = np.zeros(max(n_slots, 1), dtype=np.int64)
    cdef Py_ssize_t t, pos
    cdef object code
    seen = set()
    while True:
        code = 0
        for t in range(n_out):
            code = code * order + _coboundary_at(c, t, nf, face_idx, face_sign,
                                                 actor, act, add, neg, order)
        seen.add(code)
        pos = n_slots - 1
        while pos >= 0:
            c[pos] += 1
            if c[pos] < order:
                break
            c[pos] = 0
            pos -= 1
        if pos < 0:
            return len(seen)
