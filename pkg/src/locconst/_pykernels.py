"""Pure-Python reference kernels.

Each function here has a compiled twin in ``_ckernels.pyx`` with the same
signature and the same results. Inputs are flat integer sequences (lists
or numpy arrays); see ``kernels`` for the dispatch.
"""


def associativity_witness(mul, order):
    """First (a, b, c) in lexicographic order with (ab)c != a(bc), else None."""
    for a in range(order):
        row_a = a * order
        for b in range(order):
            ab = mul[row_a + b]
            row_ab = ab * order
            row_b = b * order
            for c in range(order):
                if mul[row_ab + c] != mul[row_a + mul[row_b + c]]:
                    return (a, b, c)
    return None


def search_homs(mul, inv, order, n_gens, relators, limit):
    """All generator-image tuples killing every relator, in lexicographic order.

    ``relators`` is a list of words of signed 1-based generator indices.
    Stops with ``None`` once more than ``limit`` tuples would be examined.
    """
    if n_gens == 0:
        return [()]
    total = order ** n_gens
    if total > limit:
        return None
    found = []
    images = [0] * n_gens
    while True:
        ok = True
        for word in relators:
            x = 0
            for letter in word:
                if letter > 0:
                    y = images[letter - 1]
                else:
                    y = inv[images[-letter - 1]]
                x = mul[x * order + y]
            if x != 0:
                ok = False
                break
        if ok:
            found.append(tuple(images))
        pos = n_gens - 1
        while pos >= 0:
            images[pos] += 1
            if images[pos] < order:
                break
            images[pos] = 0
            pos -= 1
        if pos < 0:
            return found


def _coboundary_at(c, t, nf, face_idx, face_sign, actor, act, add, neg, order):
    base = t * nf
    s = 0
    for j in range(nf):
        f = face_idx[base + j]
        if f < 0:
            continue
        v = c[f]
        if j == 0:
            v = act[actor[t] * order + v]
        if face_sign[j] < 0:
            v = neg[v]
        s = add[s * order + v]
    return s


def count_solutions(order, n_slots, n_out, nf, face_idx, face_sign, actor,
                    act, add, neg, target):
    """Count cochains c in A^n_slots whose coboundary equals ``target``.

    Cochain values are module element indices (0 is zero). For output
    tuple t, face j contributes face_sign[j] * c[face_idx[t*nf + j]], face 0
    being acted on by element actor[t]; index -1 marks a face that vanishes
    by normalization.
    """
    c = [0] * n_slots
    count = 0
    while True:
        ok = True
        for t in range(n_out):
            if _coboundary_at(c, t, nf, face_idx, face_sign, actor, act, add,
                              neg, order) != target[t]:
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
            return count


def count_images(order, n_slots, n_out, nf, face_idx, face_sign, actor,
                 act, add, neg):
    """Number of distinct coboundaries of all cochains in A^n_slots."""
    c = [0] * n_slots
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
