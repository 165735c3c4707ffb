"""Brute-force ground truth.

Nothing here calls the Smith-form pipeline, the extension machinery or
the monoidal classification; the enumerators only use the validated data
types, the group tables and the kernels. Caps are hard preconditions.
"""
from itertools import product

from . import kernels
from .config import DEFAULT_CAPS
from .errors import CapExceeded
from .groups import all_permutation_automorphisms, validate_group


# ------------------------------------------------------------- cochain counts

def _cochain_tables(P, A, n):
    """Face tables for the normalized degree-n differential, element-index form.

    Returns (n_slots, n_out, face_idx, face_sign, actor, act, add, neg).
    """
    b = P.order - 1
    elems = A.elements
    idx = {v: i for i, v in enumerate(elems)}
    order = len(elems)
    add = [idx[A.add(u, v)] for u in elems for v in elems]
    neg = [idx[A.neg(u)] for u in elems]
    act = [idx[A.act(p, v)] for p in range(P.order) for v in elems]

    def code(args):
        if any(g == 0 for g in args):
            return -1
        k = 0
        for g in args:
            k = k * b + g - 1
        return k

    nf = n + 2
    face_idx, actor = [], []
    outs = list(product(range(1, P.order), repeat=n + 1))
    for args in outs:
        faces = [args[1:]]
        for i in range(n):
            faces.append(args[:i] + (P.mul[args[i]][args[i + 1]],) + args[i + 2:])
        faces.append(args[:-1])
        face_idx.extend(code(f) for f in faces)
        actor.append(args[0])
    face_sign = [1] + [(-1) ** i for i in range(1, n + 2)]
    return b ** n, len(outs), nf, face_idx, face_sign, actor, act, add, neg, order


def brute_cocycles(P, A, n, caps=DEFAULT_CAPS, backend=None):
    """(cocycle count, coboundary count, class count) by exhaustive enumeration."""
    k = kernels.get_backend(backend)
    total = A.order ** ((P.order - 1) ** n)
    caps.check("cocycles", total)
    slots, n_out, nf, fi, fs, actor, act, add, neg, order = _cochain_tables(P, A, n)
    cocycles = k.count_solutions(order, slots, n_out, nf, fi, fs, actor, act, add, neg,
                                 [0] * n_out)
    if n == 0:
        coboundaries = 1
    else:
        slots0, n_out0, nf0, fi0, fs0, actor0, *_ = _cochain_tables(P, A, n - 1)
        coboundaries = k.count_images(order, slots0, n_out0, nf0, fi0, fs0, actor0,
                                      act, add, neg)
    if cocycles % coboundaries:
        raise AssertionError("coboundaries do not divide cocycles")
    return cocycles, coboundaries, cocycles // coboundaries


# ----------------------------------------------------------- monoidal data

def brute_monoidal(H, G, caps=DEFAULT_CAPS):
    """Representatives of iso classes of monoidal functors H -> G[1].

    Every map A_H -> G and every normalized lam table is tried; survivors of
    validate_datum are grouped with isomorphic().
    """
    from .descent import isomorphic, lam_from_values, make_datum, validate_datum

    P, A = H.p, H.a
    n = P.order
    caps.check("monoidal", G.order ** A.order * G.order ** ((n - 1) ** 2))
    elems = A.elements
    add = [[A.index(A.add(u, v)) for v in elems] for u in elems]
    maps = []
    for f in product(range(G.order), repeat=A.order):
        if f[0] == 0 and all(f[add[a][b]] == G.mul[f[a]][f[b]]
                             for a in range(A.order) for b in range(A.order)):
            maps.append(f)
    reps = []
    for f in maps:
        for values in product(range(G.order), repeat=(n - 1) ** 2):
            m = make_datum(H, G, lam_from_values(n, values), f=f)
            if not validate_datum(m):
                continue
            if not any(isomorphic(r, m, caps=caps) for r in reps if r.f == f):
                reps.append(m)
    return reps


# -------------------------------------------------------------- extensions

def _normal_form_table(P, G, phi, f):
    """(p, g)(q, h) = (pq, g phi_p(h) f(p, q)) on index p*|G| + g."""
    m = G.order
    mul = G.mul
    return tuple(
        tuple((P.mul[p][q]) * m + mul[mul[g][phi[p][h]]][f[p][q]]
              for q in range(P.order) for h in range(m))
        for p in range(P.order) for g in range(m))


def _transport(table, m, c):
    """Table moved along theta(p, g) = (p, g c(p))."""
    n = len(table)
    theta = [0] * n
    for x in range(n):
        p, g = divmod(x, m)
        theta[x] = p * m + c[p][g]
    inv = [0] * n
    for x, y in enumerate(theta):
        inv[y] = x
    return tuple(tuple(theta[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n))


def brute_extensions(P, G, caps=DEFAULT_CAPS):
    """Number of extensions of P by G up to equivalence, by table enumeration.

    Every extension is equivalent to a normal-form table on P x G (normalized
    section); such tables are enumerated with backtracking on associativity,
    each survivor is fully validated, and equivalences fixing G and P are the
    maps (p, g) -> (p, g c(p)). Classes are counted by the least transported
    table.
    """
    caps.check("extensions", P.order * G.order)
    auts = all_permutation_automorphisms(G)
    n, m = P.order, G.order
    slots = [(p, q) for p in range(1, n) for q in range(1, n)]
    tables = set()
    for rest in product(range(len(auts)), repeat=n - 1):
        phi = [auts[0]] + [auts[i] for i in rest]
        if auts[0] != tuple(range(m)):
            raise AssertionError("identity automorphism missing")
        f = [[0] * n for _ in range(n)]
        assigned = [[p == 0 or q == 0 for q in range(n)] for p in range(n)]

        def assoc_ok():
            # ((p,g)(q,h))(r,k) = (p,g)((q,h)(r,k)) on the section elements and G
            for p in range(n):
                for q in range(n):
                    for r in range(n):
                        pq, qr = P.mul[p][q], P.mul[q][r]
                        if not (assigned[p][q] and assigned[pq][r] and
                                assigned[q][r] and assigned[p][qr]):
                            continue
                        left = G.mul[f[p][q]][f[pq][r]]
                        right = G.mul[phi[p][f[q][r]]][f[p][qr]]
                        if left != right:
                            return False
                        for h in range(m):
                            a = G.mul[phi[p][phi[q][h]]][f[p][q]]
                            b = G.mul[f[p][q]][phi[pq][h]]
                            if a != b:
                                return False
            return True

        def search(i):
            if i == len(slots):
                table = _normal_form_table(P, G, phi, f)
                validate_group(table)
                tables.add(table)
                return
            p, q = slots[i]
            for g in range(m):
                f[p][q] = g
                assigned[p][q] = True
                if assoc_ok():
                    search(i + 1)
                assigned[p][q] = False
            f[p][q] = 0

        search(0)
    canon = set()
    for table in tables:
        best = None
        for rest in product(range(m), repeat=n - 1):
            c = [tuple(range(m))] + [tuple(G.mul[g][r] for g in range(m)) for r in rest]
            t = _transport(table, m, c)
            if best is None or t < best:
                best = t
        canon.add(best)
    return len(canon)


# ------------------------------------------------------------- cyclic groups

def periodic_h2_cyclic(P, A):
    """|H^2(Z/m; A)| = |A^P| / |N A| for P cyclic with generator 1.

    Uses the 2-periodic resolution of a cyclic group: no cochains at all,
    only the fixed points and the norm image counted element by element.
    """
    m = P.order
    gen = 1 % m
    if P.element_order(gen) != m:
        raise ValueError("element 1 must generate P")
    elems = A.elements
    fixed = [v for v in elems if A.act(gen, v) == v]
    norms = set()
    for v in elems:
        acc, x = A.zero, v
        for _ in range(m):
            acc = A.add(acc, x)
            x = A.act(gen, x)
        norms.add(acc)
    return len(fixed) // len(norms)
