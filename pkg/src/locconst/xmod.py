"""Crossed modules and skeletal gr-categories.

A crossed module is d: G1 -> G0 with a left action of G0 on G1 such that
    (i)  d(g.h) = g d(h) g^-1
    (ii) d(k).h = k h k^-1.
A skeletal gr-category is (P, A, assoc): a group of isomorphism classes, a
P-module of unit automorphisms and a normalized associator 3-cocycle.
"""
from dataclasses import dataclass
from typing import NamedTuple

from .config import DEFAULT_CAPS
from .errors import (ActionInvalid, AxiomIIViolated, AxiomIViolated, NotACocycle,
                     ValidationError)
from .groups import GroupTable, quotient, structure, subgroup_table
from .modules import Cochain, PModule, abelian_coordinates, check_module
from .spaces import first_cocycle_failure


@dataclass(frozen=True)
class CrossedModule:
    g_minus1: GroupTable
    g_0: GroupTable
    d: tuple           # d[h] for every h in g_minus1
    action: tuple      # action[g][h] = g.h


@dataclass(frozen=True)
class SkeletalGrCat:
    p: GroupTable
    a: PModule
    assoc: Cochain


def validate_crossed_module(g1, g0, d, action):
    d = tuple(int(x) for x in d)
    action = tuple(tuple(int(x) for x in row) for row in action)
    if len(d) != g1.order or any(not 0 <= x < g0.order for x in d):
        raise ValidationError("d must list an image in G0 for every element of G1")
    for a in range(g1.order):
        for b in range(g1.order):
            if d[g1.mul[a][b]] != g0.mul[d[a]][d[b]]:
                raise ValidationError(f"d is not a homomorphism at ({a},{b})", witness=(a, b))
    if len(action) != g0.order or any(len(row) != g1.order for row in action):
        raise ActionInvalid("action must be a |G0| x |G1| table")
    if action[0] != tuple(range(g1.order)):
        raise ActionInvalid("identity of G0 does not act trivially", witness=0)
    for g, row in enumerate(action):
        if sorted(row) != list(range(g1.order)):
            raise ActionInvalid(f"action of {g} is not a bijection", witness=g)
        for a in range(g1.order):
            for b in range(g1.order):
                if row[g1.mul[a][b]] != g1.mul[row[a]][row[b]]:
                    raise ActionInvalid(f"action of {g} is not multiplicative", witness=g)
    for g in range(g0.order):
        for g2 in range(g0.order):
            gg = g0.mul[g][g2]
            if any(action[gg][h] != action[g][action[g2][h]] for h in range(g1.order)):
                raise ActionInvalid(f"action does not respect {g}*{g2}", witness=(g, g2))
    for g in range(g0.order):
        for h in range(g1.order):
            if d[action[g][h]] != g0.conj(g, d[h]):
                raise AxiomIViolated(f"d(g.h) != g d(h) g^-1 at g={g}, h={h}", witness=(g, h))
    for k in range(g1.order):
        for h in range(g1.order):
            if action[d[k]][h] != g1.conj(k, h):
                raise AxiomIIViolated(f"d(k).h != k h k^-1 at k={k}, h={h}", witness=(k, h))
    return CrossedModule(g1, g0, d, action)


def adjoint_crossed_module(G, caps=DEFAULT_CAPS):
    """G -> Aut(G) by inner automorphisms, Aut(G) acting naturally."""
    st = structure(G, caps)
    action = tuple(tuple(perm) for perm in st.aut_perms)
    return validate_crossed_module(G, st.aut, st.ad, action)


class KerCoker(NamedTuple):
    ker: GroupTable
    ker_elements: tuple         # ker index -> element of G1
    coker: GroupTable
    coker_transversal: tuple    # coker index -> minimal element of G0
    coker_projection: tuple     # element of G0 -> coker index
    certificate: dict


def ker_coker(x):
    g1, g0 = x.g_minus1, x.g_0
    ker_elems = [h for h in range(g1.order) if x.d[h] == 0]
    ker, ker_elems = subgroup_table(g1, ker_elems)
    image = sorted(set(x.d))
    central = all(g1.mul[k][h] == g1.mul[h][k] for k in ker_elems for h in range(g1.order))
    fixed_by_image = all(x.action[x.d[h]][k] == k for h in range(g1.order) for k in ker_elems)
    normal_image = all(g0.conj(g, i) in set(image) for g in range(g0.order) for i in image)
    if not (central and fixed_by_image and normal_image):
        raise AssertionError("crossed module invariants broken; validation is inconsistent")
    coker, transversal, projection = quotient(g0, image)
    cert = {"ker_central": central, "ker_abelian": ker.is_abelian,
            "ker_fixed_by_image": fixed_by_image, "image_normal": normal_image}
    return KerCoker(ker, tuple(ker_elems), coker, transversal, projection, cert)


def make_gr_cat(p, a, assoc):
    check_module(a)
    if a.group != p or assoc.module != a or assoc.degree != 3:
        raise ValidationError("associator must be a degree-3 cochain in the unit module")
    bad = first_cocycle_failure(assoc)
    if bad is not None:
        raise NotACocycle(f"associator is not a cocycle at {bad}", witness=bad)
    return SkeletalGrCat(p, a, assoc)


def gr_cat_from_two_type(t):
    """The skeletal model of the loop-space gr-category of a 2-type."""
    return SkeletalGrCat(t.pi1, t.pi2, t.k)


def skeletal_from_crossed_module(x):
    """(coker d, ker d, induced action, associator) for a crossed module.

    The section of G0 -> coker d is the minimal-index transversal; for each
    pair the lift h(p, q) with d(h) = s(p)s(q)s(pq)^-1 is the minimal-index
    solution, and the associator is
        (s(p).h(q,r)) h(p,qr) (h(p,q) h(pq,r))^-1  in ker d.
    Another section gives a cohomologous, not necessarily equal, cocycle.
    """
    g1, g0 = x.g_minus1, x.g_0
    kc = ker_coker(x)
    P = kc.coker
    s = kc.coker_transversal
    coords = abelian_coordinates(kc.ker)
    ker_index = {e: i for i, e in enumerate(kc.ker_elements)}
    basis = [coords.from_vec[tuple(int(i == j) for j in range(len(coords.factors)))]
             for i in range(len(coords.factors))]
    mats = []
    for c in range(P.order):
        cols = [coords.to_vec[ker_index[x.action[s[c]][kc.ker_elements[b]]]] for b in basis]
        mats.append(tuple(tuple(col[i] for col in cols) for i in range(len(coords.factors))))
    A = check_module(PModule(P, coords.factors, tuple(mats)))

    lift = {}
    for p in range(P.order):
        for q in range(P.order):
            target = g0.mul[g0.mul[s[p]][s[q]]][g0.inv[s[P.mul[p][q]]]]
            lift[p, q] = min(h for h in range(g1.order) if x.d[h] == target)

    def z(p, q, r):
        left = g1.mul[x.action[s[p]][lift[q, r]]][lift[p, P.mul[q][r]]]
        right = g1.mul[lift[p, q]][lift[P.mul[p][q], r]]
        val = g1.mul[left][g1.inv[right]]
        return coords.to_vec[ker_index[val]]

    assoc = Cochain.from_function(A, 3, z)
    return make_gr_cat(P, A, assoc)
