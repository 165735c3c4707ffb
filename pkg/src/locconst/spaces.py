"""Finite models of spaces: simplicial 2-complexes and algebraic 2-types.

Paths compose left to right: the word of a loop lists its edges in the
order they are traversed. Under this convention a based loop class acts on
fibres from the right, so the conjugation identifying two monodromy
representations is written on the left, phi = ad(g) o psi.
"""
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .cohomology import coboundary
from .errors import (ActionNotHomomorphic, NotACocycle, ValidationError,
                     VertexOutOfRange)
from .groups import GroupTable, Presentation, realize_presentation, validate_group
from .modules import Cochain, PModule, check_module, module_from_generators, slot_tuples
from .snf import abelian_invariants


@dataclass(frozen=True)
class Complex2:
    n_vertices: int
    edges: tuple = ()
    triangles: tuple = ()


def _triangle_walk(edges, tri):
    """Signs (+1 forward, -1 backward) making the three edges a closed walk."""
    e1 = edges[tri[0]]
    for first in (1, -1):
        start, cur = (e1[0], e1[1]) if first > 0 else (e1[1], e1[0])
        signs = [first]
        ok = True
        for e in tri[1:]:
            u, v = edges[e]
            if u == cur:
                signs.append(1)
                cur = v
            elif v == cur:
                signs.append(-1)
                cur = u
            else:
                ok = False
                break
        if ok and cur == start:
            return signs
    return None


def validate_complex(n_vertices, edges, triangles=()):
    n = int(n_vertices)
    if n < 0:
        raise ValidationError("negative vertex count")
    edges = tuple(tuple(int(x) for x in e) for e in edges)
    for i, e in enumerate(edges):
        if len(e) != 2 or not all(0 <= x < n for x in e):
            raise VertexOutOfRange(f"edge {i} = {e} has a vertex outside 0..{n - 1}", witness=i)
        if e[0] == e[1]:
            raise ValidationError(f"edge {i} is a loop", witness=i)
    triangles = tuple(tuple(int(x) for x in t) for t in triangles)
    for i, t in enumerate(triangles):
        if len(t) != 3 or not all(0 <= x < len(edges) for x in t):
            raise ValidationError(f"triangle {i} = {t} refers to missing edges", witness=i)
        verts = {v for e in t for v in edges[e]}
        if len(verts) != 3 or _triangle_walk(edges, t) is None:
            raise ValidationError(f"triangle {i} is not a closed walk on three vertices",
                                  witness=i)
    return Complex2(n, edges, triangles)


def components(X):
    """Connected components of the 1-skeleton, each sorted, ordered by least vertex."""
    parent = list(range(X.n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in X.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups = {}
    for v in range(X.n_vertices):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


class Monodromy0(NamedTuple):
    components: list
    n_components: int
    stalk_size: int
    order: int       # |M|^#X


def pi0_and_monodromy0(X, M):
    """Components of X and the size of M^{#X}; M is a GroupTable or a finite set size/list."""
    comps = components(X)
    if isinstance(M, GroupTable):
        m = M.order
    elif isinstance(M, int):
        m = M
    else:
        m = len(M)
    return Monodromy0(comps, len(comps), m, m ** len(comps))


def pi1_presentation(X, basepoint=0):
    """Edge-path presentation of pi_1(X, basepoint).

    BFS spanning tree from the basepoint, neighbours visited by edge index;
    one generator per non-tree edge of the component (in edge order), one
    relator per triangle of the component.
    """
    if not 0 <= basepoint < X.n_vertices:
        raise VertexOutOfRange(f"basepoint {basepoint} outside 0..{X.n_vertices - 1}",
                               witness=basepoint)
    incident = [[] for _ in range(X.n_vertices)]
    for i, (u, v) in enumerate(X.edges):
        incident[u].append(i)
        incident[v].append(i)
    seen = {basepoint}
    tree = set()
    queue = deque([basepoint])
    while queue:
        x = queue.popleft()
        for i in sorted(incident[x]):
            u, v = X.edges[i]
            y = v if u == x else u
            if y not in seen:
                seen.add(y)
                tree.add(i)
                queue.append(y)
    gen_of = {}
    for i, (u, v) in enumerate(X.edges):
        if u in seen and i not in tree:
            gen_of[i] = len(gen_of) + 1
    relators = []
    for tri in X.triangles:
        if X.edges[tri[0]][0] not in seen:
            continue
        word = []
        for e, s in zip(tri, _triangle_walk(X.edges, tri)):
            if e in gen_of:
                word.append(s * gen_of[e])
        relators.append(tuple(word))
    return Presentation(len(gen_of), tuple(relators))


def abelianization(P):
    """Invariant factors of P^ab; 0 stands for a free Z summand."""
    return abelian_invariants(P.exponent_matrix(), P.n_generators)


# ----------------------------------------------------------------- 2-types

@dataclass(frozen=True)
class TwoType:
    pi1: GroupTable
    pi2: PModule
    k: Cochain
    presentation: object = None    # original Presentation, if pi1 was given that way


def _check_relators(P, factors, gen_mats):
    """Generator matrices must kill every relator (as permutations of the module)."""
    tmp = PModule.trivial(GroupTable(((0,),)), factors)
    elems = tmp.elements
    index = {v: i for i, v in enumerate(elems)}

    def perm(mat):
        return tuple(index[tuple(sum(m * x for m, x in zip(row, v)) % d
                                 for row, d in zip(mat, factors))] for v in elems)

    perms = {}
    for g in range(1, P.n_generators + 1):
        mat = gen_mats.get(g)
        p = perm(mat) if mat is not None else tuple(range(len(elems)))
        if len(set(p)) != len(p):
            raise ActionNotHomomorphic(f"matrix of generator {g} is not invertible", witness=g)
        perms[g] = p
        inv = [0] * len(p)
        for i, j in enumerate(p):
            inv[j] = i
        perms[-g] = tuple(inv)
    ident = tuple(range(len(elems)))
    for w in P.relators:
        x = ident
        for letter in w:
            x = tuple(x[perms[letter][e]] for e in range(len(elems)))
        if x != ident:
            raise ActionNotHomomorphic(f"relator {w} does not act trivially", witness=w)


def first_cocycle_failure(k):
    d = coboundary(k)
    for t, v in zip(slot_tuples(k.module.group, 4), d.values):
        if any(v):
            return t
    return None


def make_two_type(pi1, pi2, k, presentation=None):
    check_module(pi2)
    if pi2.group != pi1:
        raise ValidationError("pi2 is a module over a different group")
    if k.degree != 3 or k.module != pi2:
        raise ValidationError("k must be a degree-3 cochain valued in pi2")
    bad = first_cocycle_failure(k)
    if bad is not None:
        raise NotACocycle(f"d k is nonzero at {bad}", witness=bad)
    return TwoType(pi1, pi2, k, presentation)


def validate_two_type(raw):
    """TwoType from parsed JSON-like data.

    ``raw = {"pi1": group, "pi2": {"factors": [...], "action": {...}},
    "k": {"entries": [[[p, q, r], [a, ...]], ...]}}``. Action keys are element
    indices for a table pi1 and 1-based generator indices for a presentation.
    """
    from .io import group_from_json

    pi1_raw = group_from_json(raw["pi1"])
    mod = raw.get("pi2", {}) or {}
    factors = tuple(int(d) for d in mod.get("factors", ()))
    action = {int(key): tuple(tuple(int(x) for x in row) for row in mat)
              for key, mat in (mod.get("action") or {}).items()}
    presentation = None
    if isinstance(pi1_raw, Presentation):
        presentation = pi1_raw
        _check_relators(pi1_raw, factors, action)
        table, gen_elems = realize_presentation(pi1_raw)
        action = {gen_elems[g - 1]: mat for g, mat in action.items()
                  if gen_elems[g - 1] != 0}
        pi1 = table
    else:
        pi1 = pi1_raw
    pi2 = module_from_generators(pi1, factors, action)
    entries = (raw.get("k") or {}).get("entries", [])
    k = Cochain.from_entries(pi2, 3, [(tuple(t), tuple(v)) for t, v in entries])
    return make_two_type(pi1, pi2, k, presentation)
