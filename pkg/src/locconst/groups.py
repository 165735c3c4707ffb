"""Finite groups given by multiplication tables or by presentations.

Elements of a table group are the indices ``0 .. order-1`` and the identity
is always index 0. Anything derived from a table (subgroups, quotients,
automorphism groups) is re-indexed so that this stays true, choosing the
smallest index whenever a representative has to be picked.
"""
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from math import gcd

from . import kernels
from .config import DEFAULT_CAPS
from .errors import (CapExceeded, NoIdentity, NoInverse, NotAssociative,
                     PresentationNotRealizable, ValidationError)


@dataclass(frozen=True, eq=True)
class GroupTable:
    mul: tuple

    @property
    def order(self):
        return len(self.mul)

    def __len__(self):
        return len(self.mul)

    def __call__(self, a, b):
        return self.mul[a][b]

    @cached_property
    def inv(self):
        out = [0] * self.order
        for a in range(self.order):
            out[a] = self.mul[a].index(0)
        return tuple(out)

    @cached_property
    def flat(self):
        return tuple(x for row in self.mul for x in row)

    @cached_property
    def is_abelian(self):
        return all(self.mul[a][b] == self.mul[b][a]
                   for a in range(self.order) for b in range(a))

    def power(self, a, k):
        if k < 0:
            a, k = self.inv[a], -k
        x = 0
        for _ in range(k):
            x = self.mul[x][a]
        return x

    def element_order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.mul[x][a]
            k += 1
        return k

    def conj(self, g, x):
        """g x g^-1."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    def evaluate(self, word, images):
        """Value of a signed 1-based word with generator i+1 sent to images[i]."""
        x = 0
        for letter in word:
            y = images[letter - 1] if letter > 0 else self.inv[images[-letter - 1]]
            x = self.mul[x][y]
        return x


@dataclass(frozen=True)
class Presentation:
    n_generators: int
    relators: tuple = ()

    def __post_init__(self):
        if self.n_generators < 0:
            raise ValidationError("negative generator count")
        rels = tuple(tuple(int(x) for x in w) for w in self.relators)
        object.__setattr__(self, "relators", rels)
        for w in rels:
            for letter in w:
                if letter == 0 or abs(letter) > self.n_generators:
                    raise ValidationError(
                        f"relator letter {letter} outside 1..{self.n_generators}",
                        witness=w)

    def exponent_matrix(self):
        """Rows = relators, columns = generators, entries = exponent sums."""
        rows = []
        for w in self.relators:
            row = [0] * self.n_generators
            for letter in w:
                row[abs(letter) - 1] += 1 if letter > 0 else -1
            rows.append(row)
        return rows


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism into a table group.

    For a Presentation source ``images`` lists generator images; for a
    GroupTable source it lists the image of every element.
    """
    source: object
    target: GroupTable
    images: tuple

    def __call__(self, x):
        return self.images[x]


# ---------------------------------------------------------------- validation

def group_violations(mul):
    """All axiom violations of a raw square table, inverses first."""
    n = len(mul)
    found = []
    for a in range(n):
        if not any(mul[a][b] == 0 and mul[b][a] == 0 for b in range(n)):
            found.append(NoInverse(f"element {a} has no two-sided inverse", witness=a))
    for a in range(n):
        if mul[0][a] != a or mul[a][0] != a:
            found.append(NoIdentity(f"index 0 is not an identity: fails at {a}", witness=a))
            break
    flat = [x for row in mul for x in row]
    w = kernels.associativity_witness(flat, n)
    if w is not None:
        found.append(NotAssociative(f"(ab)c != a(bc) at {w}", witness=w))
    return found


def validate_group(table):
    """Check a raw table and return a GroupTable.

    Raises the first violation found; the complete list is attached as
    ``err.violations``.
    """
    mul = tuple(tuple(int(x) for x in row) for row in table)
    n = len(mul)
    if n == 0:
        raise ValidationError("empty table")
    for i, row in enumerate(mul):
        if len(row) != n:
            raise ValidationError(f"row {i} has length {len(row)}, expected {n}", witness=i)
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise ValidationError(f"entry ({i},{j})={x} out of range", witness=(i, j))
    found = group_violations(mul)
    if found:
        err = found[0]
        err.violations = found
        raise err
    return GroupTable(mul)


# ------------------------------------------------------------- constructors

def cyclic(n):
    return GroupTable(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def trivial_group():
    return cyclic(1)


def from_elements(elements, op):
    """Table of the group formed by ``elements`` (identity first) under ``op``."""
    index = {x: i for i, x in enumerate(elements)}
    return GroupTable(tuple(tuple(index[op(a, b)] for b in elements) for a in elements))


def _compose(p, q):
    return tuple(p[i] for i in q)


def permutation_group(generators, degree):
    """Closure of some permutations of range(degree), sorted lexicographically."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = _compose(tuple(g), x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return from_elements(sorted(seen), _compose)


def symmetric(n):
    gens = []
    if n >= 2:
        gens.append((1, 0) + tuple(range(2, n)))
        gens.append(tuple(range(1, n)) + (0,))
    return permutation_group(gens, n)


def dihedral(n):
    """Dihedral group of order 2n acting on an n-gon."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group([rot, ref], n)


def quaternion():
    # (sign, unit) pairs, unit 0..3 = 1, i, j, k
    units = {(0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
             (1, 0): (0, 1), (2, 0): (0, 2), (3, 0): (0, 3),
             (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
             (1, 2): (0, 3), (2, 3): (0, 1), (3, 1): (0, 2),
             (2, 1): (1, 3), (3, 2): (1, 1), (1, 3): (1, 2)}

    def op(x, y):
        s, u = units[(x[1], y[1])]
        return ((x[0] + y[0] + s) % 2, u)

    elements = [(s, u) for u in range(4) for s in range(2)]
    return from_elements(elements, op)


def direct_product(G, H):
    """G x H with element (g, h) at index g*|H| + h."""
    m = H.order
    return GroupTable(tuple(
        tuple(G.mul[a // m][b // m] * m + H.mul[a % m][b % m]
              for b in range(G.order * m))
        for a in range(G.order * m)))


# ---------------------------------------------------------------- structure

def generated_subgroup(G, gens):
    """Sorted element list of the subgroup generated by ``gens``."""
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = G.mul[x][g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def generating_set(G):
    """Greedy generating set: scan elements by index, keep those not yet reached."""
    gens = []
    span = {0}
    for x in range(1, G.order):
        if x not in span:
            gens.append(x)
            span = set(generated_subgroup(G, gens))
    return gens


def conjugacy_classes(G):
    seen = set()
    classes = []
    for x in range(G.order):
        if x in seen:
            continue
        cls = sorted({G.conj(g, x) for g in range(G.order)})
        seen.update(cls)
        classes.append(cls)
    return classes


def center(G):
    return [z for z in range(G.order)
            if all(G.mul[z][g] == G.mul[g][z] for g in range(G.order))]


def subgroup_table(G, elements):
    """Table of a subgroup; element i of the result is ``elements[i]`` after sorting."""
    elems = sorted(elements)
    if elems[0] != 0:
        raise ValidationError("subgroup must contain the identity")
    index = {x: i for i, x in enumerate(elems)}
    try:
        mul = tuple(tuple(index[G.mul[a][b]] for b in elems) for a in elems)
    except KeyError as exc:
        raise ValidationError("element list is not closed under multiplication",
                              witness=exc.args[0]) from None
    return GroupTable(mul), elems


def is_normal(G, elements):
    s = set(elements)
    return all(G.conj(g, x) in s for g in range(G.order) for x in elements)


def quotient(G, normal):
    """G/N with minimal-index coset representatives.

    Returns (table, transversal, projection) where transversal[i] is the
    representative of coset i and projection[g] is the coset of g.
    """
    projection = [-1] * G.order
    transversal = []
    for g in range(G.order):
        if projection[g] >= 0:
            continue
        i = len(transversal)
        transversal.append(g)
        for n in normal:
            projection[G.mul[g][n]] = i
    mul = tuple(tuple(projection[G.mul[a][b]] for b in transversal) for a in transversal)
    return GroupTable(mul), tuple(transversal), tuple(projection)


def _extend_on_generators(G, H, gens, images):
    """Unique map G -> H with gens[i] -> images[i] compatible with right
    multiplication by generators, or None if the assignment is inconsistent."""
    mapping = [-1] * G.order
    mapping[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g, h in zip(gens, images):
            y = G.mul[x][g]
            v = H.mul[mapping[x]][h]
            if mapping[y] < 0:
                mapping[y] = v
                queue.append(y)
            elif mapping[y] != v:
                return None
    return mapping


def _is_hom(G, H, mapping):
    return all(mapping[G.mul[a][b]] == H.mul[mapping[a]][mapping[b]]
               for a in range(G.order) for b in range(G.order))


def automorphisms(G, caps=DEFAULT_CAPS):
    """All automorphisms of G as permutation tuples, sorted (identity first)."""
    caps.check("aut_order", G.order)
    gens = generating_set(G)
    orders = [G.element_order(x) for x in range(G.order)]
    choices = [[y for y in range(G.order) if orders[y] == orders[g]] for g in gens]
    perms = []
    for images in product(*choices):
        m = _extend_on_generators(G, G, gens, images)
        if m is None or len(set(m)) != G.order or not _is_hom(G, G, m):
            continue
        perms.append(tuple(m))
    perms.sort()
    return perms


@dataclass(frozen=True)
class Structure:
    center: tuple          # element indices of Z(G)
    aut: GroupTable        # composition table, element i is aut_perms[i]
    aut_perms: tuple
    ad: tuple              # ad[g] = index in aut of x -> g x g^-1
    inn: tuple             # sorted aut indices of inner automorphisms
    out: GroupTable
    out_transversal: tuple  # aut index representing each outer class
    out_projection: tuple   # aut index -> outer class

    def aut_index(self, perm):
        return self._index[tuple(perm)]

    @cached_property
    def _index(self):
        return {p: i for i, p in enumerate(self.aut_perms)}


def structure(G, caps=DEFAULT_CAPS):
    """Center, Aut(G), Inn(G) and Out(G) by brute force."""
    perms = automorphisms(G, caps)
    index = {p: i for i, p in enumerate(perms)}
    aut = GroupTable(tuple(tuple(index[_compose(p, q)] for q in perms) for p in perms))
    ad = tuple(index[tuple(G.conj(g, x) for x in range(G.order))] for g in range(G.order))
    inn = tuple(sorted(set(ad)))
    out, transversal, projection = quotient(aut, inn)
    return Structure(tuple(center(G)), aut, tuple(perms), ad, inn, out,
                     transversal, projection)


# -------------------------------------------------------------- homomorphisms

def enumerate_homs(P, G, caps=DEFAULT_CAPS):
    """All homomorphisms P -> G in lexicographic order of generator images.

    ``P`` is a Presentation (images are per generator) or a GroupTable
    (images are per element, searched over a greedy generating set).
    """
    if isinstance(P, Presentation):
        needed = G.order ** P.n_generators
        caps.check("hom_tuples", needed)
        found = kernels.search_homs(G.flat, G.inv, G.order, P.n_generators,
                                    P.relators, caps.hom_tuples)
        return [GroupHom(P, G, t) for t in found]
    gens = generating_set(P)
    caps.check("hom_tuples", G.order ** len(gens))
    homs = []
    for images in product(range(G.order), repeat=len(gens)):
        m = _extend_on_generators(P, G, gens, images)
        if m is not None and _is_hom(P, G, m):
            homs.append(GroupHom(P, G, tuple(m)))
    return homs


def conjugate_hom(hom, g):
    """ad(g) o hom."""
    G = hom.target
    return GroupHom(hom.source, G, tuple(G.conj(g, x) for x in hom.images))


def realize_presentation(P, caps=DEFAULT_CAPS):
    """Table for a presented group when it can be read off without coset
    enumeration: no generators (trivial group) or one generator (cyclic of
    order gcd of the relator exponent sums).

    Returns (table, generator element indices).
    """
    if P.n_generators == 0:
        return trivial_group(), ()
    if P.n_generators == 1:
        m = 0
        for row in P.exponent_matrix():
            m = gcd(m, row[0])
        if m == 0:
            raise PresentationNotRealizable("presented group is infinite cyclic")
        caps.check("table_order", m)
        return cyclic(m), (1 % m,)
    raise PresentationNotRealizable(
        f"cannot build a table for a {P.n_generators}-generator presentation "
        "without coset enumeration; supply pi1 as a table")


def isomorphic_tables(G, H):
    """Brute-force isomorphism test; returns an element map or None."""
    if G.order != H.order:
        return None
    gens = generating_set(G)
    orders_h = [H.element_order(y) for y in range(H.order)]
    choices = [[y for y in range(H.order) if orders_h[y] == G.element_order(g)] for g in gens]
    for images in product(*choices):
        m = _extend_on_generators(G, H, gens, images)
        if m is not None and len(set(m)) == G.order and _is_hom(G, H, m):
            return tuple(m)
    return None


def all_permutation_automorphisms(G):
    """Automorphisms by scanning every permutation fixing 0; independent of
    the generator-image search in ``automorphisms``. Desk scale only."""
    out = []
    for rest in permutations(range(1, G.order)):
        p = (0,) + rest
        if _is_hom(G, G, p):
            out.append(p)
    return out
