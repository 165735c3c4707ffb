"""Finite P-modules, normalized cochains and module homomorphisms.

A PModule is Z/d_1 + ... + Z/d_r with every element p of a finite group P
acting by an integer matrix, entry (i, j) read mod d_i. Vectors are tuples
of residues. Cochains are normalized: a degree-n cochain stores one vector
per n-tuple of non-identity elements, in lexicographic order of tuples;
tuples containing the identity are implicitly zero.
"""
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import ActionNotHomomorphic, NotEquivariant, ValidationError
from .groups import GroupTable, trivial_group
from .snf import snf_lists


def _apply(matrix, factors, v):
    return tuple(sum(m * x for m, x in zip(row, v)) % d
                 for row, d in zip(matrix, factors))


def _identity_matrix(r):
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


@dataclass(frozen=True)
class PModule:
    group: GroupTable
    factors: tuple
    action: tuple      # action[p] is an r x r matrix for every element p

    @property
    def rank(self):
        return len(self.factors)

    @cached_property
    def order(self):
        n = 1
        for d in self.factors:
            n *= d
        return n

    @cached_property
    def zero(self):
        return (0,) * self.rank

    @cached_property
    def elements(self):
        """All vectors; first coordinate most significant, zero first."""
        return tuple(product(*[range(d) for d in self.factors]))

    @cached_property
    def _index(self):
        return {v: i for i, v in enumerate(self.elements)}

    def index(self, v):
        return self._index[tuple(v)]

    def reduce(self, v):
        return tuple(x % d for x, d in zip(v, self.factors))

    def add(self, u, v):
        return tuple((x + y) % d for x, y, d in zip(u, v, self.factors))

    def sub(self, u, v):
        return tuple((x - y) % d for x, y, d in zip(u, v, self.factors))

    def neg(self, u):
        return tuple((-x) % d for x, d in zip(u, self.factors))

    def scale(self, k, u):
        return tuple((k * x) % d for x, d in zip(u, self.factors))

    def act(self, p, v):
        return _apply(self.action[p], self.factors, v)

    @cached_property
    def is_trivial_action(self):
        return all(self.act(p, e) == e
                   for p in range(self.group.order) for e in self._basis())

    def _basis(self):
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    @classmethod
    def trivial(cls, group, factors):
        factors = tuple(int(d) for d in factors)
        return cls(group, factors, (_identity_matrix(len(factors)),) * group.order)

    def fixed_points(self):
        return [v for v in self.elements
                if all(self.act(p, v) == v for p in range(self.group.order))]


def _element_permutation(factors, matrix, elements, index):
    return tuple(index[_apply(matrix, factors, v)] for v in elements)


def check_module(M):
    """Verify well-definedness, invertibility and the action law; returns M."""
    P, r = M.group, M.rank
    for d in M.factors:
        if d < 2:
            raise ValidationError(f"cyclic factor order {d} must be >= 2", witness=d)
    if len(M.action) != P.order:
        raise ActionNotHomomorphic("action must give one matrix per group element")
    elements, index = M.elements, M._index
    perms = []
    for p, mat in enumerate(M.action):
        if len(mat) != r or any(len(row) != r for row in mat):
            raise ActionNotHomomorphic(f"action matrix of {p} has wrong shape", witness=p)
        for i in range(r):
            for j in range(r):
                if (mat[i][j] * M.factors[j]) % M.factors[i]:
                    raise ActionNotHomomorphic(
                        f"entry ({i},{j}) of the matrix for {p} is not well defined "
                        f"Z/{M.factors[j]} -> Z/{M.factors[i]}", witness=p)
        perm = _element_permutation(M.factors, mat, elements, index)
        if len(set(perm)) != len(perm):
            raise ActionNotHomomorphic(f"matrix for {p} is not invertible", witness=p)
        perms.append(perm)
    if perms and perms[0] != tuple(range(len(elements))):
        raise ActionNotHomomorphic("identity does not act trivially", witness=0)
    for p in range(P.order):
        for q in range(P.order):
            pq = P.mul[p][q]
            if any(perms[pq][x] != perms[p][perms[q][x]] for x in range(len(elements))):
                raise ActionNotHomomorphic(
                    f"action of {p}*{q} differs from composite action", witness=(p, q))
    return M


def module_from_generators(P, factors, gen_action):
    """PModule from matrices on some elements of P, extended multiplicatively.

    ``gen_action`` maps element index -> matrix; missing elements act
    trivially only if they are not generated. Raises ActionNotHomomorphic
    when the assignment is inconsistent.
    """
    factors = tuple(int(d) for d in factors)
    r = len(factors)
    ident = _identity_matrix(r)
    if not gen_action:
        return check_module(PModule.trivial(P, factors))
    tmp = PModule.trivial(trivial_group(), factors)
    elements, index = tmp.elements, tmp._index
    gens = sorted(gen_action)
    gperm = {g: _element_permutation(factors, tuple(map(tuple, gen_action[g])), elements, index)
             for g in gens}
    mats = {0: ident}
    perms = {0: tuple(range(len(elements)))}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = P.mul[x][g]
            perm = tuple(perms[x][gperm[g][e]] for e in range(len(elements)))
            if y not in perms:
                perms[y] = perm
                mats[y] = _matmul_mod(mats[x], tuple(map(tuple, gen_action[g])), factors)
                queue.append(y)
            elif perms[y] != perm:
                raise ActionNotHomomorphic(
                    f"generator matrices are inconsistent at element {y}", witness=y)
    for p in range(P.order):
        if p not in mats:
            mats[p] = ident
    M = PModule(P, factors, tuple(mats[p] for p in range(P.order)))
    return check_module(M)


def _matmul_mod(a, b, factors):
    r = len(factors)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(r)) % factors[i]
                       for j in range(r)) for i in range(r))


def restrict_scalars(M, group, images):
    """Pull back M along a hom ``group -> M.group`` given per element."""
    return PModule(group, M.factors, tuple(M.action[images[p]] for p in range(group.order)))


# ------------------------------------------------------- abelian table groups

@dataclass(frozen=True)
class AbelianCoordinates:
    """Isomorphism between an abelian table group and Z/d_1 + ... + Z/d_r."""
    factors: tuple
    to_vec: tuple        # element index -> vector

    @cached_property
    def from_vec(self):
        return {v: a for a, v in enumerate(self.to_vec)}

    def module(self, P=None):
        """The group as a PModule over P (trivial action)."""
        return PModule.trivial(P if P is not None else trivial_group(), self.factors)


def abelian_coordinates(G):
    """Cyclic decomposition of an abelian table group by SNF of its relations."""
    if not G.is_abelian:
        raise ValidationError("group is not abelian")
    n = G.order
    rows = []
    for a in range(n):
        for b in range(a, n):
            row = [0] * n
            row[a] += 1
            row[b] += 1
            row[G.mul[a][b]] -= 1
            rows.append(row)
    r = snf_lists(rows, n, want_u=False, want_v=True)
    diag = [r.a[j][j] if j < len(rows) else 0 for j in range(n)]
    keep = [j for j in range(n) if diag[j] != 1]
    factors = tuple(diag[j] for j in keep)
    to_vec = tuple(tuple(r.v[a][j] % diag[j] for j in keep) for a in range(n))
    return AbelianCoordinates(factors, to_vec)


# ------------------------------------------------------------------ cochains

def n_slots(P, n):
    return (P.order - 1) ** n


def slot_tuples(P, n):
    return list(product(range(1, P.order), repeat=n))


def slot_index(P, args):
    b = P.order - 1
    i = 0
    for g in args:
        i = i * b + (g - 1)
    return i


@dataclass(frozen=True)
class Cochain:
    module: PModule
    degree: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != n_slots(self.module.group, self.degree):
            raise ValidationError(
                f"degree-{self.degree} cochain needs {n_slots(self.module.group, self.degree)} "
                f"values, got {len(self.values)}")

    def __call__(self, *args):
        if 0 in args:
            return self.module.zero
        return self.values[slot_index(self.module.group, args)]

    @classmethod
    def zero(cls, module, degree):
        return cls(module, degree, (module.zero,) * n_slots(module.group, degree))

    @classmethod
    def from_function(cls, module, degree, fn):
        return cls(module, degree, tuple(module.reduce(fn(*t))
                                         for t in slot_tuples(module.group, degree)))

    @classmethod
    def from_entries(cls, module, degree, entries):
        """From (tuple, vector) pairs; unlisted tuples are zero."""
        vals = [module.zero] * n_slots(module.group, degree)
        P = module.group
        for args, vec in entries:
            args = tuple(int(x) for x in args)
            if len(args) != degree or any(not 0 <= g < P.order for g in args):
                raise ValidationError(f"bad cochain argument {args}", witness=args)
            if 0 in args:
                if any(vec):
                    raise ValidationError(
                        f"normalized cochain must vanish on {args}", witness=args)
                continue
            vals[slot_index(P, args)] = module.reduce(vec)
        return cls(module, degree, tuple(vals))

    def entries(self):
        return [(t, v) for t, v in zip(slot_tuples(self.module.group, self.degree), self.values)
                if any(v)]

    def is_zero(self):
        return all(not any(v) for v in self.values)

    def __add__(self, other):
        m = self.module
        return Cochain(m, self.degree, tuple(m.add(a, b) for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        m = self.module
        return Cochain(m, self.degree, tuple(m.sub(a, b) for a, b in zip(self.values, other.values)))

    def __neg__(self):
        m = self.module
        return Cochain(m, self.degree, tuple(m.neg(a) for a in self.values))

    def scaled(self, k):
        m = self.module
        return Cochain(m, self.degree, tuple(m.scale(k, a) for a in self.values))


# --------------------------------------------------------- module morphisms

@dataclass(frozen=True)
class ModuleHom:
    """Additive map A -> B; column j is the image of A's j-th basis vector."""
    source: PModule
    target: PModule
    matrix: tuple      # target.rank x source.rank

    def __call__(self, v):
        return _apply(self.matrix, self.target.factors, v)

    @classmethod
    def from_images(cls, source, target, images):
        cols = [tuple(x) for x in images]
        mat = tuple(tuple(cols[j][i] for j in range(source.rank)) for i in range(target.rank))
        return cls(source, target, mat)

    def images(self):
        return tuple(tuple(self.matrix[i][j] for i in range(self.target.rank))
                     for j in range(self.source.rank))


def check_module_hom(f, equivariant=True):
    A, B = f.source, f.target
    for j, d in enumerate(A.factors):
        img = tuple(f.matrix[i][j] for i in range(B.rank))
        if any(x for x in B.scale(d, img)):
            raise ValidationError(f"image of generator {j} has order not dividing {d}",
                                  witness=j)
    if equivariant:
        if A.group != B.group:
            raise NotEquivariant("source and target are modules over different groups")
        for p in range(A.group.order):
            for a in A._basis():
                if f(A.act(p, a)) != B.act(p, f(a)):
                    raise NotEquivariant(f"f(p.a) != p.f(a) for p={p}, a={a}", witness=(p, a))
    return f


def all_module_homs(A, B, equivariant=True):
    """Every additive map A -> B (optionally P-equivariant), lexicographic in images."""
    per_gen = []
    for d in A.factors:
        per_gen.append([v for v in B.elements if not any(B.scale(d, v))])
    out = []
    for imgs in product(*per_gen):
        f = ModuleHom.from_images(A, B, imgs)
        if equivariant:
            try:
                check_module_hom(f, True)
            except NotEquivariant:
                continue
        out.append(f)
    return out
