"""Cohomology H^n(P; A), n <= 3, from the normalized bar complex.

Differential (left action):

    (d c)(g1, ..., g_{n+1}) = g1 . c(g2, ..., g_{n+1})
                              + sum_{i=1..n} (-1)^i c(..., g_i g_{i+1}, ...)
                              + (-1)^{n+1} c(g1, ..., g_n)

so (d^0 a)(g) = g.a - a. Coordinates: slot s (tuple in lexicographic order)
times module coordinate j is integer coordinate s*r + j.

A cochain group is Z^m modulo the congruences d_j. Cocycles lift to the
lattice L1 = {x : d x = 0 mod the target congruences}; coboundaries plus
congruences span L2 inside it. H^n = L1/L2, read off from the Smith form
of L2's generators written in a basis of L1. Both steps are exact integer
Smith reductions, so any finite module is handled the same way.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import gcd
from typing import NamedTuple

from .config import DEFAULT_CAPS
from .errors import NotACocycle, NotEquivariant
from .modules import (Cochain, ModuleHom, PModule, check_module_hom, n_slots,
                      slot_index, slot_tuples)
from .snf import IntMatrix, matvec, snf_lists


def faces(P, args):
    """The n+2 terms of d at an (n+1)-tuple as (sign, acting element, face tuple)."""
    n1 = len(args)
    out = [(1, args[0], args[1:])]
    for i in range(n1 - 1):
        merged = args[:i] + (P.mul[args[i]][args[i + 1]],) + args[i + 2:]
        out.append(((-1) ** (i + 1), 0, merged))
    out.append(((-1) ** n1, 0, args[:-1]))
    return out


def coboundary(c):
    """d c as a cochain of degree n+1 (direct evaluation)."""
    A = c.module
    P = A.group

    def value(*args):
        acc = A.zero
        for sign, actor, face in faces(P, args):
            v = c(*face)
            if actor:
                v = A.act(actor, v)
            acc = A.add(acc, v) if sign > 0 else A.sub(acc, v)
        return acc

    return Cochain.from_function(A, c.degree + 1, value)


def coboundary_matrix(P, A, n, caps=DEFAULT_CAPS):
    """Integer matrix of d^n: C^n -> C^{n+1} on normalized cochains."""
    r = A.rank
    m_src = n_slots(P, n) * r
    m_dst = n_slots(P, n + 1) * r
    caps.check("cohomology_dim", max(m_src, m_dst))
    rows = [[0] * m_src for _ in range(m_dst)]
    for t, args in enumerate(slot_tuples(P, n + 1)):
        for sign, actor, face in faces(P, args):
            if 0 in face:
                continue
            s = slot_index(P, face)
            mat = A.action[actor]
            for i in range(r):
                row = rows[t * r + i]
                for j in range(r):
                    x = mat[i][j]
                    if x:
                        row[s * r + j] += sign * x
    return IntMatrix.from_rows(rows, m_src)


def _congruences(A, n):
    return [d for _ in range(n_slots(A.group, n)) for d in A.factors]


def _lift(c):
    return [x for v in c.values for x in v]


def _to_cochain(A, degree, vec):
    r = A.rank
    return Cochain(A, degree, tuple(
        tuple(vec[s * r + j] % A.factors[j] for j in range(r))
        for s in range(n_slots(A.group, degree))))


class CoboundaryCheck(NamedTuple):
    """Result of a coboundary test: a witness, or the class coordinates."""
    witness: object
    coordinates: tuple

    def __bool__(self):
        return self.witness is not None


@dataclass(frozen=True, eq=False)
class CohGroup:
    group: object
    module: PModule
    degree: int
    invariant_factors: tuple
    representatives: tuple
    _basis_u: list = field(repr=False)
    _basis_s: list = field(repr=False)
    _snf: object = field(repr=False)
    _offset: int = field(repr=False)
    _prev_cols: int = field(repr=False)

    @property
    def order(self):
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def _coords_in_l1(self, y):
        uy = matvec(self._basis_u, y)
        out = []
        for val, s in zip(uy, self._basis_s):
            if val % s:
                raise NotACocycle("cochain does not lift to a cocycle")
            out.append(val // s)
        return out

    def class_of(self, c):
        """Coordinates of [c] in the invariant factors (c must be a cocycle)."""
        _require_cocycle(c)
        coords = self._coords_in_l1(_lift(c))
        uc = matvec(self._snf.u, coords)
        off = self._offset
        return tuple(uc[off + i] % d for i, d in enumerate(self.invariant_factors))

    def is_coboundary(self, c):
        if self.degree == 0:
            raise ValueError("degree-0 cochains have no coboundary witnesses")
        _require_cocycle(c)
        coords = self._coords_in_l1(_lift(c))
        uc = matvec(self._snf.u, coords)
        off = self._offset
        cls = tuple(uc[off + i] % d for i, d in enumerate(self.invariant_factors))
        if any(cls):
            return CoboundaryCheck(None, cls)
        a = self._snf.a
        z = [0] * self._snf.n
        for i, val in enumerate(uc):
            s = a[i][i]
            if val % s:
                raise AssertionError("class coordinates vanish but division fails")
            z[i] = val // s
        w = matvec(self._snf.v, z)[:self._prev_cols]
        witness = _to_cochain(self.module, self.degree - 1, w)
        return CoboundaryCheck(witness, cls)

    def cocycle(self, coordinates):
        """The cocycle sum_i coordinates[i] * representatives[i]."""
        c = Cochain.zero(self.module, self.degree)
        for k, rep in zip(coordinates, self.representatives):
            if k:
                c = c + rep.scaled(k)
        return c

    def elements(self):
        """All class coordinate tuples, lexicographic."""
        return list(product(*[range(d) for d in self.invariant_factors]))


def _require_cocycle(c):
    d = coboundary(c)
    if not d.is_zero():
        bad = next(t for t, v in zip(slot_tuples(c.module.group, c.degree + 1), d.values) if any(v))
        raise NotACocycle(f"d c is nonzero at {bad}", witness=bad)


@lru_cache(maxsize=512)
def _cohomology(P, A, n, caps):
    r = A.rank
    m = n_slots(P, n) * r
    m_next = n_slots(P, n + 1) * r
    caps.check("cohomology_dim", max(m, m_next))
    cong = _congruences(A, n)
    cong_next = _congruences(A, n + 1)

    # L1 = {x : d^n x = 0 mod cong_next}. Scale row i by e/cong_next[i] so every
    # row is read mod the exponent e; then with d^n = U^-1 S V^-1 the condition
    # is s_i y_i = 0 mod e for y = V^-1 x, i.e. L1 = V diag(q) Z^m.
    e = 1
    for d in A.factors:
        e = e * d // gcd(e, d)
    dn = coboundary_matrix(P, A, n, caps).tolist()
    scaled = [[(e // cong_next[i]) * x for x in row] for i, row in enumerate(dn)]
    red = snf_lists(scaled, m, want_u=False, want_v=True, want_inverses=True)
    q = []
    for i in range(m):
        s_i = red.a[i][i] if i < m_next else 0
        q.append(e // gcd(s_i, e) if s_i else 1)
    basis_v, basis_vinv = red.v, red.vinv

    # L2 generators: image of d^{n-1} plus congruences, in L1 coordinates
    if n > 0:
        prev = coboundary_matrix(P, A, n - 1, caps).tolist()
        prev_cols = n_slots(P, n - 1) * r
    else:
        prev = [[] for _ in range(m)]
        prev_cols = 0
    ncols = prev_cols + m
    l2_cols = [[prev[i][k] for i in range(m)] for k in range(prev_cols)]
    l2_cols += [[cong[i] if i == k else 0 for i in range(m)] for k in range(m)]
    ul2 = [[0] * ncols for _ in range(m)]
    for k, col in enumerate(l2_cols):
        y = matvec(basis_vinv, col)
        for i in range(m):
            if y[i] % q[i]:
                raise AssertionError("coboundary lattice not inside cocycle lattice")
            ul2[i][k] = y[i] // q[i]
    snf = snf_lists(ul2, ncols, want_u=True, want_v=True, want_inverses=True)
    diag = [snf.a[i][i] for i in range(m)]
    offset = sum(1 for d in diag if d == 1)
    factors = tuple(diag[offset:])

    reps = []
    for i in range(offset, m):
        coeffs = [snf.uinv[j][i] * q[j] for j in range(m)]
        reps.append(_to_cochain(A, n, matvec(basis_v, coeffs)))
    return CohGroup(P, A, n, factors, tuple(reps), basis_vinv, q, snf, offset, prev_cols)


def cohomology_group(P, A, n, caps=DEFAULT_CAPS):
    """H^n(P; A) with invariant factors, representative cocycles and a solver."""
    if not 0 <= n <= 3:
        raise ValueError("degree must be in 0..3")
    if A.group != P:
        raise ValueError("module is over a different group")
    return _cohomology(P, A, n, caps)


def is_coboundary(c, caps=DEFAULT_CAPS):
    """Witness w with d w = c, or the nonzero class coordinates of c."""
    return cohomology_group(c.module.group, c.module, c.degree, caps).is_coboundary(c)


def pushforward(f, c):
    """f o c for a module map f: A -> B (entrywise)."""
    if c.module != f.source:
        raise ValueError("cochain is not valued in the source of f")
    return Cochain(f.target, c.degree, tuple(f(v) for v in c.values))


def pushforward_class(f, c):
    """Checks that f is P-equivariant, then returns f o c."""
    check_module_hom(f, equivariant=True)
    return pushforward(f, c)


def delta_obstruction(f, H, caps=DEFAULT_CAPS):
    """Class of f o assoc in H^3(P; G) for G with trivial action.

    Returns (pushed cocycle, class coordinates); all-zero coordinates mean
    f lifts to a monoidal functor.
    """
    if not f.target.is_trivial_action:
        raise NotEquivariant("coefficient module must carry the trivial action")
    pushed = pushforward_class(f, H.assoc)
    return pushed, cohomology_group(H.p, f.target, 3, caps).class_of(pushed)
