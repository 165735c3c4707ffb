"""Monoidal functor data out of a skeletal gr-category.

A datum H -> target consists of
    F(p)     an automorphism of G per object (identity for an abelian target G[1]),
    lam(p,q) in G with F(p) F(q) = ad(lam(p,q)) F(pq),
    f        a homomorphism A_H -> Z(G) with f(p.a) = F(p)(f(a)),
subject to the coherence
    lam(p,q) lam(pq,r) = f(assoc(p,q,r)) F(p)(lam(q,r)) lam(p,qr).
For an abelian target in additive notation this reads -d lam = f o assoc.

A monoidal isomorphism is nu: P -> G with nu(e) = 1, acting by
    F'(p) = ad(nu(p)) F(p),  lam'(p,q) = nu(p) F(p)(nu(q)) lam(p,q) nu(pq)^-1.
The Out-twisted equivalence also lets sigma in Aut(G) act by
    (sigma F sigma^-1, sigma o lam, sigma o f).
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import NamedTuple

from .config import DEFAULT_CAPS, Caps
from .errors import NonAbelianTarget, ValidationError
from .groups import GroupTable, structure
from .xmod import SkeletalGrCat


@lru_cache(maxsize=64)
def _structure(G):
    return structure(G, Caps(aut_order=G.order))


def group_structure(G, caps=None):
    """Cached structure(G); the aut_order cap is checked when caps are given."""
    if caps is not None:
        caps.check("aut_order", G.order)
    return _structure(G)


@dataclass(frozen=True)
class MonoidalDatum:
    source: SkeletalGrCat
    target: GroupTable
    adjoint: bool          # True: target is G -> Aut(G); False: G[1], G abelian
    F: tuple               # aut index per object of the source
    lam: tuple             # lam[p][q], element of G
    f: tuple               # f[a] for every element index a of A_H

    @property
    def key(self):
        n = self.source.p.order
        return (self.F, tuple(self.lam[p][q] for p in range(1, n) for q in range(1, n)), self.f)


def make_datum(source, G, lam, f=None, F=None, adjoint=False):
    """Datum with full tables; missing F or f default to the trivial ones."""
    n = source.p.order
    if not adjoint and not G.is_abelian:
        raise NonAbelianTarget("G[1] needs an abelian group")
    if F is None:
        F = (0,) * n
    if f is None:
        f = (0,) * source.a.order
    lam = tuple(tuple(int(x) for x in row) for row in lam)
    if len(lam) != n or any(len(row) != n for row in lam):
        raise ValidationError("lam must be a |P| x |P| table")
    if len(F) != n or len(f) != source.a.order:
        raise ValidationError("F needs one entry per object and f one per unit automorphism")
    return MonoidalDatum(source, G, adjoint, tuple(F), lam, tuple(f))


def lam_from_values(n, values):
    """Full normalized table from the (n-1)^2 non-identity entries in lex order."""
    it = iter(values)
    return tuple(tuple(0 if p == 0 or q == 0 else next(it) for q in range(n)) for p in range(n))


class Verdict(NamedTuple):
    ok: bool
    reason: str = ""
    witness: tuple = None

    def __bool__(self):
        return self.ok


def _aut(m):
    return group_structure(m.target) if m.adjoint else None


def validate_datum(m):
    """Valid, or the first failing condition with a minimal witness."""
    H, G = m.source, m.target
    P, A = H.p, H.a
    n = P.order
    st = _aut(m)
    perms = st.aut_perms if st else (tuple(range(G.order)),)
    if any(not 0 <= x < len(perms) for x in m.F):
        return Verdict(False, "object map out of range", None)
    if any(not 0 <= x < G.order for row in m.lam for x in row) or \
            any(not 0 <= x < G.order for x in m.f):
        return Verdict(False, "value outside G", None)
    if not m.adjoint and any(m.F):
        return Verdict(False, "object map must be trivial for an abelian target", None)
    if m.F[0] != 0:
        return Verdict(False, "normalization", (0,))
    for p in range(n):
        if m.lam[0][p] or m.lam[p][0]:
            return Verdict(False, "normalization", (0, p) if m.lam[0][p] else (p, 0))
    elems = A.elements
    center = set(st.center) if st else set(range(G.order))
    for a, v in enumerate(elems):
        if m.f[a] not in center:
            return Verdict(False, "morphism part not central", (a,))
        for b, w in enumerate(elems):
            if m.f[A.index(A.add(v, w))] != G.mul[m.f[a]][m.f[b]]:
                return Verdict(False, "morphism part not additive", (a, b))
    for p in range(1, n):
        for a, v in enumerate(elems):
            if m.f[A.index(A.act(p, v))] != perms[m.F[p]][m.f[a]]:
                return Verdict(False, "morphism part not equivariant", (p, a))
    if st:
        for p in range(1, n):
            for q in range(1, n):
                lhs = st.aut.mul[m.F[p]][m.F[q]]
                rhs = st.aut.mul[st.ad[m.lam[p][q]]][m.F[P.mul[p][q]]]
                if lhs != rhs:
                    return Verdict(False, "object relation", (p, q))
    mul = G.mul
    for p in range(1, n):
        Fp = perms[m.F[p]]
        for q in range(1, n):
            pq = P.mul[p][q]
            for r in range(1, n):
                qr = P.mul[q][r]
                lhs = mul[m.lam[p][q]][m.lam[pq][r]]
                fk = m.f[A.index(H.assoc(p, q, r))]
                rhs = mul[mul[fk][Fp[m.lam[q][r]]]][m.lam[p][qr]]
                if lhs != rhs:
                    return Verdict(False, "coherence", (p, q, r))
    return Verdict(True)


def gauge(m, nu):
    """The datum transported along nu (nu[0] must be the identity)."""
    G, P = m.target, m.source.p
    n = P.order
    if nu[0] != 0:
        raise ValidationError("nu must be normalized")
    st = _aut(m)
    if st:
        perms = st.aut_perms
        F = tuple(st.aut.mul[st.ad[nu[p]]][m.F[p]] for p in range(n))
    else:
        perms = (tuple(range(G.order)),)
        F = m.F
    mul, inv = G.mul, G.inv
    lam = tuple(tuple(
        mul[mul[mul[nu[p]][perms[m.F[p]][nu[q]]]][m.lam[p][q]]][inv[nu[P.mul[p][q]]]]
        for q in range(n)) for p in range(n))
    return MonoidalDatum(m.source, G, m.adjoint, F, lam, m.f)


def twist(m, sigma):
    """Action of the automorphism with index sigma in Aut(G)."""
    st = group_structure(m.target)
    s = st.aut_perms[sigma]
    if m.adjoint:
        s_inv = st.aut.inv[sigma]
        F = tuple(st.aut.mul[st.aut.mul[sigma][x]][s_inv] for x in m.F)
    else:
        F = m.F
    lam = tuple(tuple(s[x] for x in row) for row in m.lam)
    return MonoidalDatum(m.source, m.target, m.adjoint, F, lam, tuple(s[x] for x in m.f))


def isomorphic(m1, m2, twisted=False, caps=DEFAULT_CAPS):
    """Witness (sigma, nu) with m2 = gauge(twist(m1, sigma), nu), or None.

    Without ``twisted`` only sigma = identity (index 0) is tried.
    """
    if m1.source != m2.source or m1.target != m2.target or m1.adjoint != m2.adjoint:
        raise ValidationError("data have different source or target")
    G = m1.target
    n = m1.source.p.order
    sigmas = range(len(group_structure(G).aut_perms)) if twisted else (0,)
    caps.check("monoidal", len(sigmas) * G.order ** (n - 1))
    for sigma in sigmas:
        t = twist(m1, sigma) if sigma else m1
        if t.f != m2.f:
            continue
        for rest in product(range(G.order), repeat=n - 1):
            nu = (0,) + rest
            if gauge(t, nu).key == m2.key:
                return sigma, nu
    return None


def orbit(m, twisted=False):
    """All data reachable from m by gauge (and Aut(G) when twisted)."""
    G = m.target
    n = m.source.p.order
    sigmas = range(len(group_structure(G).aut_perms)) if twisted else (0,)
    seen = {}
    for sigma in sigmas:
        t = twist(m, sigma) if sigma else m
        for rest in product(range(G.order), repeat=n - 1):
            g = gauge(t, (0,) + rest)
            seen.setdefault(g.key, g)
    return seen
