"""Classification of locally constant data through monodromy.

Everything here reduces to finite enumeration over a 2-type
(pi1, pi2, k) and a coefficient group G:

    h1_nonabelian         Hom(pi1, G) / conjugation
    h0_crossed            Hom(pi1, ker d) x| coker d
    pi0_monoidal_to_G1    monoidal functors H -> G[1] up to isomorphism
    h2_constant_abelian   the same for H the loop gr-category of a 2-type
    extensions            group extensions of P by G
    giraud_h2             monoidal functors into G -> Aut(G) up to iso and Out(G)

Exactness of every reported sequence is checked element by element.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple

from .cohomology import cohomology_group, is_coboundary, pushforward
from .config import DEFAULT_CAPS
from .descent import (MonoidalDatum, group_structure, lam_from_values, orbit,
                      twist, validate_datum)
from .errors import KNotTrivial, NonAbelianTarget, ValidationError
from .groups import GroupTable, enumerate_homs, subgroup_table, validate_group
from .modules import (Cochain, ModuleHom, PModule, abelian_coordinates,
                      all_module_homs, check_module)
from .xmod import gr_cat_from_two_type, ker_coker


@dataclass(frozen=True)
class PointedSet:
    elements: tuple
    basepoint: int = 0

    def __len__(self):
        return len(self.elements)

    @property
    def base(self):
        return self.elements[self.basepoint]


@dataclass
class ExactSeqReport:
    terms: list                 # (name, tuple of elements, basepoint element)
    maps: list                  # (name, dict source element -> target element)
    exact_at: list = field(default_factory=list)    # one flag per interior term
    witnesses: list = field(default_factory=list)
    composes_to_base: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def all_exact(self):
        return all(self.exact_at) and all(self.composes_to_base) and \
            all(v for v in self.extra.values() if isinstance(v, bool))

    def orders(self):
        return [len(t[1]) for t in self.terms]

    def to_json(self):
        return {"terms": [{"name": t[0], "order": len(t[1])} for t in self.terms],
                "exact": list(self.exact_at),
                "composes_to_base": list(self.composes_to_base),
                "checks": {k: v for k, v in self.extra.items() if isinstance(v, bool)}}


def check_exact(terms, maps, extra=None):
    """Build a report and verify it.

    terms[i] = (name, elements, basepoint); maps[i] = (name, mapping) goes
    from terms[i] to terms[i+1]. Exactness at an interior term compares the
    image of the incoming map with the preimage of the next basepoint.
    """
    report = ExactSeqReport(list(terms), list(maps), extra=dict(extra or {}))
    for i, (_, mapping) in enumerate(maps):
        src, dst = terms[i], terms[i + 1]
        if set(mapping) != set(src[1]) or any(v not in set(dst[1]) for v in mapping.values()):
            raise ValidationError(f"map {i} is not defined on the whole term")
        if i + 1 < len(maps):
            nxt = maps[i + 1][1]
            report.composes_to_base.append(
                all(nxt[mapping[x]] == terms[i + 2][2] for x in src[1]))
    for i in range(1, len(terms) - 1):
        image = set(maps[i - 1][1].values())
        base = terms[i + 1][2]
        kernel = {x for x in terms[i][1] if maps[i][1][x] == base}
        diff = sorted(image ^ kernel, key=repr)
        report.exact_at.append(not diff)
        report.witnesses.append(diff[0] if diff else None)
    return report


# ------------------------------------------------------------------ H^1, H^0

def h1_nonabelian(pi1, G, caps=DEFAULT_CAPS):
    """Hom(pi1, G) modulo phi ~ ad(g) o phi; representatives are minimal tuples."""
    reps = set()
    for h in enumerate_homs(pi1, G, caps):
        imgs = h.images
        reps.add(min(tuple(G.conj(g, x) for x in imgs) for g in range(G.order)))
    elements = tuple(sorted(reps))
    trivial = elements[0]
    return PointedSet(elements, elements.index(trivial))


class SemidirectProduct(NamedTuple):
    table: GroupTable
    elements: tuple        # (hom images into ker d, coker index)
    ker: GroupTable
    coker: GroupTable


def h0_crossed(pi1, x, caps=DEFAULT_CAPS):
    """Hom(pi1, ker d) x| coker d, coker d acting by post-composition."""
    kc = ker_coker(x)
    K = kc.ker
    homs = [h.images for h in enumerate_homs(pi1, K, caps)]
    index_in_k = {e: i for i, e in enumerate(kc.ker_elements)}
    act = [[index_in_k[x.action[kc.coker_transversal[c]][e]] for e in kc.ker_elements]
           for c in range(kc.coker.order)]
    elements = tuple((h, c) for h in homs for c in range(kc.coker.order))
    pos = {e: i for i, e in enumerate(elements)}
    caps.check("table_order", len(elements))
    mul = []
    for h1, c1 in elements:
        row = []
        for h2, c2 in elements:
            h = tuple(K.mul[a][act[c1][b]] for a, b in zip(h1, h2))
            row.append(pos[(h, kc.coker.mul[c1][c2])])
        mul.append(row)
    return SemidirectProduct(validate_group(mul), elements, K, kc.coker)


# ------------------------------------------------------------ abelian H^2

@dataclass
class MonoidalClasses:
    """pi_0 of monoidal functors H -> G[1] as pairs (f, mu)."""
    source: object
    target: GroupTable
    coords: object              # AbelianCoordinates of G
    coeff: PModule              # G as a trivial P-module
    homs: tuple                 # ModuleHom A_H -> G, all equivariant homs
    delta: tuple                # obstruction class per hom
    lifts: dict                 # hom index -> chosen lam_f (Cochain), unobstructed only
    h2: object                  # CohGroup H^2(P; G)
    elements: tuple             # (hom index, mu)
    table: GroupTable
    invariant_factors: tuple

    @property
    def order(self):
        return len(self.elements)

    def datum(self, i):
        """A MonoidalDatum representing element i."""
        j, mu = self.elements[i]
        lam = self.lifts[j] + self.h2.cocycle(mu)
        return self._datum(self.homs[j], lam)

    def _datum(self, hom, lam):
        H, G = self.source, self.target
        n = H.p.order
        fv = self.coords.from_vec
        table = tuple(tuple(fv[lam(p, q)] for q in range(n)) for p in range(n))
        f = tuple(fv[hom(a)] for a in H.a.elements)
        return MonoidalDatum(H, G, False, (0,) * n, table, f)

    def class_of_datum(self, m):
        """(hom index, mu) of a valid datum with abelian target."""
        H = self.source
        tv = self.coords.to_vec
        images = [tv[m.f[H.a.index(b)]] for b in H.a._basis()]
        hom = ModuleHom.from_images(H.a, self.coeff, images)
        j = next(i for i, h in enumerate(self.homs) if h.matrix == hom.matrix)
        lam = Cochain.from_function(self.coeff, 2, lambda p, q: tv[m.lam[p][q]])
        return j, self.h2.class_of(lam - self.lifts[j])


def _abelian_target(G):
    if not G.is_abelian:
        raise NonAbelianTarget("target group must be abelian")
    return abelian_coordinates(G)


def pi0_monoidal_to_G1(H, G, caps=DEFAULT_CAPS):
    """Group of iso classes of monoidal functors H -> G[1] and the sequence

        1 -> H^2(P; G) -> pi_0 -> Hom_P(A_H, G) -> H^3(P; G).

    A class is (f, mu): f an unobstructed equivariant hom, mu in H^2, standing
    for lam = lam_f + rep(mu) with lam_f a fixed solution of -d lam = f o assoc.
    Sums of chosen solutions differ from the chosen solution of the sum by a
    2-cocycle, which enters the group law as a correction term.
    """
    coords = _abelian_target(G)
    P = H.p
    coeff = coords.module(P)
    homs = tuple(all_module_homs(H.a, coeff, equivariant=True))
    h2 = cohomology_group(P, coeff, 2, caps)
    h3 = cohomology_group(P, coeff, 3, caps)
    delta, lifts = [], {}
    for j, f in enumerate(homs):
        pushed = pushforward(f, H.assoc)
        chk = h3.is_coboundary(pushed)
        delta.append(chk.coordinates)
        if chk:
            lifts[j] = -chk.witness
    hom_index = {h.matrix: j for j, h in enumerate(homs)}

    def add_homs(i, j):
        imgs = [coeff.add(a, b) for a, b in zip(homs[i].images(), homs[j].images())]
        return hom_index[ModuleHom.from_images(H.a, coeff, imgs).matrix]

    good = sorted(lifts)
    mus = h2.elements()
    elements = tuple((j, mu) for j in good for mu in mus)
    caps.check("table_order", len(elements))
    pos = {e: i for i, e in enumerate(elements)}
    correction = {}
    for i in good:
        for j in good:
            s = add_homs(i, j)
            correction[i, j] = h2.class_of(lifts[i] + lifts[j] - lifts[s])
    facs = h2.invariant_factors
    mul = []
    for j1, mu1 in elements:
        row = []
        for j2, mu2 in elements:
            c = correction[j1, j2]
            mu = tuple((a + b + x) % d for a, b, x, d in zip(mu1, mu2, c, facs))
            row.append(pos[(add_homs(j1, j2), mu)])
        mul.append(row)
    table = validate_group(mul)
    result = MonoidalClasses(H, G, coords, coeff, homs, tuple(delta), lifts, h2,
                             elements, table, abelian_coordinates(table).factors)

    zero_hom = hom_index[ModuleHom.from_images(H.a, coeff, [coeff.zero] * H.a.rank).matrix]
    zero_h2 = tuple(0 for _ in facs)
    zero_h3 = tuple(0 for _ in h3.invariant_factors)
    terms = [("1", ((),), ()),
             ("H2(P;G)", tuple(mus), zero_h2),
             ("pi0", elements, (zero_hom, zero_h2)),
             ("Hom_P(A,G)", tuple(range(len(homs))), zero_hom),
             ("H3(P;G)", tuple(h3.elements()), zero_h3)]
    maps = [("unit", {(): zero_h2}),
            ("include", {mu: (zero_hom, mu) for mu in mus}),
            ("project", {e: e[0] for e in elements}),
            ("delta", {j: delta[j] for j in range(len(homs))})]
    extra = {"include_is_hom": all(
        mul[pos[(zero_hom, m1)]][pos[(zero_hom, m2)]] ==
        pos[(zero_hom, tuple((x + y) % d for x, y, d in zip(m1, m2, facs)))]
        for m1 in mus for m2 in mus)}
    report = check_exact(terms, maps, extra)
    return result, report


def h2_constant_abelian(t, G, caps=DEFAULT_CAPS):
    """H^2(X; G) for a 2-type X and constant abelian G, with the Hopf sequence."""
    return pi0_monoidal_to_G1(gr_cat_from_two_type(t), G, caps)


class SplitData(NamedTuple):
    section: dict          # hom index -> element index of the classes group
    trivializer: Cochain   # c with d c = k
    checks: dict


def split_check(t, G, caps=DEFAULT_CAPS):
    """Section of H^2(X;G) -> Hom_P(pi2, G) when k is a coboundary.

    With k = d c the datum (f, lam = -f o c) is coherent, and f maps to its class.
    """
    chk = is_coboundary(t.k, caps)
    if not chk:
        raise KNotTrivial(f"k has nonzero class {chk.coordinates}", witness=chk.coordinates)
    c = chk.witness
    classes, report = h2_constant_abelian(t, G, caps)
    pos = {e: i for i, e in enumerate(classes.elements)}
    section = {}
    for j, f in enumerate(classes.homs):
        lam = -pushforward(f, c)
        m = classes._datum(f, lam)
        if not validate_datum(m):
            raise AssertionError("section datum is not coherent")
        section[j] = pos[classes.class_of_datum(m)]
    mul = classes.table.mul
    hom_of = [e[0] for e in classes.elements]
    zero_h2 = tuple(0 for _ in classes.h2.invariant_factors)
    zero_hom = report.terms[3][2]
    total = len(classes.homs)
    unobstructed = len(classes.lifts) == total
    proj_section = all(hom_of[section[j]] == j for j in section)
    sums = {}
    for a in range(total):
        for b in range(total):
            fa = classes.homs[a].images()
            fb = classes.homs[b].images()
            imgs = [classes.coeff.add(x, y) for x, y in zip(fa, fb)]
            s = next(i for i, h in enumerate(classes.homs) if h.images() == tuple(imgs))
            sums[a, b] = s
    is_hom = all(mul[section[a]][section[b]] == section[sums[a, b]]
                 for a in range(total) for b in range(total))
    product_map = {(mu, j): mul[pos[(zero_hom, mu)]][section[j]]
                   for mu in classes.h2.elements() for j in range(total)}
    bijective = sorted(product_map.values()) == list(range(classes.order))
    checks = {"all_unobstructed": unobstructed, "projection_section_identity": proj_section,
              "section_is_hom": is_hom, "product_decomposition": bijective,
              "order_is_product": classes.order == classes.h2.order * total,
              "section_of_zero": section.get(zero_hom) == pos.get((zero_hom, zero_h2))}
    return SplitData(section, c, checks)


# -------------------------------------------------------------- extensions

@dataclass(frozen=True)
class ExtensionClass:
    outer_action: tuple        # omega(p) as an Out(G) index
    h2_coordinate: tuple


@dataclass
class OuterData:
    """Per outer action: lift, corrected factor set, center module, H^2."""
    omega: tuple
    phi: tuple                 # aut index per p
    factor: tuple              # factor[p][q] in G, obstruction-free
    module: PModule
    h2: object


class ExtensionSet(NamedTuple):
    classes: PointedSet
    outer: dict                # omega -> OuterData for unobstructed omega
    obstructed: tuple          # omega with nonzero obstruction
    center: tuple              # Z(G) as element indices


def _center_module(P, G, st, phi):
    Z, zelems = subgroup_table(G, st.center)
    coords = abelian_coordinates(Z)
    zindex = {e: i for i, e in enumerate(zelems)}
    basis = [zelems[coords.from_vec[tuple(int(i == j) for j in range(len(coords.factors)))]]
             for i in range(len(coords.factors))]
    mats = []
    for p in range(P.order):
        perm = st.aut_perms[phi[p]]
        cols = [coords.to_vec[zindex[perm[b]]] for b in basis]
        mats.append(tuple(tuple(c[i] for c in cols) for i in range(len(coords.factors))))
    module = check_module(PModule(P, coords.factors, tuple(mats)))
    to_g = {coords.to_vec[i]: zelems[i] for i in range(len(zelems))}
    from_g = {zelems[i]: coords.to_vec[i] for i in range(len(zelems))}
    return module, to_g, from_g, coords


def _lift_factor(P, G, st, phi):
    """Minimal f(p,q) with phi_p phi_q = ad(f(p,q)) phi_pq."""
    amul, ainv = st.aut.mul, st.aut.inv
    first = {}
    for g in range(G.order):
        first.setdefault(st.ad[g], g)
    return tuple(tuple(first[amul[amul[phi[p]][phi[q]]][ainv[phi[P.mul[p][q]]]]]
                       for q in range(P.order)) for p in range(P.order))


def _obstruction(P, G, st, phi, f, from_g, module):
    mul, inv = G.mul, G.inv

    def z(p, q, r):
        left = mul[st.aut_perms[phi[p]][f[q][r]]][f[p][P.mul[q][r]]]
        right = mul[f[p][q]][f[P.mul[p][q]][r]]
        return from_g[mul[left][inv[right]]]

    return Cochain.from_function(module, 3, z)


def extensions(P, G, caps=DEFAULT_CAPS):
    """Extensions 1 -> G -> E -> P -> 1 up to equivalence.

    For each omega: P -> Out(G), lift to Aut(G), pick a factor set, take the
    obstruction in H^3(P; Z(G)_omega); unobstructed omega contribute a torsor
    under H^2(P; Z(G)_omega).
    """
    st = group_structure(G, caps)
    outer, obstructed, classes = {}, [], []
    for hom in enumerate_homs(P, st.out, caps):
        omega = hom.images
        phi = tuple(st.out_transversal[w] for w in omega)
        module, to_g, from_g, _ = _center_module(P, G, st, phi)
        f = _lift_factor(P, G, st, phi)
        z = _obstruction(P, G, st, phi, f, from_g, module)
        chk = cohomology_group(P, module, 3, caps).is_coboundary(z)
        if not chk:
            obstructed.append(omega)
            continue
        c = chk.witness
        fixed = tuple(tuple(G.mul[f[p][q]][G.inv[to_g[c(p, q)]]] for q in range(P.order))
                      for p in range(P.order))
        if not _obstruction(P, G, st, phi, fixed, from_g, module).is_zero():
            raise AssertionError("corrected factor set still obstructed")
        h2 = cohomology_group(P, module, 2, caps)
        outer[omega] = OuterData(omega, phi, fixed, module, h2)
        classes.extend(ExtensionClass(omega, mu) for mu in h2.elements())
    base = ExtensionClass(tuple(0 for _ in range(P.order)),
                          tuple(0 for _ in outer[tuple(0 for _ in range(P.order))].h2.invariant_factors))
    elements = tuple(classes)
    return ExtensionSet(PointedSet(elements, elements.index(base)), outer,
                        tuple(obstructed), st.center)


def extension_factor_set(ext, cls, G):
    """(phi, lam) realizing an extension class."""
    od = ext.outer[cls.outer_action]
    rep = od.h2.cocycle(cls.h2_coordinate)
    _, to_g, _, _ = _center_module(od.module.group, G, group_structure(G), od.phi)
    n = od.module.group.order
    lam = tuple(tuple(G.mul[to_g[rep(p, q)]][od.factor[p][q]] for q in range(n))
                for p in range(n))
    return od.phi, lam


def identify_extension(ext, P, G, F, lam):
    """Class of the extension with factor set (F, lam): gauge F to the chosen
    lift, then read off the central difference."""
    st = group_structure(G)
    omega = tuple(st.out_projection[x] for x in F)
    od = ext.outer[omega]
    first = {}
    for g in range(G.order):
        first.setdefault(st.ad[g], g)
    nu = [first[st.aut.mul[od.phi[p]][st.aut.inv[F[p]]]] for p in range(P.order)]
    mul, inv = G.mul, G.inv
    _, _, from_g, _ = _center_module(P, G, st, od.phi)

    def central(p, q):
        lp = mul[mul[mul[nu[p]][st.aut_perms[F[p]][nu[q]]]][lam[p][q]]][inv[nu[P.mul[p][q]]]]
        return from_g[mul[lp][inv[od.factor[p][q]]]]

    c = Cochain.from_function(od.module, 2, central)
    return ExtensionClass(omega, od.h2.class_of(c))


# ----------------------------------------------------------- Giraud's H^2

class GiraudResult(NamedTuple):
    first: PointedSet          # extensions(pi1, G) modulo Out(G)
    middle: PointedSet         # canonical keys of monoidal data
    last: PointedSet           # Hom(pi2, Z(G)) modulo Out(G)
    data: dict                 # key -> MonoidalDatum
    report: ExactSeqReport


def _middle_term(H, G, caps):
    st = group_structure(G, caps)
    P, A = H.p, H.a
    n = P.order
    caps.check("monoidal", len(st.aut_perms) ** (n - 1) * G.order ** ((n - 1) ** 2))
    f_candidates = _central_homs(A, G, st)
    by_ad = {}
    for g in range(G.order):
        by_ad.setdefault(st.ad[g], []).append(g)
    amul, ainv = st.aut.mul, st.aut.inv
    valid = {}
    for rest in product(range(len(st.aut_perms)), repeat=n - 1):
        F = (0,) + rest
        slots = []
        for p in range(1, n):
            for q in range(1, n):
                slots.append(by_ad.get(amul[amul[F[p]][F[q]]][ainv[F[P.mul[p][q]]]], []))
        if any(not s for s in slots):
            continue
        for f in f_candidates:
            for values in product(*slots):
                m = MonoidalDatum(H, G, True, F, lam_from_values(n, values), f)
                if validate_datum(m):
                    valid[m.key] = m
    return valid


def _quotient(valid):
    """Orbit representatives under gauge and Aut(G); minimal key per orbit."""
    rep_of = {}
    for key in sorted(valid):
        if key in rep_of:
            continue
        for k2 in orbit(valid[key], twisted=True):
            if k2 not in valid:
                raise AssertionError("orbit leaves the set of valid data")
            rep_of[k2] = key
    return rep_of


def giraud_h2(t, G, caps=DEFAULT_CAPS):
    """Middle term of the non-abelian Hopf sequence with its neighbours

        ext(pi1, G)/Out(G) -> H^2(X; G) -> Hom(pi2, Z(G))/Out(G).
    """
    H = gr_cat_from_two_type(t)
    P, A = H.p, H.a
    st = group_structure(G, caps)
    n = P.order

    valid = _middle_term(H, G, caps)
    rep_of = _quotient(valid)
    middle_keys = tuple(sorted(set(rep_of.values())))
    trivial_key = ((0,) * n, (0,) * ((n - 1) ** 2), (0,) * A.order)
    middle = PointedSet(middle_keys, middle_keys.index(rep_of[trivial_key]))

    # last term: homs A -> Z(G) up to sigma o f
    f_all = _central_homs(A, G, st)
    last_rep = {f: min(tuple(st.aut_perms[s][x] for x in f) for s in range(len(st.aut_perms)))
                for f in f_all}
    last_keys = tuple(sorted(set(last_rep.values())))
    zero_f = (0,) * A.order
    last = PointedSet(last_keys, last_keys.index(last_rep[zero_f]))

    # first term: extension classes modulo Out(G)
    ext = extensions(P, G, caps)
    ext_elems = ext.classes.elements
    ext_orbit = {}
    for cls in ext_elems:
        phi, lam = extension_factor_set(ext, cls, G)
        orbit_members = set()
        for s in range(len(st.aut_perms)):
            Fs = tuple(st.aut.mul[st.aut.mul[s][x]][st.aut.inv[s]] for x in phi)
            lams = tuple(tuple(st.aut_perms[s][x] for x in row) for row in lam)
            orbit_members.add(identify_extension(ext, P, G, Fs, lams))
        ext_orbit[cls] = min(orbit_members, key=lambda e: (e.outer_action, e.h2_coordinate))
    first_keys = tuple(sorted(set(ext_orbit.values()),
                              key=lambda e: (e.outer_action, e.h2_coordinate)))
    first = PointedSet(first_keys, first_keys.index(ext_orbit[ext.classes.base]))

    to_middle = {}
    well_defined = True
    for cls in ext_elems:
        phi, lam = extension_factor_set(ext, cls, G)
        m = MonoidalDatum(H, G, True, phi, lam, zero_f)
        if not validate_datum(m):
            raise AssertionError("extension factor set is not a coherent datum")
        target = rep_of[m.key]
        o = ext_orbit[cls]
        if to_middle.setdefault(o, target) != target:
            well_defined = False
    to_last = {k: last_rep[k[2]] for k in middle_keys}
    terms = [("1", ((),), ()),
             ("Ext(pi1,G)/Out(G)", first_keys, first.base),
             ("H2(X;G)", middle_keys, middle.base),
             ("Hom(pi2,Z(G))/Out(G)", last_keys, last.base)]
    maps = [("unit", {(): first.base}),
            ("extension_datum", to_middle),
            ("morphism_part", to_last)]
    report = check_exact(terms, maps, {"first_map_well_defined": well_defined})
    return GiraudResult(first, middle, last, {k: valid[k] for k in middle_keys}, report)


def _central_homs(A, G, st):
    """Every hom A -> Z(G), as the tuple of images of A's elements."""
    out = set()
    for imgs in product(st.center, repeat=A.rank):
        vals = []
        for v in A.elements:
            x = 0
            for c, g in zip(v, imgs):
                x = G.mul[x][G.power(g, c)]
            vals.append(x)
        if all(vals[A.index(A.add(v, w))] == G.mul[vals[a]][vals[b]]
               for a, v in enumerate(A.elements) for b, w in enumerate(A.elements)):
            out.add(tuple(vals))
    return sorted(out)


def out_orbits_abelian(classes):
    """Orbit count of Aut(G) acting on pi_0 of functors into G[1] (G abelian)."""
    st = group_structure(classes.target)
    seen = set()
    for i in range(classes.order):
        m = classes.datum(i)
        seen.add(min(classes.class_of_datum(twist(m, s)) for s in range(len(st.aut_perms))))
    return len(seen)
