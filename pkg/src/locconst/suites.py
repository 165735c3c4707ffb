"""Oracle-versus-pipeline comparison grids behind ``locconst verify``.

Each suite yields Check records; the report lists both counts of every
comparison. Output depends only on the inputs and the seed.
"""
import random
from itertools import product
from math import gcd
from typing import NamedTuple

from . import oracle
from .cohomology import cohomology_group, coboundary, pushforward
from .config import DEFAULT_CAPS
from .descent import (group_structure, isomorphic, lam_from_values, make_datum,
                      validate_datum)
from .errors import CapExceeded
from .groups import (Presentation, conjugacy_classes, cyclic, dihedral,
                     direct_product, enumerate_homs, quaternion, symmetric,
                     trivial_group)
from .modules import Cochain, PModule, module_from_generators
from .monodromy import (check_exact, extensions, giraud_h2, h0_crossed,
                        h1_nonabelian, h2_constant_abelian, out_orbits_abelian,
                        pi0_monoidal_to_G1, split_check)
from .spaces import abelianization, make_two_type, pi1_presentation, validate_complex
from .xmod import adjoint_crossed_module, gr_cat_from_two_type, make_gr_cat


class Check(NamedTuple):
    suite: str
    name: str
    expected: object
    got: object
    ok: bool

    def line(self):
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag} {self.suite}/{self.name}: expected {self.expected}, got {self.got}"


# ------------------------------------------------------------------ fixtures

def z(n):
    return cyclic(n)


V4 = direct_product(cyclic(2), cyclic(2))

GROUPS = {
    "1": trivial_group(), "Z2": z(2), "Z3": z(3), "Z4": z(4), "V4": V4, "Z5": z(5),
    "S3": symmetric(3), "Z6": z(6), "Z7": z(7), "Z8": z(8),
    "Z4xZ2": direct_product(z(4), z(2)), "Z2^3": direct_product(V4, z(2)),
    "D4": dihedral(4), "Q8": quaternion(),
}

CIRCLE = validate_complex(3, [(0, 1), (1, 2), (0, 2)])
FILLED_TRIANGLE = validate_complex(3, [(0, 1), (1, 2), (0, 2)], [(0, 1, 2)])
WEDGE = validate_complex(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


def sign_action(P, factors):
    """Module Z/d acting through the first nontrivial hom P -> Z/2 by -1, or None."""
    if len(factors) != 1 or factors[0] <= 2:
        return None
    for h in enumerate_homs(P, cyclic(2)):
        if any(h.images):
            d = factors[0]
            mats = tuple(((d - 1 if h.images[p] else 1,),) for p in range(P.order))
            return PModule(P, tuple(factors), mats)
    return None


def modules_for(P, factor_choices):
    """Trivial module plus the sign action where one exists, for each factor list."""
    out = []
    for factors in factor_choices:
        out.append(("trivial", PModule.trivial(P, tuple(factors))))
        twisted = sign_action(P, factors)
        if twisted is not None:
            out.append(("sign", twisted))
    return out


def two_types(pi1_names, factor_choices, caps=DEFAULT_CAPS):
    """(label, TwoType) over every module and every H^3 class."""
    out = []
    for name in pi1_names:
        P = GROUPS[name]
        for act, A in modules_for(P, factor_choices):
            h3 = cohomology_group(P, A, 3, caps)
            for coords in h3.elements():
                label = f"pi1={name},pi2={list(A.factors)}{'' if act == 'trivial' else '-' + act},k={list(coords)}"
                out.append((label, make_two_type(P, A, h3.cocycle(coords))))
    return out


# -------------------------------------------------------------------- suites

def suite_cohomology(caps=DEFAULT_CAPS, **_):
    for pname in ("Z2", "Z3", "Z4", "V4", "S3", "Z6"):
        P = GROUPS[pname]
        for act, A in modules_for(P, ((2,), (3,), (4,))):
            for n in (1, 2, 3):
                name = f"H{n}({pname};Z{A.factors[0]}-{act})"
                try:
                    _, _, brute = oracle.brute_cocycles(P, A, n, caps)
                except CapExceeded:
                    continue
                got = cohomology_group(P, A, n, caps).order
                yield Check("cohomology", name, brute, got, brute == got)


def suite_gcd(caps=DEFAULT_CAPS, **_):
    for m in range(2, 7):
        for n in range(2, 7):
            P = cyclic(m)
            A = PModule.trivial(P, (n,))
            ref = oracle.periodic_h2_cyclic(P, A)
            try:
                ref_brute = oracle.brute_cocycles(P, A, 2, caps)[2]
            except CapExceeded:
                ref_brute = ref
            got = cohomology_group(P, A, 2, caps).order
            ok = got == ref == ref_brute == gcd(m, n)
            yield Check("gcd", f"H2(Z{m};Z{n})", ref, got, ok)


def suite_h1(caps=DEFAULT_CAPS, **_):
    circle = Presentation(1, ())
    for name, G in GROUPS.items():
        if G.order > 8:
            continue
        want = len(conjugacy_classes(G))
        got = len(h1_nonabelian(circle, G, caps))
        yield Check("h1", f"H1(S1;{name})", want, got, want == got)


def direct_semidirect(G):
    """Hom(Z, Z(G)) x| Out(G) built from structure(G): elements (z, outer class)."""
    st = group_structure(G)
    elems = [(c, o) for c in st.center for o in range(st.out.order)]
    pos = {e: i for i, e in enumerate(elems)}
    mul = []
    for c1, o1 in elems:
        s = st.aut_perms[st.out_transversal[o1]]
        mul.append(tuple(pos[(G.mul[c1][s[c2]], st.out.mul[o1][o2])] for c2, o2 in elems))
    return elems, tuple(mul)


def compare_h0(G, caps=DEFAULT_CAPS):
    x = adjoint_crossed_module(G, caps)
    res = h0_crossed(Presentation(1, ()), x, caps)
    st = group_structure(G)
    from .xmod import ker_coker
    kc = ker_coker(x)
    elems, mul = direct_semidirect(G)
    pos = {e: i for i, e in enumerate(elems)}
    bij = [pos[(kc.ker_elements[h[0]], st.out_projection[kc.coker_transversal[c]])]
           for h, c in res.elements]
    same = sorted(bij) == list(range(len(elems))) and all(
        bij[res.table.mul[a][b]] == mul[bij[a]][bij[b]]
        for a in range(len(bij)) for b in range(len(bij)))
    return res.table.order, len(elems), same


def suite_h0(caps=DEFAULT_CAPS, **_):
    for name in ("Z4", "S3", "V4"):
        got, want, same = compare_h0(GROUPS[name], caps)
        yield Check("h0", f"H0(S1;ad {name}) order", want, got, want == got)
        yield Check("h0", f"H0(S1;ad {name}) table", True, same, same)


HOPF_PI1 = ("1", "Z2", "Z3", "V4")
HOPF_PI2 = ((), (2,), (4,))


def _corrupt(report):
    """Send the first non-basepoint element of the second term to the basepoint."""
    terms, maps = report.terms, [list(m) for m in report.maps]
    name, mapping = maps[1]
    mapping = dict(mapping)
    src = [x for x in terms[1][1] if x != terms[1][2]]
    if src:
        mapping[src[0]] = terms[2][2]
    else:
        mapping[terms[1][2]] = next((x for x in terms[2][1] if x != terms[2][2]), terms[2][2])
    maps[1] = (name, mapping)
    return check_exact(terms, [tuple(m) for m in maps])


def suite_hopf(caps=DEFAULT_CAPS, fault=False, **_):
    for label, t in two_types(HOPF_PI1, HOPF_PI2, caps):
        for gname in ("Z2", "Z4"):
            _, report = h2_constant_abelian(t, GROUPS[gname], caps)
            if fault:
                report = _corrupt(report)
            flags = list(report.exact_at) + list(report.composes_to_base)
            wit = next((w for w in report.witnesses if w is not None), None)
            got = "all exact" if report.all_exact else f"not exact, witness {wit}"
            yield Check("hopf", f"{label},G={gname} orders={report.orders()}", "all exact",
                        got, report.all_exact and all(flags))


def suite_split(caps=DEFAULT_CAPS, **_):
    for label, t in two_types(HOPF_PI1, HOPF_PI2, caps):
        if not cohomology_group(t.pi1, t.pi2, 3, caps).is_coboundary(t.k):
            continue
        for gname in ("Z2", "Z4"):
            G = GROUPS[gname]
            classes, _ = h2_constant_abelian(t, G, caps)
            coeff = PModule.trivial(t.pi1, classes.coeff.factors)
            want = cohomology_group(t.pi1, coeff, 2, caps).order * len(classes.homs)
            yield Check("split", f"{label},G={gname} order", want, classes.order,
                        want == classes.order)
            sd = split_check(t, G, caps)
            ok = all(sd.checks.values())
            yield Check("split", f"{label},G={gname} section", True, ok, ok)


def obstruction_case(k_nonzero, caps=DEFAULT_CAPS):
    P = cyclic(2)
    A = PModule.trivial(P, (2,))
    h3 = cohomology_group(P, A, 3, caps)
    t = make_two_type(P, A, h3.cocycle((1,) if k_nonzero else (0,)))
    classes, report = h2_constant_abelian(t, cyclic(2), caps)
    hom_term = report.terms[3][1]
    image = set(report.maps[2][1].values())
    ident = next(j for j, h in enumerate(classes.homs) if any(h.images()[0]))
    return {"surjective": image == set(hom_term),
            "delta_id": classes.delta[ident], "order": classes.order,
            "exact": report.all_exact}


def suite_obstruction(caps=DEFAULT_CAPS, **_):
    nz = obstruction_case(True, caps)
    zero = obstruction_case(False, caps)
    yield Check("obstruction", "k!=0 surjective", False, nz["surjective"], not nz["surjective"])
    yield Check("obstruction", "k!=0 delta(id)", "nonzero", nz["delta_id"], any(nz["delta_id"]))
    yield Check("obstruction", "k!=0 exact", True, nz["exact"], nz["exact"])
    yield Check("obstruction", "k=0 surjective", True, zero["surjective"], zero["surjective"])
    yield Check("obstruction", "k=0 exact", True, zero["exact"], zero["exact"])


EXT_GROUPS = ("1", "Z2", "Z3", "Z4", "V4", "Z5", "S3", "Z6")


def suite_extensions(caps=DEFAULT_CAPS, **_):
    for pn in EXT_GROUPS:
        for gn in EXT_GROUPS:
            P, G = GROUPS[pn], GROUPS[gn]
            if P.order * G.order > caps.extensions:
                continue
            want = oracle.brute_extensions(P, G, caps)
            got = len(extensions(P, G, caps).classes)
            yield Check("extensions", f"Ext({pn};{gn})", want, got, want == got)


def suite_giraud(caps=DEFAULT_CAPS, **_):
    S3 = GROUPS["S3"]
    st = group_structure(S3)
    for label, t in two_types(("1", "Z2"), ((), (2,)), caps):
        res = giraud_h2(t, S3, caps)
        rep = res.report
        yield Check("giraud", f"{label},G=S3 orders={rep.orders()}", "all exact",
                    "all exact" if rep.all_exact else f"witnesses {rep.witnesses}",
                    rep.all_exact)
        if t.pi1.order == 1:
            homs = {f for f in _central_homs(t.pi2, S3, st)}
            orbits = {min(tuple(st.aut_perms[s][x] for x in f) for s in range(len(st.aut_perms)))
                      for f in homs}
            yield Check("giraud", f"{label},G=S3 hurewicz", len(orbits), len(res.middle),
                        len(orbits) == len(res.middle))
    # abelian G: the F-trivial part of the middle term is the abelian answer modulo Aut(G)
    for label, t in two_types(("1", "Z2", "Z3"), ((), (2,)), caps):
        for gname in ("Z2", "Z3", "Z4"):
            G = GROUPS[gname]
            res = giraud_h2(t, G, caps)
            classes, _ = h2_constant_abelian(t, G, caps)
            want = out_orbits_abelian(classes)
            got = sum(1 for key in res.middle.elements if not any(key[0]))
            yield Check("giraud", f"{label},G={gname} abelian", want, got,
                        want == got and res.report.all_exact)


def _central_homs(A, G, st):
    from .monodromy import _central_homs as ch
    return ch(A, G, st)


DESCENT_LIMIT = 20000


def suite_descent(caps=DEFAULT_CAPS, seed=0, **_):
    # zero associator: coherent lam are exactly the 2-cocycles
    for pn in ("Z2", "Z3", "Z4", "V4", "S3"):
        P = GROUPS[pn]
        for gn in ("Z2", "Z3", "Z4"):
            G = GROUPS[gn]
            n = P.order
            if G.order ** ((n - 1) ** 2) > DESCENT_LIMIT:
                continue
            A = PModule.trivial(P, (G.order,))
            H = make_gr_cat(P, A, Cochain.zero(A, 3))
            accept_d = accept_c = agree = 0
            for values in product(range(G.order), repeat=(n - 1) ** 2):
                m = make_datum(H, G, lam_from_values(n, values))
                a = bool(validate_datum(m))
                c = Cochain(A, 2, tuple((v,) for v in values))
                b = coboundary(c).is_zero()
                accept_d += a
                accept_c += b
                agree += a == b
            total = G.order ** ((n - 1) ** 2)
            yield Check("descent", f"coherent=cocycle({pn};{gn})", accept_c, accept_d,
                        agree == total)
    # monoidal classes: brute force against the (f, mu) pipeline
    for label, t in two_types(("1", "Z2", "Z3"), ((), (2,), (4,)), caps):
        H = gr_cat_from_two_type(t)
        for gn in ("Z2", "Z4"):
            G = GROUPS[gn]
            try:
                reps = oracle.brute_monoidal(H, G, caps)
            except CapExceeded:
                continue
            classes, _ = pi0_monoidal_to_G1(H, G, caps)
            yield Check("descent", f"classes {label},G={gn}", len(reps), classes.order,
                        len(reps) == classes.order)
    # isomorphic() is an equivalence relation on sampled data
    rng = random.Random(seed)
    P, G = GROUPS["Z3"], GROUPS["Z2"]
    A = PModule.trivial(P, (2,))
    H = make_gr_cat(P, A, Cochain.zero(A, 3))
    valid = [m for m in (make_datum(H, G, lam_from_values(3, v))
                         for v in product(range(2), repeat=4)) if validate_datum(m)]
    sample = [valid[rng.randrange(len(valid))] for _ in range(6)]
    refl = all(isomorphic(m, m) is not None for m in sample)
    sym = all((isomorphic(a, b) is None) == (isomorphic(b, a) is None)
              for a in sample for b in sample)
    trans = all(not (isomorphic(a, b) and isomorphic(b, c)) or isomorphic(a, c) is not None
                for a in sample for b in sample for c in sample)
    yield Check("descent", "isomorphic is an equivalence", True, refl and sym and trans,
                refl and sym and trans)


def suite_pi1(**_):
    for name, X, want in (("circle", CIRCLE, [0]), ("filled triangle", FILLED_TRIANGLE, []),
                          ("wedge of two circles", WEDGE, [0, 0])):
        got = abelianization(pi1_presentation(X, 0))
        yield Check("pi1", f"{name} abelianization", want, got, got == want)


SUITES = {
    "cohomology": suite_cohomology, "gcd": suite_gcd, "h1": suite_h1, "h0": suite_h0,
    "hopf": suite_hopf, "split": suite_split, "obstruction": suite_obstruction,
    "extensions": suite_extensions, "giraud": suite_giraud, "descent": suite_descent,
    "pi1": suite_pi1,
}
GROUPS_OF_SUITES = {"default": ("cohomology",), "all": tuple(SUITES)}


def run(selector="default", caps=DEFAULT_CAPS, seed=0, fault=False):
    names = GROUPS_OF_SUITES.get(selector, (selector,))
    checks = []
    for name in names:
        if name not in SUITES:
            raise KeyError(name)
        checks.extend(SUITES[name](caps=caps, seed=seed, fault=fault))
    return checks


def format_report(checks):
    lines = [c.line() for c in checks]
    failed = sum(1 for c in checks if not c.ok)
    lines.append(f"{len(checks)} checks, {failed} failed")
    return "\n".join(lines) + "\n"
