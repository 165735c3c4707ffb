import pytest

from locconst.cohomology import coboundary, cohomology_group
from locconst.errors import KNotTrivial, NonAbelianTarget
from locconst.groups import Presentation, cyclic, symmetric
from locconst.io import named_group
from locconst.modules import Cochain, PModule, module_from_generators
from locconst.monodromy import (check_exact, extensions, giraud_h2, h0_crossed,
                                h1_nonabelian, h2_constant_abelian, out_orbits_abelian,
                                pi0_monoidal_to_G1, split_check)
from locconst.spaces import make_two_type
from locconst.suites import _corrupt
from locconst.xmod import adjoint_crossed_module, gr_cat_from_two_type

Z2, Z3 = cyclic(2), cyclic(3)
CIRCLE = Presentation(1, ())


def two_type(P, factors, action=None, k=None):
    A = module_from_generators(P, factors, action or {})
    kc = Cochain.zero(A, 3) if k is None else cohomology_group(P, A, 3).cocycle(k)
    return make_two_type(P, A, kc)


# --------------------------------------------------------------------- H^1

def test_h1_examples():
    assert len(h1_nonabelian(CIRCLE, symmetric(3))) == 3
    assert len(h1_nonabelian(Presentation(0, ()), symmetric(3))) == 1
    ps = h1_nonabelian(Z2, Z2)
    assert len(ps) == 2 and ps.base == (0, 0)


# --------------------------------------------------------------------- H^0

def test_h0_examples():
    assert h0_crossed(CIRCLE, adjoint_crossed_module(symmetric(3))).table.order == 1
    r = h0_crossed(CIRCLE, adjoint_crossed_module(cyclic(4)))
    assert r.table.order == 8 and not r.table.is_abelian
    r = h0_crossed(Presentation(0, ()), adjoint_crossed_module(cyclic(4)))
    assert r.table.order == 2


# ------------------------------------------------------------- abelian H^2

@pytest.mark.parametrize("P,factors,k,order", [
    (cyclic(1), (2,), None, 2),
    (Z2, (), None, 2),
    (Z2, (2,), None, 4),
    (Z2, (2,), (1,), 2),
])
def test_h2_examples(P, factors, k, order):
    classes, report = h2_constant_abelian(two_type(P, factors, k=k), Z2)
    assert classes.order == order
    assert report.all_exact


def test_obstruction_kills_identity():
    classes, _ = h2_constant_abelian(two_type(Z2, (2,), k=(1,)), Z2)
    assert len(classes.homs) == 2 and sorted(classes.lifts) == [0]


def test_non_abelian_target():
    with pytest.raises(NonAbelianTarget):
        pi0_monoidal_to_G1(gr_cat_from_two_type(two_type(Z2, ())), symmetric(3))


def test_class_of_datum_round_trip():
    classes, _ = h2_constant_abelian(two_type(named_group("V4"), (2,)), cyclic(4))
    for i in range(classes.order):
        assert classes.elements[i] == classes.class_of_datum(classes.datum(i))


def test_corrupted_map_is_detected():
    _, report = h2_constant_abelian(two_type(Z2, (2,)), Z2)
    bad = _corrupt(report)
    assert not bad.all_exact
    assert any(w is not None for w in bad.witnesses)


def test_check_exact_simple():
    terms = [("A", (0, 1), 0), ("B", (0, 1, 2, 3), 0), ("C", (0, 1), 0)]
    maps = [("i", {0: 0, 1: 2}), ("p", {0: 0, 1: 1, 2: 0, 3: 1})]
    assert check_exact(terms, maps).exact_at == [True]
    maps = [("i", {0: 0, 1: 1}), ("p", {0: 0, 1: 1, 2: 0, 3: 1})]
    r = check_exact(terms, maps)
    assert r.exact_at == [False] and r.witnesses[0] == 1


# ------------------------------------------------------------------- split

def test_split_with_nonzero_trivializer():
    A = PModule.trivial(Z3, (3,))
    c = Cochain.from_function(A, 2, lambda p, q: (1,) if (p, q) == (1, 1) else (0,))
    k = coboundary(c)
    assert not k.is_zero()
    t = make_two_type(Z3, A, k)
    sd = split_check(t, Z3)
    assert all(sd.checks.values())
    assert not sd.trivializer.is_zero()


def test_split_rejects_nontrivial_k():
    with pytest.raises(KNotTrivial):
        split_check(two_type(Z2, (2,), k=(1,)), Z2)


# -------------------------------------------------------------- extensions

@pytest.mark.parametrize("P,G,count", [
    ("Z2", "Z3", 2), ("Z2", "Z2", 2), ("1", "S3", 1), ("Z2", "1", 1), ("Z2", "Z4", 4),
    ("Z3", "Z3", 3), ("V4", "Z2", 8), ("Z2", "V4", 7), ("Z2", "S3", 1),
])
def test_extension_counts(P, G, count):
    # expected counts frozen from brute_extensions
    assert len(extensions(named_group(P), named_group(G)).classes) == count


def test_extension_obstruction_records():
    ext = extensions(Z2, Z3)
    assert set(ext.outer) == {(0, 0), (0, 1)} and ext.obstructed == ()
    assert ext.classes.base.outer_action == (0, 0)


# ------------------------------------------------------------------ Giraud

@pytest.mark.parametrize("factors", [(), (2,), (4,)])
def test_giraud_simply_connected(factors):
    t = two_type(cyclic(1), factors)
    G = cyclic(4)
    res = giraud_h2(t, G)
    # Hom(pi2, Z/4) modulo Aut(Z/4) = {+-1}
    expected = {(): 1, (2,): 2, (4,): 3}[factors]
    assert len(res.middle) == expected == len(res.last)
    assert res.report.all_exact


def test_giraud_z2_over_z3():
    res = giraud_h2(two_type(Z2, ()), Z3)
    assert len(res.first) == 2 and len(res.middle) == 2
    assert res.report.all_exact


def test_giraud_abelian_cross_check():
    t = two_type(Z2, (4,))
    G = cyclic(4)
    res = giraud_h2(t, G)
    classes, _ = h2_constant_abelian(t, G)
    trivial_F = sum(1 for key in res.middle.elements if not any(key[0]))
    assert trivial_F == out_orbits_abelian(classes) == 6
