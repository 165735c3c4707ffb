from math import gcd

import pytest

from locconst.cohomology import (coboundary, cohomology_group, delta_obstruction,
                                 is_coboundary, pushforward_class)
from locconst.errors import NotACocycle, NotEquivariant
from locconst.groups import cyclic, direct_product, symmetric
from locconst.modules import Cochain, ModuleHom, PModule, module_from_generators
from locconst.oracle import brute_cocycles
from locconst.xmod import make_gr_cat

Z2, Z3, Z4 = cyclic(2), cyclic(3), cyclic(4)
V4 = direct_product(Z2, Z2)
S3 = symmetric(3)


def test_h2_z2_z2():
    H = cohomology_group(Z2, PModule.trivial(Z2, (2,)), 2)
    assert H.invariant_factors == (2,)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(2, 7) for n in range(2, 7)])
def test_h2_cyclic_gcd(m, n):
    P = cyclic(m)
    assert cohomology_group(P, PModule.trivial(P, (n,)), 2).order == gcd(m, n)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_klein_and_s3_mod2(n):
    assert cohomology_group(V4, PModule.trivial(V4, (2,)), n).order == 2 ** (n + 1)
    assert cohomology_group(S3, PModule.trivial(S3, (2,)), n).order == 2


def test_twisted_z4_over_z2():
    A = module_from_generators(Z2, [4], {1: [[3]]})
    # values frozen from brute_cocycles
    assert [cohomology_group(Z2, A, n).order for n in range(4)] == [2, 2, 2, 2]
    assert [brute_cocycles(Z2, A, n)[2] for n in range(1, 4)] == [2, 2, 2]


def test_h0_is_fixed_points():
    A = module_from_generators(Z2, [4], {1: [[3]]})
    assert cohomology_group(Z2, A, 0).order == len(A.fixed_points())


def test_representatives_are_cocycles_and_classes_round_trip():
    A = PModule.trivial(V4, (2,))
    H = cohomology_group(V4, A, 2)
    for coords in H.elements():
        c = H.cocycle(coords)
        assert coboundary(c).is_zero()
        assert H.class_of(c) == coords


def test_coboundary_witness():
    A = PModule.trivial(Z3, (3,))
    w = Cochain.from_function(A, 1, lambda g: (g,))
    c = coboundary(w)
    chk = is_coboundary(c)
    assert chk
    assert coboundary(chk.witness) == c


def test_not_a_coboundary_reports_class():
    A = PModule.trivial(Z2, (2,))
    c = cohomology_group(Z2, A, 2).representatives[0]
    chk = is_coboundary(c)
    assert not chk and chk.coordinates == (1,)


def test_not_a_cocycle():
    c = Cochain.from_function(PModule.trivial(Z3, (2,)), 2, lambda g, h: (1,) if g == 1 else (0,))
    with pytest.raises(NotACocycle) as exc:
        is_coboundary(c)
    assert exc.value.witness is not None


def test_pushforward_requires_equivariance():
    A = module_from_generators(Z2, [4], {1: [[3]]})
    B = PModule.trivial(Z2, (4,))
    f = ModuleHom.from_images(A, B, [(1,)])
    with pytest.raises(NotEquivariant):
        pushforward_class(f, Cochain.zero(A, 2))


def test_delta_obstruction():
    A = PModule.trivial(Z2, (2,))
    k = cohomology_group(Z2, A, 3).representatives[0]
    H = make_gr_cat(Z2, A, k)
    ident = ModuleHom.from_images(A, A, [(1,)])
    _, coords = delta_obstruction(ident, H)
    assert coords == (1,)
    zero = ModuleHom.from_images(A, A, [(0,)])
    assert delta_obstruction(zero, H)[1] == (0,)


def test_trivial_group_has_no_higher_cohomology():
    P = cyclic(1)
    A = PModule.trivial(P, (5,))
    assert [cohomology_group(P, A, n).order for n in range(4)] == [5, 1, 1, 1]
    assert brute_cocycles(P, A, 2) == (1, 1, 1)
