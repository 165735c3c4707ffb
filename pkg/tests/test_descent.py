from itertools import product

import pytest

from locconst.cohomology import coboundary, cohomology_group
from locconst.descent import (gauge, isomorphic, lam_from_values, make_datum, orbit, twist,
                              validate_datum)
from locconst.errors import NonAbelianTarget
from locconst.groups import cyclic, symmetric
from locconst.modules import Cochain, PModule
from locconst.xmod import make_gr_cat

Z2, Z3 = cyclic(2), cyclic(3)


def gr(P, factors, k_coords=None):
    A = PModule.trivial(P, factors)
    k = Cochain.zero(A, 3) if k_coords is None else cohomology_group(P, A, 3).cocycle(k_coords)
    return make_gr_cat(P, A, k)


def test_zero_datum_is_valid():
    assert validate_datum(make_datum(gr(Z2, (2,)), Z2, lam_from_values(2, [0])))


def test_obstructed_identity_has_no_lam():
    H = gr(Z2, (2,), (1,))
    for v in range(2):
        verdict = validate_datum(make_datum(H, Z2, lam_from_values(2, [v]), f=(0, 1)))
        assert not verdict and verdict.witness == (1, 1, 1)


def test_cocycle_lam_is_valid():
    H = gr(Z3, (3,))
    h2 = cohomology_group(Z3, PModule.trivial(Z3, (3,)), 2)
    assert h2.order == 3
    for values in product(range(3), repeat=4):
        m = make_datum(H, Z3, lam_from_values(3, values))
        c = Cochain(PModule.trivial(Z3, (3,)), 2, tuple((v,) for v in values))
        assert bool(validate_datum(m)) == coboundary(c).is_zero()


def test_minimal_violating_triple():
    H = gr(Z3, (3,))
    m = make_datum(H, Z3, lam_from_values(3, [0, 0, 0, 1]))
    lam = m.lam
    bad = [(p, q, r) for p in range(1, 3) for q in range(1, 3) for r in range(1, 3)
           if (lam[p][q] + lam[(p + q) % 3][r]) % 3 != (lam[q][r] + lam[p][(q + r) % 3]) % 3]
    v = validate_datum(m)
    assert not v and v.reason == "coherence" and v.witness == min(bad) == (1, 1, 2)


def test_non_abelian_target_rejected():
    with pytest.raises(NonAbelianTarget):
        make_datum(gr(Z2, ()), symmetric(3), lam_from_values(2, [0]))


def test_isomorphic_recovers_gauge():
    H = gr(Z3, (3,))
    m = make_datum(H, Z3, lam_from_values(3, [0] * 4))
    nu = (0, 2, 1)
    m2 = gauge(m, nu)
    assert validate_datum(m2)
    sigma, found = isomorphic(m, m2)
    assert gauge(m, found).key == m2.key and sigma == 0
    assert isomorphic(m, m) == (0, (0, 0, 0))


def test_distinct_classes_are_not_isomorphic():
    H = gr(Z2, ())
    a = make_datum(H, Z2, lam_from_values(2, [0]))
    b = make_datum(H, Z2, lam_from_values(2, [1]))
    assert isomorphic(a, b) is None


def test_twisted_equivalence_over_s3():
    S3 = symmetric(3)
    H = gr(Z2, ())
    valid = [make_datum(H, S3, lam_from_values(2, [l]), F=(0, F), adjoint=True)
             for F in range(6) for l in range(6)]
    valid = [m for m in valid if validate_datum(m)]
    assert len(valid) == 6
    assert all(isomorphic(valid[0], m, twisted=True) is not None for m in valid)
    assert set(orbit(valid[0], twisted=True)) == {m.key for m in valid}


def test_twist_preserves_validity():
    G = cyclic(4)
    H = gr(Z2, (2,))
    for f in [(0, 0), (0, 2)]:
        for v in range(4):
            m = make_datum(H, G, lam_from_values(2, [v]), f=f)
            if validate_datum(m):
                assert validate_datum(twist(m, 1))
