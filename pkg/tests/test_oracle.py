import pytest

from locconst.cohomology import cohomology_group
from locconst.config import Caps
from locconst.errors import CapExceeded
from locconst.groups import cyclic, symmetric
from locconst.io import named_group
from locconst.modules import Cochain, PModule
from locconst.monodromy import pi0_monoidal_to_G1
from locconst.oracle import (brute_cocycles, brute_extensions, brute_monoidal,
                             periodic_h2_cyclic)
from locconst.xmod import make_gr_cat

Z2 = cyclic(2)


def test_brute_cocycles_examples():
    assert brute_cocycles(Z2, PModule.trivial(Z2, (2,)), 2) == (2, 1, 2)
    assert brute_cocycles(cyclic(3), PModule.trivial(cyclic(3), (2,)), 2)[2] == 1
    one = cyclic(1)
    assert brute_cocycles(one, PModule.trivial(one, (3,)), 1) == (1, 1, 1)


def test_brute_cocycles_both_backends_agree():
    P = named_group("V4")
    A = PModule.trivial(P, (2,))
    assert brute_cocycles(P, A, 2, backend="python") == brute_cocycles(P, A, 2)


def test_brute_cocycles_cap():
    with pytest.raises(CapExceeded):
        brute_cocycles(symmetric(3), PModule.trivial(symmetric(3), (4,)), 2)
    with pytest.raises(CapExceeded):
        brute_cocycles(Z2, PModule.trivial(Z2, (2,)), 2, Caps(cocycles=1))


def gr(P, factors, k=None):
    A = PModule.trivial(P, factors)
    kc = Cochain.zero(A, 3) if k is None else cohomology_group(P, A, 3).cocycle(k)
    return make_gr_cat(P, A, kc)


@pytest.mark.parametrize("H,count", [
    (gr(cyclic(1), (2,)), 2), (gr(Z2, ()), 2), (gr(Z2, (2,), (1,)), 2), (gr(Z2, (2,)), 4),
])
def test_brute_monoidal_examples(H, count):
    reps = brute_monoidal(H, Z2)
    assert len(reps) == count
    assert pi0_monoidal_to_G1(H, Z2)[0].order == count


def test_brute_monoidal_only_f_zero_when_obstructed():
    reps = brute_monoidal(gr(Z2, (2,), (1,)), Z2)
    assert {m.f for m in reps} == {(0, 0)}


def test_brute_extensions_examples():
    assert brute_extensions(Z2, cyclic(3)) == 2
    assert brute_extensions(Z2, Z2) == 2
    assert brute_extensions(cyclic(1), symmetric(3)) == 1
    with pytest.raises(CapExceeded):
        brute_extensions(symmetric(3), cyclic(3))


def test_periodic_oracle_twisted():
    from locconst.modules import module_from_generators
    A = module_from_generators(Z2, [4], {1: [[3]]})
    assert periodic_h2_cyclic(Z2, A) == brute_cocycles(Z2, A, 2)[2] == 2
