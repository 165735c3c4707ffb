import pytest
from hypothesis import given, settings, strategies as st

from locconst import kernels
from locconst.groups import cyclic, direct_product, symmetric
from locconst.modules import PModule
from locconst.oracle import _cochain_tables
from locconst.suites import sign_action

pytestmark = pytest.mark.skipif(kernels.COMPILED is None, reason="extension not built")

GROUPS = [cyclic(2), cyclic(3), cyclic(4), direct_product(cyclic(2), cyclic(2)), symmetric(3)]


def tables(P, d, sign, n):
    A = sign_action(P, (d,)) if sign else None
    return _cochain_tables(P, A or PModule.trivial(P, (d,)), n)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(range(len(GROUPS))), st.sampled_from([2, 3, 4]),
       st.booleans(), st.integers(1, 2))
def test_twin_cocycle_counts(gi, d, sign, n):
    P = GROUPS[gi]
    if d ** ((P.order - 1) ** n) > 10**5:
        return
    slots, n_out, nf, fi, fs, actor, act, add, neg, order = tables(P, d, sign, n)
    a = kernels.PYTHON.count_solutions(order, slots, n_out, nf, fi, fs, actor, act, add, neg,
                                       [0] * n_out)
    b = kernels.COMPILED.count_solutions(order, slots, n_out, nf, fi, fs, actor, act, add, neg,
                                         [0] * n_out)
    assert a == b
    slots0, n_out0, nf0, fi0, fs0, actor0, *_ = tables(P, d, sign, n - 1)
    a = kernels.PYTHON.count_images(order, slots0, n_out0, nf0, fi0, fs0, actor0, act, add, neg)
    b = kernels.COMPILED.count_images(order, slots0, n_out0, nf0, fi0, fs0, actor0, act, add, neg)
    assert a == b


@pytest.mark.parametrize("relators", [(), ((1, 1),), ((1, 2, -1, -2),), ((1, 1, 1), (2, 2))])
def test_twin_hom_search(relators):
    G = symmetric(3)
    a = kernels.PYTHON.search_homs(G.flat, G.inv, G.order, 2, relators, 10**6)
    b = kernels.COMPILED.search_homs(G.flat, G.inv, G.order, 2, relators, 10**6)
    assert [tuple(x) for x in a] == [tuple(x) for x in b]


def test_twin_associativity():
    bad = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    for mul in (symmetric(3).flat, [x for row in bad for x in row]):
        n = int(len(mul) ** 0.5)
        a = kernels.PYTHON.associativity_witness(mul, n)
        b = kernels.COMPILED.associativity_witness(mul, n)
        assert (tuple(a) if a else a) == (tuple(b) if b else b)


def test_backend_selection(monkeypatch):
    monkeypatch.setenv("LOCCONST_PURE_PYTHON", "1")
    assert kernels.get_backend().name == "python"
    assert kernels.get_backend("cython").name == "cython"
