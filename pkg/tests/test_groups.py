import pytest

from locconst.config import Caps
from locconst.errors import CapExceeded, NoInverse, NotAssociative, PresentationNotRealizable
from locconst.groups import (Presentation, all_permutation_automorphisms, automorphisms,
                             conjugacy_classes, cyclic, dihedral, direct_product,
                             enumerate_homs, quaternion, realize_presentation, structure,
                             symmetric, validate_group)
from locconst.io import named_group


def test_validate_group_rejects_non_group():
    with pytest.raises(NoInverse) as exc:
        validate_group([[0, 1], [0, 1]])
    assert exc.value.witness == 1


def test_validate_group_associativity():
    # a Latin square with identity that is not associative
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative):
        validate_group(table)


def test_conjugacy_class_sizes_s3():
    assert sorted(len(c) for c in conjugacy_classes(symmetric(3))) == [1, 2, 3]


@pytest.mark.parametrize("name,center,aut,out", [
    ("Z2", 2, 1, 1), ("S3", 1, 6, 1), ("Z4", 4, 2, 2), ("V4", 4, 6, 6),
    ("Q8", 2, 24, 6), ("D4", 2, 8, 2), ("Z6", 6, 2, 2),
])
def test_structure(name, center, aut, out):
    st = structure(named_group(name))
    assert (len(st.center), st.aut.order, st.out.order) == (center, aut, out)


@pytest.mark.parametrize("name", ["Z4", "V4", "S3", "Q8", "D4", "Z6"])
def test_automorphisms_match_permutation_scan(name):
    G = named_group(name)
    assert automorphisms(G) == sorted(all_permutation_automorphisms(G))


def test_enumerate_homs_examples():
    assert len(enumerate_homs(Presentation(1, ()), symmetric(3))) == 6
    assert len(enumerate_homs(Presentation(1, ((1,),)), symmetric(3))) == 1
    assert len(enumerate_homs(cyclic(3), cyclic(2))) == 1
    assert len(enumerate_homs(cyclic(2), cyclic(2))) == 2


def test_hom_cap():
    with pytest.raises(CapExceeded):
        enumerate_homs(Presentation(3, ()), symmetric(3), Caps(hom_tuples=100))


def test_realize_presentation():
    G, gens = realize_presentation(Presentation(1, ((1, 1, 1, 1), (1,) * 6)))
    assert G.order == 2 and gens == (1,)
    assert realize_presentation(Presentation(0, ()))[0].order == 1
    with pytest.raises(PresentationNotRealizable):
        realize_presentation(Presentation(1, ()))
    with pytest.raises(PresentationNotRealizable):
        realize_presentation(Presentation(2, ((1, 2, -1, -2),)))


def test_named_groups():
    assert named_group("Z2 x Z2").order == 4
    assert named_group("D4") == dihedral(4)
    assert named_group("Q8") == quaternion()
    assert named_group("Z2xZ3").is_abelian
    assert direct_product(cyclic(2), cyclic(3)).order == 6
