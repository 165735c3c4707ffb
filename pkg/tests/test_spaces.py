import pytest

from locconst.errors import (ActionNotHomomorphic, NotACocycle, PresentationNotRealizable,
                             ValidationError, VertexOutOfRange)
from locconst.groups import cyclic
from locconst.spaces import (abelianization, components, pi0_and_monodromy0,
                             pi1_presentation, validate_complex, validate_two_type)

CIRCLE = validate_complex(3, [(0, 1), (1, 2), (0, 2)])
DISK = validate_complex(3, [(0, 1), (1, 2), (0, 2)], [(0, 1, 2)])
WEDGE = validate_complex(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


def test_pi1_circle():
    P = pi1_presentation(CIRCLE)
    assert P.n_generators == 1 and P.relators == ()
    assert abelianization(P) == [0]


def test_pi1_disk_and_wedge():
    assert abelianization(pi1_presentation(DISK)) == []
    assert abelianization(pi1_presentation(WEDGE)) == [0, 0]


def test_basepoint_independence_of_abelianization():
    assert all(abelianization(pi1_presentation(WEDGE, b)) == [0, 0] for b in range(5))


def test_projective_plane_like_relator():
    # a 2-cell glued along a loop traversed twice gives Z/2
    from locconst.groups import Presentation
    assert abelianization(Presentation(1, ((1, 1),))) == [2]


def test_pi0_and_stalks():
    X = validate_complex(4, [(0, 1), (2, 3)])
    r = pi0_and_monodromy0(X, cyclic(3))
    assert r.n_components == 2 and r.order == 9
    assert pi0_and_monodromy0(validate_complex(0, []), 5).order == 1
    assert components(validate_complex(3, [])) == [[0], [1], [2]]


def test_complex_validation():
    with pytest.raises(VertexOutOfRange):
        validate_complex(2, [(0, 2)])
    with pytest.raises(ValidationError):
        validate_complex(4, [(0, 1), (1, 2), (2, 3)], [(0, 1, 2)])
    with pytest.raises(VertexOutOfRange):
        pi1_presentation(CIRCLE, 7)


def z2_type(k_entries, action=None):
    return {"pi1": {"kind": "named", "name": "Z2"},
            "pi2": {"factors": [2], **({"action": action} if action else {})},
            "k": {"entries": k_entries}}


def test_two_type_roundtrip():
    t = validate_two_type(z2_type([[[1, 1, 1], [1]]]))
    assert t.k(1, 1, 1) == (1,)
    assert t.pi2.is_trivial_action


def test_two_type_rejects_non_cocycle():
    raw = {"pi1": {"kind": "named", "name": "Z3"}, "pi2": {"factors": [3]},
           "k": {"entries": [[[1, 1, 1], [1]]]}}
    with pytest.raises(NotACocycle):
        validate_two_type(raw)


def test_two_type_rejects_bad_action():
    with pytest.raises(ActionNotHomomorphic):
        validate_two_type(z2_type([], {"1": [[0]]}))


def test_two_type_from_presentation():
    raw = {"pi1": {"kind": "presentation", "generators": 1, "relators": [[1, 1, 1, 1]]},
           "pi2": {"factors": [4], "action": {"1": [[3]]}}, "k": {"entries": []}}
    t = validate_two_type(raw)
    assert t.pi1.order == 4 and t.pi2.action[1] == ((3,),)
    raw["pi2"]["action"] = {"1": [[2]]}
    with pytest.raises(ActionNotHomomorphic):
        validate_two_type(raw)
    raw = {"pi1": {"kind": "presentation", "generators": 2, "relators": []}, "pi2": {"factors": []}}
    with pytest.raises(PresentationNotRealizable):
        validate_two_type(raw)
