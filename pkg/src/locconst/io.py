"""JSON file formats.

Groups:
    {"kind": "table", "mul": [[...], ...]}
    {"kind": "presentation", "generators": 2, "relators": [[1, 1], [1, 2, -1, -2]]}
    {"kind": "named", "name": "S3"}          (Z<n>, S3, D<n>, Q8, V4, or A x B)
Modules:   {"factors": [2], "action": {"1": [[1]]}}   keys are element indices
Complexes: {"vertices": n, "edges": [[u, v], ...], "triangles": [[e1, e2, e3], ...]}
2-types:   {"pi1": group, "pi2": module, "k": {"entries": [[[p, q, r], [a, ...]], ...]}}
Crossed modules: {"g1": group, "g0": group, "d": [...], "action": [[...], ...]}
"""
import json
import re

from .errors import ValidationError
from .groups import (Presentation, cyclic, dihedral, direct_product, quaternion,
                     symmetric, validate_group)
from .modules import Cochain, module_from_generators


def named_group(name):
    name = name.replace(" ", "")
    if "x" in name:
        parts = name.split("x")
        G = named_group(parts[0])
        for part in parts[1:]:
            G = direct_product(G, named_group(part))
        return G
    if name in ("1", "trivial"):
        return cyclic(1)
    if name == "V4":
        return direct_product(cyclic(2), cyclic(2))
    if name == "Q8":
        return quaternion()
    m = re.fullmatch(r"(Z|C|S|D)/?(\d+)", name)
    if not m:
        raise ValidationError(f"unknown group name {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind in "ZC":
        return cyclic(n)
    if kind == "S":
        return symmetric(n)
    return dihedral(n)


def group_from_json(obj):
    kind = obj.get("kind", "table" if "mul" in obj else "presentation")
    if kind == "table":
        return validate_group(obj["mul"])
    if kind == "presentation":
        return Presentation(int(obj["generators"]), tuple(tuple(w) for w in obj.get("relators", [])))
    if kind == "named":
        return named_group(obj["name"])
    raise ValidationError(f"unknown group kind {kind!r}")


def group_to_json(G):
    if isinstance(G, Presentation):
        return {"kind": "presentation", "generators": G.n_generators,
                "relators": [list(w) for w in G.relators]}
    return {"kind": "table", "mul": [list(r) for r in G.mul]}


def module_from_json(P, obj):
    action = {int(k): v for k, v in (obj.get("action") or {}).items()}
    return module_from_generators(P, obj.get("factors", []), action)


def module_to_json(A):
    return {"factors": list(A.factors),
            "action": {str(p): [list(r) for r in A.action[p]] for p in range(A.group.order)}}


def complex_from_json(obj):
    from .spaces import validate_complex
    return validate_complex(obj["vertices"], obj.get("edges", []), obj.get("triangles", []))


def two_type_from_json(obj):
    from .spaces import validate_two_type
    return validate_two_type(obj)


def two_type_to_json(t):
    return {"pi1": group_to_json(t.pi1), "pi2": module_to_json(t.pi2),
            "k": cochain_to_json(t.k)}


def cochain_to_json(c):
    return {"degree": c.degree, "entries": [[list(t), list(v)] for t, v in c.entries()]}


def cochain_from_json(A, obj):
    return Cochain.from_entries(A, int(obj["degree"]), [(t, v) for t, v in obj.get("entries", [])])


def crossed_module_from_json(obj):
    from .xmod import validate_crossed_module
    return validate_crossed_module(group_from_json(obj["g1"]), group_from_json(obj["g0"]),
                                   obj["d"], obj["action"])


def crossed_module_to_json(x):
    return {"g1": group_to_json(x.g_minus1), "g0": group_to_json(x.g_0),
            "d": list(x.d), "action": [list(r) for r in x.action]}


def load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2)
