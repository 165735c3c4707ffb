"""Kernel dispatch: compiled extension when built, pure Python otherwise.

Set ``LOCCONST_PURE_PYTHON=1`` to force the fallback. Both backends expose
the same functions; ``BACKEND`` names the active one and ``get_backend``
returns either explicitly (the benchmark and the twin tests use it).
"""
import os

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _as_array(seq):
    return np.ascontiguousarray(np.asarray(seq, dtype=np.int64).reshape(-1))


class _Backend:
    def __init__(self, name, module, convert):
        self.name = name
        self._m = module
        self._convert = convert

    def associativity_witness(self, mul, order):
        return self._m.associativity_witness(self._convert(mul), order)

    def search_homs(self, mul, inv, order, n_gens, relators, limit):
        return self._m.search_homs(self._convert(mul), self._convert(inv), order,
                                   n_gens, [list(w) for w in relators], limit)

    def count_solutions(self, order, n_slots, n_out, nf, face_idx, face_sign,
                        actor, act, add, neg, target):
        cv = self._convert
        return int(self._m.count_solutions(order, n_slots, n_out, nf, cv(face_idx),
                                           cv(face_sign), cv(actor), cv(act),
                                           cv(add), cv(neg), cv(target)))

    def count_images(self, order, n_slots, n_out, nf, face_idx, face_sign,
                     actor, act, add, neg):
        cv = self._convert
        return int(self._m.count_images(order, n_slots, n_out, nf, cv(face_idx),
                                        cv(face_sign), cv(actor), cv(act),
                                        cv(add), cv(neg)))


PYTHON = _Backend("python", _pykernels, lambda s: list(np.asarray(s, dtype=np.int64).reshape(-1).tolist()))
COMPILED = _Backend("cython", _ckernels, _as_array) if _ckernels is not None else None


def get_backend(name=None):
    if name is None:
        if os.environ.get("LOCCONST_PURE_PYTHON") or COMPILED is None:
            return PYTHON
        return COMPILED
    if name == "python":
        return PYTHON
    if name == "cython":
        if COMPILED is None:
            raise ImportError("compiled kernels are not built")
        return COMPILED
    raise ValueError(f"unknown backend {name!r}")


_active = get_backend()
BACKEND = _active.name

associativity_witness = _active.associativity_witness
search_homs = _active.search_homs
count_solutions = _active.count_solutions
count_images = _active.count_images
