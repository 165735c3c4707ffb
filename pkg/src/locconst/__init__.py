"""Finite computations for locally constant sheaves and stacks on 2-types."""
from .config import DEFAULT_CAPS, Caps, RunConfig
from .errors import CapExceeded, LocConstError, ValidationError
from .groups import (GroupTable, Presentation, cyclic, dihedral, direct_product,
                     enumerate_homs, quaternion, structure, symmetric, validate_group)
from .modules import Cochain, PModule, module_from_generators
from .cohomology import cohomology_group, is_coboundary
from .spaces import (TwoType, abelianization, make_two_type, pi0_and_monodromy0,
                     pi1_presentation, validate_complex, validate_two_type)
from .xmod import (CrossedModule, SkeletalGrCat, adjoint_crossed_module, ker_coker,
                   skeletal_from_crossed_module, validate_crossed_module)
from .descent import MonoidalDatum, isomorphic, validate_datum
from .monodromy import (extensions, giraud_h2, h0_crossed, h1_nonabelian,
                        h2_constant_abelian, pi0_monoidal_to_G1, split_check)
from .kernels import BACKEND

__version__ = "0.1.0"
