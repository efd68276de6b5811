"""Covers, Morita algebras and dominant dimension for bound quiver algebras."""

from ._core import BACKEND
from .algebra import Algebra, Idempotent, QuiverPresentation, build_algebra, corner_algebra, opposite_algebra
from .exactlin import GF, QQ, Matrix, Subspace
from .fixtures import FIXTURE_NAMES, load, parse_input
from .homological import (
    AtLeast,
    dominant_dimension,
    injective_envelope,
    minimal_injective_resolution,
    projective_cover,
    qf3_minimal_faithful,
)
from .krullschmidt import add_equal, add_membership, decompose, is_isomorphic
from .modules import Bimodule, Module, hom_space, module_from_spec, tensor_over
from .morita import (
    cover_check,
    double_centralizer_check,
    inverse_nakayama,
    is_morita_algebra,
    is_self_injective,
    nakayama,
    schur_algebra,
)

__version__ = "0.1.0"
