"""Group elements, enumeration and stabilizer chains."""

from .bsgs import Bsgs, bsgs_build
from .enumerate import (
    DEFAULT_BUDGET,
    EnumeratedGroup,
    element_order,
    from_elements,
    generate,
    is_fixed_point_free,
    semidirect,
)
from .linear import AffineElem, FpfCertificate, MatrixElem
from .perm import Permutation

__all__ = [
    "AffineElem",
    "Bsgs",
    "DEFAULT_BUDGET",
    "EnumeratedGroup",
    "FpfCertificate",
    "MatrixElem",
    "Permutation",
    "bsgs_build",
    "element_order",
    "from_elements",
    "generate",
    "is_fixed_point_free",
    "semidirect",
]
