"""
Bra-ket package initialization: the truncated stack model and completeness checks
"""

__version__ = "1.0.0"
__author__ = "TKA Team"

from .relations import IndexRelation, RelationAlgebra
from .omega_model import OmegaModel, omega_model_eval, overflow_free_domain
from .completeness import (
    hat_map, check_map, restrict_matrix, relative_completeness_check, braket_encode_check, model_laws
)

__all__ = [
    'IndexRelation',
    'RelationAlgebra',
    'OmegaModel',
    'omega_model_eval',
    'overflow_free_domain',
    'hat_map',
    'check_map',
    'restrict_matrix',
    'relative_completeness_check',
    'braket_encode_check',
    'model_laws'
]
