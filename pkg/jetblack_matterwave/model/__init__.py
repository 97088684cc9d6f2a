"""Normalized beam model, materials and screening"""

from .beam import BeamParameters, ScreeningConvention
from .material import (
    ALUMINIUM,
    BUILTIN_MATERIALS,
    SILVER,
    Material,
    MaterialScales,
    material_scales
)
from .material_config import (
    MATERIALS_ENV,
    load_materials,
    parse_material,
    parse_materials,
    to_config_line
)
from .screening import beam_from_material, screening_parameter

__all__ = [
    'BeamParameters',
    'ScreeningConvention',
    'ALUMINIUM',
    'BUILTIN_MATERIALS',
    'SILVER',
    'Material',
    'MaterialScales',
    'material_scales',
    'MATERIALS_ENV',
    'load_materials',
    'parse_material',
    'parse_materials',
    'to_config_line',
    'beam_from_material',
    'screening_parameter',
]
