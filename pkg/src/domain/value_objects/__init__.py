# -*- coding: utf-8 -*-
"""Domain Value Objects"""

from .field_spec import FieldSpec
from .field_element import FieldElement
from .element_array import ElementArray
from .half_power_scalar import HalfPowerScalar
from .laurent_polynomial import LaurentPolynomial
from .residue_value import ResidueValue

__all__ = [
    'FieldSpec',
    'FieldElement',
    'ElementArray',
    'HalfPowerScalar',
    'LaurentPolynomial',
    'ResidueValue',
]
