"""Exact computations with the 240 exceptional curves on degree-one del Pezzo surfaces."""

from .errors import Dp1Error
from .exactnum import field_make
from .picard import PicClass, exceptional_classes, partner
from .plane import Configuration, PlaneCurve, PlanePoint, concurrency_count, general_position

__all__ = [
    "Dp1Error",
    "field_make",
    "PicClass",
    "exceptional_classes",
    "partner",
    "Configuration",
    "PlaneCurve",
    "PlanePoint",
    "concurrency_count",
    "general_position",
]
__version__ = "0.1.0"
