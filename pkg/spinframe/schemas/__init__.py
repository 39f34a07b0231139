"""
Schemas Pydantic do spinframe
"""

from spinframe.schemas.curve import ProbabilityPoint, TransitionCurve
from spinframe.schemas.field import DerivedFrequencies, FieldParams
from spinframe.schemas.frame import AlphaMode, FrameLabel
from spinframe.schemas.integrator import IntegratorConfig, Scheme
from spinframe.schemas.sweep import SweepSpec, SweepVariable

__all__ = [
    "AlphaMode",
    "DerivedFrequencies",
    "FieldParams",
    "FrameLabel",
    "IntegratorConfig",
    "ProbabilityPoint",
    "Scheme",
    "SweepSpec",
    "SweepVariable",
    "TransitionCurve",
]
