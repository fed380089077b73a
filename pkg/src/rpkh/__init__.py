"""Khovanov and Lee homology, and the Rasmussen-type s-invariant, for links
in real projective 3-space, computed from diagrams in the projective plane.

Planar diagrams are the wall-free special case, so the same engine covers
classical links in the 3-sphere.
"""

from .diagram import (
    Circle,
    CircleOrientation,
    DiagramError,
    DividingChoice,
    ProjDiagram,
    Resolution,
    classify_bifurcation,
    dividing_orientation,
    essential_face,
    induced_orientation,
    parse_diagram,
)
from .braids import from_braid

__all__ = [
    "Circle",
    "CircleOrientation",
    "DiagramError",
    "DividingChoice",
    "ProjDiagram",
    "Resolution",
    "classify_bifurcation",
    "dividing_orientation",
    "essential_face",
    "from_braid",
    "induced_orientation",
    "parse_diagram",
]

__version__ = "0.1.0"
