"""Exact computations with modules over FWS_A and its pointed version."""

from .groups import FiniteAbelianGroup, TRIVIAL, parse_group, parse_element, parse_labels
from .category import (
    FwsMorphism,
    LabeledSet,
    TwsMorphism,
    compose_tws,
    enumerate_objects,
    hom_fws,
    hom_tws,
    identity,
)

__version__ = "0.1.0"
