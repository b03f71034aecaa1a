# Domain Entities
from .root_system import RootSystem
from .weyl_element import WeylElt
from .weyl_group import WeylGroup
from .alcove import AlcoveSpec
from .laurent_poly import CharacterRing, LaurentPoly, RatFunc, RingKind
from .loc_class import LocClass
from .stab_family import Polarization, StabFamily, StabParams

__all__ = [
    "RootSystem",
    "WeylElt",
    "WeylGroup",
    "AlcoveSpec",
    "CharacterRing",
    "LaurentPoly",
    "RatFunc",
    "RingKind",
    "LocClass",
    "Polarization",
    "StabFamily",
    "StabParams",
]
