"""krlab: exact affine crystal combinatorics for Kirillov-Reshetikhin and Demazure crystals."""
from .cartan import AffineType, AffineWeight, CartanDatum, ClassicalWeight, datum, parse_type

__all__ = ["AffineType", "AffineWeight", "CartanDatum", "ClassicalWeight", "datum", "parse_type"]
__version__ = "0.1.0"
