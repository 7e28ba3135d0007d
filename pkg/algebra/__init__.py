from .LaurentPoly import (
    BigRational,
    LaurentPoly,
    LogTermError,
    NonLaurentError,
    OddExponentError,
    PoleError,
    SlotMapError,
    VariableCountError,
)
from .TruncatedSeries import TruncatedSeries

__all__ = [
    'BigRational', 'LaurentPoly', 'TruncatedSeries',
    'VariableCountError', 'SlotMapError', 'LogTermError',
    'PoleError', 'OddExponentError', 'NonLaurentError',
]
