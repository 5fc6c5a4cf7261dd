from .__version__ import __version__
from .codes import Code, CyclicCode, NegacyclicCode
from .config import Settings
from .distance import DistanceReport, min_distance
from .field import FpPoly, PrimeField, get_field
from .ring import ModulusKind, RElem, RPoly, Sign

# api.distance, api.catalog and api.tables share their names with submodules
from .api import configure, code, analyze, verify  # isort:skip

__all__ = [
    "__version__",
    "Code",
    "CyclicCode",
    "NegacyclicCode",
    "Settings",
    "DistanceReport",
    "min_distance",
    "FpPoly",
    "PrimeField",
    "get_field",
    "ModulusKind",
    "RElem",
    "RPoly",
    "Sign",
    "configure",
    "code",
    "analyze",
    "verify",
]
